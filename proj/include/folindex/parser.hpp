#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "folindex/polynomial.hpp"

namespace folindex {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

// Arithmetic expressions over x1..x<nvars> with rational literals:
//   expr   := ['-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' uint ]
//   base   := rational | var | '(' expr ')'
//   rational := uint [ '/' uint ]
//   var    := 'x' uint            (no space between 'x' and the index)
// Whitespace between tokens is insignificant; juxtaposition is not
// multiplication ('*' is required). Throws ParseError with 1-based
// line/column on any violation.
Polynomial parse_polynomial(std::string_view text, int nvars);

// Signed rational literal: ['-'] uint ['/' uint].
Rational parse_rational(std::string_view text);

// Deterministic printer: terms in degree-lexicographic descending order
// (total degree first, then x1-major lexicographic). Output reparses to an
// equal polynomial and is byte-stable for a fixed input.
std::string to_string(const Polynomial& p);

namespace detail {
// Entry point for embedded parses (scenario files): reported positions are
// offset so they point into the host document.
Polynomial parse_polynomial_at(std::string_view text, int nvars, std::size_t line,
                               std::size_t column_offset);
Rational parse_rational_at(std::string_view text, std::size_t line, std::size_t column_offset);
}  // namespace detail

}  // namespace folindex
