#include "folindex/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace folindex {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class TokenKind { plus, minus, star, caret, slash, lparen, rparen, number, variable, end };

struct Token {
    TokenKind kind;
    std::size_t column = 0;  // 1-based within the parsed text
    Integer number{};        // for TokenKind::number
    int var_index = 0;       // for TokenKind::variable
};

class Lexer {
public:
    Lexer(std::string_view text, std::size_t line, std::size_t column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t col = i + 1;
            switch (c) {
                case '+': tokens.push_back({TokenKind::plus, col}); ++i; continue;
                case '-': tokens.push_back({TokenKind::minus, col}); ++i; continue;
                case '*': tokens.push_back({TokenKind::star, col}); ++i; continue;
                case '^': tokens.push_back({TokenKind::caret, col}); ++i; continue;
                case '/': tokens.push_back({TokenKind::slash, col}); ++i; continue;
                case '(': tokens.push_back({TokenKind::lparen, col}); ++i; continue;
                case ')': tokens.push_back({TokenKind::rparen, col}); ++i; continue;
                default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                Token t{TokenKind::number, col};
                t.number = Integer(std::string(text_.substr(i, j - i)), 10);
                tokens.push_back(t);
                i = j;
                continue;
            }
            if (c == 'x') {
                std::size_t j = i + 1;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                if (j == i + 1) fail(col, "expected a variable index after 'x'");
                std::string digits(text_.substr(i + 1, j - i - 1));
                if (digits.size() > 6) fail(col, "variable index out of range");
                Token t{TokenKind::variable, col};
                t.var_index = std::stoi(digits);
                tokens.push_back(t);
                i = j;
                continue;
            }
            fail(col, std::string("unexpected character '") + c + "'");
        }
        tokens.push_back({TokenKind::end, text_.size() + 1});
        return tokens;
    }

    [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
        throw ParseError(line_, offset_ + col, msg);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
};

class PolyParser {
public:
    PolyParser(std::vector<Token> tokens, int nvars, std::size_t line, std::size_t offset)
        : tokens_(std::move(tokens)), nvars_(nvars), line_(line), offset_(offset) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        expect(TokenKind::end, "unexpected trailing input");
        return p;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int nvars_;
    std::size_t line_;
    std::size_t offset_;

    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }
    bool match(TokenKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(TokenKind k, const std::string& msg) {
        if (!match(k)) fail(peek().column, msg);
    }
    [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
        throw ParseError(line_, offset_ + col, msg);
    }

    Polynomial parse_expr() {
        bool negate = match(TokenKind::minus);
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (match(TokenKind::plus))
                acc += parse_term();
            else if (match(TokenKind::minus))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (match(TokenKind::star)) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (match(TokenKind::caret)) {
            const Token& t = peek();
            if (t.kind != TokenKind::number) fail(t.column, "expected an exponent after '^'");
            if (t.number > 100000) fail(t.column, "exponent too large");
            unsigned long e = t.number.get_ui();
            advance();
            Polynomial acc = Polynomial::constant(base.nvars(), 1);
            for (unsigned long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial parse_base() {
        const Token t = peek();
        switch (t.kind) {
            case TokenKind::number: {
                advance();
                Integer num = t.number;
                if (match(TokenKind::slash)) {
                    const Token& d = peek();
                    if (d.kind != TokenKind::number)
                        fail(d.column, "expected a denominator after '/'");
                    if (d.number == 0) fail(d.column, "division by zero in a rational literal");
                    Integer den = d.number;
                    advance();
                    return Polynomial::constant(nvars_, make_rational(num, den));
                }
                return Polynomial::constant(nvars_, Rational(num));
            }
            case TokenKind::variable: {
                if (t.var_index < 1 || t.var_index > nvars_)
                    fail(t.column, "variable x" + std::to_string(t.var_index) +
                                       " out of range (expected x1..x" + std::to_string(nvars_) +
                                       ")");
                advance();
                return Polynomial::variable(nvars_, t.var_index);
            }
            case TokenKind::lparen: {
                advance();
                Polynomial inner = parse_expr();
                expect(TokenKind::rparen, "expected ')'");
                return inner;
            }
            case TokenKind::end:
                fail(t.column, "expected an expression");
            default:
                fail(t.column, "expected a number, variable, or '('");
        }
    }
};

}  // namespace

namespace detail {

Polynomial parse_polynomial_at(std::string_view text, int nvars, std::size_t line,
                               std::size_t column_offset) {
    if (nvars < 1) throw std::invalid_argument("parse_polynomial: nvars must be at least 1");
    Lexer lexer(text, line, column_offset);
    PolyParser parser(lexer.run(), nvars, line, column_offset);
    return parser.run();
}

Rational parse_rational_at(std::string_view text, std::size_t line, std::size_t column_offset) {
    Lexer lexer(text, line, column_offset);
    std::vector<Token> tokens = lexer.run();
    std::size_t pos = 0;
    bool negate = tokens[pos].kind == TokenKind::minus && (++pos, true);
    if (tokens[pos].kind != TokenKind::number)
        throw ParseError(line, column_offset + tokens[pos].column, "expected a rational number");
    Integer num = tokens[pos].number;
    ++pos;
    Integer den = 1;
    if (tokens[pos].kind == TokenKind::slash) {
        ++pos;
        if (tokens[pos].kind != TokenKind::number)
            throw ParseError(line, column_offset + tokens[pos].column,
                             "expected a denominator after '/'");
        if (tokens[pos].number == 0)
            throw ParseError(line, column_offset + tokens[pos].column,
                             "division by zero in a rational literal");
        den = tokens[pos].number;
        ++pos;
    }
    if (tokens[pos].kind != TokenKind::end)
        throw ParseError(line, column_offset + tokens[pos].column,
                         "unexpected trailing input after a rational");
    Rational r = make_rational(num, den);
    return negate ? Rational(-r) : r;
}

}  // namespace detail

Polynomial parse_polynomial(std::string_view text, int nvars) {
    return detail::parse_polynomial_at(text, nvars, 1, 0);
}

Rational parse_rational(std::string_view text) { return detail::parse_rational_at(text, 1, 0); }

namespace {

// degree-lexicographic descending: higher total degree first; on ties the
// x1-major lexicographically larger exponent vector first
bool print_order_before(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void print_monomial(std::ostringstream& out, const Exponents& e) {
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << " * ";
        first = false;
        out << "x" << (i + 1);
        if (e[i] > 1) out << "^" << e[i];
    }
}

}  // namespace

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return print_order_before(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool is_const = total_degree(e) == 0;
        if (is_const) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << " * ";
            print_monomial(out, e);
        }
    }
    return out.str();
}

}  // namespace folindex
