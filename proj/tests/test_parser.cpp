#include <doctest.h>

#include <string>
#include <vector>

#include "folindex/parser.hpp"
#include "folindex/polynomial.hpp"
#include "folindex/scenario.hpp"

using namespace folindex;

namespace {

// line/column of the ParseError raised by `text`, as "L:C message"
std::string parse_failure(const char* text, int nvars) {
    try {
        parse_polynomial(text, nvars);
        return "(no error)";
    } catch (const ParseError& e) {
        return std::to_string(e.line()) + ":" + std::to_string(e.column()) + " " + e.message();
    }
}

std::string scenario_failure(const std::string& text) {
    try {
        parse_scenario(text);
        return "(no error)";
    } catch (const ParseError& e) {
        return std::to_string(e.line()) + ":" + std::to_string(e.column()) + " " + e.message();
    }
}

}  // namespace

TEST_CASE("polynomial expressions parse to expected values") {
    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(parse_polynomial("x2", 3) == Polynomial::variable(3, 2));
    CHECK(parse_polynomial("3/4", 1) == Polynomial::constant(1, Rational(3, 4)));
    CHECK(parse_polynomial("-x1", 2) == -Polynomial::variable(2, 1));
    CHECK(parse_polynomial("x1^3", 1) ==
          Polynomial::monomial(1, {3}, Rational(1)));
    CHECK(parse_polynomial("(x1 + x2)^2", 2) ==
          parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(parse_polynomial("2*x1*x2 - 1/2*x2", 2) ==
          parse_polynomial("x2*(2*x1 - 1/2)", 2));
    // whitespace is free between tokens
    CHECK(parse_polynomial("  x1   +\n  x2 ", 2) == parse_polynomial("x1+x2", 2));
    // x10 is variable 10, not x1 * 0
    CHECK(parse_polynomial("x10", 10) == Polynomial::variable(10, 10));
}

TEST_CASE("printer emits canonical text that reparses equal") {
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(to_string(parse_polynomial("x1", 2)) == "x1");
    CHECK(to_string(parse_polynomial("0 - x1 - 1", 2)) == "-x1 - 1");
    CHECK(to_string(parse_polynomial("x2^2 + x1^3", 2)) == "x1^3 + x2^2");
    CHECK(to_string(parse_polynomial("1/2*x2 + 2*x1*x2^3", 2)) ==
          "2 * x1 * x2^3 + 1/2 * x2");

    const std::vector<const char*> samples = {
        "x1^2 - x2^3 + 1/3*x1*x2",
        "(x1 - x2)*(x1 + x2)*(x1 + 1)",
        "5",
        "0 - 2/7",
        "x1*x2*x3 - x3^4 + x2",
    };
    for (const char* s : samples) {
        Polynomial p = parse_polynomial(s, 3);
        Polynomial again = parse_polynomial(to_string(p), 3);
        CHECK(again == p);
        // printing is stable under reprint
        CHECK(to_string(again) == to_string(p));
    }
}

TEST_CASE("parse errors carry one-based positions") {
    // juxtaposition is not multiplication
    CHECK(parse_failure("x1 x2", 2) == "1:4 unexpected trailing input");
    CHECK(parse_failure("x3", 2) == "1:1 variable x3 out of range (expected x1..x2)");
    CHECK(parse_failure("x", 2) == "1:1 expected a variable index after 'x'");
    CHECK(parse_failure("2 +", 2) == "1:4 expected an expression");
    CHECK(parse_failure("(x1 + 1", 2) == "1:8 expected ')'");
    CHECK(parse_failure("x1^", 2) == "1:4 expected an exponent after '^'");
    CHECK(parse_failure("1/", 2) == "1:3 expected a denominator after '/'");
    CHECK(parse_failure("", 2) == "1:1 expected an expression");
    CHECK(parse_failure("x1 + $", 2) == "1:6 unexpected character '$'");
    CHECK_THROWS_AS(parse_polynomial("x1", 0), std::invalid_argument);

    // what() embeds the position for loggers that only print the message
    try {
        parse_polynomial("x1 +", 2);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("  10/5 ") == Rational(2));  // canonicalized
    CHECK_THROWS_AS(parse_rational("three"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("scenario files parse into complete structures") {
    const std::string text =
        "# quadric cone in P^3, radial foliation\n"
        "scenario n=3 d=0 k=2 complete=true\n"
        "chart 0\n"
        "hypersurface x1^2 + x2^2 + x3^2\n"
        "vectorfield x1; x2; x3\n"
        "point chart=0 at 0, 0, 0 label=vertex\n"
        "expect gsv_total = 2\n"
        "expect integral_X = -1\n";
    Scenario sc = parse_scenario(text);
    CHECK(sc.n == 3);
    CHECK(sc.d == 0);
    CHECK(sc.k == 2);
    CHECK(sc.complete);
    REQUIRE(sc.charts.size() == 1);
    CHECK(sc.charts[0].id == 0);
    CHECK(sc.charts[0].hypersurface == parse_polynomial("x1^2 + x2^2 + x3^2", 3));
    CHECK(sc.charts[0].field.components[2] == parse_polynomial("x3", 3));
    REQUIRE(sc.points.size() == 1);
    CHECK(sc.points[0].chart_id == 0);
    CHECK(sc.points[0].label == "vertex");
    CHECK(sc.points[0].coords == std::vector<Rational>(3, Rational(0)));
    REQUIRE(sc.expectations.size() == 2);
    CHECK(sc.expectations.at("gsv_total") == 2);
    CHECK(sc.expectations.at("integral_X") == -1);
}

TEST_CASE("scenario grammar violations are rejected with positions") {
    CHECK(scenario_failure("chart 0\n") == "1:6 chart before scenario header");
    CHECK(scenario_failure("") == "1:1 missing scenario header");
    CHECK(scenario_failure("scenario n=1 d=0 k=1 complete=true\n") ==
          "1:35 ambient dimension n must be at least 2");

    const std::string base =
        "scenario n=2 d=0 k=1 complete=false\n"
        "chart 0\n"
        "hypersurface x1\n"
        "vectorfield x1; x2\n";
    CHECK(scenario_failure(base + "point chart=1 at 0, 0\n") ==
          "5:14 point references undeclared chart 1");
    CHECK(scenario_failure(base + "expect euler = 1\n") ==
          "5:13 unknown expectation name 'euler'");
    CHECK(scenario_failure(base + "orbit 3\n") == "5:1 unknown directive 'orbit'");
    CHECK(scenario_failure("scenario n=2 d=0 k=1 complete=false\n"
                           "chart 0\n"
                           "hypersurface x1\n"
                           "vectorfield x1; x2; x1\n") ==
          "4:13 vectorfield needs exactly 2 ';'-separated components, got 3");
    // embedded polynomial errors point into the host document
    const std::string bad_poly =
        "scenario n=2 d=0 k=1 complete=false\n"
        "chart 0\n"
        "hypersurface x1 + x9\n"
        "vectorfield x1; x2\n";
    CHECK(scenario_failure(bad_poly) == "3:19 variable x9 out of range (expected x1..x2)");
}
