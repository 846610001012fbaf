#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "folindex/parser.hpp"
#include "folindex/polynomial.hpp"

using namespace folindex;

namespace {

Polynomial pp(const char* text, int nvars) { return parse_polynomial(text, nvars); }

}  // namespace

TEST_CASE("exponent vector helpers") {
    Exponents a{2, 0, 1};
    Exponents b{1, 3, 1};
    CHECK(total_degree(a) == 3);
    CHECK(total_degree(Exponents{0, 0}) == 0);
    CHECK(exponents_divide(Exponents{1, 0, 1}, a));
    CHECK_FALSE(exponents_divide(b, a));
    CHECK(exponents_add(a, b) == Exponents{3, 3, 2});
    CHECK(exponents_sub(Exponents{2, 3, 1}, b) == Exponents{1, 0, 0});
    CHECK_THROWS_AS(exponents_sub(a, b), std::invalid_argument);
    CHECK(exponents_lcm(a, b) == Exponents{2, 3, 1});
}

TEST_CASE("degrevlex order on three variables") {
    // Standard degree-2 chain for x1 > x2 > x3:
    //   x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2
    std::vector<Exponents> descending = {
        {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i + 1 < descending.size(); ++i) {
        CHECK(degrevlex_less(descending[i + 1], descending[i]));
        CHECK_FALSE(degrevlex_less(descending[i], descending[i + 1]));
    }
    // Total degree dominates everything else.
    CHECK(degrevlex_less(Exponents{5, 0, 0}, Exponents{2, 2, 2}));
    // Irreflexive.
    CHECK_FALSE(degrevlex_less(Exponents{1, 1, 0}, Exponents{1, 1, 0}));
}

TEST_CASE("canonical form and accessors") {
    Polynomial zero(2);
    CHECK(zero.is_zero());
    CHECK(zero.term_count() == 0);
    CHECK(zero.degree() == std::nullopt);
    CHECK(zero.order_at_origin() == std::nullopt);
    CHECK_THROWS_AS(zero.leading_exponents(), std::logic_error);

    Polynomial p(2);
    p.add_term({1, 0}, Rational(3));
    p.add_term({1, 0}, Rational(-3));  // cancels away entirely
    CHECK(p.is_zero());

    Polynomial q = pp("x1^2 + x2^3 - 1/2", 2);
    CHECK(q.term_count() == 3);
    CHECK(q.degree() == 3);
    CHECK(q.order_at_origin() == 0);
    CHECK(q.coefficient({0, 3}) == Rational(1));
    CHECK(q.coefficient({5, 5}) == Rational(0));
    CHECK(q.constant_term() == Rational(-1, 2));
    // degrevlex leading term of q is x2^3 (highest total degree)
    CHECK(q.leading_exponents() == Exponents{0, 3});
    CHECK(q.leading_coefficient() == Rational(1));

    Polynomial m = pp("x1*x2^2", 2);
    CHECK(m.order_at_origin() == 3);
    CHECK(Polynomial::variable(2, 2) == pp("x2", 2));
    CHECK_THROWS_AS(Polynomial::variable(2, 3), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
    Polynomial a = pp("x1 + x2", 2);
    Polynomial b = pp("x1 - x2", 2);
    Polynomial c = pp("x1*x2 - 3", 2);

    CHECK(a * b == pp("x1^2 - x2^2", 2));
    CHECK(a * a == pp("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(a + b == pp("2*x1", 2));
    CHECK(a - a == Polynomial(2));
    CHECK(-a == pp("0 - x1 - x2", 2));
    // distributivity and commutativity
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    // scalar multiple
    CHECK(a * Rational(1, 2) == pp("1/2*x1 + 1/2*x2", 2));
    CHECK(Rational(0) * a == Polynomial(2));
    // mixed variable counts refuse
    CHECK_THROWS_AS(pp("x1", 1) + pp("x1", 2), std::invalid_argument);
}

TEST_CASE("derivatives satisfy the Leibniz rule") {
    Polynomial p = pp("x1^3*x2 + x2", 2);
    CHECK(partial_derivative(p, 1) == pp("3*x1^2*x2", 2));
    CHECK(partial_derivative(p, 2) == pp("x1^3 + 1", 2));

    Polynomial q = pp("x1*x2^2 - 2*x1", 2);
    for (int i = 1; i <= 2; ++i) {
        CHECK(partial_derivative(p * q, i) ==
              partial_derivative(p, i) * q + p * partial_derivative(q, i));
    }
    CHECK_THROWS_AS(partial_derivative(p, 3), std::invalid_argument);
}

TEST_CASE("homogeneous components decompose the polynomial") {
    Polynomial p = pp("1 + x1 + x1*x2 + x2^2 - x1^3", 2);
    CHECK(homogeneous_component(p, 0) == pp("1", 2));
    CHECK(homogeneous_component(p, 1) == pp("x1", 2));
    CHECK(homogeneous_component(p, 2) == pp("x1*x2 + x2^2", 2));
    CHECK(homogeneous_component(p, 3) == pp("0 - x1^3", 2));
    CHECK(homogeneous_component(p, 4).is_zero());
    Polynomial sum(2);
    for (int d = 0; d <= 3; ++d) {
        sum += homogeneous_component(p, d);
    }
    CHECK(sum == p);
}

TEST_CASE("translation recentres exactly") {
    Polynomial p = pp("x1^2 - x2^3 + 1/3*x1*x2", 2);
    std::vector<Rational> a = {Rational(1, 2), Rational(-3)};
    Polynomial shifted = translate(p, a);
    // q(0) = p(a)
    CHECK(shifted.constant_term() == evaluate(p, a));
    // q(y - a) = p(y): undo by translating back
    std::vector<Rational> minus_a = {Rational(-1, 2), Rational(3)};
    CHECK(translate(shifted, minus_a) == p);
    // evaluation through the shift agrees pointwise
    std::vector<Rational> y = {Rational(2), Rational(1, 5)};
    std::vector<Rational> y_plus_a = {y[0] + a[0], y[1] + a[1]};
    CHECK(evaluate(shifted, y) == evaluate(p, y_plus_a));
    CHECK_THROWS_AS(translate(p, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("division with remainder and exact division") {
    Polynomial p = pp("x1^3*x2 + x1*x2^2 + x2", 2);
    Polynomial d = pp("x1*x2 - 1", 2);
    DivisionResult res = divide_by(p, d);
    CHECK(res.quotient * d + res.remainder == p);
    // no remainder term is divisible by LT(d) = x1*x2
    for (const auto& [e, c] : res.remainder.terms()) {
        (void)c;
        CHECK_FALSE(exponents_divide(d.leading_exponents(), e));
    }

    Polynomial prod = pp("x1^2 - x2^2", 2);
    std::optional<Polynomial> q = exact_divide(prod, pp("x1 + x2", 2));
    REQUIRE(q.has_value());
    CHECK(*q == pp("x1 - x2", 2));
    CHECK(exact_divide(prod, pp("x1 + 1", 2)) == std::nullopt);
    CHECK(exact_divide(Polynomial(2), pp("x1", 2)).value().is_zero());
    CHECK_THROWS_AS(divide_by(p, Polynomial(2)), std::invalid_argument);
}

TEST_CASE("vector fields and the Euler identity") {
    CHECK_THROWS_AS(VectorField({Polynomial(2), Polynomial(2)}), std::invalid_argument);
    CHECK_THROWS_AS(VectorField(std::vector<Polynomial>{}), std::invalid_argument);

    VectorField radial({pp("x1", 2), pp("x2", 2)});
    CHECK(radial.nvars() == 2);
    CHECK(radial.vanishes_at_origin());
    VectorField unit({pp("1", 2), pp("x2", 2)});
    CHECK_FALSE(unit.vanishes_at_origin());

    // E(p) = sum_d d * p_d for the radial field E
    Polynomial p = pp("5 + x1 + x1*x2 - x2^3 + x1^2*x2^2", 2);
    Polynomial expect(2);
    for (int d = 1; d <= 4; ++d) {
        expect += homogeneous_component(p, d) * Rational(d);
    }
    CHECK(apply_vector_field(radial, p) == expect);

    // directional derivative against a hand value
    VectorField v({pp("x2", 2), pp("0 - x1", 2)});
    CHECK(apply_vector_field(v, pp("x1^2 + x2^2", 2)).is_zero());
    CHECK_THROWS_AS(apply_vector_field(radial, pp("x1", 3)), std::invalid_argument);
}
