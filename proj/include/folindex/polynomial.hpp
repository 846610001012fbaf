#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folindex/rational.hpp"

namespace folindex {

// Exponent vector of a monomial; length = number of variables of the
// enclosing polynomial, entries non-negative.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool exponents_divide(const Exponents& a, const Exponents& b);  // x^a | x^b
Exponents exponents_add(const Exponents& a, const Exponents& b);
Exponents exponents_sub(const Exponents& a, const Exponents& b);  // requires b | a componentwise
Exponents exponents_lcm(const Exponents& a, const Exponents& b);

// Graded reverse lexicographic order with x1 > x2 > ... > xn:
// compare total degrees first; on a tie the monomial with the larger
// exponent on the last differing variable is the smaller one.
bool degrevlex_less(const Exponents& a, const Exponents& b);

struct DegRevLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return degrevlex_less(b, a); }
};

// Sparse multivariate polynomial over Q in canonical form: no zero
// coefficients are stored and the zero polynomial has an empty term map.
// Terms are kept sorted degrevlex-descending so begin() is the leading term.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, DegRevLexGreater>;

    explicit Polynomial(int nvars);
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);  // 1-based
    static Polynomial monomial(int nvars, const Exponents& exps, const Rational& coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;  // 0 when absent
    Rational constant_term() const;
    const Exponents& leading_exponents() const;      // requires nonzero
    const Rational& leading_coefficient() const;     // requires nonzero

    // Total degree / vanishing order at the origin; nullopt for the zero
    // polynomial (whose degree and order are not finite numbers).
    std::optional<int> degree() const;
    std::optional<int> order_at_origin() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& p, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
    bool operator==(const Polynomial& rhs) const = default;

private:
    int nvars_;
    TermMap terms_;
    void require_same_vars(const Polynomial& other) const;
};

Polynomial partial_derivative(const Polynomial& p, int var_index);  // 1-based
Polynomial homogeneous_component(const Polynomial& p, int degree);

// q(y) = p(y + point), exact (per-term binomial expansion).
Polynomial translate(const Polynomial& p, const std::vector<Rational>& point);
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

// Multivariate division by a single divisor (degrevlex leading terms):
// p = quotient * divisor + remainder, no remainder term divisible by the
// divisor's leading monomial.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide_by(const Polynomial& p, const Polynomial& divisor);

// Exact ring division; nullopt when the divisor does not divide p.
// (A nullopt is a normal outcome, not an error.)
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& divisor);

// v = sum a_i d/dx_i on C^n; exactly n components, all with nvars == n,
// not all identically zero.
struct VectorField {
    std::vector<Polynomial> components;
    explicit VectorField(std::vector<Polynomial> comps);
    int nvars() const { return static_cast<int>(components.size()); }
    bool vanishes_at_origin() const;
};

// v(p) = sum a_i * dp/dx_i
Polynomial apply_vector_field(const VectorField& v, const Polynomial& p);

}  // namespace folindex
