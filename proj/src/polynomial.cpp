#include "folindex/polynomial.hpp"

#include <stdexcept>

namespace folindex {

int total_degree(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

bool exponents_divide(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponents_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exponents_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::invalid_argument("exponents_sub: not componentwise divisible");
    }
    return r;
}

Exponents exponents_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool degrevlex_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // equal degree: more of a later variable means smaller
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 1 || index > nvars) throw std::invalid_argument("variable index out of range");
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    return monomial(nvars, e, 1);
}

Polynomial Polynomial::monomial(int nvars, const Exponents& exps, const Rational& coeff) {
    Polynomial p(nvars);
    p.add_term(exps, coeff);
    return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);  // map is degree-descending
}

std::optional<int> Polynomial::order_at_origin() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length does not match nvars");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_vars(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomial operands have different variable counts");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.require_same_vars(rhs);
    Polynomial r(lhs.nvars_);
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(exponents_add(ea, eb), ca * cb);
    return r;
}

Polynomial operator*(const Polynomial& p, const Rational& c) {
    Polynomial r(p.nvars_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : p.terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int var_index) {
    if (var_index < 1 || var_index > p.nvars())
        throw std::invalid_argument("derivative variable index out of range");
    const int i = var_index - 1;
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

Polynomial homogeneous_component(const Polynomial& p, int degree) {
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == degree) r.add_term(e, c);
    return r;
}

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
    if (e == 0) return Rational(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(den.get_mpz_t(), mpq_denref(base.get_mpq_t()), e);
    Rational r(num, den);
    r.canonicalize();  // already coprime in fact; belt and braces
    return r;
}

}  // namespace

Polynomial translate(const Polynomial& p, const std::vector<Rational>& point) {
    const int n = p.nvars();
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("translation point length does not match nvars");
    Polynomial result(n);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                Exponents pure(n, 0);
                pure[i] = e[i];
                term = term * Polynomial::monomial(n, pure, 1);
                continue;
            }
            // (x_i + p_i)^{e_i} expanded binomially
            Polynomial factor(n);
            for (int j = 0; j <= e[i]; ++j) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e[i]),
                             static_cast<unsigned long>(j));
                Exponents mono(n, 0);
                mono[i] = j;
                factor.add_term(mono, Rational(binom) *
                                          rational_pow(point[i],
                                                       static_cast<unsigned long>(e[i] - j)));
            }
            term = term * factor;
        }
        result += term;
    }
    return result;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("evaluation point length does not match nvars");
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (e[i] > 0) v *= rational_pow(point[i], static_cast<unsigned long>(e[i]));
        total += v;
    }
    return total;
}

DivisionResult divide_by(const Polynomial& p, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.nvars() != divisor.nvars())
        throw std::invalid_argument("division operands have different variable counts");
    const int n = p.nvars();
    const Exponents& dl = divisor.leading_exponents();
    const Rational& dc = divisor.leading_coefficient();
    Polynomial quotient(n), remainder(n), work = p;
    while (!work.is_zero()) {
        Exponents le = work.leading_exponents();
        Rational lc = work.leading_coefficient();
        if (exponents_divide(dl, le)) {
            Polynomial t = Polynomial::monomial(n, exponents_sub(le, dl), lc / dc);
            quotient += t;
            work -= t * divisor;
        } else {
            remainder.add_term(le, lc);
            work -= Polynomial::monomial(n, le, lc);
        }
    }
    return {quotient, remainder};
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& divisor) {
    DivisionResult d = divide_by(p, divisor);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient;
}

VectorField::VectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {
    if (components.empty()) throw std::invalid_argument("vector field needs components");
    const int n = static_cast<int>(components.size());
    bool all_zero = true;
    for (const auto& c : components) {
        if (c.nvars() != n)
            throw std::invalid_argument(
                "vector field component count must equal its variable count");
        if (!c.is_zero()) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("vector field is identically zero");
}

bool VectorField::vanishes_at_origin() const {
    for (const auto& c : components)
        if (c.constant_term() != 0) return false;
    return true;
}

Polynomial apply_vector_field(const VectorField& v, const Polynomial& p) {
    if (v.nvars() != p.nvars())
        throw std::invalid_argument("vector field and polynomial dimension mismatch");
    Polynomial r(p.nvars());
    for (int i = 0; i < v.nvars(); ++i) r += v.components[i] * partial_derivative(p, i + 1);
    return r;
}

}  // namespace folindex
