#include "folindex/chern.hpp"

#include <numeric>
#include <stdexcept>

namespace folindex {

TruncatedSeries::TruncatedSeries(int top_degree) {
    if (top_degree < 0) throw std::invalid_argument("TruncatedSeries: negative top degree");
    coeffs_.assign(static_cast<std::size_t>(top_degree) + 1, Integer(0));
}

TruncatedSeries TruncatedSeries::one(int top_degree) {
    TruncatedSeries s(top_degree);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::binomial_power(int top_degree, const Integer& a, int e) {
    if (e < 0) throw std::invalid_argument("binomial_power: negative exponent");
    TruncatedSeries s(top_degree);
    for (int i = 0; i <= top_degree && i <= e; ++i)
        s.coeffs_[i] = binomial(e, i) * ipow(a, i);
    return s;
}

const Integer& TruncatedSeries::coefficient(int i) const {
    if (i < 0 || i > top_degree())
        throw std::out_of_range("TruncatedSeries::coefficient: index out of range");
    return coeffs_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set_coefficient(int i, Integer value) {
    if (i < 0 || i > top_degree())
        throw std::out_of_range("TruncatedSeries::set_coefficient: index out of range");
    coeffs_[static_cast<std::size_t>(i)] = std::move(value);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    int top = std::min(top_degree(), other.top_degree());
    TruncatedSeries out(top);
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top && j <= other.top_degree(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Integer& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("TruncatedSeries::inverse: constant term must be +1 or -1");
    TruncatedSeries out(top_degree());
    out.coeffs_[0] = c0;  // 1/c0 == c0 for units of Z
    for (int m = 1; m <= top_degree(); ++m) {
        Integer acc = 0;
        for (int i = 1; i <= m; ++i) acc += coeffs_[i] * out.coeffs_[m - i];
        out.coeffs_[m] = -c0 * acc;
    }
    return out;
}

Integer ipow(const Integer& base, long long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

Integer binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

Integer GlobalData::mu_d_sum() const {
    return std::accumulate(mu_d.begin(), mu_d.end(), Integer(0));
}

namespace {

// (1+h)^{n+1} (1+kh)^{-1} (1+(1-d)h)^{-1} truncated at degree n
TruncatedSeries virtual_bundle_series(int n, long long d, long long k) {
    TruncatedSeries tangent = TruncatedSeries::binomial_power(n, Integer(1), n + 1);
    TruncatedSeries divisor = TruncatedSeries::binomial_power(n, to_integer(k), 1);
    TruncatedSeries foliation = TruncatedSeries::binomial_power(n, to_integer(1 - d), 1);
    return tangent * divisor.inverse() * foliation.inverse();
}

void require_box(int n, long long d, long long k) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    if (d < 0) throw std::invalid_argument("foliation degree must be nonnegative");
    if (k < 1) throw std::invalid_argument("hypersurface degree must be at least 1");
}

Integer checked(const char* what, const Integer& a, const Integer& b) {
    if (a != b)
        throw std::logic_error(std::string("route mismatch for ") + what + ": " + to_string(a) +
                               " vs " + to_string(b));
    return a;
}

}  // namespace

namespace routes {

Integer integral_alternating_sum(int n, long long d, long long k) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) {
        Integer term = ipow(to_integer(k - 1), i) * ipow(to_integer(d), n - i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

Integer integral_chern_coefficient(int n, long long d, long long k) {
    return virtual_bundle_series(n, d, k).coefficient(n);
}

Integer gsv_geometric_sum(int n, long long d, long long k) {
    Integer acc = 0;
    for (int i = 0; i <= n - 1; ++i)
        acc += (Integer(1) - ipow(to_integer(1 - k), n - i)) * ipow(to_integer(d), i);
    return acc;
}

Integer gsv_chern_coefficient(int n, long long d, long long k) {
    return to_integer(k) * virtual_bundle_series(n, d, k).coefficient(n - 1);
}

Integer baum_bott_power_sum(int n, long long d) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) acc += ipow(to_integer(d), i);
    return acc;
}

Integer baum_bott_chern_coefficient(int n, long long d) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) acc += binomial(n + 1, i) * ipow(to_integer(d - 1), n - i);
    return acc;
}

Integer euler_smooth_part(int n, long long k) {
    TruncatedSeries tangent = TruncatedSeries::binomial_power(n, Integer(1), n + 1);
    TruncatedSeries divisor = TruncatedSeries::binomial_power(n, to_integer(k), 1);
    TruncatedSeries s = tangent * divisor.inverse();
    return to_integer(k) * s.coefficient(n - 1);
}

Integer degree_bound_lhs_binomial(int n, long long k) {
    Integer acc = 0;
    for (int j = 0; j <= n - 1; ++j) acc += binomial(n, j) * ipow(to_integer(-k), n - j);
    return acc;
}

Integer degree_bound_rhs(int n, long long d, long long k) {
    Integer acc = 0;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 0; j <= i - 1; ++j) {
            Integer term = binomial(i, j) * ipow(to_integer(k), i - j) * ipow(to_integer(d), n - i);
            acc += ((i - j + 1) % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

}  // namespace routes

Integer integral_chern_number(int n, long long d, long long k) {
    require_box(n, d, k);
    return checked("integral_chern_number", routes::integral_alternating_sum(n, d, k),
                   routes::integral_chern_coefficient(n, d, k));
}

Integer gsv_total(int n, long long d, long long k) {
    require_box(n, d, k);
    return checked("gsv_total", routes::gsv_geometric_sum(n, d, k),
                   routes::gsv_chern_coefficient(n, d, k));
}

Integer baum_bott_total(int n, long long d) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    if (d < 0) throw std::invalid_argument("foliation degree must be nonnegative");
    return checked("baum_bott_total", routes::baum_bott_power_sum(n, d),
                   routes::baum_bott_chern_coefficient(n, d));
}

Integer schwartz_total(const GlobalData& g) {
    Integer sign = (g.n % 2 == 0) ? 1 : -1;
    return gsv_total(g.n, g.d, g.k) + sign * g.mu_d_sum();
}

Integer schwartz_total_via_integrals(const GlobalData& g) {
    Integer sign = (g.n % 2 == 0) ? 1 : -1;
    return baum_bott_total(g.n, g.d) - integral_chern_number(g.n, g.d, g.k) + sign * g.mu_d_sum();
}

Integer euler_char_hypersurface(int n, long long k, const std::vector<Integer>& mu_d) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    if (k < 1) throw std::invalid_argument("hypersurface degree must be at least 1");
    Integer smooth = routes::euler_smooth_part(n, k);
    // closed-form cross-check of the series coefficient
    Integer direct = 0;
    for (int j = 0; j <= n - 1; ++j)
        direct += binomial(n + 1, n - 1 - j) * ipow(to_integer(-k), j);
    direct *= to_integer(k);
    checked("euler_char_hypersurface", smooth, direct);
    Integer sign = (n % 2 == 0) ? 1 : -1;
    return smooth + sign * std::accumulate(mu_d.begin(), mu_d.end(), Integer(0));
}

SweepResult identity_sweep(int n_max, long long d_max, long long k_max) {
    SweepResult result;
    for (int n = 2; n <= n_max; ++n) {
        for (long long d = 0; d <= d_max; ++d) {
            for (long long k = 1; k <= k_max; ++k) {
                ++result.cases_checked;
                std::string where =
                    "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k);
                try {
                    Integer integral = integral_chern_number(n, d, k);
                    Integer gsv = gsv_total(n, d, k);
                    Integer bb = baum_bott_total(n, d);
                    euler_char_hypersurface(n, k, {});
                    if (gsv != bb - integral)
                        result.failures.push_back(where + ": gsv != baum_bott - integral");
                    Integer relation = routes::degree_bound_rhs(n, d, k) -
                                       routes::degree_bound_lhs_binomial(n, k);
                    if (gsv != relation)
                        result.failures.push_back(where + ": gsv != degree-bound relation");
                    if (n % 2 == 0 && k > d + 2 && gsv >= 0)
                        result.failures.push_back(where + ": gsv_total not negative");
                } catch (const std::logic_error& e) {
                    result.failures.push_back(where + ": " + e.what());
                }
            }
        }
    }
    return result;
}

BoundReport poincare_mu_one_bound(const GlobalData& g, bool sing_d_inside_sing_f) {
    BoundReport r;
    if (g.n % 2 != 0) {
        r.detail = "requires even ambient dimension";
        return r;
    }
    if (!sing_d_inside_sing_f) {
        r.detail = "requires Sing(D) contained in Sing(F)";
        return r;
    }
    for (const Integer& mu : g.mu_d) {
        if (mu != 1) {
            r.detail = "requires every hypersurface Milnor number to equal 1";
            return r;
        }
    }
    bool ok = g.k <= g.d + 2;
    r.status = ok ? BoundStatus::holds : BoundStatus::fails;
    r.detail = "k = " + std::to_string(g.k) + (ok ? " <= " : " > ") + "d + 2 = " +
               std::to_string(g.d + 2);
    return r;
}

BoundReport poincare_general_bound(const GlobalData& g, bool sing_d_inside_sing_f) {
    BoundReport r;
    if (g.n % 2 != 0) {
        r.detail = "requires even ambient dimension";
        return r;
    }
    if (!sing_d_inside_sing_f) {
        r.detail = "requires Sing(D) contained in Sing(F)";
        return r;
    }
    Integer excess = 0;
    for (const Integer& mu : g.mu_d) excess += mu - 1;
    Integer lhs = routes::degree_bound_lhs_binomial(g.n, g.k) - excess;
    Integer rhs = routes::degree_bound_rhs(g.n, g.d, g.k);
    bool ok = lhs <= rhs;
    r.status = ok ? BoundStatus::holds : BoundStatus::fails;
    r.detail = to_string(lhs) + (ok ? " <= " : " > ") + to_string(rhs);
    return r;
}

BoundReport euler_excess_bound(const GlobalData& g, long long s2) {
    BoundReport r;
    if (g.n % 2 != 0) {
        r.detail = "requires even ambient dimension";
        return r;
    }
    if (g.mu_d.empty()) {
        r.detail = "requires a singular hypersurface (no singular points on it)";
        return r;
    }
    Integer chi = euler_char_hypersurface(g.n, g.k, g.mu_d);
    Integer count = Integer(static_cast<long>(g.mu_d.size())) + Integer(static_cast<long>(s2));
    bool ok = chi > count;
    r.status = ok ? BoundStatus::holds : BoundStatus::fails;
    r.detail = "chi(D) = " + to_string(chi) + (ok ? " > " : " <= ") +
               "s1 + s2 = " + to_string(count);
    return r;
}

BoundReport gsv_total_negativity(int n, long long d, long long k) {
    BoundReport r;
    if (n % 2 != 0) {
        r.detail = "requires even ambient dimension";
        return r;
    }
    if (k <= d + 2) {
        r.detail = "requires k > d + 2";
        return r;
    }
    Integer gsv = gsv_total(n, d, k);
    bool ok = gsv < 0;
    r.status = ok ? BoundStatus::holds : BoundStatus::fails;
    r.detail = "gsv_total = " + to_string(gsv) + (ok ? " < 0" : " >= 0");
    return r;
}

}  // namespace folindex
