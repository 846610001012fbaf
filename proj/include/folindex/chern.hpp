#pragma once

// Global side of the index theory on projective space: truncated Chern
// series arithmetic, closed-form totals for the index sums of a degree-d
// foliation along a degree-k invariant hypersurface in P^n, and the
// degree-bound (Poincare-problem) inequalities.
//
// Conventions: hyperplane class h, c(TP^n) = (1+h)^{n+1}, c([D]) = 1 + kh,
// and the foliation's tangent line bundle is O(1-d), so c(T_F) = 1 + (1-d)h.
// Every total is computed along two independent routes (closed form vs.
// series coefficient) and cross-checked; a mismatch throws std::logic_error.

#include <string>
#include <vector>

#include "folindex/rational.hpp"

namespace folindex {

// Polynomial in h truncated at degree `top_degree`, integer coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int top_degree);
    static TruncatedSeries one(int top_degree);
    // (1 + a*h)^e truncated; e >= 0
    static TruncatedSeries binomial_power(int top_degree, const Integer& a, int e);

    int top_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& coefficient(int i) const;
    void set_coefficient(int i, Integer value);

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    // multiplicative inverse; requires constant term +1 or -1
    TruncatedSeries inverse() const;

private:
    std::vector<Integer> coeffs_;
};

Integer ipow(const Integer& base, long long e);  // 0^0 == 1
Integer binomial(long long n, long long r);      // 0 outside 0 <= r <= n

// Scenario-level global data for a foliation/hypersurface pair on P^n.
struct GlobalData {
    int n = 0;                   // dimension of the ambient projective space
    long long d = 0;             // degree of the foliation
    long long k = 1;             // degree of the invariant hypersurface
    std::vector<Integer> mu_d;   // Milnor numbers at the hypersurface singularities

    Integer mu_d_sum() const;
};

// Individual computation routes, exposed so tests can compare them directly.
namespace routes {
// sum_{i=0}^{n} (-1)^i (k-1)^i d^{n-i}
Integer integral_alternating_sum(int n, long long d, long long k);
// coefficient of h^n in (1+h)^{n+1} (1+kh)^{-1} (1+(1-d)h)^{-1}
Integer integral_chern_coefficient(int n, long long d, long long k);
// sum_{i=0}^{n-1} (1 - (1-k)^{n-i}) d^i
Integer gsv_geometric_sum(int n, long long d, long long k);
// k * coefficient of h^{n-1} in the same virtual-bundle series
Integer gsv_chern_coefficient(int n, long long d, long long k);
// 1 + d + ... + d^n
Integer baum_bott_power_sum(int n, long long d);
// sum_{i=0}^{n} C(n+1, i) (d-1)^{n-i}
Integer baum_bott_chern_coefficient(int n, long long d);
// k * coefficient of h^{n-1} in (1+h)^{n+1}(1+kh)^{-1}  (smooth part of chi)
Integer euler_smooth_part(int n, long long k);
// sum_{j=0}^{n-1} C(n,j) (-k)^{n-j}   (Soares-type left-hand side)
Integer degree_bound_lhs_binomial(int n, long long k);
// sum_{i=1}^{n-1} sum_{j=0}^{i-1} C(i,j) (-1)^{i-j+1} k^{i-j} d^{n-i}
Integer degree_bound_rhs(int n, long long d, long long k);
}  // namespace routes

// integral over P^n of c_n(TP^n - [D] - T_F); equals the sum of the local
// residues over Sing(F) union Sing(D) when all singularities are isolated
Integer integral_chern_number(int n, long long d, long long k);

// total GSV index over (Sing(F) ∩ D) ∪ Sing(D)
Integer gsv_total(int n, long long d, long long k);

// total Milnor number of the foliation over Sing(F) (Baum-Bott count)
Integer baum_bott_total(int n, long long d);

// total Schwartz index: gsv_total + (-1)^n * (sum of hypersurface Milnor numbers)
Integer schwartz_total(const GlobalData& g);
// same value through the c_n integral: baum_bott - integral + (-1)^n sum(mu);
// agreement with schwartz_total is itself a theorem being exercised
Integer schwartz_total_via_integrals(const GlobalData& g);

// Euler characteristic of the hypersurface:
// k * coeff_{n-1}[(1+h)^{n+1}(1+kh)^{-1}] + (-1)^n sum(mu)
Integer euler_char_hypersurface(int n, long long k, const std::vector<Integer>& mu_d);

// Exhaustive identity verification over the box 2 <= n <= n_max,
// 0 <= d <= d_max, 1 <= k <= k_max:
//  - both routes agree for every total above,
//  - gsv_total == baum_bott_total - integral_chern_number,
//  - gsv_total == degree_bound_rhs - degree_bound_lhs_binomial,
//  - for even n and k > d+2 the gsv_total is strictly negative.
struct SweepResult {
    long long cases_checked = 0;
    std::vector<std::string> failures;  // human-readable descriptions
};
SweepResult identity_sweep(int n_max, long long d_max, long long k_max);

// Degree-bound checks.  hypotheses_not_met means the statement's assumptions
// fail for this input, so the conclusion is not asserted either way.
enum class BoundStatus { holds, fails, hypotheses_not_met };
struct BoundReport {
    BoundStatus status = BoundStatus::hypotheses_not_met;
    std::string detail;
};

// n even, every hypersurface Milnor number equal to 1, Sing(D) ⊆ Sing(F)
//   ==>  k <= d + 2
BoundReport poincare_mu_one_bound(const GlobalData& g, bool sing_d_inside_sing_f);

// n even, Sing(D) ⊆ Sing(F)  ==>
//   degree_bound_lhs_binomial - sum(mu - 1) <= degree_bound_rhs
BoundReport poincare_general_bound(const GlobalData& g, bool sing_d_inside_sing_f);

// n even and D singular (s1 >= 1) ==> chi(D) > s1 + s2, where s1 = #Sing(D)
// and s2 is the number of foliation singularities on the smooth part of D.
// A smooth D reports hypotheses_not_met: with s1 = 0 the claim degenerates
// to chi(D) > s2, which already fails for a line in P^2 carrying two simple
// tangencies (chi = 2 = s2 is an equality, not an excess).
BoundReport euler_excess_bound(const GlobalData& g, long long s2);

// n even and k > d + 2  ==>  gsv_total < 0.  For odd n the implication is
// false (n=3, d=2, k=9 gives gsv_total = +423), so odd n reports
// hypotheses_not_met.
BoundReport gsv_total_negativity(int n, long long d, long long k);

}  // namespace folindex
