#include "folindex/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace folindex {

namespace {

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading_coefficient());
}

// Reduce p by basis[j] for all j != skip until no term of p is divisible by
// any of their leading terms (full normal form).
Polynomial reduce_full_skip(Polynomial p, const std::vector<Polynomial>& basis,
                            std::size_t skip) {
    Polynomial result(p.nvars());
    while (!p.is_zero()) {
        const Exponents& lt = p.leading_exponents();
        bool reduced = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == skip || basis[j].is_zero()) continue;
            const Polynomial& g = basis[j];
            if (exponents_divide(g.leading_exponents(), lt)) {
                Exponents shift = exponents_sub(lt, g.leading_exponents());
                Rational c = p.leading_coefficient() / g.leading_coefficient();
                p -= Polynomial::monomial(p.nvars(), shift, c) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.add_term(lt, p.leading_coefficient());
            p.add_term(lt, -p.leading_coefficient());
        }
    }
    return result;
}

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

// Reduce only until the leading term is irreducible; cheaper inside the
// Buchberger loop where full tail reduction is wasted work.
Polynomial reduce_head(Polynomial p, const std::vector<Polynomial>& basis) {
    while (!p.is_zero()) {
        const Exponents& lt = p.leading_exponents();
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            if (exponents_divide(g.leading_exponents(), lt)) {
                Exponents shift = exponents_sub(lt, g.leading_exponents());
                Rational c = p.leading_coefficient() / g.leading_coefficient();
                p -= Polynomial::monomial(p.nvars(), shift, c) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Exponents& a = f.leading_exponents();
    const Exponents& b = g.leading_exponents();
    Exponents l = exponents_lcm(a, b);
    Polynomial mf = Polynomial::monomial(f.nvars(), exponents_sub(l, a),
                                         Rational(1 / f.leading_coefficient()));
    Polynomial mg = Polynomial::monomial(g.nvars(), exponents_sub(l, b),
                                         Rational(1 / g.leading_coefficient()));
    return mf * f - mg * g;
}

struct Pair {
    int deg;          // total degree of the lcm (normal selection strategy)
    Exponents lcm;
    std::size_t i, j;  // i < j, indices into the working basis

    bool operator<(const Pair& other) const {
        if (deg != other.deg) return deg < other.deg;
        if (lcm != other.lcm) return degrevlex_less(lcm, other.lcm);
        return std::tie(i, j) < std::tie(other.i, other.j);
    }
};

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g));
    if (basis.empty())
        throw std::invalid_argument("buchberger: all generators are zero");

    // interreduce the input so the pair loop starts from a lean basis
    for (std::size_t i = 0; i < basis.size(); ++i)
        basis[i] = make_monic(reduce_full_skip(std::move(basis[i]), basis, i));
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial& p) { return p.is_zero(); }),
                basis.end());
    if (basis.empty())
        throw std::invalid_argument("buchberger: generators reduce to zero");

    std::set<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    // Pairs discarded here are justified skips (coprime leading monomials, or
    // two monomials), so the chain criterion below may treat them as done.
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        const Exponents& a = basis[i].leading_exponents();
        const Exponents& b = basis[j].leading_exponents();
        if (basis[i].term_count() == 1 && basis[j].term_count() == 1) return;
        Exponents l = exponents_lcm(a, b);
        if (l == exponents_add(a, b)) return;
        queue.insert({total_degree(l), l, i, j});
        pending.insert({i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});

        // chain criterion: a third element divides the lcm and both side
        // pairs have already been handled (popped, or skipped at push time)
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exponents_divide(basis[k].leading_exponents(), pr.lcm)) continue;
            auto ik = std::minmax(pr.i, k);
            auto jk = std::minmax(pr.j, k);
            if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial r = reduce_head(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // minimalize: drop elements whose LT is divisible by another LT
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exponents_divide(basis[j].leading_exponents(), basis[i].leading_exponents())) {
                // on equal LTs keep the earlier element only
                if (basis[j].leading_exponents() == basis[i].leading_exponents())
                    redundant = j < i;
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others for the reduced basis
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i)
        reduced.push_back(make_monic(reduce_full_skip(minimal[i], minimal, i)));
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& f, const Polynomial& g) {
        return degrevlex_less(f.leading_exponents(), g.leading_exponents());
    });
    return reduced;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
    return reduce_full_skip(p, basis, kNoSkip);
}

namespace {

// Count monomials of total degree < truncation that are not divisible by any
// LT in `lts`, by DFS over exponent vectors: once a partial exponent prefix
// is divisible by an LT supported on the fixed coordinates, every completion
// is divisible too, so the branch is pruned.
long long count_standard_monomials(const std::vector<Exponents>& lts, int nvars, int truncation) {
    long long count = 0;
    Exponents exp(nvars, 0);

    auto dfs = [&](auto&& self, int coord, int used) -> void {
        if (coord == nvars) {
            ++count;
            return;
        }
        for (int e = 0; used + e < truncation; ++e) {
            exp[coord] = e;
            bool pruned = false;
            for (const Exponents& lt : lts) {
                bool div = true;
                for (int i = 0; i < nvars && div; ++i) {
                    if (i <= coord) {
                        if (lt[i] > exp[i]) div = false;
                    } else if (lt[i] > 0) {
                        div = false;
                    }
                }
                if (div) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) self(self, coord + 1, used + e);
        }
        exp[coord] = 0;
    };
    dfs(dfs, 0, 0);
    return count;
}

// All exponent vectors of total degree < bound, in a fixed order.
std::vector<Exponents> monomials_below(int nvars, int bound) {
    std::vector<Exponents> out;
    if (bound <= 0) return out;
    Exponents exp(nvars, 0);
    auto rec = [&](auto&& self, int coord, int remaining) -> void {
        if (coord == nvars) {
            out.push_back(exp);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[coord] = e;
            self(self, coord + 1, remaining - e);
        }
        exp[coord] = 0;
    };
    rec(rec, 0, bound - 1);
    return out;
}

// All exponent vectors of total degree exactly `degree`.
std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
    std::vector<Exponents> out;
    Exponents exp(nvars, 0);
    auto rec = [&](auto&& self, int coord, int remaining) -> void {
        if (coord == nvars - 1) {
            exp[coord] = remaining;
            out.push_back(exp);
            exp[coord] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[coord] = e;
            self(self, coord + 1, remaining - e);
        }
        exp[coord] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// Groebner basis allowing the empty generator list (zero ideal -> empty basis).
std::vector<Polynomial> completed_basis(const std::vector<Polynomial>& gens) {
    bool any = std::any_of(gens.begin(), gens.end(),
                           [](const Polynomial& p) { return !p.is_zero(); });
    if (!any) return {};
    return buchberger(gens);
}

// truncated dimension given a precomputed Groebner basis of the base ideal I:
// dim C[x]/(I + m^N) with every degree-N monomial passed as a real generator.
// (Filtering the monomials against the base leading terms is unsound for
// inhomogeneous ideals: I = <x1^2 + x1^3> with N = 3 contains x1^2 even
// though x1^2 is below every element of LT(I).)
long long truncated_dim_with_base(const std::vector<Polynomial>& base_gb, int nvars,
                                  int truncation) {
    std::vector<Polynomial> gens = base_gb;
    for (const Exponents& e : monomials_of_degree(nvars, truncation))
        gens.push_back(Polynomial::monomial(nvars, e, Rational(1)));
    std::vector<Polynomial> gb = buchberger(gens);
    std::vector<Exponents> lts;
    lts.reserve(gb.size());
    for (const Polynomial& g : gb) lts.push_back(g.leading_exponents());
    return count_standard_monomials(lts, nvars, truncation);
}

}  // namespace

long long truncated_quotient_dim(const std::vector<Polynomial>& gens, int truncation) {
    if (truncation < 1)
        throw std::invalid_argument("truncated_quotient_dim: truncation must be >= 1");
    if (gens.empty()) throw std::invalid_argument("truncated_quotient_dim: no generators given");
    int nvars = gens.front().nvars();
    return truncated_dim_with_base(completed_basis(gens), nvars, truncation);
}

LocalDimension local_dim(const std::vector<Polynomial>& gens, int truncation_cap) {
    if (truncation_cap < 2)
        throw std::invalid_argument("local_dim: truncation cap must be >= 2");
    if (gens.empty()) throw std::invalid_argument("local_dim: no generators given");
    int nvars = gens.front().nvars();
    std::vector<Polynomial> base_gb = completed_basis(gens);

    LocalDimension out;
    long long prev = truncated_dim_with_base(base_gb, nvars, 1);
    for (int trunc = 2; trunc <= truncation_cap; ++trunc) {
        long long cur = truncated_dim_with_base(base_gb, nvars, trunc);
        if (cur == prev) {
            out.dim = cur;
            out.truncation = trunc - 1;
            out.certified = true;
            return out;
        }
        prev = cur;
    }
    out.dim = prev;
    out.truncation = truncation_cap;
    out.certified = false;
    return out;
}

namespace {

Integer binomial_z(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

// Rank of an integer matrix by Bareiss fraction-free elimination.
long long integer_rank(std::vector<std::vector<Integer>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    Integer prev_pivot = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

}  // namespace

long long oracle_quotient_dim(const std::vector<Polynomial>& gens, int nvars, int truncation) {
    if (truncation < 1) throw std::invalid_argument("oracle_quotient_dim: truncation must be >= 1");
    if (nvars < 1) throw std::invalid_argument("oracle_quotient_dim: nvars must be >= 1");
    Integer mono_count = binomial_z(truncation - 1 + nvars, nvars);
    if (mono_count > 5000)
        throw std::invalid_argument(
            "oracle_quotient_dim: monomial space too large (limit ~5000)");

    std::vector<Exponents> cols = monomials_below(nvars, truncation);
    std::map<Exponents, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;

    // rows: truncation of x^alpha * g for each generator g and each shift
    // alpha with |alpha| + ord(g) < truncation (higher shifts truncate to 0)
    std::vector<std::vector<Integer>> rows;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        auto ord = g.order_at_origin();
        int max_shift = truncation - 1 - *ord;
        if (max_shift < 0) continue;
        for (const Exponents& alpha : monomials_below(nvars, max_shift + 1)) {
            Polynomial shifted = Polynomial::monomial(nvars, alpha, Rational(1)) * g;
            // clear denominators so the row is integral
            Integer den_lcm = 1;
            for (const auto& [e, c] : shifted.terms()) {
                (void)e;
                Integer den(c.get_den());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
            }
            std::vector<Integer> row(cols.size(), Integer(0));
            bool nonzero = false;
            for (const auto& [e, c] : shifted.terms()) {
                auto it = col_index.find(e);
                if (it == col_index.end()) continue;  // degree >= truncation
                Rational scaled = c * Rational(den_lcm);
                row[it->second] = Integer(scaled.get_num());
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    long long rank = rows.empty() ? 0 : integer_rank(rows);
    return static_cast<long long>(cols.size()) - rank;
}

}  // namespace folindex
