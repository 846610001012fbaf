#pragma once

// Groebner-basis machinery over Q[x1..xn] in degrevlex order, plus the
// local-dimension engine: dim_C O_{C^n,0} / I for zero-dimensional ideals,
// computed through truncated quotients with a Nakayama-style stabilization
// certificate.

#include <vector>

#include "folindex/polynomial.hpp"

namespace folindex {

// Reduced Groebner basis of the ideal generated by `gens` (degrevlex).
// Output is monic, autoreduced, and sorted by increasing leading monomial,
// hence canonical for the ideal.  Throws std::invalid_argument when no
// generator is nonzero (the zero ideal has no meaningful basis here).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

// Remainder of p on division by the (assumed interreduced, monic) basis.
// The result has no term divisible by any basis leading monomial.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

// dim_C C[x1..xn] / (I + m^N) where m = (x1..xn), computed by counting
// standard monomials of degree < N for a Groebner basis of I + m^N.
// N must be >= 1.  At least one generator is required (the variable count is
// read from it); zero polynomials among the generators are ignored, so a
// list of zero polynomials presents the zero ideal.
long long truncated_quotient_dim(const std::vector<Polynomial>& gens, int truncation);

struct LocalDimension {
    long long dim = 0;        // dim_C O/I, meaningful only when certified
    int truncation = 0;       // first N with dim_N == dim_{N+1}
    bool certified = false;   // true iff stabilization was observed below the cap
};

// Local dimension dim_C O_{C^n,0}/I at the origin for an ideal I given by
// polynomial generators, via the stabilization of N |-> dim O/(I + m^N).
// Since I contains a power of m exactly when the truncated dimensions
// stabilize, the first N with dim_N == dim_{N+1} certifies the value.
// `truncation_cap` bounds the search (must be >= 2); when the cap is hit
// without stabilizing, the result carries certified = false and its dim
// must not be used.
LocalDimension local_dim(const std::vector<Polynomial>& gens, int truncation_cap = 64);

// Independent check of truncated_quotient_dim by plain linear algebra:
// dim of the space of polynomials of degree < N modulo the degree-<N
// truncations of all multiples x^alpha * g (g in gens, |alpha| + deg g < N).
// Exact rank over Z via fraction-free elimination.  Refuses (throws
// std::invalid_argument) when the monomial count C(N+n-1, n) exceeds ~5000.
long long oracle_quotient_dim(const std::vector<Polynomial>& gens, int nvars, int truncation);

}  // namespace folindex
