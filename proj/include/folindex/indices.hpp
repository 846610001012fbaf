#pragma once

// Local singularity indices of a one-dimensional foliation germ along a
// hypersurface germ with (at most) isolated singularities: Milnor numbers,
// Tjurina number, GSV and Schwartz indices, the top Chern-class residue,
// and the pointwise positivity / lower-bound checks.
//
// All dimensions are local algebra dimensions dim_C O_{C^n,0}/I computed by
// certified truncation (see groebner.hpp); a computation that fails to
// certify below the cap throws UncertifiedError rather than returning a
// number that might be wrong.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folindex/chern.hpp"
#include "folindex/polynomial.hpp"

namespace folindex {

// v(f) is not a multiple of f: the hypersurface is not invariant.
class NotInvariantError : public std::runtime_error {
public:
    explicit NotInvariantError(Polynomial remainder);
    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial remainder_;
};

// A local dimension failed to stabilize below the truncation cap, so its
// value is not certified and must not be used.
class UncertifiedError : public std::runtime_error {
public:
    UncertifiedError(std::string computation, int cap, long long last_dim);
    const std::string& computation() const { return computation_; }
    int cap() const { return cap_; }
    long long last_dim() const { return last_dim_; }

private:
    std::string computation_;
    int cap_;
    long long last_dim_;
};

struct IndexOptions {
    int truncation_cap = 64;  // passed through to local_dim
};

// Hypersurface equation and foliation generator recentred at a point.
struct LocalContext {
    Polynomial f;         // local equation of the hypersurface
    VectorField v;        // local generator of the foliation
    Polynomial cofactor;  // h with v(f) = h * f
};

// h with v(f) = h * f; throws NotInvariantError (carrying the division
// remainder) when f does not divide v(f).
Polynomial invariance_cofactor(const Polynomial& f, const VectorField& v);

// Translate (f, v) so `point` becomes the origin and compute the cofactor
// of the translated pair.  Throws NotInvariantError if D is not invariant.
LocalContext make_local_context(const Polynomial& f, const VectorField& v,
                                const std::vector<Rational>& point);

struct PointIndices {
    int n = 0;                         // number of local coordinates
    bool on_hypersurface = false;      // f(0) == 0
    bool foliation_singular = false;   // v(0) == 0
    bool hypersurface_singular = false;  // on D with df(0) == 0

    std::optional<Integer> milnor_foliation;     // mu of the vector field germ
    std::optional<Integer> milnor_hypersurface;  // mu of the hypersurface germ
    std::optional<Integer> tjurina;              // tau of the hypersurface germ
    std::optional<Integer> multiplicity;         // vanishing order of f (on D)
    std::optional<Integer> gsv;                  // GSV index (on D, some side singular)
    std::optional<Integer> schwartz;             // Schwartz index, same domain

    // local-dimension name -> certified truncation level
    std::map<std::string, int> certification;
    std::vector<std::string> notes;
};

// Compute every index that is defined for the germ.  Throws UncertifiedError
// when a required local dimension does not certify (e.g. a non-isolated
// singularity), and std::invalid_argument on malformed input.
PointIndices compute_point_indices(const LocalContext& ctx, const IndexOptions& opts = {});

// Residue of the top Chern class at the point:
//   off D, F singular:            mu(F)
//   on D regular, F singular:     mu(F) - Sch
//   on D singular, F singular:    mu(F) - Sch + (-1)^n mu(D)
//   on D singular, F regular:     -Sch + (-1)^n mu(D)
// Throws std::domain_error when the point is regular for both.
Integer top_residue(const PointIndices& pi);

// Pointwise inequality checks (hypotheses_not_met when the statement's
// assumptions do not hold at this point).
struct PointBoundChecks {
    // p in Sing(F) ∩ D: Sch > 0 for even n, GSV > 0 for odd n
    BoundReport positivity;
    // n odd, p in Sing(F) ∩ Sing(D): tau <= GSV
    BoundReport tjurina_le_gsv;
    // n odd, p in Sing(F) ∩ Sing(D), projective ambient: (m-1)^n <= n * GSV
    BoundReport multiplicity_le_gsv;
};
PointBoundChecks point_bound_checks(const PointIndices& pi);

// Number of distinct linear factors of the initial form (tangent cone) of a
// plane curve germ; two or more certifies a multi-branch germ.  nvars must
// be 2 and f nonzero with f(0) == 0.
int tangent_cone_distinct_factors(const Polynomial& f);

}  // namespace folindex
