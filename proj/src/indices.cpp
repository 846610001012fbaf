#include "folindex/indices.hpp"

#include <algorithm>

#include "folindex/groebner.hpp"
#include "folindex/parser.hpp"

namespace folindex {

NotInvariantError::NotInvariantError(Polynomial remainder)
    : std::runtime_error("hypersurface is not invariant: v(f) is not a multiple of f "
                         "(remainder " +
                         to_string(remainder) + ")"),
      remainder_(std::move(remainder)) {}

UncertifiedError::UncertifiedError(std::string computation, int cap, long long last_dim)
    : std::runtime_error("local dimension '" + computation +
                         "' did not stabilize below truncation cap " + std::to_string(cap) +
                         " (last value " + std::to_string(last_dim) +
                         "); the singularity may not be isolated"),
      computation_(std::move(computation)),
      cap_(cap),
      last_dim_(last_dim) {}

Polynomial invariance_cofactor(const Polynomial& f, const VectorField& v) {
    Polynomial derivative = apply_vector_field(v, f);
    DivisionResult division = divide_by(derivative, f);
    if (!division.remainder.is_zero()) throw NotInvariantError(division.remainder);
    return division.quotient;
}

LocalContext make_local_context(const Polynomial& f, const VectorField& v,
                                const std::vector<Rational>& point) {
    if (f.is_zero()) throw std::invalid_argument("hypersurface equation is zero");
    Polynomial local_f = translate(f, point);
    std::vector<Polynomial> comps;
    comps.reserve(v.components.size());
    for (const Polynomial& a : v.components) comps.push_back(translate(a, point));
    VectorField local_v(std::move(comps));
    Polynomial cofactor = invariance_cofactor(local_f, local_v);
    return LocalContext{std::move(local_f), std::move(local_v), std::move(cofactor)};
}

namespace {

Integer parity_sign(int n) { return (n % 2 == 0) ? Integer(1) : Integer(-1); }

// run a certified local dimension and record its truncation level
Integer certified_dim(const std::string& name, const std::vector<Polynomial>& gens,
                      const IndexOptions& opts, PointIndices& out) {
    LocalDimension ld = local_dim(gens, opts.truncation_cap);
    if (!ld.certified) throw UncertifiedError(name, opts.truncation_cap, ld.dim);
    out.certification[name] = ld.truncation;
    return Integer(static_cast<long>(ld.dim));
}

// univariate polynomial utilities over Q, coefficient vector c[0] + c[1] t + ...
int uni_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;  // zero polynomial
}

std::vector<Rational> uni_trim(std::vector<Rational> p) {
    p.resize(static_cast<std::size_t>(uni_degree(p) + 1));
    return p;
}

std::vector<Rational> uni_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    int db = uni_degree(b);
    for (int da = uni_degree(a); da >= db; da = uni_degree(a)) {
        Rational q = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(da)] = 0;  // guard exact cancellation
    }
    return uni_trim(std::move(a));
}

std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (uni_degree(b) >= 0) {
        std::vector<Rational> r = uni_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

int tangent_cone_distinct_factors(const Polynomial& f) {
    if (f.nvars() != 2)
        throw std::invalid_argument("tangent_cone_distinct_factors: needs a plane curve germ");
    auto ord = f.order_at_origin();
    if (!ord || *ord == 0)
        throw std::invalid_argument("tangent_cone_distinct_factors: f must vanish at the origin");
    int m = *ord;
    Polynomial cone = homogeneous_component(f, m);

    // dehomogenize: P(t) = cone(1, t); the lost factor is a power of x1
    std::vector<Rational> p(static_cast<std::size_t>(m) + 1, Rational(0));
    for (const auto& [e, c] : cone.terms()) p[static_cast<std::size_t>(e[1])] = c;
    int e_deg = uni_degree(p);

    int distinct_roots = 0;
    if (e_deg >= 1) {
        std::vector<Rational> dp(static_cast<std::size_t>(e_deg), Rational(0));
        for (int i = 1; i <= e_deg; ++i)
            dp[static_cast<std::size_t>(i - 1)] = p[static_cast<std::size_t>(i)] * Rational(i);
        std::vector<Rational> g = uni_gcd(p, dp);
        distinct_roots = e_deg - uni_degree(g);
    }
    return distinct_roots + (e_deg < m ? 1 : 0);
}

PointIndices compute_point_indices(const LocalContext& ctx, const IndexOptions& opts) {
    if (ctx.f.is_zero()) throw std::invalid_argument("hypersurface equation is zero");
    PointIndices pi;
    pi.n = ctx.f.nvars();
    pi.on_hypersurface = (ctx.f.constant_term() == 0);
    pi.foliation_singular = ctx.v.vanishes_at_origin();

    if (!pi.on_hypersurface) {
        if (pi.foliation_singular)
            pi.milnor_foliation = certified_dim("dim_a", ctx.v.components, opts, pi);
        return pi;
    }

    std::vector<Polynomial> jacobian;
    bool gradient_vanishes = true;
    for (int i = 1; i <= pi.n; ++i) {
        jacobian.push_back(partial_derivative(ctx.f, i));
        if (jacobian.back().constant_term() != 0) gradient_vanishes = false;
    }
    pi.hypersurface_singular = gradient_vanishes;
    pi.multiplicity = Integer(*ctx.f.order_at_origin());

    if (pi.foliation_singular)
        pi.milnor_foliation = certified_dim("dim_a", ctx.v.components, opts, pi);
    if (pi.hypersurface_singular)
        pi.milnor_hypersurface = certified_dim("dim_jf", jacobian, opts, pi);

    if (!pi.foliation_singular && !pi.hypersurface_singular) return pi;

    std::vector<Polynomial> f_and_jacobian = jacobian;
    f_and_jacobian.push_back(ctx.f);
    Integer dim_f_jf = certified_dim("dim_f_jf", f_and_jacobian, opts, pi);
    if (pi.hypersurface_singular) pi.tjurina = dim_f_jf;

    if (pi.n % 2 == 0) {
        std::vector<Polynomial> f_and_field = ctx.v.components;
        f_and_field.push_back(ctx.f);
        Integer dim_f_a = certified_dim("dim_f_a", f_and_field, opts, pi);
        pi.gsv = dim_f_a - dim_f_jf;
    } else {
        Integer dim_a = pi.milnor_foliation
                            ? *pi.milnor_foliation
                            : certified_dim("dim_a", ctx.v.components, opts, pi);
        if (ctx.cofactor.constant_term() != 0)
            pi.notes.push_back("cofactor is a unit at the point");
        std::vector<Polynomial> cof_and_field = ctx.v.components;
        cof_and_field.push_back(ctx.cofactor);
        Integer dim_h_a = certified_dim("dim_h_a", cof_and_field, opts, pi);
        pi.gsv = dim_a - dim_h_a + dim_f_jf;
    }
    pi.schwartz = *pi.gsv + parity_sign(pi.n) * pi.milnor_hypersurface.value_or(0);

    if (pi.n == 2 && pi.hypersurface_singular) {
        int factors = tangent_cone_distinct_factors(ctx.f);
        if (factors >= 2)
            pi.notes.push_back("plane curve germ has at least " + std::to_string(factors) +
                               " branches (distinct tangent lines); indices follow the "
                               "Milnor-fiber convention");
        else
            pi.notes.push_back(
                "plane curve germ has a single tangent line; branch count not determined");
    }
    return pi;
}

Integer top_residue(const PointIndices& pi) {
    Integer sign = parity_sign(pi.n);
    if (!pi.on_hypersurface) {
        if (pi.foliation_singular) return *pi.milnor_foliation;
        throw std::domain_error("no residue at a point regular for both the foliation "
                                "and the hypersurface");
    }
    if (pi.foliation_singular && !pi.hypersurface_singular)
        return *pi.milnor_foliation - *pi.schwartz;
    if (pi.foliation_singular && pi.hypersurface_singular)
        return *pi.milnor_foliation - *pi.schwartz + sign * *pi.milnor_hypersurface;
    if (pi.hypersurface_singular)  // foliation regular
        return -*pi.schwartz + sign * *pi.milnor_hypersurface;
    throw std::domain_error("no residue at a point regular for both the foliation "
                            "and the hypersurface");
}

PointBoundChecks point_bound_checks(const PointIndices& pi) {
    PointBoundChecks checks;
    bool even = (pi.n % 2 == 0);

    if (pi.on_hypersurface && pi.foliation_singular) {
        if (even) {
            bool ok = *pi.schwartz > 0;
            checks.positivity.status = ok ? BoundStatus::holds : BoundStatus::fails;
            checks.positivity.detail =
                "Schwartz index = " + to_string(*pi.schwartz) + (ok ? " > 0" : " <= 0");
        } else {
            bool ok = *pi.gsv > 0;
            checks.positivity.status = ok ? BoundStatus::holds : BoundStatus::fails;
            checks.positivity.detail =
                "GSV index = " + to_string(*pi.gsv) + (ok ? " > 0" : " <= 0");
        }
    } else {
        checks.positivity.detail = "requires a foliation singularity on the hypersurface";
    }

    bool corollary_scope =
        !even && pi.on_hypersurface && pi.foliation_singular && pi.hypersurface_singular;
    if (corollary_scope) {
        bool ok = *pi.tjurina <= *pi.gsv;
        checks.tjurina_le_gsv.status = ok ? BoundStatus::holds : BoundStatus::fails;
        checks.tjurina_le_gsv.detail =
            "tjurina = " + to_string(*pi.tjurina) + (ok ? " <= " : " > ") + to_string(*pi.gsv);

        Integer lhs = ipow(*pi.multiplicity - 1, pi.n);
        Integer rhs = Integer(pi.n) * *pi.gsv;
        bool ok2 = lhs <= rhs;
        checks.multiplicity_le_gsv.status = ok2 ? BoundStatus::holds : BoundStatus::fails;
        checks.multiplicity_le_gsv.detail = "(m-1)^n = " + to_string(lhs) +
                                            (ok2 ? " <= " : " > ") + "n * GSV = " + to_string(rhs);
    } else {
        checks.tjurina_le_gsv.detail =
            "requires odd dimension and a point singular for both the foliation and "
            "the hypersurface";
        checks.multiplicity_le_gsv.detail = checks.tjurina_le_gsv.detail;
    }
    return checks;
}

}  // namespace folindex
