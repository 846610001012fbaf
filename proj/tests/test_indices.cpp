#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "folindex/indices.hpp"
#include "folindex/parser.hpp"
#include "folindex/polynomial.hpp"

using namespace folindex;

namespace {

VectorField field(int nvars, const std::vector<const char*>& comps) {
    std::vector<Polynomial> parsed;
    parsed.reserve(comps.size());
    for (const char* c : comps) {
        parsed.push_back(parse_polynomial(c, nvars));
    }
    return VectorField(std::move(parsed));
}

VectorField radial(int nvars) {
    std::vector<Polynomial> comps;
    for (int i = 1; i <= nvars; ++i) {
        comps.push_back(Polynomial::variable(nvars, i));
    }
    return VectorField(std::move(comps));
}

LocalContext origin_context(const char* f_text, const VectorField& v) {
    Polynomial f = parse_polynomial(f_text, v.nvars());
    return LocalContext{f, v, invariance_cofactor(f, v)};
}

bool has_note(const PointIndices& pi, const std::string& needle) {
    for (const auto& note : pi.notes) {
        if (note.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("invariance cofactors") {
    // radial field on a homogeneous equation: v(f) = deg(f) * f
    Polynomial node = parse_polynomial("x1^2 - x2^2", 2);
    CHECK(invariance_cofactor(node, radial(2)) == Polynomial::constant(2, Rational(2)));

    // hamiltonian fields annihilate their own level sets
    Polynomial cusp = parse_polynomial("x1^2 - x2^3", 2);
    CHECK(invariance_cofactor(cusp, field(2, {"3*x2^2", "2*x1"})).is_zero());

    // weighted flow on the cusp: nonconstant data still divides exactly
    CHECK(invariance_cofactor(cusp, field(2, {"3*x1", "2*x2"})) ==
          Polynomial::constant(2, Rational(6)));

    // and a genuinely non-invariant pair carries its division remainder
    try {
        invariance_cofactor(parse_polynomial("x1", 2), field(2, {"x2", "x1"}));
        FAIL("expected NotInvariantError");
    } catch (const NotInvariantError& e) {
        CHECK(e.remainder() == parse_polynomial("x2", 2));
        CHECK(std::string(e.what()).find("not a multiple of f") != std::string::npos);
    }
}

TEST_CASE("local contexts recentre the data") {
    // node translated to (1/2, -3)
    Polynomial f = parse_polynomial("(x1 - 1/2)^2 - (x2 + 3)^2", 2);
    VectorField v = field(2, {"x1 - 1/2", "x2 + 3"});
    std::vector<Rational> p = {Rational(1, 2), Rational(-3)};
    LocalContext ctx = make_local_context(f, v, p);
    CHECK(ctx.f == parse_polynomial("x1^2 - x2^2", 2));
    CHECK(ctx.v.components[0] == parse_polynomial("x1", 2));
    CHECK(ctx.cofactor == Polynomial::constant(2, Rational(2)));

    // the same data fails at a point where the division leaves a remainder
    CHECK_THROWS_AS(
        make_local_context(parse_polynomial("x1", 2), field(2, {"x2", "x1"}),
                           {Rational(0), Rational(0)}),
        NotInvariantError);
}

TEST_CASE("node germ: two crossing lines under the radial flow") {
    PointIndices pi = compute_point_indices(origin_context("x1^2 - x2^2", radial(2)));
    CHECK(pi.n == 2);
    CHECK(pi.on_hypersurface);
    CHECK(pi.foliation_singular);
    CHECK(pi.hypersurface_singular);
    CHECK(pi.milnor_foliation == Integer(1));
    CHECK(pi.milnor_hypersurface == Integer(1));
    CHECK(pi.tjurina == Integer(1));
    CHECK(pi.multiplicity == Integer(2));
    CHECK(pi.gsv == Integer(0));
    CHECK(pi.schwartz == Integer(1));
    CHECK(top_residue(pi) == 1);
    CHECK(has_note(pi, "at least 2 branches"));

    PointBoundChecks checks = point_bound_checks(pi);
    CHECK(checks.positivity.status == BoundStatus::holds);
    CHECK(checks.positivity.detail == "Schwartz index = 1 > 0");
    // the Tjurina and multiplicity comparisons are odd-dimension statements
    CHECK(checks.tjurina_le_gsv.status == BoundStatus::hypotheses_not_met);
    CHECK(checks.multiplicity_le_gsv.status == BoundStatus::hypotheses_not_met);
}

TEST_CASE("cusp germ under its weighted flow") {
    PointIndices pi =
        compute_point_indices(origin_context("x1^2 - x2^3", field(2, {"3*x1", "2*x2"})));
    CHECK(pi.milnor_foliation == Integer(1));
    CHECK(pi.milnor_hypersurface == Integer(2));
    CHECK(pi.tjurina == Integer(2));
    CHECK(pi.multiplicity == Integer(2));
    CHECK(pi.gsv == Integer(-1));
    CHECK(pi.schwartz == Integer(1));
    CHECK(top_residue(pi) == 2);
    CHECK(has_note(pi, "single tangent line"));
    CHECK(point_bound_checks(pi).positivity.status == BoundStatus::holds);
}

TEST_CASE("cusp germ under its hamiltonian flow") {
    PointIndices pi =
        compute_point_indices(origin_context("x1^2 - x2^3", field(2, {"3*x2^2", "2*x1"})));
    CHECK(pi.milnor_foliation == Integer(2));
    CHECK(pi.milnor_hypersurface == Integer(2));
    CHECK(pi.gsv == Integer(0));
    CHECK(pi.schwartz == Integer(2));
    CHECK(top_residue(pi) == 2);
}

TEST_CASE("E8 germ carries tjurina equal to milnor") {
    // x1^3 + x2^5 is quasi-homogeneous, so tau = mu = 8
    PointIndices pi =
        compute_point_indices(origin_context("x1^3 + x2^5", field(2, {"5*x1", "3*x2"})));
    CHECK(pi.milnor_hypersurface == Integer(8));
    CHECK(pi.tjurina == Integer(8));
    CHECK(pi.multiplicity == Integer(3));
    // Schwartz = GSV + mu in even dimension, and positivity still holds
    CHECK(*pi.schwartz == *pi.gsv + *pi.milnor_hypersurface);
    CHECK(*pi.schwartz > 0);
    CHECK(top_residue(pi) == *pi.milnor_foliation - *pi.schwartz + *pi.milnor_hypersurface);
}

TEST_CASE("quadric cone germ in three variables") {
    PointIndices pi =
        compute_point_indices(origin_context("x1^2 + x2^2 + x3^2", radial(3)));
    CHECK(pi.n == 3);
    CHECK(pi.milnor_foliation == Integer(1));
    CHECK(pi.milnor_hypersurface == Integer(1));
    CHECK(pi.tjurina == Integer(1));
    CHECK(pi.multiplicity == Integer(2));
    CHECK(pi.gsv == Integer(2));
    // odd dimension: Schwartz = GSV - mu
    CHECK(pi.schwartz == Integer(1));
    CHECK(top_residue(pi) == -1);
    CHECK(has_note(pi, "cofactor is a unit"));

    PointBoundChecks checks = point_bound_checks(pi);
    CHECK(checks.positivity.status == BoundStatus::holds);
    CHECK(checks.positivity.detail == "GSV index = 2 > 0");
    CHECK(checks.tjurina_le_gsv.status == BoundStatus::holds);
    CHECK(checks.tjurina_le_gsv.detail == "tjurina = 1 <= 2");
    CHECK(checks.multiplicity_le_gsv.status == BoundStatus::holds);
    CHECK(checks.multiplicity_le_gsv.detail == "(m-1)^n = 1 <= n * GSV = 6");

    // certification lists every local dimension the computation used
    CHECK(pi.certification.count("dim_a") == 1);
    CHECK(pi.certification.count("dim_jf") == 1);
    CHECK(pi.certification.count("dim_f_jf") == 1);
    CHECK(pi.certification.count("dim_h_a") == 1);
}

TEST_CASE("fermat cubic cone germ in four variables") {
    PointIndices pi = compute_point_indices(
        origin_context("x1^3 + x2^3 + x3^3 + x4^3", radial(4)));
    CHECK(pi.milnor_foliation == Integer(1));
    CHECK(pi.milnor_hypersurface == Integer(16));
    CHECK(pi.tjurina == Integer(16));
    CHECK(pi.gsv == Integer(-15));
    CHECK(pi.schwartz == Integer(1));
    CHECK(top_residue(pi) == 16);
    // even-dimension path certifies through the restricted ideal
    CHECK(pi.certification.count("dim_f_a") == 1);
    CHECK(pi.certification.count("dim_f_jf") == 1);
}

TEST_CASE("points on a smooth hypersurface still carry indices") {
    // saddle-node tangent to the line x2 = 0
    PointIndices pi = compute_point_indices(
        origin_context("x2", field(2, {"x1^2 + x2", "x1*x2"})));
    CHECK(pi.on_hypersurface);
    CHECK(pi.foliation_singular);
    CHECK_FALSE(pi.hypersurface_singular);
    CHECK(pi.milnor_foliation == Integer(3));
    CHECK(pi.milnor_hypersurface == std::nullopt);
    CHECK(pi.tjurina == std::nullopt);
    CHECK(pi.gsv == Integer(2));
    CHECK(pi.schwartz == Integer(2));
    CHECK(top_residue(pi) == 1);
}

TEST_CASE("points off the hypersurface reduce to the foliation residue") {
    Polynomial f = parse_polynomial("x1*x2^2 - 1", 2);
    VectorField v = field(2, {"-2*x1", "x2"});
    LocalContext ctx{f, v, invariance_cofactor(f, v)};
    PointIndices pi = compute_point_indices(ctx);
    CHECK_FALSE(pi.on_hypersurface);
    CHECK(pi.foliation_singular);
    CHECK(pi.milnor_foliation == Integer(1));
    CHECK(pi.gsv == std::nullopt);
    CHECK(pi.schwartz == std::nullopt);
    CHECK(top_residue(pi) == 1);
    CHECK(point_bound_checks(pi).positivity.status == BoundStatus::hypotheses_not_met);
}

TEST_CASE("residues at points regular for the foliation") {
    // hand-assembled germ: hypersurface singular, foliation regular
    PointIndices pi;
    pi.n = 2;
    pi.on_hypersurface = true;
    pi.foliation_singular = false;
    pi.hypersurface_singular = true;
    pi.schwartz = Integer(0);
    pi.milnor_hypersurface = Integer(1);
    CHECK(top_residue(pi) == 1);

    // regular for both sides: no residue is defined
    PointIndices regular;
    regular.n = 2;
    regular.on_hypersurface = true;
    CHECK_THROWS_AS(top_residue(regular), std::domain_error);
    PointIndices off;
    off.n = 2;
    CHECK_THROWS_AS(top_residue(off), std::domain_error);
}

TEST_CASE("uncertified dimensions refuse instead of guessing") {
    // cap 2 is too low to stabilize the cusp's jacobian dimension
    IndexOptions tight;
    tight.truncation_cap = 2;
    try {
        compute_point_indices(origin_context("x1^2 - x2^3", field(2, {"3*x1", "2*x2"})), tight);
        FAIL("expected UncertifiedError");
    } catch (const UncertifiedError& e) {
        CHECK(e.computation() == "dim_jf");
        CHECK(e.cap() == 2);
        CHECK(std::string(e.what()).find("did not stabilize") != std::string::npos);
    }

    // a genuinely non-isolated hypersurface singularity never stabilizes
    IndexOptions cap8;
    cap8.truncation_cap = 8;
    CHECK_THROWS_AS(
        compute_point_indices(origin_context("x1^2", radial(2)), cap8),
        UncertifiedError);
}

TEST_CASE("tangent cone factor counting") {
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1^2 - x2^2", 2)) == 2);
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1^2 - x2^3", 2)) == 1);
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1*x2", 2)) == 2);
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1*x2*(x1 + x2)", 2)) == 3);
    // a repeated line counts once, the transverse line separately
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1^2*x2", 2)) == 2);
    // lower-order terms do not matter
    CHECK(tangent_cone_distinct_factors(parse_polynomial("x1*x2 + x2^3", 2)) == 2);
    CHECK_THROWS_AS(tangent_cone_distinct_factors(parse_polynomial("x1", 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(tangent_cone_distinct_factors(parse_polynomial("1 + x1", 2)),
                    std::invalid_argument);
}
