#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "folindex/polynomial.hpp"

namespace folindex {

// One affine chart of a projective verification instance: a hypersurface
// equation f and the components of the defining vector field, both in the
// chart's coordinates x1..xn.
struct ChartData {
    int id = 0;
    Polynomial hypersurface;
    VectorField field;
};

struct ScenarioPoint {
    int chart_id = 0;
    std::vector<Rational> coords;
    std::string label;
};

// A full verification instance on P^n: declared degrees, per-chart data, the
// author's list of singular points, and optional frozen expectations for the
// global formula values. `complete` asserts the point list is all of
// Sing(F) ∪ Sing(D).
struct Scenario {
    int n = 0;
    long long d = 0;  // foliation degree
    long long k = 0;  // hypersurface degree
    bool complete = false;
    std::vector<ChartData> charts;
    std::vector<ScenarioPoint> points;
    std::map<std::string, Integer> expectations;
};

// Line-oriented scenario format ('#' starts a comment):
//   scenario n=<uint> d=<uint> k=<uint> complete=<true|false>
//   chart <uint>
//   hypersurface <polynomial-expr>
//   vectorfield <polynomial-expr> ; ... ; <polynomial-expr>   (n components)
//   point chart=<uint> at <rational>,...,<rational> [label=<word>]
//   expect <name> = <int>
// Expectation names: schwartz_total, gsv_total, integral_X, chi_D,
// baum_bott_total. Points must reference an already-declared chart.
// Throws ParseError with 1-based line/column.
Scenario parse_scenario(std::string_view text);

}  // namespace folindex
