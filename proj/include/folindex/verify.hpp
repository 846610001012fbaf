#pragma once

// Scenario runner: computes every local index at the declared points,
// assembles the global totals, and checks the residue/index identities and
// degree bounds.  Produces a deterministic plain-text table or JSON report.

#include <optional>
#include <string>
#include <vector>

#include "folindex/indices.hpp"
#include "folindex/scenario.hpp"

namespace folindex {

// Degree of the projective foliation read off from an affine-chart
// generator: max component degree m, minus one exactly when the top
// homogeneous components are a common multiple (g*x1, ..., g*xn) of the
// radial field.
long long foliation_degree_affine(const VectorField& v);

struct PointReport {
    std::string label;
    int chart_id = 0;
    PointIndices indices;
    Integer residue;  // defined for every accepted point
    PointBoundChecks bounds;
};

struct Verdict {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
};

struct ScenarioTotals {
    Integer integral;         // c_n integral over the ambient space
    Integer gsv;              // formula value of the GSV total
    Integer schwartz;         // formula value of the Schwartz total
    Integer baum_bott;        // formula value of the foliation Milnor total
    Integer euler;            // Euler characteristic of the hypersurface
};

struct ScenarioReport {
    int n = 0;
    long long d = 0;
    long long k = 1;
    bool complete = false;
    std::vector<std::string> warnings;
    std::vector<PointReport> points;
    ScenarioTotals totals;
    std::vector<Verdict> verdicts;

    bool any_failure() const;
};

// Runs the scenario.  Throws ParseError never (input is already parsed),
// NotInvariantError when a chart fails invariance and has a declared point
// on the hypersurface, UncertifiedError when a local dimension fails to
// certify, and std::domain_error for a declared point regular for both the
// foliation and the hypersurface.
ScenarioReport run_scenario(const Scenario& sc, const IndexOptions& opts = {});

std::string render_table(const ScenarioReport& report);
std::string render_json(const ScenarioReport& report);

}  // namespace folindex
