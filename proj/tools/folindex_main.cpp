#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "folindex/chern.hpp"
#include "folindex/indices.hpp"
#include "folindex/parser.hpp"
#include "folindex/scenario.hpp"
#include "folindex/verify.hpp"

namespace {

// Thrown by subcommand bodies to request a specific process exit code
// (0 pass, 1 input error, 2 refusal, 3 failed verdict).
struct ExitRequest {
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        throw ExitRequest{1};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

folindex::Scenario load_scenario(const std::string& path) {
    std::string text = read_file(path);
    try {
        return folindex::parse_scenario(text);
    } catch (const folindex::ParseError& e) {
        std::cerr << "parse error: " << path << ":" << e.line() << ":" << e.column() << ": "
                  << e.message() << "\n";
        throw ExitRequest{1};
    }
}

std::string bound_status_name(folindex::BoundStatus s) {
    switch (s) {
        case folindex::BoundStatus::holds: return "holds";
        case folindex::BoundStatus::fails: return "fails";
        default: return "hypotheses_not_met";
    }
}

nlohmann::json json_integer(const folindex::Integer& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return folindex::to_string(z);
}

nlohmann::json json_optional(const std::optional<folindex::Integer>& z) {
    if (!z) return nullptr;
    return json_integer(*z);
}

nlohmann::json json_bound(const folindex::BoundReport& br) {
    return {{"status", bound_status_name(br.status)}, {"detail", br.detail}};
}

std::string optional_line(const std::string& name, const std::optional<folindex::Integer>& z) {
    return name + ": " + (z ? folindex::to_string(*z) : std::string("-")) + "\n";
}

void print_point_table(const folindex::ScenarioReport& report) {
    const folindex::PointReport& pr = report.points.front();
    std::string out;
    for (const std::string& w : report.warnings) out += "warning: " + w + "\n";
    out += "point " + pr.label + " (chart " + std::to_string(pr.chart_id) + ")\n";
    out += std::string("on_hypersurface: ") + (pr.indices.on_hypersurface ? "yes" : "no") + "\n";
    out += std::string("foliation_singular: ") + (pr.indices.foliation_singular ? "yes" : "no") +
           "\n";
    out += std::string("hypersurface_singular: ") +
           (pr.indices.hypersurface_singular ? "yes" : "no") + "\n";
    out += optional_line("milnor_foliation", pr.indices.milnor_foliation);
    out += optional_line("milnor_hypersurface", pr.indices.milnor_hypersurface);
    out += optional_line("tjurina", pr.indices.tjurina);
    out += optional_line("multiplicity", pr.indices.multiplicity);
    out += optional_line("gsv", pr.indices.gsv);
    out += optional_line("schwartz", pr.indices.schwartz);
    out += "residue: " + folindex::to_string(pr.residue) + "\n";
    for (const auto& [name, level] : pr.indices.certification)
        out += "certified " + name + " at truncation " + std::to_string(level) + "\n";
    for (const std::string& note : pr.indices.notes) out += "note: " + note + "\n";
    out += "bound positivity: " + bound_status_name(pr.bounds.positivity.status) + " (" +
           pr.bounds.positivity.detail + ")\n";
    out += "bound tjurina_le_gsv: " + bound_status_name(pr.bounds.tjurina_le_gsv.status) + " (" +
           pr.bounds.tjurina_le_gsv.detail + ")\n";
    out += "bound multiplicity_le_gsv: " +
           bound_status_name(pr.bounds.multiplicity_le_gsv.status) + " (" +
           pr.bounds.multiplicity_le_gsv.detail + ")\n";
    std::cout << out;
}

void print_point_json(const folindex::ScenarioReport& report) {
    const folindex::PointReport& pr = report.points.front();
    nlohmann::json j;
    j["label"] = pr.label;
    j["chart"] = pr.chart_id;
    j["warnings"] = report.warnings;
    j["flags"] = {{"on_hypersurface", pr.indices.on_hypersurface},
                  {"foliation_singular", pr.indices.foliation_singular},
                  {"hypersurface_singular", pr.indices.hypersurface_singular}};
    j["indices"] = {{"milnor_foliation", json_optional(pr.indices.milnor_foliation)},
                    {"milnor_hypersurface", json_optional(pr.indices.milnor_hypersurface)},
                    {"tjurina", json_optional(pr.indices.tjurina)},
                    {"multiplicity", json_optional(pr.indices.multiplicity)},
                    {"gsv", json_optional(pr.indices.gsv)},
                    {"schwartz", json_optional(pr.indices.schwartz)},
                    {"residue", json_integer(pr.residue)}};
    j["certification"] = pr.indices.certification;
    j["notes"] = pr.indices.notes;
    j["bounds"] = {{"positivity", json_bound(pr.bounds.positivity)},
                   {"tjurina_le_gsv", json_bound(pr.bounds.tjurina_le_gsv)},
                   {"multiplicity_le_gsv", json_bound(pr.bounds.multiplicity_le_gsv)}};
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact singularity indices of holomorphic foliations along hypersurfaces"};
    app.require_subcommand(1);

    std::string verify_path;
    bool verify_json = false;
    int verify_cap = 64;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run a scenario file: local indices, residues, and global verdicts");
    verify_cmd->add_option("file", verify_path, "scenario file")->required();
    verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");
    verify_cmd->add_option("--nmax", verify_cap, "truncation cap for local dimensions")
        ->check(CLI::Range(2, 4096));

    std::string indices_path;
    bool indices_json = false;
    int indices_cap = 64;
    CLI::App* indices_cmd = app.add_subcommand(
        "indices", "local indices at the single declared point of a one-chart scenario");
    indices_cmd->add_option("file", indices_path, "scenario file")->required();
    indices_cmd->add_flag("--json", indices_json, "emit the point report as JSON");
    indices_cmd->add_option("--nmax", indices_cap, "truncation cap for local dimensions")
        ->check(CLI::Range(2, 4096));

    long long chern_n = 0, chern_d = 0, chern_k = 0, chern_s2 = 0;
    std::vector<long long> chern_mu;
    bool chern_json = false, chern_containment = false;
    CLI::App* chern_cmd = app.add_subcommand(
        "chern", "global totals and degree bounds from (n, d, k) and hypersurface Milnor numbers");
    chern_cmd->add_option("--n", chern_n, "ambient projective dimension")
        ->required()
        ->check(CLI::Range(2, 64));
    chern_cmd->add_option("--d", chern_d, "foliation degree")
        ->required()
        ->check(CLI::Range(0LL, 1LL << 20));
    chern_cmd->add_option("--k", chern_k, "hypersurface degree")
        ->required()
        ->check(CLI::Range(1LL, 1LL << 20));
    chern_cmd->add_option("--mu", chern_mu,
                          "Milnor numbers of the hypersurface singularities (repeatable)")
        ->check(CLI::Range(1LL, 1LL << 40));
    chern_cmd->add_flag("--containment", chern_containment,
                        "assume every hypersurface singularity is a foliation singularity");
    chern_cmd->add_option("--smooth-singularities", chern_s2,
                          "count of foliation singularities on the smooth part of the "
                          "hypersurface")
        ->check(CLI::Range(0LL, 1LL << 40));
    chern_cmd->add_flag("--json", chern_json, "emit the totals as JSON");

    int sweep_nmax = 8;
    long long sweep_dmax = 10, sweep_kmax = 10;
    bool sweep_json = false;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "re-derive the global identities over a box of (n, d, k) parameters");
    sweep_cmd->add_option("--nmax", sweep_nmax, "largest ambient dimension")
        ->check(CLI::Range(2, 16));
    sweep_cmd->add_option("--dmax", sweep_dmax, "largest foliation degree")
        ->check(CLI::Range(0LL, 64LL));
    sweep_cmd->add_option("--kmax", sweep_kmax, "largest hypersurface degree")
        ->check(CLI::Range(1LL, 64LL));
    sweep_cmd->add_flag("--json", sweep_json, "emit the sweep result as JSON");

    verify_cmd->callback([&] {
        folindex::Scenario sc = load_scenario(verify_path);
        folindex::IndexOptions opts;
        opts.truncation_cap = verify_cap;
        folindex::ScenarioReport report = folindex::run_scenario(sc, opts);
        std::cout << (verify_json ? folindex::render_json(report)
                                  : folindex::render_table(report));
        if (report.any_failure()) throw ExitRequest{3};
    });

    indices_cmd->callback([&] {
        folindex::Scenario sc = load_scenario(indices_path);
        if (sc.charts.size() != 1 || sc.points.size() != 1) {
            std::cerr << "error: indices mode needs exactly one chart and one declared point\n";
            throw ExitRequest{1};
        }
        folindex::IndexOptions opts;
        opts.truncation_cap = indices_cap;
        folindex::ScenarioReport report = folindex::run_scenario(sc, opts);
        if (indices_json)
            print_point_json(report);
        else
            print_point_table(report);
    });

    chern_cmd->callback([&] {
        folindex::GlobalData g;
        g.n = static_cast<int>(chern_n);
        g.d = chern_d;
        g.k = chern_k;
        for (long long mu : chern_mu) g.mu_d.push_back(folindex::to_integer(mu));

        folindex::Integer integral = folindex::integral_chern_number(g.n, g.d, g.k);
        folindex::Integer gsv = folindex::gsv_total(g.n, g.d, g.k);
        folindex::Integer schwartz = folindex::schwartz_total(g);
        folindex::Integer baum_bott = folindex::baum_bott_total(g.n, g.d);
        folindex::Integer euler = folindex::euler_char_hypersurface(g.n, g.k, g.mu_d);
        folindex::BoundReport mu_one = folindex::poincare_mu_one_bound(g, chern_containment);
        folindex::BoundReport general = folindex::poincare_general_bound(g, chern_containment);
        folindex::BoundReport excess = folindex::euler_excess_bound(g, chern_s2);

        if (chern_json) {
            nlohmann::json j;
            nlohmann::json mu = nlohmann::json::array();
            for (const folindex::Integer& z : g.mu_d) mu.push_back(json_integer(z));
            j["global"] = {{"n", g.n}, {"d", g.d}, {"k", g.k}, {"mu", std::move(mu)}};
            j["totals"] = {{"integral", json_integer(integral)},
                           {"gsv_total", json_integer(gsv)},
                           {"schwartz_total", json_integer(schwartz)},
                           {"baum_bott_total", json_integer(baum_bott)},
                           {"euler_characteristic", json_integer(euler)}};
            j["bounds"] = {{"poincare_mu_one", json_bound(mu_one)},
                           {"poincare_general", json_bound(general)},
                           {"euler_excess", json_bound(excess)}};
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::string mu_list;
        for (std::size_t i = 0; i < g.mu_d.size(); ++i)
            mu_list += (i ? ", " : "") + folindex::to_string(g.mu_d[i]);
        std::cout << "global data: n=" << g.n << " d=" << g.d << " k=" << g.k << " mu=[" << mu_list
                  << "]\n"
                  << "integral: " << folindex::to_string(integral) << "\n"
                  << "gsv_total: " << folindex::to_string(gsv) << "\n"
                  << "schwartz_total: " << folindex::to_string(schwartz) << "\n"
                  << "baum_bott_total: " << folindex::to_string(baum_bott) << "\n"
                  << "euler_characteristic: " << folindex::to_string(euler) << "\n"
                  << "bound poincare_mu_one: " << bound_status_name(mu_one.status) << " ("
                  << mu_one.detail << ")\n"
                  << "bound poincare_general: " << bound_status_name(general.status) << " ("
                  << general.detail << ")\n"
                  << "bound euler_excess: " << bound_status_name(excess.status) << " ("
                  << excess.detail << ")\n";
    });

    sweep_cmd->callback([&] {
        folindex::SweepResult result = folindex::identity_sweep(sweep_nmax, sweep_dmax, sweep_kmax);
        if (sweep_json) {
            nlohmann::json j;
            j["cases_checked"] = result.cases_checked;
            j["failures"] = result.failures;
            j["overall"] = result.failures.empty() ? "pass" : "fail";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "checked " << result.cases_checked << " parameter triples (n <= "
                      << sweep_nmax << ", d <= " << sweep_dmax << ", k <= " << sweep_kmax
                      << ")\n";
            for (const std::string& f : result.failures) std::cout << "failure: " << f << "\n";
            std::cout << "overall: " << (result.failures.empty() ? "pass" : "FAIL") << "\n";
        }
        if (!result.failures.empty()) throw ExitRequest{3};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ExitRequest& e) {
        return e.code;
    } catch (const folindex::NotInvariantError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const folindex::UncertifiedError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
