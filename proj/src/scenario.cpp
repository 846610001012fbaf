#include "folindex/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "folindex/parser.hpp"

namespace folindex {

namespace {

constexpr const char* kExpectationNames[] = {"schwartz_total", "gsv_total", "integral_X", "chi_D",
                                             "baum_bott_total"};

struct Cursor {
    std::string_view line;
    std::size_t lineno;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(lineno, pos + 1, msg);
    }
    void skip_ws() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }
    // next run of non-space characters, optionally stopping before a delimiter
    std::string word(std::string_view stop_chars = "") {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) &&
               stop_chars.find(line[pos]) == std::string_view::npos)
            ++pos;
        if (pos == start) fail("expected a token");
        return std::string(line.substr(start, pos - start));
    }
    void expect_char(char c) {
        skip_ws();
        if (pos >= line.size() || line[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    // key=value where value is a decimal unsigned integer
    long long keyed_uint(const std::string& key) {
        expect_key(key);
        return parse_uint();
    }
    void expect_key(const std::string& key) {
        skip_ws();
        if (line.substr(pos, key.size()) != key)
            fail("expected '" + key + "='");
        pos += key.size();
        expect_char('=');
    }
    long long parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == start) fail("expected an unsigned integer");
        std::string digits(line.substr(start, pos - start));
        if (digits.size() > 12) fail("integer literal too large");
        return std::stoll(digits);
    }
    std::string rest() {
        skip_ws();
        return std::string(line.substr(pos));
    }
};

// split on top-level ';' (the polynomial grammar has no ';')
std::vector<std::pair<std::string, std::size_t>> split_components(std::string_view text,
                                                                  std::size_t base_col) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            parts.emplace_back(std::string(text.substr(start, i - start)), base_col + start);
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    Scenario sc;
    bool header_seen = false;
    std::optional<std::size_t> current_chart;  // index into sc.charts
    std::set<int> chart_ids;
    // charts are assembled field by field; VectorField validates on build
    struct PendingChart {
        int id;
        std::size_t lineno;
        std::optional<Polynomial> f;
        std::optional<std::vector<Polynomial>> v;
    };
    std::vector<PendingChart> pending;

    std::size_t lineno = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        std::string_view raw = text.substr(
            line_start, nl == std::string_view::npos ? text.size() - line_start : nl - line_start);
        line_start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        std::string_view line = raw.substr(0, std::min(raw.find('#'), raw.size()));
        Cursor cur{line, lineno};
        if (cur.at_end()) continue;

        std::string directive = cur.word();
        if (directive == "scenario") {
            if (header_seen) cur.fail("duplicate scenario header");
            sc.n = static_cast<int>(cur.keyed_uint("n"));
            sc.d = cur.keyed_uint("d");
            sc.k = cur.keyed_uint("k");
            cur.expect_key("complete");
            std::string flag = cur.word();
            if (flag == "true")
                sc.complete = true;
            else if (flag == "false")
                sc.complete = false;
            else
                cur.fail("complete must be 'true' or 'false'");
            if (!cur.at_end()) cur.fail("unexpected trailing input on scenario line");
            if (sc.n < 2) cur.fail("ambient dimension n must be at least 2");
            if (sc.k < 1) cur.fail("hypersurface degree k must be at least 1");
            header_seen = true;
        } else if (directive == "chart") {
            if (!header_seen) cur.fail("chart before scenario header");
            int id = static_cast<int>(cur.parse_uint());
            if (!cur.at_end()) cur.fail("unexpected trailing input on chart line");
            if (!chart_ids.insert(id).second) cur.fail("duplicate chart id");
            pending.push_back({id, lineno, std::nullopt, std::nullopt});
            current_chart = pending.size() - 1;
        } else if (directive == "hypersurface") {
            if (!current_chart) cur.fail("hypersurface outside a chart block");
            PendingChart& ch = pending[*current_chart];
            if (ch.f) cur.fail("chart already has a hypersurface");
            // rest() advances cur.pos past leading whitespace; take the
            // column only afterwards so reported positions line up
            std::string expr = cur.rest();
            Polynomial f = detail::parse_polynomial_at(expr, sc.n, lineno, cur.pos);
            if (f.is_zero()) cur.fail("hypersurface polynomial must be nonzero");
            ch.f = std::move(f);
        } else if (directive == "vectorfield") {
            if (!current_chart) cur.fail("vectorfield outside a chart block");
            PendingChart& ch = pending[*current_chart];
            if (ch.v) cur.fail("chart already has a vectorfield");
            std::string body = cur.rest();
            auto parts = split_components(body, cur.pos);
            if (static_cast<int>(parts.size()) != sc.n)
                cur.fail("vectorfield needs exactly " + std::to_string(sc.n) +
                         " ';'-separated components, got " + std::to_string(parts.size()));
            std::vector<Polynomial> comps;
            for (const auto& [part, col] : parts)
                comps.push_back(detail::parse_polynomial_at(part, sc.n, lineno, col));
            bool all_zero = std::all_of(comps.begin(), comps.end(),
                                        [](const Polynomial& p) { return p.is_zero(); });
            if (all_zero) cur.fail("vector field is identically zero");
            ch.v = std::move(comps);
        } else if (directive == "point") {
            if (!header_seen) cur.fail("point before scenario header");
            ScenarioPoint pt;
            pt.chart_id = static_cast<int>(cur.keyed_uint("chart"));
            if (!chart_ids.count(pt.chart_id))
                cur.fail("point references undeclared chart " + std::to_string(pt.chart_id));
            cur.skip_ws();
            if (cur.word(",") != "at") cur.fail("expected 'at' before coordinates");
            for (int i = 0; i < sc.n; ++i) {
                if (i > 0) cur.expect_char(',');
                cur.skip_ws();
                std::size_t col = cur.pos;
                std::string token = cur.word(",");
                pt.coords.push_back(detail::parse_rational_at(token, lineno, col));
            }
            if (!cur.at_end()) {
                cur.expect_key("label");
                pt.label = cur.word();
                if (!cur.at_end()) cur.fail("unexpected trailing input on point line");
            }
            if (pt.label.empty()) pt.label = "p" + std::to_string(sc.points.size());
            sc.points.push_back(std::move(pt));
        } else if (directive == "expect") {
            if (!header_seen) cur.fail("expect before scenario header");
            std::string name = cur.word("=");
            bool known = std::any_of(std::begin(kExpectationNames), std::end(kExpectationNames),
                                     [&](const char* s) { return name == s; });
            if (!known) cur.fail("unknown expectation name '" + name + "'");
            if (sc.expectations.count(name)) cur.fail("duplicate expectation '" + name + "'");
            cur.expect_char('=');
            cur.skip_ws();
            std::string value = cur.word();
            if (!cur.at_end()) cur.fail("unexpected trailing input on expect line");
            bool neg = !value.empty() && value[0] == '-';
            std::string digits = neg ? value.substr(1) : value;
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                cur.fail("expectation value must be an integer");
            Integer z(digits, 10);
            sc.expectations[name] = neg ? Integer(-z) : z;
        } else {
            cur.pos = 0;
            cur.fail("unknown directive '" + directive + "'");
        }
    }

    if (!header_seen) throw ParseError(1, 1, "missing scenario header");
    if (pending.empty()) throw ParseError(lineno, 1, "scenario declares no chart");
    for (const PendingChart& ch : pending) {
        if (!ch.f)
            throw ParseError(ch.lineno, 1,
                             "chart " + std::to_string(ch.id) + " has no hypersurface line");
        if (!ch.v)
            throw ParseError(ch.lineno, 1,
                             "chart " + std::to_string(ch.id) + " has no vectorfield line");
        sc.charts.push_back({ch.id, *ch.f, VectorField(*ch.v)});
    }
    return sc;
}

}  // namespace folindex
