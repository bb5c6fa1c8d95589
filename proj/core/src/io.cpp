#include "nilfibre/io.hpp"

#include <algorithm>
#include <sstream>

namespace nilfibre {

Json diagram_json(const Diagram& d) {
    Json j;
    j["parts"] = d.composition().parts;
    j["n"] = d.n();
    j["indexing"] = "1-based";
    auto pairs = Json::array();
    for (const auto& p : d.pairs()) pairs.push_back({{"left", p.left}, {"right", p.right}, {"height", p.height}});
    j["pairs"] = pairs;
    return j;
}

Json tableau_json(const Tableau& t) { return Json::parse(t.render(RenderMode::Json)); }

Json red_set_json(const RedSet& rs) { return Json(rs.flatten()); }

Json coords_json(const std::set<Coord>& coords) {
    auto j = Json::array();
    for (const auto& [i, k] : coords) j.push_back({i, k});
    return j;
}

Json component_json(const ComponentTableau& ct) {
    Json j;
    j["redSet"] = red_set_json(ct.red_set);
    auto mult = Json::array();
    for (const auto& cd : ct.per_column)
        mult.push_back({{"column", cd.column},
                        {"J", cd.j_values_bottom_up},
                        {"m", cd.m},
                        {"mPrime", cd.m_prime},
                        {"h", cd.h}});
    j["multiplicities"] = mult;
    j["linesOne"] = coords_json(ct.one_coords());
    j["linesStar"] = coords_json(ct.star_coords());
    j["excludedRoots"] = coords_json(excluded_roots_component(ct));
    j["tableauInfinity"] = tableau_json(ct.infinity);
    j["tableauCollapsed"] = tableau_json(ct.collapsed());
    return j;
}

Json components_json(const ComponentEnumeration& en) {
    Json j;
    auto list = Json::array();
    for (const auto& ct : en.tableaux) list.push_back(component_json(ct));
    j["count"] = en.tableaux.size();
    j["components"] = list;
    return j;
}

Json reverse_state_json(const ReverseState& rs) {
    Json j = tableau_json(rs.tab);
    j["redSet"] = red_set_json(rs.tab.red_set());
    auto impl = Json::array();
    for (int pi : rs.implemented) {
        const auto& p = rs.diagram().pairs().at(static_cast<size_t>(pi));
        impl.push_back({{"left", p.left}, {"right", p.right}, {"height", p.height}});
    }
    j["implemented"] = impl;
    j["excludedRoots"] = coords_json(excluded_roots_reverse(rs.tab));
    return j;
}

Json polynomial_json(const SparsePolynomial& p) {
    auto j = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        auto vars = Json::array();
        size_t i = 0;
        while (i < mono.size()) {
            size_t run = i;
            while (run < mono.size() && mono[run] == mono[i]) ++run;
            if (mono[i] == kAuxVar) {
                vars.push_back({0, 0, static_cast<int>(run - i)});
            } else {
                auto [a, b] = coord_of(mono[i]);
                vars.push_back({a, b, static_cast<int>(run - i)});
            }
            i = run;
        }
        j.push_back({{"coeff", coeff}, {"vars", vars}});
    }
    return j;
}

Json suite_json(const SuiteResult& r) {
    Json j;
    j["checksRun"] = r.checks_run;
    j["failures"] = r.failures;
    j["allPass"] = r.all_pass;
    auto lines = Json::array();
    for (const auto& l : r.lines)
        lines.push_back({{"composition", l.composition},
                         {"redSet", l.subject},
                         {"check", l.check},
                         {"pass", l.pass},
                         {"detail", l.detail}});
    j["lines"] = lines;
    return j;
}

std::vector<RedSet> FlowChart::leaf_red_sets() const {
    int last_stage = 0;
    for (const auto& n : nodes) last_stage = std::max(last_stage, n.stage);
    std::vector<RedSet> out;
    for (const auto& n : nodes)
        if (n.stage == last_stage) out.push_back(n.red_set);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FlowChart build_flow_chart(DiagramPtr d, const std::vector<NeighbouringPair>& sequence, ShiftMode mode,
                           int symbolic_bound) {
    FlowChart fc;
    fc.nodes.push_back({0, 0, RedSet{}, ReverseState(d)});
    std::vector<int> frontier{0};
    for (size_t step = 0; step < sequence.size(); ++step) {
        const NeighbouringPair& p = sequence[step];
        BsInvariant inv(d, p);
        std::vector<int> next;
        for (int id : frontier) {
            const ReverseState state = fc.nodes[static_cast<size_t>(id)].state;
            // Linearising the preceding invariants pins their excluded
            // coordinates to zero; the next invariant factors modulo that.
            std::vector<std::string> factors;
            int factor_count = 0;
            if (inv.sub_size() <= symbolic_bound) {
                Substitution sub;
                for (const Coord& c : excluded_roots_reverse(state.tab)) sub.set_zero(c);
                SparsePolynomial restricted = inv.symbolic(symbolic_bound).substitute(sub);
                for (const auto& f : multilinear_factor(restricted)) factors.push_back(f.str());
                factor_count = static_cast<int>(factors.size());
            }
            EligibleSet es = eligible_set(state, p);
            for (int choice : es.choices) {
                auto child = implement_pair(state, p, choice, mode);
                if (!child) {
                    RedSet would = state.tab.red_set();
                    would.add(state.tab.cell(choice, p.height).entry);
                    fc.rejected.push_back({id, p, choice, "hidden-rule", would});
                    continue;
                }
                int cid = static_cast<int>(fc.nodes.size());
                fc.nodes.push_back({cid, static_cast<int>(step) + 1, child->tab.red_set(), *child});
                fc.edges.push_back({id, cid, p, choice, factors, factor_count});
                next.push_back(cid);
            }
        }
        frontier = std::move(next);
    }
    return fc;
}

Json flow_chart_json(const FlowChart& fc) {
    Json j;
    auto nodes = Json::array();
    for (const auto& n : fc.nodes)
        nodes.push_back({{"id", n.id},
                         {"stage", n.stage},
                         {"redSet", red_set_json(n.red_set)},
                         {"tableau", tableau_json(n.state.tab)}});
    j["nodes"] = nodes;
    auto edges = Json::array();
    for (const auto& e : fc.edges)
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"pair", e.pair.str()},
                         {"choice", "C" + std::to_string(e.choice_col)},
                         {"factorCount", e.factor_count},
                         {"factors", e.factors}});
    j["edges"] = edges;
    auto rej = Json::array();
    for (const auto& r : fc.rejected)
        rej.push_back({{"from", r.from},
                       {"pair", r.pair.str()},
                       {"choice", "C" + std::to_string(r.choice_col)},
                       {"reason", r.reason},
                       {"wouldBeRedSet", red_set_json(r.would_be)}});
    j["rejected"] = rej;
    auto leaves = Json::array();
    for (const auto& rs : fc.leaf_red_sets()) leaves.push_back(red_set_json(rs));
    j["leafRedSets"] = leaves;
    return j;
}

std::optional<std::vector<NeighbouringPair>> parse_sequence(const Diagram& d, const std::string& text) {
    std::vector<NeighbouringPair> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        int left = 0, right = 0;
        if (std::sscanf(item.c_str(), " C%d , C%d ", &left, &right) != 2 &&
            std::sscanf(item.c_str(), " %d , %d ", &left, &right) != 2)
            return std::nullopt;
        bool found = false;
        for (const auto& p : d.pairs())
            if (p.left == left && p.right == right) {
                out.push_back(p);
                found = true;
            }
        if (!found) return std::nullopt;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

Json RunManifest::to_json() const {
    Json j;
    j["composition"] = composition;
    j["command"] = command;
    j["seed"] = seed;
    j["flags"] = flags;
    j["version"] = version;
    j["timestamp"] = timestamp;
    j["outputDigests"] = output_digests;
    return j;
}

}  // namespace nilfibre
