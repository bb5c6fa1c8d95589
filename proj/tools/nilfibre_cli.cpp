// Command-line surface: enumeration, reverse construction, invariants,
// factorisation flow charts, verification and rendering.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "nilfibre/io.hpp"

namespace {

using namespace nilfibre;

struct GlobalArgs {
    std::string composition;
    std::string format = "json";
    std::uint64_t seed = 42;
    bool seed_given = false;
    bool extreme = false;
    bool symbolic = false;
    bool save = false;
};

std::uint64_t effective_seed(const GlobalArgs& g) {
    if (g.seed_given) return g.seed;
    if (const char* env = std::getenv("NILFIBRE_SEED")) return std::strtoull(env, nullptr, 10);
    return g.seed;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// Persists the primary output (and a manifest) under
// runs/<composition>/<command>-<seed>/.
void save_run(const GlobalArgs& g, const std::string& command, const std::string& filename,
              const std::string& payload) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path("runs") / g.composition / (command + "-" + std::to_string(effective_seed(g)));
    fs::create_directories(dir);
    std::ofstream(dir / filename) << payload;

    RunManifest m;
    m.composition = g.composition;
    m.command = command;
    m.seed = effective_seed(g);
    if (g.extreme) m.flags.push_back("--extreme");
    if (g.symbolic) m.flags.push_back("--symbolic");
    m.version = kToolVersion;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    m.timestamp = buf;
    m.output_digests[filename] = hex64(fnv1a(payload));
    std::ofstream(dir / "manifest.json") << m.to_json().dump(2) << "\n";
}

std::optional<DiagramPtr> diagram_from(const GlobalArgs& g) {
    auto comp = Composition::parse(g.composition);
    if (!comp) return std::nullopt;
    return make_diagram(*comp);
}

int cmd_enum_components(const GlobalArgs& g) {
    auto d = diagram_from(g);
    if (!d) return usage_error("invalid composition '" + g.composition + "'");
    auto en = enumerate_component_tableaux(*d);
    std::string out;
    if (g.format == "text" || g.format == "latex") {
        std::ostringstream s;
        s << (*d)->g() << " neighbouring pairs, " << en.tableaux.size() << " component tableaux\n";
        for (const auto& ct : en.tableaux) {
            s << "Red Set " << ct.red_set.str() << "\n";
            s << ct.infinity.render(g.format == "latex" ? RenderMode::Latex : RenderMode::Text);
        }
        out = s.str();
    } else {
        Json j = components_json(en);
        j["diagram"] = diagram_json(**d);
        out = j.dump(2) + "\n";
    }
    std::cout << out;
    if (g.save) save_run(g, "enum-components", g.format == "json" ? "components.json" : "components.txt", out);
    return 0;
}

int cmd_reverse(const GlobalArgs& g, const std::string& sequence_text, const std::string& red_set_text) {
    auto d = diagram_from(g);
    if (!d) return usage_error("invalid composition '" + g.composition + "'");
    ShiftMode mode = g.extreme ? ShiftMode::Extreme : ShiftMode::Standard;
    Json j;
    if (!sequence_text.empty()) {
        auto seq = parse_sequence(**d, sequence_text);
        if (!seq) return usage_error("invalid sequence '" + sequence_text + "'");
        if (seq->size() != static_cast<size_t>((*d)->g())) return usage_error("sequence does not cover every pair");
        auto en = enumerate_reverse(*d, *seq, mode);
        auto leaves = Json::array();
        for (const auto& leaf : en.leaves) leaves.push_back(reverse_state_json(leaf));
        j["leaves"] = leaves;
        auto rej = Json::array();
        for (const auto& r : en.rejected)
            rej.push_back({{"pair", r.pair.str()},
                           {"choice", "C" + std::to_string(r.choice_col)},
                           {"reason", r.reason},
                           {"wouldBeRedSet", red_set_json(r.would_be)}});
        j["rejected"] = rej;
    } else if (!red_set_text.empty()) {
        std::vector<int> values;
        std::stringstream ss(red_set_text);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(std::atoi(item.c_str()));
        RedSet wanted = RedSet::of(values);
        auto en = enumerate_component_tableaux(*d);
        const ComponentTableau* found = nullptr;
        for (const auto& ct : en.tableaux)
            if (ct.red_set == wanted) found = &ct;
        if (!found) return usage_error("no component tableau has Red Set " + wanted.str());
        ReverseState rs = build_for_component(*found, mode);
        j = reverse_state_json(rs);
    } else {
        return usage_error("reverse needs --sequence or --red-set");
    }
    std::string out = j.dump(2) + "\n";
    std::cout << out;
    if (g.save) save_run(g, "reverse", "reverse.json", out);
    return 0;
}

int cmd_invariant(const GlobalArgs& g, const std::string& pair_text, const std::string& substitute_text) {
    auto d = diagram_from(g);
    if (!d) return usage_error("invalid composition '" + g.composition + "'");
    auto seq = parse_sequence(**d, pair_text);
    if (!seq || seq->size() != 1) return usage_error("--pair expects one neighbouring pair, e.g. C2,C4");
    NeighbouringPair p = seq->front();
    BsInvariant inv(*d, p);

    Substitution sub;
    if (!substitute_text.empty()) {
        auto parsed = Substitution::parse(substitute_text);
        if (!parsed) return usage_error("invalid substitution '" + substitute_text + "'");
        sub = *parsed;
    }

    Json j;
    j["pair"] = p.str();
    j["height"] = p.height;
    j["degree"] = inv.degree();
    j["subDiagramSize"] = inv.sub_size();
    j["auxPower"] = inv.aux_power();
    if (g.symbolic) {
        SparsePolynomial poly;
        try {
            poly = inv.symbolic();
        } catch (const CapacityError& e) {
            return usage_error(e.what());
        }
        if (!substitute_text.empty()) {
            poly = poly.substitute(sub);
            j["substitution"] = sub.str();
            j["homogeneous"] = sub.homogeneous();
        }
        j["terms"] = polynomial_json(poly);
        j["text"] = poly.str();
    } else {
        // Blackbox: one exact evaluation at a seeded random point, the
        // substitution overlaid.
        std::mt19937_64 rng(effective_seed(g));
        std::uniform_int_distribution<std::uint64_t> dist(0, Fp::P - 1);
        std::map<Coord, std::uint64_t> point;
        for (const Coord& c : inv.support()) {
            auto a = sub.action(c);
            switch (a.kind) {
                case Substitution::Kind::Zero: point[c] = 0; break;
                case Substitution::Kind::One: point[c] = 1; break;
                case Substitution::Kind::Value:
                    point[c] = static_cast<std::uint64_t>(((a.value % static_cast<long long>(Fp::P)) +
                                                           static_cast<long long>(Fp::P)) %
                                                          static_cast<long long>(Fp::P));
                    break;
                case Substitution::Kind::Keep: point[c] = dist(rng); break;
            }
        }
        j["mode"] = "blackbox";
        j["seed"] = effective_seed(g);
        j["sampleValue"] = inv.evaluate_fp([&](Coord c) { return point.at(c); });
    }
    std::string out = j.dump(2) + "\n";
    std::cout << out;
    if (g.save) save_run(g, "invariant", "invariant.json", out);
    return 0;
}

int cmd_factorize(const GlobalArgs& g, const std::string& sequence_text) {
    auto d = diagram_from(g);
    if (!d) return usage_error("invalid composition '" + g.composition + "'");
    auto seq = parse_sequence(**d, sequence_text);
    if (!seq) return usage_error("invalid sequence '" + sequence_text + "'");
    if (seq->size() != static_cast<size_t>((*d)->g()))
        return usage_error("sequence must list all " + std::to_string((*d)->g()) + " pairs");
    FlowChart fc = build_flow_chart(*d, *seq, g.extreme ? ShiftMode::Extreme : ShiftMode::Standard);
    std::string out = flow_chart_json(fc).dump(2) + "\n";
    std::cout << out;
    if (g.save) save_run(g, "factorize", "flowchart.json", out);
    return 0;
}

int cmd_verify(const GlobalArgs& g, int all_n, const std::string& red_set_text, int trials) {
    SuiteOptions opt;
    opt.seed = effective_seed(g);
    opt.zero_trials = trials;
    SuiteResult result;
    if (all_n > 0) {
        opt.symbolic_cross_check = all_n <= 6;
        result = verify_all_up_to(all_n, opt);
    } else {
        auto comp = Composition::parse(g.composition);
        if (!comp) return usage_error("invalid composition '" + g.composition + "'");
        if (!red_set_text.empty()) {
            std::vector<int> values;
            std::stringstream ss(red_set_text);
            std::string item;
            while (std::getline(ss, item, ',')) values.push_back(std::atoi(item.c_str()));
            opt.only_red_set = RedSet::of(values);
            bool found = false;
            for (const auto& ct : enumerate_component_tableaux(make_diagram(*comp)).tableaux)
                if (ct.red_set == *opt.only_red_set) found = true;
            if (!found) return usage_error("no component tableau has Red Set " + opt.only_red_set->str());
        }
        result = verify_composition(*comp, opt);
    }
    std::string out;
    if (g.format == "json") {
        out = suite_json(result).dump(2) + "\n";
    } else {
        std::ostringstream s;
        for (const auto& l : result.lines) {
            s << (l.pass ? "[PASS] " : "[FAIL] ") << l.composition << ' ' << l.subject << ' ' << l.check;
            if (!l.detail.empty()) s << " (" << l.detail << ')';
            s << '\n';
        }
        s << (result.all_pass ? "OK" : "FAILED") << ": " << result.checks_run << " checks, " << result.failures
          << " failures\n";
        out = s.str();
    }
    std::cout << out;
    if (g.save) save_run(g, "verify", g.format == "json" ? "verify.json" : "verify.txt", out);
    return result.all_pass ? 0 : 1;
}

int cmd_render(const GlobalArgs& g, const std::string& red_set_text, bool reverse, bool collapsed) {
    auto d = diagram_from(g);
    if (!d) return usage_error("invalid composition '" + g.composition + "'");
    RenderMode mode = RenderMode::Text;
    if (g.format == "json") mode = RenderMode::Json;
    if (g.format == "latex") mode = RenderMode::Latex;

    std::string out;
    if (red_set_text.empty()) {
        out = Tableau::initial(*d).render(mode);
    } else {
        std::vector<int> values;
        std::stringstream ss(red_set_text);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(std::atoi(item.c_str()));
        RedSet wanted = RedSet::of(values);
        auto en = enumerate_component_tableaux(*d);
        const ComponentTableau* found = nullptr;
        for (const auto& ct : en.tableaux)
            if (ct.red_set == wanted) found = &ct;
        if (!found) return usage_error("no component tableau has Red Set " + wanted.str());
        if (reverse)
            out = build_for_component(*found, g.extreme ? ShiftMode::Extreme : ShiftMode::Standard)
                      .tab.render(mode);
        else if (collapsed)
            out = found->collapsed().render(mode);
        else
            out = found->infinity.render(mode);
    }
    std::cout << out;
    if (g.save) save_run(g, "render", g.format == "json" ? "render.json" : "render.txt", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of nilfibre components: component and reverse tableaux, "
                 "determinantal invariants, covering and rank certificates"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("-c,--composition", g.composition, "composition, e.g. 1,2,1,2")->envname("NILFIBRE_COMPOSITION");
    app.add_option("--format", g.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_flag("--extreme", g.extreme, "use extreme shifting");
    app.add_flag("--symbolic", g.symbolic, "materialize polynomials symbolically");
    app.add_flag("--save", g.save, "persist outputs under runs/");
    app.fallthrough();

    auto* c_enum = app.add_subcommand("enum-components", "enumerate the component tableaux");
    std::string sequence_text, red_set_text, pair_text, substitute_text;
    auto* c_rev = app.add_subcommand("reverse", "build reverse tableaux");
    c_rev->add_option("--sequence", sequence_text, "complete sequence, e.g. \"C1,C3;C2,C4\"");
    c_rev->add_option("--red-set", red_set_text, "target Red Set, e.g. 7,8,8,11");
    auto* c_inv = app.add_subcommand("invariant", "the invariant of a neighbouring pair");
    c_inv->add_option("--pair", pair_text, "pair, e.g. C2,C4")->required();
    c_inv->add_option("--substitute", substitute_text, "substitution, e.g. \"x1,2=1;x1,3=0\"");
    auto* c_fact = app.add_subcommand("factorize", "factorisation flow chart along a sequence");
    c_fact->add_option("--sequence", sequence_text, "complete sequence")->required();
    auto* c_ver = app.add_subcommand("verify", "run the property suite");
    int all_n = 0, trials = 3;
    c_ver->add_option("--all-n", all_n, "verify every composition of every n up to this bound");
    c_ver->add_option("--red-set", red_set_text, "restrict to one component");
    c_ver->add_option("--trials", trials, "zero-test trials");
    auto* c_render = app.add_subcommand("render", "render a tableau");
    bool want_reverse = false, want_collapsed = false;
    c_render->add_option("--red-set", red_set_text, "render the component with this Red Set");
    c_render->add_flag("--reverse", want_reverse, "render its reverse tableau");
    c_render->add_flag("--collapsed", want_collapsed, "render the collapsed tableau");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        if (c_enum->parsed()) return cmd_enum_components(g);
        if (c_rev->parsed()) return cmd_reverse(g, sequence_text, red_set_text);
        if (c_inv->parsed()) return cmd_invariant(g, pair_text, substitute_text);
        if (c_fact->parsed()) return cmd_factorize(g, sequence_text);
        if (c_ver->parsed()) return cmd_verify(g, all_n, red_set_text, trials);
        if (c_render->parsed()) return cmd_render(g, red_set_text, want_reverse, want_collapsed);
    } catch (const StructuralError& e) {
        std::cerr << "structural integrity error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
