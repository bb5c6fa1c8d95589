#include "nilfibre/verify.hpp"

#include <algorithm>
#include <sstream>

namespace nilfibre {

void SuiteResult::add(std::string composition, std::string subject, std::string check, bool pass,
                      std::string detail) {
    ++checks_run;
    if (!pass) {
        ++failures;
        all_pass = false;
    }
    lines.push_back({std::move(composition), std::move(subject), std::move(check), pass, std::move(detail)});
}

void SuiteResult::merge(const SuiteResult& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    checks_run += other.checks_run;
    failures += other.failures;
    all_pass = all_pass && other.all_pass;
}

namespace {

// The stage index right after which `pair_index` is implemented in the
// Psi construction of ct.
int stage_of_pair(const std::vector<ReverseState>& stages, int pair_index) {
    for (size_t i = 1; i < stages.size(); ++i)
        if (stages[i].implemented.back() == pair_index) return static_cast<int>(i);
    return -1;
}

void verify_component(const Composition& comp, const ComponentTableau& ct, const SuiteOptions& opt,
                      SuiteResult& out) {
    const std::string cs = comp.str();
    const std::string rs = ct.red_set.str();
    DiagramPtr d = ct.diagram;

    // Structural counts first: one star line and one red entry per pair.
    out.add(cs, rs, "line-count", static_cast<int>(ct.lines_star.size()) == d->g() &&
                                       ct.red_set.cardinality() == d->g());

    std::vector<ReverseState> stages;
    try {
        stages = build_for_component_stages(ct);
    } catch (const StructuralError& e) {
        out.add(cs, rs, "psi-build", false, e.what());
        return;
    }
    const ReverseState& rev = stages.back();
    out.add(cs, rs, "psi-red-set", rev.tab.red_set() == ct.red_set);

    auto S = ct.one_coords();
    auto Y = ct.star_coords();
    auto X_R = excluded_roots_reverse(rev.tab);
    auto X_T = excluded_roots_component(ct);

    auto xyz = xyz_properties(X_R, Y, S);
    out.add(cs, rs, "xyz-properties", xyz.check.pass, xyz.check.summary());

    auto cover = covering_check(S, xyz.Z, Y);
    out.add(cs, rs, "covering", cover.pass, cover.summary());

    if (opt.tangent) {
        auto rank = tangent_rank_check(*d, X_R, S, Y);
        out.add(cs, rs, "tangent-rank", rank.full, rank.summary());
        auto coin = coincidence_check(*d, X_T, X_R, S, Y);
        out.add(cs, rs, "coincidence", coin.pass, coin.summary());
    }

    auto lines = line_geometry_check(rev, ct);
    out.add(cs, rs, "line-geometry", lines.pass, lines.summary());

    bool weier_feasible = true;
    for (const auto& p : d->pairs()) {
        int N = 0;
        for (int col = p.left; col <= p.right; ++col) N += d->height(col);
        if (N > opt.symbolic_bound) weier_feasible = false;
    }
    if (opt.weierstrass && weier_feasible) {
        auto w = weierstrass_check(ct, opt.symbolic_bound);
        out.add(cs, rs, "weierstrass", w.pass, w.detail);
    }

    if (opt.trapezium_walk) {
        // Before its own implementation every trapezium keeps black count
        // equal to the degree and certifies non-vanishing through its
        // horizontal monomial; the implementation step drops the count by
        // exactly one and puts a red entry into R_s.
        bool walk_ok = true;
        std::string why;
        for (const auto& p : d->pairs()) {
            int deg = d->left_rectangle(p).degree();
            int impl_at = stage_of_pair(stages, d->pair_index(p));
            for (int i = 0; i <= impl_at && walk_ok; ++i) {
                TrapeziumState ts = trapezium(stages[static_cast<size_t>(i)], p);
                if (i < impl_at) {
                    if (ts.black_count != deg || ts.red_in_row_s) {
                        walk_ok = false;
                        why = p.str() + " stage " + std::to_string(i) + ": black count " +
                              std::to_string(ts.black_count) + " vs degree " + std::to_string(deg);
                        break;
                    }
                    auto h = horizontal_monomial_check(stages[static_cast<size_t>(i)], p);
                    if (!h.applicable || !h.pass) {
                        walk_ok = false;
                        why = p.str() + " stage " + std::to_string(i) + ": " + h.detail;
                    }
                } else {
                    if (ts.black_count != deg - 1 || !ts.red_in_row_s || ts.composite_line_count != deg - 1) {
                        walk_ok = false;
                        why = p.str() + " implementation did not drop the black count by exactly one";
                    }
                }
            }
            if (!walk_ok) break;
        }
        out.add(cs, rs, "non-vanishing-walk", walk_ok, why);
    }

    if (opt.reverse_enumeration) {
        // Every reverse tableau reachable from the induced sequence kills
        // every generator on its non-excluded span.
        auto order = red_order(ct);
        auto en = enumerate_reverse(d, order.sequence);
        bool psi_found = false;
        bool vanish_ok = !en.leaves.empty();
        long double worst_bound = 0.0L;
        std::string why;
        for (const auto& leaf : en.leaves) {
            if (leaf.tab.same_cells(rev.tab)) psi_found = true;
            auto excluded = excluded_roots_reverse(leaf.tab);
            for (const auto& p : d->pairs()) {
                BsInvariant inv(d, p);
                auto z = is_zero_on_subspace(inv, excluded, opt.zero_trials, opt.seed);
                worst_bound = std::max(worst_bound, z.failure_bound);
                if (!z.is_zero) {
                    vanish_ok = false;
                    why = p.str() + " nonzero on " + leaf.tab.red_set().str();
                }
                if (opt.symbolic_cross_check) {
                    Substitution sub;
                    for (const Coord& c : excluded) sub.set_zero(c);
                    bool symbolic_zero = inv.symbolic(opt.symbolic_bound).substitute(sub).is_zero();
                    if (symbolic_zero != z.is_zero) {
                        vanish_ok = false;
                        why = p.str() + " blackbox and symbolic tests disagree";
                    }
                }
            }
        }
        std::ostringstream detail;
        detail << en.leaves.size() << " leaves, failure bound " << static_cast<double>(worst_bound);
        if (!why.empty()) detail << ", " << why;
        out.add(cs, rs, "vanishing", vanish_ok && worst_bound < 0x1p-40L, detail.str());
        out.add(cs, rs, "psi-among-leaves", psi_found);
    }
}

}  // namespace

SuiteResult verify_composition(const Composition& comp, const SuiteOptions& opt) {
    SuiteResult out;
    const std::string cs = comp.str();
    DiagramPtr d = make_diagram(comp);

    ComponentEnumeration en;
    try {
        en = enumerate_component_tableaux(d);
    } catch (const StructuralError& e) {
        out.add(cs, "-", "enumeration", false, e.what());
        return out;
    }
    out.add(cs, "-", "enumeration", en.stuck_branches == 0,
            en.stuck_branches ? std::to_string(en.stuck_branches) + " stuck branches" : "");
    out.add(cs, "-", "red-map-injective", true);  // enumeration throws otherwise

    if (opt.degree_check) {
        bool ok = true;
        std::string why;
        for (const auto& p : d->pairs()) {
            BsInvariant inv(d, p);
            int rect = d->left_rectangle(p).degree();
            if (inv.degree() != rect) {
                ok = false;
                why = p.str();
                break;
            }
            int N = inv.sub_size();
            if (N <= opt.symbolic_bound && inv.symbolic(opt.symbolic_bound).total_degree() != rect) {
                ok = false;
                why = p.str() + " symbolic";
                break;
            }
        }
        out.add(cs, "-", "degree-lemma", ok, why);
    }

    for (const auto& ct : en.tableaux) {
        if (opt.only_red_set && !(ct.red_set == *opt.only_red_set)) continue;
        verify_component(comp, ct, opt, out);
    }
    return out;
}

SuiteResult verify_all_up_to(int max_n, const SuiteOptions& opt) {
    SuiteResult out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& comp : all_compositions(n)) out.merge(verify_composition(comp, opt));
    return out;
}

}  // namespace nilfibre
