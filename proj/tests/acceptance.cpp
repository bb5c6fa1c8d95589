// Acceptance suite: one criterion per test case, one [ACCEPT] line each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cstdio>

#include "doctest.h"
#include "nilfibre/geometry.hpp"
#include "nilfibre/invariant.hpp"
#include "nilfibre/io.hpp"
#include "nilfibre/verify.hpp"

using namespace nilfibre;

namespace {

using CoordSet = std::set<std::pair<int, int>>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, const char* tag, bool pass) {
    std::printf("[ACCEPT] criterion %2d (%s): %s\n", criterion, tag, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
}

const ComponentTableau& by_red_set(const ComponentEnumeration& en, std::vector<int> values) {
    RedSet wanted = RedSet::of(std::move(values));
    for (const auto& ct : en.tableaux)
        if (ct.red_set == wanted) return ct;
    throw std::runtime_error("no component with Red Set " + wanted.str());
}

std::vector<RedSet> make_red_sets(std::vector<std::vector<int>> values) {
    std::vector<RedSet> out;
    for (auto& v : values) out.push_back(RedSet::of(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

// The shared exhaustive sweep over every composition of every n <= 8, with
// symbolic cross-checks up to n <= 6.  Computed once; criteria 5, 6, 7 and
// 9 read their verdicts off the same run.
struct ExhaustiveSweep {
    SuiteResult result;
    double elapsed = 0.0;

    ExhaustiveSweep() {
        auto start = Clock::now();
        SuiteOptions opt;
        opt.symbolic_cross_check = false;
        for (int n = 1; n <= 8; ++n) {
            opt.symbolic_cross_check = n <= 6;
            for (const auto& comp : all_compositions(n)) result.merge(verify_composition(comp, opt));
        }
        elapsed = seconds_since(start);
    }

    bool all(const std::string& check) const {
        bool seen = false;
        for (const auto& l : result.lines)
            if (l.check == check) {
                seen = true;
                if (!l.pass) return false;
            }
        return seen;
    }
};

const ExhaustiveSweep& sweep() {
    static ExhaustiveSweep s;
    return s;
}

}  // namespace

TEST_CASE("criterion 1: Example-1 enumeration") {
    auto start = Clock::now();
    auto en = enumerate_component_tableaux(make_diagram(Composition::of({1, 2, 3, 1, 1, 3, 2})));
    double elapsed = seconds_since(start);
    std::vector<RedSet> got;
    for (const auto& ct : en.tableaux) got.push_back(ct.red_set);
    bool pass = got == make_red_sets({{7, 7, 7, 8},
                                      {7, 8, 8, 8},
                                      {7, 7, 8, 11},
                                      {7, 8, 8, 11},
                                      {7, 8, 11, 10},
                                      {7, 8, 11, 13}}) &&
                en.tableaux.size() == 6 && elapsed < 5.0;
    CHECK(en.tableaux.size() == 6);
    CHECK(elapsed < 5.0);
    report(1, "example-1 enumeration", pass);
    CHECK(pass);
}

TEST_CASE("criterion 2: (1,2,1,2) end to end") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    std::vector<RedSet> got;
    for (const auto& ct : en.tableaux) got.push_back(ct.red_set);
    bool sets_ok = got == make_red_sets({{4, 4}, {4, 6}});

    BsInvariant i1(d, {1, 3, 1}), i2(d, {2, 4, 2});
    bool degrees_ok = i1.degree() == 2 && i2.degree() == 3;

    auto sub = Substitution::parse("x1,2=1;x1,3=0;x2,4=0");
    SparsePolynomial restricted = i2.symbolic().substitute(*sub);
    SparsePolynomial target = SparsePolynomial::coordinate(3, 4) *
                              (SparsePolynomial::coordinate(2, 5) * SparsePolynomial::coordinate(4, 6) -
                               SparsePolynomial::coordinate(2, 6) * SparsePolynomial::coordinate(4, 5));
    bool symbolic_ok = restricted == target || restricted == target.negated();
    bool factors_ok = multilinear_factor(restricted).size() == 2;

    bool pass = sets_ok && degrees_ok && symbolic_ok && factors_ok;
    CHECK(sets_ok);
    CHECK(degrees_ok);
    CHECK(symbolic_ok);
    CHECK(factors_ok);
    report(2, "(1,2,1,2) end to end", pass);
    CHECK(pass);
}

TEST_CASE("criterion 3: (1,2,2,1) evaluation and hidden rule") {
    auto d = make_diagram(Composition::of({1, 2, 2, 1}));
    BsInvariant i2(d, {2, 3, 2});
    Substitution sub;
    sub.set_zero({2, 5});
    SparsePolynomial restricted = i2.symbolic().substitute(sub);
    SparsePolynomial target = SparsePolynomial::coordinate(2, 4) * SparsePolynomial::coordinate(3, 5);
    bool symbolic_ok = restricted == target || restricted == target.negated();

    auto en = enumerate_reverse(d, {{1, 4, 1}, {2, 3, 2}});
    bool rejected_ok = false;
    for (const auto& r : en.rejected)
        rejected_ok |= r.reason == "hidden-rule" && r.would_be == RedSet::of({6, 6});

    bool pass = symbolic_ok && rejected_ok;
    CHECK(symbolic_ok);
    CHECK(rejected_ok);
    report(3, "(1,2,2,1) exact", pass);
    CHECK(pass);
}

TEST_CASE("criterion 4: the section 9.5 flow charts") {
    auto d = make_diagram(Composition::of({1, 2, 3, 1, 1, 3, 2}));
    std::vector<NeighbouringPair> seq_a{{1, 4, 1}, {4, 5, 1}, {2, 7, 2}, {3, 6, 3}};
    std::vector<NeighbouringPair> seq_b{{1, 4, 1}, {4, 5, 1}, {3, 6, 3}, {2, 7, 2}};
    FlowChart a = build_flow_chart(d, seq_a);
    FlowChart b = build_flow_chart(d, seq_b);

    bool a_ok = a.leaf_red_sets() == make_red_sets({{7, 7, 7, 8},
                                                    {7, 7, 8, 11},
                                                    {7, 8, 8, 8},
                                                    {7, 8, 8, 11},
                                                    {7, 8, 11, 13}});
    bool b_ok = b.leaf_red_sets() == make_red_sets({{7, 7, 8, 11},
                                                    {7, 8, 8, 11},
                                                    {7, 8, 10, 11},
                                                    {7, 8, 11, 13}});
    bool reject_ok = false;
    for (const auto& r : a.rejected) reject_ok |= r.would_be == RedSet::of({7, 8, 13, 13});

    auto uni = a.leaf_red_sets();
    auto more = b.leaf_red_sets();
    uni.insert(uni.end(), more.begin(), more.end());
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    auto en = enumerate_component_tableaux(d);
    std::vector<RedSet> component_sets;
    for (const auto& ct : en.tableaux) component_sets.push_back(ct.red_set);
    std::sort(component_sets.begin(), component_sets.end());
    bool union_ok = uni == component_sets;

    bool pass = a_ok && b_ok && reject_ok && union_ok;
    CHECK(a_ok);
    CHECK(b_ok);
    CHECK(reject_ok);
    CHECK(union_ok);
    report(4, "9.5 flow chart", pass);
    CHECK(pass);
}

TEST_CASE("criterion 5: vanishing over all n <= 8") {
    bool pass = sweep().all("vanishing") && sweep().elapsed < 600.0;
    CHECK(sweep().all("vanishing"));
    CHECK(sweep().elapsed < 600.0);
    report(5, "vanishing n<=8", pass);
    CHECK(pass);
}

TEST_CASE("criterion 6: non-vanishing and the black-count bookkeeping") {
    bool pass = sweep().all("non-vanishing-walk");
    report(6, "non-vanishing walk", pass);
    CHECK(pass);
}

TEST_CASE("criterion 7: covering and codimension") {
    auto start = Clock::now();
    bool small_ok = sweep().all("xyz-properties") && sweep().all("covering") && sweep().all("tangent-rank");

    // The illustrated examples, including those beyond n = 8; only the
    // covering and rank machinery is in scope here.
    SuiteOptions opt;
    opt.weierstrass = false;
    opt.reverse_enumeration = false;
    opt.trapezium_walk = false;
    opt.degree_check = false;
    std::vector<std::vector<int>> worked = {
        {1, 2, 3, 1, 1, 3, 2}, {1, 2, 1, 2},       {2, 1, 3, 1, 3, 2, 1}, {2, 1, 2, 1, 2},
        {3, 1, 3, 1, 3},       {1, 2, 2, 1},       {2, 1, 1, 1, 2},       {1, 2, 1, 2, 1},
        {2, 1, 1, 2, 2},       {3, 2, 1, 3, 2, 1, 2}};
    bool worked_ok = true;
    for (const auto& parts : worked) {
        auto r = verify_composition(Composition::of(parts), opt);
        for (const auto& l : r.lines)
            if ((l.check == "xyz-properties" || l.check == "covering" || l.check == "tangent-rank" ||
                 l.check == "coincidence") &&
                !l.pass)
                worked_ok = false;
    }
    // Example 5 at n = 20, restricted to its worked component.
    SuiteOptions big = opt;
    big.only_red_set = RedSet::of({11, 12, 15, 16});
    auto r5 = verify_composition(Composition::of({3, 4, 2, 1, 2, 4, 3, 1}), big);
    bool big_ok = true;
    for (const auto& l : r5.lines)
        if ((l.check == "xyz-properties" || l.check == "covering" || l.check == "tangent-rank") && !l.pass)
            big_ok = false;

    double elapsed = seconds_since(start);
    bool pass = small_ok && worked_ok && big_ok && elapsed < 600.0;
    CHECK(small_ok);
    CHECK(worked_ok);
    CHECK(big_ok);
    CHECK(elapsed < 600.0);
    report(7, "covering/codimension", pass);
    CHECK(pass);
}

TEST_CASE("criterion 8: coincidence across tableaux") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2, 1}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 4, 7});
    auto rev = build_for_component(ct);
    auto X_T = excluded_roots_component(ct);
    auto X_R = excluded_roots_reverse(rev.tab);
    bool fig7_ok = X_R.count({1, 4}) == 1 && X_T.count({1, 4}) == 0 &&
                   coincidence_check(*d, X_T, X_R, ct.one_coords(), ct.star_coords()).pass;

    // The two distinct (7,8,8,11) reverse tableaux of criterion 4 define
    // the same component.
    auto d1 = make_diagram(Composition::of({1, 2, 3, 1, 1, 3, 2}));
    auto en_a = enumerate_reverse(d1, {{1, 4, 1}, {4, 5, 1}, {2, 7, 2}, {3, 6, 3}});
    auto en_b = enumerate_reverse(d1, {{1, 4, 1}, {4, 5, 1}, {3, 6, 3}, {2, 7, 2}});
    RedSet wanted = RedSet::of({7, 8, 8, 11});
    const ReverseState* ra = nullptr;
    const ReverseState* rb = nullptr;
    for (const auto& leaf : en_a.leaves)
        if (leaf.tab.red_set() == wanted) ra = &leaf;
    for (const auto& leaf : en_b.leaves)
        if (leaf.tab.red_set() == wanted) rb = &leaf;
    auto en1 = enumerate_component_tableaux(d1);
    const auto& ct1 = by_red_set(en1, {7, 8, 8, 11});
    bool mutual_ok = ra && rb && !ra->tab.same_cells(rb->tab) &&
                     coincidence_check(*d1, excluded_roots_reverse(ra->tab), excluded_roots_reverse(rb->tab),
                                       ct1.one_coords(), ct1.star_coords())
                         .pass;

    bool pass = fig7_ok && mutual_ok;
    CHECK(fig7_ok);
    CHECK(mutual_ok);
    report(8, "coincidence", pass);
    CHECK(pass);
}

TEST_CASE("criterion 9: red-map and Psi injectivity, exhaustively") {
    bool pass = sweep().all("red-map-injective") && sweep().all("psi-red-set") && sweep().all("psi-among-leaves");
    report(9, "injectivity n<=8", pass);
    CHECK(pass);
}

TEST_CASE("criterion 10: the n = 20 scale probe") {
    auto start = Clock::now();
    auto d = make_diagram(Composition::of({3, 4, 2, 1, 2, 4, 3, 1}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {11, 12, 15, 16});
    ReverseState std_mode = build_for_component(ct, ShiftMode::Standard);
    ReverseState ext_mode = build_for_component(ct, ShiftMode::Extreme);
    bool built_ok = std_mode.tab.red_set() == ct.red_set && ext_mode.tab.red_set() == ct.red_set;

    auto X_std = excluded_roots_reverse(std_mode.tab);
    auto X_ext = excluded_roots_reverse(ext_mode.tab);
    auto S = ct.one_coords();
    bool covered_ok = true;
    for (const auto& x : X_ext) {
        if (X_std.count(x)) continue;
        bool covered = false;
        for (const auto& s : S)
            if (s.first == x.first && s.second < x.second) covered = true;
        if (!covered) covered_ok = false;
    }

    bool vanish_ok = true;
    for (const auto& p : d->pairs()) {
        BsInvariant inv(d, p);
        vanish_ok = vanish_ok && is_zero_on_subspace(inv, X_std, 3, 42).is_zero &&
                    is_zero_on_subspace(inv, X_ext, 3, 42).is_zero;
    }
    double elapsed = seconds_since(start);
    bool pass = built_ok && covered_ok && vanish_ok && elapsed < 60.0;
    CHECK(built_ok);
    CHECK(covered_ok);
    CHECK(vanish_ok);
    CHECK(elapsed < 60.0);
    report(10, "n=20 scale probe", pass);
    CHECK(pass);
}

TEST_CASE("criterion 11: line geometry of Figs 8 and 9") {
    auto d8 = make_diagram(Composition::of({2, 1, 1, 2, 2}));
    auto en8 = enumerate_component_tableaux(d8);
    const auto& ct8 = by_red_set(en8, {4, 6, 8});
    auto rev8 = build_for_component(ct8);
    Box f8 = *rev8.tab.rightmost(3);
    Box t8 = *rev8.tab.black_box(8);
    bool fig8_ok = ct8.one_coords().count({3, 8}) == 1 && t8.row - f8.row == 2 &&
                   line_geometry_check(rev8, ct8).pass;

    auto d9 = make_diagram(Composition::of({3, 2, 1, 3, 2, 1, 2}));
    auto en9 = enumerate_component_tableaux(d9);
    const auto& ct9 = by_red_set(en9, {8, 9, 12, 12});
    auto rev9 = build_for_component(ct9);
    Box f9 = *rev9.tab.rightmost(9);
    Box t9 = *rev9.tab.black_box(12);
    bool fig9_ok = ct9.one_coords().count({9, 12}) == 1 && f9.row == t9.row && line_geometry_check(rev9, ct9).pass;

    bool pass = fig8_ok && fig9_ok;
    CHECK(fig8_ok);
    CHECK(fig9_ok);
    report(11, "line geometry", pass);
    CHECK(pass);
}
