#include <algorithm>

#include "doctest.h"
#include "nilfibre/reverse.hpp"

using namespace nilfibre;

namespace {

using CoordSet = std::set<std::pair<int, int>>;

const ComponentTableau& by_red_set(const ComponentEnumeration& en, std::vector<int> values) {
    RedSet wanted = RedSet::of(std::move(values));
    for (const auto& ct : en.tableaux)
        if (ct.red_set == wanted) return ct;
    throw std::runtime_error("no component with Red Set " + wanted.str());
}

std::vector<RedSet> leaf_red_sets(const ReverseEnumeration& en) {
    std::vector<RedSet> out;
    for (const auto& leaf : en.leaves) out.push_back(leaf.tab.red_set());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RedSet> make_red_sets(std::vector<std::vector<int>> values) {
    std::vector<RedSet> out;
    for (auto& v : values) out.push_back(RedSet::of(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("Fig 2: implementing (C1,C3) then (C2,C4) on (1,2,1,2)") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    ReverseState start(d);

    // Initial state: C^- = C, S holds the height-covering columns.
    EligibleSet es0 = eligible_set(start, {1, 3, 1});
    CHECK(es0.cminus == 1);
    CHECK(es0.columns == std::vector<int>{1, 3});
    CHECK(es0.choices == std::vector<int>{3});

    auto s1 = implement_pair(start, {1, 3, 1}, 3);
    REQUIRE(s1.has_value());
    // Black 4 lands in C2 pushing the black 3 into R2 of C1.
    CHECK(s1->tab.cell(1, 2) == Cell{3, Color::Black});
    CHECK(s1->tab.cell(2, 2) == Cell{4, Color::Black});
    CHECK(s1->tab.cell(3, 1) == Cell{4, Color::Red});

    // For (C2,C4): C^- = C1, of height 2; choices C2 and C4.
    EligibleSet es = eligible_set(*s1, {2, 4, 2});
    CHECK(es.cminus == 1);
    CHECK(es.columns == std::vector<int>{1, 2, 4});
    CHECK(es.choices == std::vector<int>{2, 4});

    auto upper = implement_pair(*s1, {2, 4, 2}, 2);
    REQUIRE(upper.has_value());
    CHECK(upper->tab.red_set() == RedSet::of({4, 4}));
    CHECK(upper->tab.cell(1, 3) == Cell{4, Color::Black});

    auto lower = implement_pair(*s1, {2, 4, 2}, 4);
    REQUIRE(lower.has_value());
    CHECK(lower->tab.red_set() == RedSet::of({4, 6}));
    CHECK(lower->tab.cell(2, 3) == Cell{6, Color::Black});
    CHECK(lower->tab.cell(4, 2) == Cell{6, Color::Red});
    CHECK(lower->tab.is_standard_with_multiplicities());
}

TEST_CASE("Example 3: the (2,1,2,1,2) branches") {
    auto d = make_diagram(Composition::of({2, 1, 2, 1, 2}));
    std::vector<NeighbouringPair> seq{{1, 3, 2}, {2, 4, 1}, {3, 5, 2}};
    auto en = enumerate_reverse(d, seq);
    CHECK(leaf_red_sets(en) == make_red_sets({{4, 5, 8}, {5, 6, 6}, {5, 6, 8}}));

    // The red 5 pushed into R2 of C2 gives a column of height 2 and black
    // height 1, eligible and leftmost for (C3,C5).
    ReverseState s(d);
    s = *implement_pair(s, {1, 3, 2}, 3);
    CHECK(s.tab.cell(1, 3) == Cell{5, Color::Black});
    s = *implement_pair(s, {2, 4, 1}, 4);
    CHECK(s.tab.cell(2, 2) == Cell{5, Color::Red});
    CHECK(s.tab.black_height(2) == 1);
    EligibleSet es = eligible_set(s, {3, 5, 2});
    CHECK(es.cminus == 2);
    CHECK(es.columns == std::vector<int>{2, 3, 5});
}

TEST_CASE("Example 2_3: the hidden rule blocks the (6,6) branch") {
    auto d = make_diagram(Composition::of({1, 2, 2, 1}));
    ReverseState s(d);
    s = *implement_pair(s, {1, 4, 1}, 4);
    // Black 6 under 4, 5 under 2, 3 under 1.
    CHECK(s.tab.cell(3, 2) == Cell{6, Color::Black});
    CHECK(s.tab.cell(2, 2) == Cell{5, Color::Black});
    CHECK(s.tab.cell(1, 2) == Cell{3, Color::Black});

    // Re-lowering the new black 6 would need its original box inside
    // (C2,C3); it sits in C4.
    CHECK_FALSE(implement_pair(s, {2, 3, 2}, 3).has_value());
    auto ok = implement_pair(s, {2, 3, 2}, 2);
    REQUIRE(ok.has_value());
    CHECK(ok->tab.red_set() == RedSet::of({5, 6}));

    std::vector<NeighbouringPair> seq{{1, 4, 1}, {2, 3, 2}};
    auto en = enumerate_reverse(d, seq);
    REQUIRE(en.rejected.size() == 1);
    CHECK(en.rejected[0].reason == "hidden-rule");
    CHECK(en.rejected[0].would_be == RedSet::of({6, 6}));
    CHECK(leaf_red_sets(en) == make_red_sets({{5, 6}}));
}

TEST_CASE("the 9.5 flow: both sequence orders over (1,2,3,1,1,3,2)") {
    auto d = make_diagram(Composition::of({1, 2, 3, 1, 1, 3, 2}));
    std::vector<NeighbouringPair> seq_a{{1, 4, 1}, {4, 5, 1}, {2, 7, 2}, {3, 6, 3}};
    std::vector<NeighbouringPair> seq_b{{1, 4, 1}, {4, 5, 1}, {3, 6, 3}, {2, 7, 2}};

    auto en_a = enumerate_reverse(d, seq_a);
    CHECK(leaf_red_sets(en_a) == make_red_sets({{7, 7, 7, 8},
                                                {7, 7, 8, 11},
                                                {7, 8, 8, 8},
                                                {7, 8, 8, 11},
                                                {7, 8, 11, 13}}));
    bool saw_13_13 = false;
    for (const auto& r : en_a.rejected) saw_13_13 |= r.would_be == RedSet::of({7, 8, 13, 13});
    CHECK(saw_13_13);

    auto en_b = enumerate_reverse(d, seq_b);
    CHECK(leaf_red_sets(en_b) == make_red_sets({{7, 7, 8, 11},
                                                {7, 8, 8, 11},
                                                {7, 8, 10, 11},
                                                {7, 8, 11, 13}}));

    // After (C3,C6) the single reverse tableau R_{7,8,11} exposes five
    // columns of black height 2.
    ReverseState s(d);
    s = *implement_pair(s, {1, 4, 1}, 4);
    s = *implement_pair(s, {4, 5, 1}, 5);
    s = *implement_pair(s, {3, 6, 3}, 6);
    EligibleSet es = eligible_set(s, {2, 7, 2});
    CHECK(es.cminus == 1);
    CHECK(es.columns == std::vector<int>{1, 3, 4, 6, 7});

    // The union over both orders covers all six component Red Sets.
    auto all = leaf_red_sets(en_a);
    auto more = leaf_red_sets(en_b);
    all.insert(all.end(), more.begin(), more.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    CHECK(all == make_red_sets({{7, 7, 7, 8},
                                {7, 8, 8, 8},
                                {7, 7, 8, 11},
                                {7, 8, 8, 11},
                                {7, 8, 10, 11},
                                {7, 8, 11, 13}}));

    // The two (7,8,8,11) tableaux of the two orders differ as cell maps.
    auto find_leaf = [](const ReverseEnumeration& en, const RedSet& rs) -> const ReverseState& {
        for (const auto& leaf : en.leaves)
            if (leaf.tab.red_set() == rs) return leaf;
        throw std::runtime_error("leaf not found");
    };
    const auto& ra = find_leaf(en_a, RedSet::of({7, 8, 8, 11}));
    const auto& rb = find_leaf(en_b, RedSet::of({7, 8, 8, 11}));
    CHECK_FALSE(ra.tab.same_cells(rb.tab));
}

TEST_CASE("Psi rebuilds Example 5 cell for cell") {
    auto d = make_diagram(Composition::of({3, 4, 2, 1, 2, 4, 3, 1}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {11, 12, 15, 16});

    ReverseState std_mode = build_for_component(ct, ShiftMode::Standard);
    CHECK(std_mode.tab.red_set() == RedSet::of({11, 12, 15, 16}));
    // 12 under 9, 11 under 10, 16 under 7, 15 under 12.
    CHECK(std_mode.tab.cell(3, 3) == Cell{12, Color::Black});
    CHECK(std_mode.tab.cell(4, 2) == Cell{11, Color::Black});
    CHECK(std_mode.tab.cell(2, 5) == Cell{16, Color::Black});
    CHECK(std_mode.tab.cell(3, 4) == Cell{15, Color::Black});
    CHECK(std_mode.tab.cell(5, 1) == Cell{11, Color::Red});
    CHECK(std_mode.tab.cell(5, 2) == Cell{12, Color::Red});
    CHECK(std_mode.tab.cell(6, 3) == Cell{15, Color::Red});
    CHECK(std_mode.tab.cell(6, 4) == Cell{16, Color::Red});
    // The amalgamated column appears skewed to the left: 10,11,12,15,16.
    CHECK(std_mode.tab.cell(4, 1).entry == 10);
    CHECK(std_mode.tab.cell(4, 2).entry == 11);
    CHECK(std_mode.tab.cell(3, 3).entry == 12);
    CHECK(std_mode.tab.cell(3, 4).entry == 15);
    CHECK(std_mode.tab.cell(2, 5).entry == 16);

    // Extreme shifting pushes the lower parts past the height-3 column: 15
    // under 6, with 7 and 16 carried into C1.
    ReverseState ext_mode = build_for_component(ct, ShiftMode::Extreme);
    CHECK(ext_mode.tab.red_set() == RedSet::of({11, 12, 15, 16}));
    CHECK(ext_mode.tab.cell(2, 4) == Cell{15, Color::Black});
    CHECK(ext_mode.tab.cell(1, 4) == Cell{7, Color::Black});
    CHECK(ext_mode.tab.cell(1, 5) == Cell{16, Color::Black});
    CHECK(ext_mode.tab.cell(3, 3) == Cell{12, Color::Black});

    // The extra exclusions of extreme mode include x_{3,7} and x_{7,16}.
    auto X_std = excluded_roots_reverse(std_mode.tab);
    auto X_ext = excluded_roots_reverse(ext_mode.tab);
    CHECK(X_ext.count({3, 7}) == 1);
    CHECK(X_std.count({3, 7}) == 0);
}

TEST_CASE("Psi rebuilds Example 9 cell for cell") {
    auto d = make_diagram(Composition::of({3, 2, 1, 3, 2, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {8, 9, 12, 12});
    ReverseState rev = build_for_component(ct);
    CHECK(rev.tab.column(1) ==
          std::vector<Cell>{{1, Color::Black}, {2, Color::Black}, {3, Color::Black}, {9, Color::Black}});
    CHECK(rev.tab.column(2) == std::vector<Cell>{{4, Color::Black}, {5, Color::Black}, {8, Color::Black}});
    CHECK(rev.tab.column(3) == std::vector<Cell>{{6, Color::Black}, {8, Color::Red}, {9, Color::Red}});
    CHECK(rev.tab.column(4) == std::vector<Cell>{{7, Color::Black}, {11, Color::Black}, {12, Color::Black}});
    CHECK(rev.tab.column(5) == std::vector<Cell>{{10, Color::Black}, {12, Color::Red}});
    CHECK(rev.tab.column(6) == std::vector<Cell>{{12, Color::Red}});
}

TEST_CASE("Example 6: standard and extreme receivers for Red Set (4,5,5)") {
    auto d = make_diagram(Composition::of({2, 1, 1, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 5, 5});
    ReverseState std_mode = build_for_component(ct, ShiftMode::Standard);
    CHECK(std_mode.tab.cell(2, 3) == Cell{5, Color::Black});
    ReverseState ext_mode = build_for_component(ct, ShiftMode::Extreme);
    CHECK(ext_mode.tab.cell(1, 3) == Cell{5, Color::Black});
    CHECK(std_mode.tab.red_set() == ext_mode.tab.red_set());

    // Red Set (4,5,7): black 7 placed under the black 5.
    const auto& ct2 = by_red_set(en, {4, 5, 7});
    ReverseState r2 = build_for_component(ct2);
    CHECK(r2.tab.cell(3, 2) == Cell{5, Color::Black});
    CHECK(r2.tab.cell(3, 3) == Cell{7, Color::Black});
    CHECK(excluded_roots_reverse(r2.tab).count({5, 7}) == 1);
}

TEST_CASE("excluded roots of reverse tableaux, Fig 7 and Example 2_1") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2, 1}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 4, 7});
    ReverseState rev = build_for_component(ct);
    auto X = excluded_roots_reverse(rev.tab);
    CHECK(X == CoordSet{{1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 6}, {5, 7}});
    // x_{1,4} is excluded here but not for the component tableau.
    CHECK(excluded_roots_component(ct).count({1, 4}) == 0);
    // The black 6 below the red 4 is what makes x_{4,6} excluded.
    CHECK(rev.tab.cell(3, 1) == Cell{4, Color::Red});
    CHECK(rev.tab.cell(3, 2) == Cell{6, Color::Black});

    // (1,2,1,2) Red Set (4,6): x_{4,6} excluded; the filtration grows.
    auto d2 = make_diagram(Composition::of({1, 2, 1, 2}));
    auto en2 = enumerate_component_tableaux(d2);
    auto stages = build_for_component_stages(by_red_set(en2, {4, 6}));
    CHECK(excluded_roots_reverse(stages.back().tab).count({4, 6}) == 1);
    for (size_t i = 1; i < stages.size(); ++i) {
        auto prev = excluded_roots_reverse(stages[i - 1].tab);
        auto next = excluded_roots_reverse(stages[i].tab);
        for (auto c : prev) CHECK(next.count(c) == 1);
    }
}

TEST_CASE("trapezium bookkeeping on (3,1,3,1,3)") {
    auto d = make_diagram(Composition::of({3, 1, 3, 1, 3}));
    NeighbouringPair target{3, 5, 3};
    ReverseState s(d);
    CHECK(trapezium(s, target).black_count == 4);  // the left rectangle, degree 4
    CHECK(trapezium(s, target).composite_line_count == 4);

    s = *implement_pair(s, {2, 4, 1}, 4);
    TrapeziumState t1 = trapezium(s, target);
    CHECK(t1.black_count == 4);
    // B is C skewed to the left: 5 stays, 6 and 7 sit in C2.
    CHECK(t1.left_boundary == std::vector<Box>{{3, 1}, {2, 2}, {2, 3}});
    CHECK(t1.right_boundary == std::vector<Box>{{5, 1}, {5, 2}, {5, 3}});

    s = *implement_pair(s, {1, 3, 3}, 2);
    TrapeziumState t2 = trapezium(s, target);
    // B unchanged except the 7 turned red; black 7 appears in R4 of C1.
    CHECK(t2.left_boundary == t1.left_boundary);
    CHECK(s.tab.cell(2, 3) == Cell{7, Color::Red});
    CHECK(s.tab.cell(1, 4) == Cell{7, Color::Black});
    CHECK(t2.black_count == 4);
    CHECK_FALSE(t2.red_in_row_s);

    s = *implement_pair(s, target, 5);
    TrapeziumState t3 = trapezium(s, target);
    CHECK(t3.black_count == 3);  // drops by exactly one at the implementation
    CHECK(t3.red_in_row_s);
    CHECK(t3.composite_line_count == 3);
}

TEST_CASE("every Psi leaf is reachable from its induced sequence, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& comp : all_compositions(n)) {
            auto d = make_diagram(comp);
            for (const auto& ct : enumerate_component_tableaux(d).tableaux) {
                auto order = red_order(ct);
                ReverseState psi = build_for_component(ct);
                CHECK(psi.tab.red_set() == ct.red_set);
                auto en = enumerate_reverse(d, order.sequence);
                bool found = false;
                for (const auto& leaf : en.leaves) found |= leaf.tab.same_cells(psi.tab);
                CHECK(found);
            }
        }
}
