#include "doctest.h"
#include "nilfibre/geometry.hpp"
#include "nilfibre/verify.hpp"

using namespace nilfibre;

namespace {

using CoordSet = std::set<std::pair<int, int>>;

const ComponentTableau& by_red_set(const ComponentEnumeration& en, std::vector<int> values) {
    RedSet wanted = RedSet::of(std::move(values));
    for (const auto& ct : en.tableaux)
        if (ct.red_set == wanted) return ct;
    throw std::runtime_error("no component with Red Set " + wanted.str());
}

}  // namespace

TEST_CASE("xyz properties on the worked small cases") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 6});
    auto S = ct.one_coords();
    auto Y = ct.star_coords();
    CHECK(S == CoordSet{{1, 2}, {3, 4}, {4, 5}});
    CHECK(Y == CoordSet{{2, 4}, {2, 6}});

    ReverseState rev = build_for_component(ct);
    auto X = excluded_roots_reverse(rev.tab);
    auto xyz = xyz_properties(X, Y, S);
    CHECK(xyz.check.pass);
    CHECK(xyz.Z.count({4, 6}) == 1);

    // Fig 6 case: S and X are disjoint, S rook-disjoint.
    auto d6 = make_diagram(Composition::of({2, 1, 1, 1, 2}));
    auto en6 = enumerate_component_tableaux(d6);
    const auto& ct6 = by_red_set(en6, {4, 5, 7});
    auto rev6 = build_for_component(ct6);
    auto xyz6 = xyz_properties(excluded_roots_reverse(rev6.tab), ct6.star_coords(), ct6.one_coords());
    CHECK(xyz6.check.pass);

    // Empty sets pass vacuously.
    CHECK(xyz_properties({}, {}, {}).check.pass);

    // A violation is reported with its coordinates.
    auto bad = xyz_properties({}, {{2, 4}}, {});
    CHECK_FALSE(bad.check.pass);
    CHECK(bad.check.summary().find("x2,4") != std::string::npos);
}

TEST_CASE("covering of the excluded roots") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    {
        const auto& ct = by_red_set(en, {4, 6});
        auto rev = build_for_component(ct);
        auto xyz = xyz_properties(excluded_roots_reverse(rev.tab), ct.star_coords(), ct.one_coords());
        // x_{4,6} is covered by x_{4,5}.
        CHECK(xyz.Z.count({4, 6}) == 1);
        CHECK(covering_check(ct.one_coords(), xyz.Z, ct.star_coords()).pass);
    }
    {
        const auto& ct = by_red_set(en, {4, 4});
        auto rev = build_for_component(ct);
        auto X = excluded_roots_reverse(rev.tab);
        // x_{1,4} is covered by the label-1 root x_{1,2}.
        CHECK(X.count({1, 4}) == 1);
        CHECK(ct.one_coords().count({1, 2}) == 1);
        auto xyz = xyz_properties(X, ct.star_coords(), ct.one_coords());
        CHECK(covering_check(ct.one_coords(), xyz.Z, ct.star_coords()).pass);
    }
    {
        auto d6 = make_diagram(Composition::of({2, 1, 1, 1, 2}));
        auto en6 = enumerate_component_tableaux(d6);
        const auto& ct = by_red_set(en6, {4, 5, 7});
        auto rev = build_for_component(ct);
        auto X = excluded_roots_reverse(rev.tab);
        CHECK(X.count({5, 7}) == 1);
        // x_{5,7} is covered by x_{5,6}.
        CHECK(ct.one_coords().count({5, 6}) == 1);
        auto xyz = xyz_properties(X, ct.star_coords(), ct.one_coords());
        CHECK(covering_check(ct.one_coords(), xyz.Z, ct.star_coords()).pass);
    }
    // An uncovered root is named.
    auto broken = covering_check({{1, 2}}, {{3, 5}}, {});
    CHECK_FALSE(broken.pass);
    CHECK(broken.summary().find("x3,5") != std::string::npos);
}

TEST_CASE("tangent rank certificates") {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 6});
    auto rev = build_for_component(ct);
    auto X = excluded_roots_reverse(rev.tab);
    auto rank = tangent_rank_check(*d, X, ct.one_coords(), ct.star_coords());
    CHECK(rank.full);
    CHECK(rank.dim_m == 13);
    CHECK(rank.dim_u == 13 - static_cast<int>(X.size()));

    // No pairs: u is the whole nilradical.
    auto d2 = make_diagram(Composition::of({2, 3}));
    auto en2 = enumerate_component_tableaux(d2);
    const auto& free_ct = en2.tableaux.at(0);
    auto r2 = tangent_rank_check(*d2, {}, free_ct.one_coords(), free_ct.star_coords());
    CHECK(r2.full);
    CHECK(r2.dim_u == r2.dim_m);

    // Deliberately excluding the uncovered label-1 root x_{1,2} starves the
    // span: nothing regenerates it from n alone.
    auto Xbad = X;
    Xbad.insert({1, 2});
    auto deficit = tangent_rank_check(*d, Xbad, ct.one_coords(), ct.star_coords());
    CHECK_FALSE(deficit.full);
    CHECK(deficit.rank < deficit.dim_m);

    // Sharpness: dropping a star coordinate from Y breaks fullness here.
    auto Ysmall = ct.star_coords();
    Ysmall.erase({2, 4});
    auto sharp = tangent_rank_check(*d, X, ct.one_coords(), Ysmall);
    CHECK_FALSE(sharp.full);
}

TEST_CASE("coincidence of component and reverse exclusions") {
    // Fig 7: x_{1,4} enters only through the reverse tableau, the
    // coincidence certificate still passes.
    auto d = make_diagram(Composition::of({1, 2, 1, 2, 1}));
    auto en = enumerate_component_tableaux(d);
    const auto& ct = by_red_set(en, {4, 4, 7});
    auto rev = build_for_component(ct);
    auto X_T = excluded_roots_component(ct);
    auto X_R = excluded_roots_reverse(rev.tab);
    CHECK(X_R.count({1, 4}) == 1);
    CHECK(X_T.count({1, 4}) == 0);
    CHECK(coincidence_check(*d, X_T, X_R, ct.one_coords(), ct.star_coords()).pass);

    // Identical sets pass trivially.
    CHECK(coincidence_check(*d, X_R, X_R, ct.one_coords(), ct.star_coords()).pass);
}

TEST_CASE("line geometry in the reverse tableaux") {
    // Fig 8: l_{3,8} descends exactly two rows.
    auto d8 = make_diagram(Composition::of({2, 1, 1, 2, 2}));
    auto en8 = enumerate_component_tableaux(d8);
    const auto& ct8 = by_red_set(en8, {4, 6, 8});
    auto rev8 = build_for_component(ct8);
    CHECK(ct8.one_coords().count({3, 8}) == 1);
    Box from = *rev8.tab.rightmost(3);
    Box to = *rev8.tab.black_box(8);
    CHECK(to.row - from.row == 2);
    CHECK(line_geometry_check(rev8, ct8).pass);

    // Fig 9: l_{9,12} is horizontal.
    auto d9 = make_diagram(Composition::of({3, 2, 1, 3, 2, 1, 2}));
    auto en9 = enumerate_component_tableaux(d9);
    const auto& ct9 = by_red_set(en9, {8, 9, 12, 12});
    auto rev9 = build_for_component(ct9);
    CHECK(ct9.one_coords().count({9, 12}) == 1);
    Box f9 = *rev9.tab.rightmost(9);
    Box t9 = *rev9.tab.black_box(12);
    CHECK(f9.row == t9.row);
    CHECK(line_geometry_check(rev9, ct9).pass);

    // No label-1 lines at all: vacuous pass.
    auto d0 = make_diagram(Composition::of({1, 1}));
    auto en0 = enumerate_component_tableaux(d0);
    auto rev0 = build_for_component(en0.tableaux.at(0));
    CHECK(line_geometry_check(rev0, en0.tableaux.at(0)).pass);
}

TEST_CASE("the full property suite passes on the worked compositions") {
    SuiteOptions opt;
    opt.symbolic_cross_check = true;
    for (const auto& parts : std::vector<std::vector<int>>{{1, 2, 1, 2}, {1, 2, 2, 1}, {2, 1, 2, 1, 2}, {1, 2, 1, 2, 1}}) {
        auto result = verify_composition(Composition::of(parts), opt);
        for (const auto& line : result.lines)
            if (!line.pass)
                MESSAGE(line.composition, " ", line.subject, " ", line.check, ": ", line.detail);
        CHECK(result.all_pass);
    }
}
