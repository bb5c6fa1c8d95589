#include "nilfibre/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>

namespace nilfibre {

std::string CheckReport::summary() const {
    if (pass) return "ok";
    std::ostringstream s;
    for (size_t i = 0; i < failures.size(); ++i) s << (i ? "; " : "") << failures[i];
    return s.str();
}

static std::string coord_str(Coord c) {
    return "x" + std::to_string(c.first) + "," + std::to_string(c.second);
}

XyzReport xyz_properties(const std::set<Coord>& X, const std::set<Coord>& Y, const std::set<Coord>& S) {
    XyzReport r;
    for (const Coord& y : Y)
        if (!X.count(y)) r.check.fail(coord_str(y) + " labelled * but not excluded");
    for (const Coord& s : S)
        if (X.count(s)) r.check.fail(coord_str(s) + " labelled 1 but excluded");
    std::set<int> rows, cols;
    for (const Coord& s : S) {
        if (!rows.insert(s.first).second) r.check.fail("two label-1 entries in matrix row " + std::to_string(s.first));
        if (!cols.insert(s.second).second)
            r.check.fail("two label-1 entries in matrix column " + std::to_string(s.second));
    }
    for (const Coord& x : X)
        if (!Y.count(x)) r.Z.insert(x);
    return r;
}

CheckReport covering_check(const std::set<Coord>& S, const std::set<Coord>& Z, const std::set<Coord>& Y) {
    CheckReport r;
    auto covered = [&](const Coord& c) {
        for (const Coord& s : S)
            if (s.first == c.first && s.second < c.second) return true;
        return false;
    };
    for (const Coord& z : Z)
        if (!covered(z)) r.fail(coord_str(z) + " uncovered");
    for (const Coord& y : Y)
        if (covered(y)) r.fail(coord_str(y) + " labelled * yet covered");
    return r;
}

namespace {

// Exact rank over Q by fraction-free elimination; returns the rank and the
// set of pivot columns.
int rational_rank(std::vector<std::vector<mpq_class>>& m, std::vector<bool>& pivot_cols) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    pivot_cols.assign(cols, false);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        mpq_class inv = 1 / m[rank][col];
        for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_cols[col] = true;
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<mpq_class>> tangent_rows(const Diagram& d, const std::set<Coord>& X,
                                                 const std::set<Coord>& S, const std::set<Coord>& Y,
                                                 const std::map<Coord, size_t>& index, bool include_levi_diag) {
    std::vector<std::vector<mpq_class>> rows;
    size_t dim = index.size();
    auto unit = [&](const Coord& c) {
        std::vector<mpq_class> v(dim, 0);
        v[index.at(c)] = 1;
        return v;
    };
    for (const auto& [c, i] : index)
        if (!X.count(c)) rows.push_back(unit(c));
    for (const Coord& y : Y) rows.push_back(unit(y));
    // [E_{a,b}, e] = sum over (i,j) in S of delta_{b,i} E_{a,j} - delta_{j,a} E_{i,b},
    // projected onto the nilradical coordinates.
    const int n = d.n();
    for (int a = 1; a <= n; ++a)
        for (int b = include_levi_diag ? a : a + 1; b <= n; ++b) {
            std::vector<mpq_class> v(dim, 0);
            bool nonzero = false;
            for (const Coord& s : S) {
                if (b == s.first && d.in_nilradical(a, s.second)) {
                    v[index.at({a, s.second})] += 1;
                    nonzero = true;
                }
                if (a == s.second && d.in_nilradical(s.first, b)) {
                    v[index.at({s.first, b})] -= 1;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(v));
        }
    return rows;
}

}  // namespace

RankReport tangent_rank_check(const Diagram& d, const std::set<Coord>& X, const std::set<Coord>& S,
                              const std::set<Coord>& Y) {
    RankReport report;
    std::map<Coord, size_t> index;
    for (auto [i, j] : d.nilradical_coords()) index.emplace(Coord{i, j}, index.size());
    report.dim_m = static_cast<int>(index.size());
    report.dim_u = report.dim_m;
    for (const Coord& x : X) {
        if (!index.count(x)) throw StructuralError("excluded coordinate outside the nilradical");
        --report.dim_u;
    }

    auto rows = tangent_rows(d, X, S, Y, index, false);
    std::vector<bool> pivots;
    report.rank = rational_rank(rows, pivots);
    report.full = report.rank == report.dim_m;
    if (!report.full)
        for (const auto& [c, i] : index)
            if (!pivots[i]) report.missing.push_back(c);

    if (report.full) {
        report.full_with_borel = true;
    } else {
        auto rows_b = tangent_rows(d, X, S, Y, index, true);
        std::vector<bool> pivots_b;
        report.full_with_borel = rational_rank(rows_b, pivots_b) == report.dim_m;
    }
    return report;
}

std::string RankReport::summary() const {
    std::ostringstream s;
    s << "rank " << rank << "/" << dim_m << " (dim u = " << dim_u << ")";
    if (!full) {
        s << ", deficit " << (dim_m - rank) << ", stuck at";
        for (const Coord& c : missing) s << ' ' << coord_str(c);
    }
    return s.str();
}

CheckReport coincidence_check(const Diagram& d, const std::set<Coord>& X_component,
                              const std::set<Coord>& X_reverse, const std::set<Coord>& S,
                              const std::set<Coord>& Y) {
    CheckReport r;
    std::set<Coord> U = X_component;
    U.insert(X_reverse.begin(), X_reverse.end());
    for (const Coord& u : U) {
        if (Y.count(u)) continue;
        bool covered = false;
        for (const Coord& s : S)
            if (s.first == u.first && s.second < u.second) covered = true;
        if (!covered) r.fail(coord_str(u) + " of the union uncovered");
    }
    RankReport rank = tangent_rank_check(d, U, S, Y);
    if (!rank.full) r.fail("union rank check failed: " + rank.summary());
    return r;
}

CheckReport line_geometry_check(const ReverseState& reverse, const ComponentTableau& ct) {
    CheckReport r;
    const Tableau& t = reverse.tab;
    auto Y = ct.star_coords();
    auto X = excluded_roots_reverse(t);
    for (const auto& line : ct.lines_star)
        if (!X.count({line.i, line.j}))
            r.fail("star line " + coord_str({line.i, line.j}) + " is not excluded in the reverse tableau");
    for (const auto& line : ct.lines_one) {
        Box from = *t.rightmost(line.i);
        auto to = t.black_box(line.j);
        if (!to) {
            r.fail("no black " + std::to_string(line.j) + " in the reverse tableau");
            continue;
        }
        int u = 0;
        for (const Coord& y : Y)
            if (y.first == line.i && y.second < line.j) ++u;
        if (to->col < from.col)
            r.fail("line " + coord_str({line.i, line.j}) + " is not right-going");
        if (to->row - from.row != u)
            r.fail("line " + coord_str({line.i, line.j}) + " descends " + std::to_string(to->row - from.row) +
                   " rows, expected " + std::to_string(u));
    }
    return r;
}

}  // namespace nilfibre
