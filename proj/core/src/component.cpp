#include "nilfibre/component.hpp"

#include <algorithm>
#include <sstream>

namespace nilfibre {

Tableau ComponentTableau::collapsed() const {
    Tableau t = Tableau::initial(diagram);
    t.set_provenance(Provenance::ComponentCollapsed);
    for (const auto& cd : per_column)
        for (size_t i = 0; i < cd.j_values_bottom_up.size(); ++i)
            t.recolor(cd.column, cd.h - static_cast<int>(i), Color::Red);
    return t;
}

std::set<std::pair<int, int>> ComponentTableau::star_coords() const {
    std::set<std::pair<int, int>> out;
    for (const auto& l : lines_star) out.insert({l.i, l.j});
    return out;
}

std::set<std::pair<int, int>> ComponentTableau::one_coords() const {
    std::set<std::pair<int, int>> out;
    for (const auto& l : lines_one) out.insert({l.i, l.j});
    return out;
}

const ColumnDescent* ComponentTableau::descent_of_column(int col) const {
    for (const auto& cd : per_column)
        if (cd.column == col) return &cd;
    return nullptr;
}

namespace {

struct EnumState {
    Tableau tab;
    std::vector<bool> used;                 // per pair index
    std::vector<ColumnDescent> descents;    // indexed by column-1, column 0 unused
    std::vector<bool> has_descent;          // per column-1
    std::vector<StarLine> stars;
    std::vector<OneLine> ones;
    std::set<int> one_targets;              // values already targeted by a label-1 line
    std::vector<int> used_pair_order;
    std::vector<std::string> trace;
    int s = 1, r = 1;                       // sweep position: row, adjacency
};

class Enumerator {
public:
    explicit Enumerator(DiagramPtr d) : diag_(std::move(d)) {}

    ComponentEnumeration run() {
        EnumState st{Tableau::initial(diag_), std::vector<bool>(static_cast<size_t>(diag_->g()), false)};
        st.tab.set_provenance(Provenance::ComponentInfinity);
        st.descents.resize(static_cast<size_t>(diag_->k()));
        st.has_descent.assign(static_cast<size_t>(diag_->k()), false);
        sweep(std::move(st));

        ComponentEnumeration out;
        out.stuck_branches = stuck_;
        // Deduplicate identical completed states, then assert red-map
        // injectivity across the distinct ones.
        std::sort(leaves_.begin(), leaves_.end(), [](const ComponentTableau& a, const ComponentTableau& b) {
            if (!(a.red_set == b.red_set)) return a.red_set < b.red_set;
            return a.infinity.cells() < b.infinity.cells();
        });
        for (auto& leaf : leaves_) {
            if (!out.tableaux.empty() && out.tableaux.back().red_set == leaf.red_set) {
                if (!out.tableaux.back().infinity.same_cells(leaf.infinity) ||
                    out.tableaux.back().lines_one != leaf.lines_one ||
                    out.tableaux.back().lines_star != leaf.lines_star)
                    throw StructuralError("red map not injective on " + diag_->composition().str() +
                                          ": two tableaux share Red Set " + leaf.red_set.str());
                continue;
            }
            out.tableaux.push_back(std::move(leaf));
        }
        return out;
    }

private:
    DiagramPtr diag_;
    std::vector<ComponentTableau> leaves_;
    int stuck_ = 0;

    void sweep(EnumState st) {
        const int k = diag_->k();
        while (true) {
            if (st.r >= k) {
                ++st.s;
                st.r = 1;
                if (st.s > st.tab.max_height()) break;  // nothing at this row or below
            }
            int c = st.r++;
            if (!st.tab.has_cell(c, st.s)) continue;
            int v = st.tab.cell(c, st.s).entry;
            int e = st.tab.height(c + 1) + 1;  // first empty row of C_{c+1}
            int m = e - st.s;
            if (m == 0) {
                st.tab.push_cell(c + 1, {v, Color::Black});
                continue;
            }
            if (m < 0) {
                // Row already occupied to the right; treated as a stop.
                stop(st, v, c);
                continue;
            }
            if (!st.has_descent[static_cast<size_t>(c)]) {
                // Initial descent by m rows lands at the first empty box of a
                // still-original column and needs free surrounding pairs of
                // heights s..s+m-1 (= h-m+1..h) with no gaps.
                if (st.tab.height(c + 1) == diag_->height(c + 1)) {
                    std::vector<int> pairs;
                    bool ok = true;
                    for (int t = 0; t < m && ok; ++t) {
                        auto p = diag_->surrounding_pair(st.s + t, c);
                        if (!p || st.used[static_cast<size_t>(diag_->pair_index(*p))])
                            ok = false;
                        else
                            pairs.push_back(diag_->pair_index(*p));
                    }
                    if (ok) {
                        EnumState branch = st;
                        apply_initial_descent(branch, v, c, m, pairs);
                        sweep(std::move(branch));
                    }
                }
            } else if (m == 1) {
                // A later string may descend one more row, consuming the
                // surrounding pair at the height it starts from.  The heights
                // consumed this way must run on without gaps, so the column
                // is closed for descents once a horizontal arrival breaks
                // the run.
                const auto& cd = st.descents[static_cast<size_t>(c)];
                auto p = diag_->surrounding_pair(st.s, c);
                if (st.tab.height(c + 1) == cd.h + cd.m_prime && p &&
                    !st.used[static_cast<size_t>(diag_->pair_index(*p))]) {
                    EnumState branch = st;
                    apply_further_descent(branch, v, c, diag_->pair_index(*p));
                    sweep(std::move(branch));
                }
            }
            if (!stop(st, v, c)) return;  // stuck branch abandoned
        }
        finalize(std::move(st));
    }

    void apply_initial_descent(EnumState& st, int v, int c, int m, const std::vector<int>& pairs) {
        int col = c + 1;
        int h = diag_->height(col);
        Box from{col, h + 1};
        st.tab.push_cell(col, {v, Color::Black});
        ColumnDescent cd;
        cd.column = col;
        cd.h = h;
        cd.m = m;
        cd.m_prime = 1;
        cd.j_value = st.tab.cell(col, h).entry;
        for (int t = 0; t < m; ++t) {
            int row = h - t;
            int red = st.tab.cell(col, row).entry;
            st.tab.recolor(col, row, Color::Red);
            cd.j_values_bottom_up.push_back(red);
            // The line into row h-t rides the surrounding pair of that height.
            int pi = pairs[static_cast<size_t>(m - 1 - t)];
            cd.pairs_bottom_up.push_back(pi);
            st.stars.push_back({v, red, from, Box{col, row}, pi});
        }
        for (int pi : pairs) {
            st.used[static_cast<size_t>(pi)] = true;
            st.used_pair_order.push_back(pi);
        }
        st.descents[static_cast<size_t>(col - 1)] = cd;
        st.has_descent[static_cast<size_t>(col - 1)] = true;
        std::ostringstream t;
        t << v << " descends " << m << " row" << (m > 1 ? "s" : "") << " into C" << col;
        st.trace.push_back(t.str());
    }

    void apply_further_descent(EnumState& st, int v, int c, int pair_index) {
        int col = c + 1;
        auto& cd = st.descents[static_cast<size_t>(col - 1)];
        Box from{col, st.tab.height(col) + 1};
        st.tab.push_cell(col, {v, Color::Black});
        cd.m_prime += 1;
        cd.extra_pairs.push_back(pair_index);
        st.stars.push_back({v, cd.j_value, from, Box{col, cd.h}, pair_index});
        st.used[static_cast<size_t>(pair_index)] = true;
        st.used_pair_order.push_back(pair_index);
        std::ostringstream t;
        t << v << " descends one row into C" << col;
        st.trace.push_back(t.str());
    }

    // Returns false when no admissible target exists (branch abandoned).
    bool stop(EnumState& st, int v, int c) {
        int col = c + 1;
        for (int row = 1; row <= st.tab.height(col); ++row) {
            int w = st.tab.cell(col, row).entry;
            if (w <= v || st.one_targets.count(w)) continue;
            if (row > diag_->height(col)) break;  // only original entries take label-1 lines
            st.ones.push_back({v, w, Box{c, st.s}, Box{col, row}});
            st.one_targets.insert(w);
            return true;
        }
        ++stuck_;
        return false;
    }

    void finalize(EnumState st) {
        if (std::count(st.used.begin(), st.used.end(), true) != diag_->g()) return;
        ComponentTableau ct;
        ct.diagram = diag_;
        ct.infinity = std::move(st.tab);
        for (int col = 1; col <= diag_->k(); ++col)
            if (st.has_descent[static_cast<size_t>(col - 1)])
                ct.per_column.push_back(st.descents[static_cast<size_t>(col - 1)]);
        ct.lines_star = std::move(st.stars);
        ct.lines_one = std::move(st.ones);
        ct.used_pair_order = std::move(st.used_pair_order);
        ct.choice_trace = std::move(st.trace);
        for (const auto& cd : ct.per_column) {
            ct.red_set.add(cd.j_value, cd.m_prime);
            for (size_t i = 1; i < cd.j_values_bottom_up.size(); ++i) ct.red_set.add(cd.j_values_bottom_up[i]);
        }
        if (!(ct.red_set == ct.infinity.red_set()))
            throw StructuralError("descent records disagree with red cells");
        leaves_.push_back(std::move(ct));
    }
};

}  // namespace

ComponentEnumeration enumerate_component_tableaux(DiagramPtr diagram) {
    return Enumerator(diagram).run();
}

bool check_red_map_injective(DiagramPtr diagram) {
    // Enumeration throws if two distinct completed tableaux share a Red Set.
    enumerate_component_tableaux(diagram);
    return true;
}

namespace {

// Places `value` directly under the box `under` of the initial tableau,
// shifting lower column parts (strictly below under.row) leftwards, columns
// of height < under.row skipped.  Mirrors the reverse-side shifting.
Tableau place_under(const Diagram& d, DiagramPtr dp, Box under, int value) {
    Tableau t = Tableau::initial(dp);
    int s = under.row;
    // Mark the original copy of `value` red: the new copy is the black one.
    Box orig = d.box_of_value(value);
    t.recolor(orig.col, orig.row, Color::Red);

    int target = under.col;
    if (t.height(target) > s) {
        // Chain of columns whose lower parts shift one slot left in unison.
        std::vector<int> chain{target};
        while (t.height(chain.back()) > s) {
            int next = 0;
            for (int col = chain.back() - 1; col >= 1; --col)
                if (t.height(col) >= s) {
                    next = col;
                    break;
                }
            if (next == 0) throw StructuralError("auxiliary shifting ran off the diagram");
            chain.push_back(next);
        }
        for (size_t i = chain.size() - 1; i >= 1; --i) {
            int from = chain[i - 1];
            int to = chain[i];
            std::vector<Cell> moved;
            while (t.height(from) > s) moved.push_back(t.take_cell(from, t.height(from)));
            for (auto it = moved.rbegin(); it != moved.rend(); ++it) t.push_cell(to, *it);
        }
    }
    t.push_cell(target, {value, Color::Black});
    return t;
}

}  // namespace

Tableau component_auxiliary_tableau(const ComponentTableau& ct, const StarLine& line) {
    const Diagram& d = *ct.diagram;
    return place_under(d, ct.diagram, d.box_of_value(line.i), line.j);
}

std::set<std::pair<int, int>> excluded_roots_component(const ComponentTableau& ct) {
    const Diagram& d = *ct.diagram;
    std::set<std::pair<int, int>> out;
    for (const auto& line : ct.lines_star) {
        Tableau aux = component_auxiliary_tableau(ct, line);
        // Excluded roots read off as for a reverse tableau: rightmost a
        // strictly above the black b, same column or to the right.
        bool line_found = false;
        for (int a = 1; a <= d.n(); ++a) {
            Box ra = *aux.rightmost(a);
            for (int b = a + 1; b <= d.n(); ++b) {
                if (!d.in_nilradical(a, b)) continue;
                Box bb = *aux.black_box(b);
                if (ra.col >= bb.col && ra.row < bb.row) {
                    out.insert({a, b});
                    if (a == line.i && b == line.j) line_found = true;
                }
            }
        }
        if (!line_found) throw StructuralError("star line missing from its own auxiliary exclusion set");
    }
    return out;
}

RedOrder red_order(const ComponentTableau& ct) {
    RedOrder out;
    for (const auto& cd : ct.per_column) {
        // Bottom value first with its m' copies (heights h, h+1, ...), then
        // upwards through the remaining red rows (heights h-1, h-2, ...).
        out.entries.push_back({cd.j_value, cd.column, cd.h, cd.pairs_bottom_up[0]});
        for (int pi : cd.extra_pairs) out.entries.push_back({cd.j_value, cd.column, cd.h, pi});
        for (size_t i = 1; i < cd.j_values_bottom_up.size(); ++i)
            out.entries.push_back({cd.j_values_bottom_up[i], cd.column, cd.h - static_cast<int>(i),
                                   cd.pairs_bottom_up[i]});
    }
    for (const auto& e : out.entries) out.sequence.push_back(ct.diagram->pairs().at(static_cast<size_t>(e.pair_index)));
    if (out.sequence.size() != static_cast<size_t>(ct.diagram->g()))
        throw StructuralError("red order does not cover every neighbouring pair");
    return out;
}

}  // namespace nilfibre
