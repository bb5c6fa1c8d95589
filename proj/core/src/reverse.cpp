#include "nilfibre/reverse.hpp"

#include <algorithm>

namespace nilfibre {

bool ReverseState::pair_implemented(int pair_index) const {
    return std::find(implemented.begin(), implemented.end(), pair_index) != implemented.end();
}

EligibleSet eligible_set(const ReverseState& state, const NeighbouringPair& p) {
    const Diagram& d = state.diagram();
    const Tableau& t = state.tab;
    int s = p.height;

    // C^- holds the rightmost copy of the value originally at R_s in C.
    int anchor = d.value_at(p.left, s);
    Box rm = *t.rightmost(anchor);
    if (rm.row != s) throw StructuralError("left boundary anchor left row " + std::to_string(s));

    EligibleSet es;
    es.pair = p;
    es.cminus = rm.col;
    for (int col = es.cminus; col <= p.right; ++col) {
        if (t.height(col) < s) continue;
        if (t.black_height(col) > s) continue;
        es.columns.push_back(col);
    }
    // Enabling Proposition: at most the leftmost column of S has black
    // height < s, and then its height is exactly s.
    for (size_t i = 0; i < es.columns.size(); ++i) {
        int col = es.columns[i];
        if (t.black_height(col) < s) {
            if (i != 0)
                throw StructuralError("enabling violated: column C" + std::to_string(col) +
                                      " of black height < " + std::to_string(s) + " is not leftmost");
            if (t.height(col) != s)
                throw StructuralError("enabling violated: leftmost eligible column is not of height " +
                                      std::to_string(s));
        }
    }
    if (!es.columns.empty())
        es.choices.assign(es.columns.begin() + 1, es.columns.end());
    return es;
}

namespace {

// First column strictly left of `from` able to receive lower parts at
// stage s.  Standard shifting stops at any column of height >= s; extreme
// shifting skips columns of height exactly s unless none taller remains.
int receiver_left_of(const Tableau& t, int from, int s, ShiftMode mode) {
    int leftmost_eligible = 0;
    for (int col = from - 1; col >= 1; --col) {
        if (t.height(col) < s) continue;
        if (mode == ShiftMode::Standard) return col;
        if (t.height(col) > s) return col;
        leftmost_eligible = col;
    }
    if (mode == ShiftMode::Extreme && leftmost_eligible != 0) return leftmost_eligible;
    throw StructuralError("shifting ran off the left edge of the tableau");
}

}  // namespace

std::optional<ReverseState> implement_pair(const ReverseState& state, const NeighbouringPair& p,
                                           int choice_col, ShiftMode mode) {
    const Diagram& d = state.diagram();
    int s = p.height;
    EligibleSet es = eligible_set(state, p);
    if (std::find(es.choices.begin(), es.choices.end(), choice_col) == es.choices.end())
        throw StructuralError("column C" + std::to_string(choice_col) + " is not an eligible choice for " + p.str());

    ReverseState next = state;
    Tableau& t = next.tab;

    if (t.black_height(choice_col) != s) throw StructuralError("chosen column has no black entry in R_s");
    int j = t.cell(choice_col, s).entry;
    if (t.cell(choice_col, s).color != Color::Black) throw StructuralError("R_s entry of chosen column is red");

    // Hidden rule: only entries whose original box is surrounded by the
    // pair may be re-lowered.
    int origin_col = d.column_of_value(j);
    if (origin_col < p.left || origin_col > p.right) return std::nullopt;

    // Substitution.
    t.recolor(choice_col, s, Color::Red);
    int target = receiver_left_of(t, choice_col, s, mode);

    // Shifting of partial columns: lower parts, strictly below R_s, hop one
    // slot left in unison until a column with a free lower part absorbs.
    if (t.height(target) > s) {
        std::vector<int> chain{target};
        while (t.height(chain.back()) > s) chain.push_back(receiver_left_of(t, chain.back(), s, mode));
        for (size_t i = chain.size() - 1; i >= 1; --i) {
            int from = chain[i - 1];
            int to = chain[i];
            std::vector<Cell> moved;
            while (t.height(from) > s) moved.push_back(t.take_cell(from, t.height(from)));
            for (auto it = moved.rbegin(); it != moved.rend(); ++it) t.push_cell(to, *it);
        }
    }
    if (t.height(target) != s) throw StructuralError("substitution target still blocked after shifting");
    t.push_cell(target, {j, Color::Black});
    if (target < es.cminus) throw StructuralError("black entry left the span [C^-,C']");

    next.implemented.push_back(d.pair_index(p));
    if (!next.tab.is_standard_with_multiplicities())
        throw StructuralError("implementation broke standardness with multiplicities");
    return next;
}

ReverseEnumeration enumerate_reverse(DiagramPtr d, const std::vector<NeighbouringPair>& sequence,
                                     ShiftMode mode) {
    if (sequence.size() != static_cast<size_t>(d->g()))
        throw StructuralError("sequence must list every neighbouring pair exactly once");
    {
        std::set<int> seen;
        for (const auto& p : sequence) seen.insert(d->pair_index(p));
        if (seen.size() != sequence.size()) throw StructuralError("sequence repeats a pair");
    }

    ReverseEnumeration out;
    std::vector<ReverseState> frontier{ReverseState(d)};
    for (size_t step = 0; step < sequence.size(); ++step) {
        const NeighbouringPair& p = sequence[step];
        std::vector<ReverseState> next;
        for (const auto& state : frontier) {
            EligibleSet es = eligible_set(state, p);
            for (int choice : es.choices) {
                auto child = implement_pair(state, p, choice, mode);
                if (child) {
                    next.push_back(std::move(*child));
                } else {
                    RedSet would = state.tab.red_set();
                    would.add(state.tab.cell(choice, p.height).entry);
                    out.rejected.push_back({static_cast<int>(step), p, choice, "hidden-rule", would});
                }
            }
        }
        frontier = std::move(next);
    }
    out.leaves = std::move(frontier);
    return out;
}

std::vector<ReverseState> build_for_component_stages(const ComponentTableau& ct, ShiftMode mode) {
    const Diagram& d = *ct.diagram;
    std::vector<ReverseState> stages{ReverseState(ct.diagram)};
    for (const auto& cd : ct.per_column) {
        // Rising part: heights h .. h+m'-1 build the reverse string of the
        // bottom value, each step re-lowering the black copy made by the
        // previous one.
        for (int t = 0; t < cd.m_prime; ++t) {
            auto p = d.surrounding_pair(cd.h + t, cd.column - 1);
            if (!p) throw StructuralError("missing surrounding pair of height " + std::to_string(cd.h + t));
            Box black = *stages.back().tab.black_box(cd.j_value);
            auto next = implement_pair(stages.back(), *p, black.col, mode);
            if (!next) throw StructuralError("hidden rule rejected a Psi step");
            stages.push_back(std::move(*next));
        }
        // Falling part: heights h-1 down to h-m+1 recolour the successive
        // lowest black entries of the column itself.
        for (int t = 1; t < cd.m; ++t) {
            auto p = d.surrounding_pair(cd.h - t, cd.column - 1);
            if (!p) throw StructuralError("missing surrounding pair of height " + std::to_string(cd.h - t));
            auto next = implement_pair(stages.back(), *p, cd.column, mode);
            if (!next) throw StructuralError("hidden rule rejected a Psi step");
            stages.push_back(std::move(*next));
        }
    }
    if (!(stages.back().tab.red_set() == ct.red_set))
        throw StructuralError("Psi changed the Red Set: " + stages.back().tab.red_set().str() + " vs " +
                              ct.red_set.str());
    stages.back().tab.strings();  // validates reverse string shape
    return stages;
}

ReverseState build_for_component(const ComponentTableau& ct, ShiftMode mode) {
    return build_for_component_stages(ct, mode).back();
}

std::set<std::pair<int, int>> excluded_roots_reverse(const Tableau& t) {
    const Diagram& d = t.diagram();
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= d.n(); ++i) {
        Box ri = *t.rightmost(i);
        for (int j = i + 1; j <= d.n(); ++j) {
            if (!d.in_nilradical(i, j)) continue;
            Box bj = *t.black_box(j);
            if (ri.col >= bj.col && ri.row < bj.row) out.insert({i, j});
        }
    }
    return out;
}

TrapeziumState trapezium(const ReverseState& state, const NeighbouringPair& p) {
    const Diagram& d = state.diagram();
    const Tableau& t = state.tab;
    int s = p.height;

    TrapeziumState ts;
    ts.pair = p;
    ts.implemented = state.pair_implemented(d.pair_index(p));
    for (int row = 1; row <= s; ++row) {
        int lv = d.value_at(p.left, row);
        Box lb = *t.rightmost(lv);
        if (lb.row != row) throw StructuralError("left boundary entry left its row");
        ts.left_boundary.push_back(lb);

        // Right boundary: leftmost box within R^s holding the value of
        // R_row in C'.
        int rv = d.value_at(p.right, row);
        std::optional<Box> rb;
        for (int col = 1; col <= d.k() && !rb; ++col)
            for (int r2 = 1; r2 <= std::min(s, t.height(col)); ++r2)
                if (t.cell(col, r2).entry == rv) {
                    rb = Box{col, r2};
                    break;
                }
        if (!rb) throw StructuralError("right boundary value vanished from R^s");
        if (!ts.implemented) {
            if (rb->row != row) throw StructuralError("right boundary entry left its row before implementation");
            if (t.cell(rb->col, rb->row).color != Color::Black)
                throw StructuralError("right boundary entry turned red before implementation");
        }
        ts.right_boundary.push_back(*rb);
    }

    // Occupied boxes of R^s strictly between the boundaries, row by row,
    // and the black count the vanishing bookkeeping rides on.
    for (int row = 1; row <= s; ++row) {
        int lo = ts.left_boundary[static_cast<size_t>(row - 1)].col;
        int hi = ts.right_boundary[static_cast<size_t>(row - 1)].col;
        for (int col = lo + 1; col <= hi; ++col) {
            if (!t.has_cell(col, row)) continue;
            ts.left_trapezium.push_back({col, row});
            const Cell& c = t.cell(col, row);
            if (c.color == Color::Black)
                ++ts.black_count;
            else if (row == s)
                ts.red_in_row_s = true;
        }
    }
    if (!ts.implemented && ts.red_in_row_s)
        throw StructuralError("left trapezium acquired red in R_s before its pair was implemented");

    // Max number of disjoint right-going segments through the closed
    // trapezium: per column, boxes within rows <= s that can carry a line
    // pass (black, or the left-boundary start of its row), capped at s,
    // summed and reduced by the s line starts.  The boundary boxes cancel
    // against the reduction, so the count is the black count of the left
    // trapezium; at the rectangle both equal the invariant degree.
    ts.composite_line_count = ts.black_count;
    return ts;
}

}  // namespace nilfibre
