#pragma once

/*
  Enumeration of the component tableaux of a diagram.

  The semi-standard tableau T(inf) evolves row by row.  During the sweep of
  row s each adjacency (C_r, C_{r+1}) is visited once, left to right, and
  the entry sitting at R_s in C_r either

    - moves horizontally when the first empty box of C_{r+1} is at R_s,
    - descends m >= 1 rows into the first empty box, provided free
      neighbouring pairs of heights s .. s+m-1 all surround the adjacency
      (an initial descent turns the lowest m boxes of C_{r+1} red; a later
      single-row descent adds one more line to the lowest red), or
    - is stopped, drawing a label-1 line to the highest entry of C_{r+1}
      exceeding it that is not already the target of a label-1 line.

  Descents are optional where admissible, so the enumeration branches;
  leaves are kept only when every neighbouring pair was consumed exactly
  once.  Distinct leaves carry distinct Red Sets (the red map is
  injective), which is asserted rather than assumed.
*/

#include <set>
#include <string>
#include <vector>

#include "nilfibre/tableau.hpp"

namespace nilfibre {

struct StarLine {
    int i = 0;           // descending entry
    int j = 0;           // red entry it points to
    Box from, to;        // box of i in T(inf), box of the red j
    int pair_index = -1; // neighbouring pair consumed by this line
    auto operator<=>(const StarLine&) const = default;
};

struct OneLine {
    int i = 0;  // stopped entry
    int j = 0;  // its target in the next column
    Box from, to;
    auto operator<=>(const OneLine&) const = default;
};

// Descent record of one column C_{r+1}: J is the set of red rows
// h-m+1..h, the bottom value j alone may carry multiplicity m'.
struct ColumnDescent {
    int column = 0;
    int h = 0;        // diagram height of the column
    int m = 0;        // |J| as a set
    int m_prime = 1;  // multiplicity of the bottom red value
    int j_value = 0;  // value at row h
    std::vector<int> j_values_bottom_up;  // values at rows h, h-1, ..., h-m+1
    std::vector<int> pairs_bottom_up;     // pair index consumed per row, same order
    std::vector<int> extra_pairs;         // pairs of the m'-1 further descents, in order
};

struct ComponentTableau {
    DiagramPtr diagram;
    Tableau infinity;
    std::vector<ColumnDescent> per_column;  // ordered by column
    std::vector<StarLine> lines_star;
    std::vector<OneLine> lines_one;
    std::vector<int> used_pair_order;       // consumption order of pair indices
    std::vector<std::string> choice_trace;
    RedSet red_set;

    ComponentTableau() : infinity(nullptr, Provenance::ComponentInfinity) {}

    Tableau collapsed() const;  // T itself; the lines carry the decoration
    std::set<std::pair<int, int>> star_coords() const;  // Y
    std::set<std::pair<int, int>> one_coords() const;   // S
    const ColumnDescent* descent_of_column(int col) const;
};

struct ComponentEnumeration {
    std::vector<ComponentTableau> tableaux;  // sorted by Red Set
    // Branches abandoned because a stopped entry had no admissible target;
    // expected to stay zero, surfaced in tests.
    int stuck_branches = 0;
};

ComponentEnumeration enumerate_component_tableaux(DiagramPtr diagram);

// Red-map injectivity on one diagram: distinct completed tableaux must have
// distinct Red Set multisets.
bool check_red_map_injective(DiagramPtr diagram);

// The auxiliary tableau of a star line (i,j): the initial tableau with a
// black j placed directly under i, lower column parts shifted left to make
// room (columns shorter than i's row skipped), the original j turned red.
Tableau component_auxiliary_tableau(const ComponentTableau& ct, const StarLine& line);

// Excluded roots of a component tableau: union over star lines of the
// excluded roots of their auxiliary tableaux.
std::set<std::pair<int, int>> excluded_roots_component(const ComponentTableau& ct);

// The total order on the Red Set (columns left to right, upwards within a
// column, the multiple copies of the bottom value first) and the complete
// sequence of neighbouring pairs it induces.
struct RedOrderEntry {
    int value = 0;
    int column = 0;
    int row = 0;
    int pair_index = -1;
};
struct RedOrder {
    std::vector<RedOrderEntry> entries;
    std::vector<NeighbouringPair> sequence;
};
RedOrder red_order(const ComponentTableau& ct);

}  // namespace nilfibre
