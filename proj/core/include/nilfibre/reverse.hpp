#pragma once

/*
  Reverse tableaux, built from the initial tableau by implementing a
  complete sequence of neighbouring pairs.

  Implementing a pair (C,C') of height s on a state R:

    - the left boundary column C^- is the column holding the rightmost copy
      of the value originally at R_s in C (that copy always stays in R_s);
    - S is the set of columns of [C^-, C'] of current height >= s and black
      height <= s; the Enabling Proposition says at most the leftmost of
      them has black height < s, and then height exactly s;
    - any non-leftmost column of S may be chosen: its lowest black entry j
      (in R_s) is recoloured red and a black j is inserted at R_{s+1} of
      the first column of height >= s strictly to its left (Substitution);
    - if that box is occupied, lower parts of columns, strictly below R_s,
      shift one slot left in unison, skipping columns of height < s
      (Shifting); extreme shifting also skips columns of height exactly s
      where possible;
    - hidden rule: the choice is legal only when the original box of j lies
      in [C,C'], otherwise the branch is rejected.

  The map Psi rebuilds, for each component tableau, a reverse tableau with
  the same Red Set by implementing the pairs in the order induced by the
  total order on the Red Set.
*/

#include <optional>
#include <set>
#include <vector>

#include "nilfibre/component.hpp"
#include "nilfibre/tableau.hpp"

namespace nilfibre {

enum class ShiftMode { Standard, Extreme };

struct ReverseState {
    Tableau tab;
    std::vector<int> implemented;  // pair indices, in implementation order

    explicit ReverseState(DiagramPtr d) : tab(Tableau::initial(d)) { tab.set_provenance(Provenance::Reverse); }
    const Diagram& diagram() const { return tab.diagram(); }
    bool pair_implemented(int pair_index) const;
};

struct EligibleSet {
    NeighbouringPair pair;
    int cminus = 0;             // left boundary column
    std::vector<int> columns;   // S, ascending
    std::vector<int> choices;   // S minus its leftmost column
};

// Computes C^-, S and the choices, asserting the Enabling Proposition.
EligibleSet eligible_set(const ReverseState& state, const NeighbouringPair& p);

// One implementation step.  Returns nullopt when the hidden rule rejects
// the choice (the original box of the entry lies outside [C,C']).
std::optional<ReverseState> implement_pair(const ReverseState& state, const NeighbouringPair& p,
                                           int choice_col, ShiftMode mode = ShiftMode::Standard);

struct RejectedBranch {
    int step = 0;               // position in the sequence
    NeighbouringPair pair;
    int choice_col = 0;
    std::string reason;         // "hidden-rule"
    RedSet would_be_red_set;
};

struct ReverseEnumeration {
    std::vector<ReverseState> leaves;
    std::vector<RejectedBranch> rejected;
};

// All branches over the choices at each step of the sequence; every leaf
// has implemented each pair exactly once.
ReverseEnumeration enumerate_reverse(DiagramPtr d, const std::vector<NeighbouringPair>& sequence,
                                     ShiftMode mode = ShiftMode::Standard);

// The map Psi: the reverse tableau of a component tableau, built along the
// Red-Set-induced sequence.  Every intermediate state is returned, the
// completed state last; states.size() == g+1.
std::vector<ReverseState> build_for_component_stages(const ComponentTableau& ct,
                                                     ShiftMode mode = ShiftMode::Standard);
ReverseState build_for_component(const ComponentTableau& ct, ShiftMode mode = ShiftMode::Standard);

// x_{i,j} with i<j in distinct blocks is excluded when the rightmost copy
// of i sits strictly above the black j, in its column or further right.
std::set<std::pair<int, int>> excluded_roots_reverse(const Tableau& reverse_tab);

struct TrapeziumState {
    NeighbouringPair pair;
    bool implemented = false;
    std::vector<Box> left_boundary;    // rows 1..s
    std::vector<Box> right_boundary;   // rows 1..s
    std::vector<Box> left_trapezium;   // occupied boxes of R^s cap ]B,B']
    int black_count = 0;               // black boxes of the left trapezium
    bool red_in_row_s = false;         // red box in R_s cap ]B,B']
    int composite_line_count = 0;      // max disjoint line segments, degree at the rectangle
};

// Boundaries and counts of the trapezium of `p` at the current state.
// While p is unimplemented the right boundary is asserted black and
// row-preserving, and R_s of the left trapezium asserted free of red.
TrapeziumState trapezium(const ReverseState& state, const NeighbouringPair& p);

}  // namespace nilfibre
