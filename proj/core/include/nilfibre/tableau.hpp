#pragma once

/*
  Colored tableaux over a diagram shape.

  A tableau stores one vector of cells per column, filled contiguously from
  row 1; columns may grow below their diagram height (component tableaux
  grow to the right and down, reverse tableaux skew entries to the left),
  so current heights are tracked independently of the base diagram.

  Cells are black or red.  Red marks the repeated entries that make up the
  Red Set; in a completed reverse tableau every value has exactly one black
  cell and its boxes form a reverse string stepping one row down per
  leftward hop, the rightmost cells red.
*/

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilfibre/diagram.hpp"

namespace nilfibre {

enum class Color : std::uint8_t { Black, Red };

struct Cell {
    int entry = 0;
    Color color = Color::Black;
    auto operator<=>(const Cell&) const = default;
};

enum class Provenance : std::uint8_t {
    Base,
    ComponentInfinity,
    ComponentCollapsed,
    Reverse,
};

// Multiset of red entries.  Equality ignores presentation order; str()
// lists values in ascending order with multiplicity.
struct RedSet {
    std::map<int, int> mult;

    void add(int value, int count = 1) { mult[value] += count; }
    int cardinality() const;
    std::vector<int> flatten() const;  // ascending, with multiplicity
    std::string str() const;           // "(7,8,8,11)"
    bool empty() const { return mult.empty(); }
    bool operator==(const RedSet&) const = default;
    bool operator<(const RedSet& o) const { return flatten() < o.flatten(); }

    static RedSet of(std::vector<int> values);
};

enum class RenderMode { Text, Latex, Json };

class Tableau {
public:
    Tableau(DiagramPtr diagram, Provenance prov);
    static Tableau initial(DiagramPtr diagram);

    const Diagram& diagram() const { return *diag_; }
    DiagramPtr diagram_ptr() const { return diag_; }
    Provenance provenance() const { return prov_; }
    void set_provenance(Provenance p) { prov_ = p; }

    int column_count() const { return static_cast<int>(cols_.size()); }
    int height(int col) const { return static_cast<int>(cols_.at(static_cast<size_t>(col - 1)).size()); }
    int max_height() const;
    // Row of the lowest black cell, 0 when the column has no black entry.
    int black_height(int col) const;
    bool has_cell(int col, int row) const;
    const Cell& cell(int col, int row) const;
    const std::vector<Cell>& column(int col) const { return cols_.at(static_cast<size_t>(col - 1)); }

    void push_cell(int col, Cell c);
    void set_cell(int col, int row, Cell c);
    void recolor(int col, int row, Color color);
    Cell take_cell(int col, int row);  // removes the bottom cell of a column

    // Rightmost box holding `value` (any color); at most one per column.
    std::optional<Box> rightmost(int value) const;
    // The box of the unique black cell with this value, if any.
    std::optional<Box> black_box(int value) const;
    std::vector<Box> boxes_of(int value) const;  // ordered rightmost first

    bool is_standard_with_multiplicities() const;
    RedSet red_set() const;

    // Per value, its cells ordered rightmost first.  For reverse provenance
    // the shape is validated: one box per row, strictly leftward steps of
    // exactly one row down, the unique black cell last.
    std::map<int, std::vector<Box>> strings() const;

    std::string render(RenderMode mode) const;
    static Tableau from_json_text(const std::string& text);

    bool same_cells(const Tableau& other) const { return cols_ == other.cols_; }
    bool operator==(const Tableau& other) const { return cols_ == other.cols_ && prov_ == other.prov_; }
    // Total order on cell content, for deterministic keying of states.
    std::vector<std::vector<Cell>> cells() const { return cols_; }

private:
    DiagramPtr diag_;
    Provenance prov_;
    std::vector<std::vector<Cell>> cols_;
};

}  // namespace nilfibre
