#pragma once

/*
  Diagrams attached to a composition (c_1,...,c_k) of n.

  The diagram has k columns, column r having height c_r, boxes indexed
  (col,row) with both indices starting at 1 and rows growing downwards.
  Filling the boxes with 1..n down columns and then left to right makes
  column r a block of consecutive integers; that block structure is also
  what splits the n x n matrix into Levi blocks, so the diagram doubles
  as the index book for matrix coordinates x_{i,j}.

  Two columns of equal height s are neighbouring when no column of height
  s lies strictly between them.  Each such pair carries one invariant
  generator, of degree equal to the size of the left rectangle
  R^s \cap ]C,C'].
*/

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilfibre {

struct StructuralError : std::logic_error {
    explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

struct Composition {
    std::vector<int> parts;
    int n = 0;

    static Composition of(std::vector<int> parts);
    // Parses a comma-separated list, "1,2,3,1,1,3,2".  Returns nullopt on
    // malformed input or a non-positive part.
    static std::optional<Composition> parse(const std::string& text);

    int k() const { return static_cast<int>(parts.size()); }
    std::string str() const;
    bool operator==(const Composition&) const = default;
};

struct Box {
    int col = 0;
    int row = 0;
    auto operator<=>(const Box&) const = default;
};

struct NeighbouringPair {
    int left = 0;
    int right = 0;
    int height = 0;
    auto operator<=>(const NeighbouringPair&) const = default;
    std::string str() const;  // "(C2,C4)"
};

struct Rectangle {
    NeighbouringPair pair;
    std::vector<Box> boxes;       // R^s ∩ [C,C']
    std::vector<Box> left_boxes;  // R^s ∩ ]C,C']
    int degree() const { return static_cast<int>(left_boxes.size()); }
};

class Diagram {
public:
    explicit Diagram(Composition c);

    const Composition& composition() const { return comp_; }
    int k() const { return comp_.k(); }
    int n() const { return comp_.n; }
    int height(int col) const { return comp_.parts.at(static_cast<size_t>(col - 1)); }
    int max_height() const { return max_height_; }

    // Pairs listed by increasing height, then increasing left column.
    const std::vector<NeighbouringPair>& pairs() const { return pairs_; }
    int g() const { return static_cast<int>(pairs_.size()); }
    int pair_index(const NeighbouringPair& p) const;

    // The unique height-s neighbouring pair (C,C') with C_{r+1} in ]C,C']
    // (then both C_r, C_{r+1} lie in [C,C']), or absent.
    std::optional<NeighbouringPair> surrounding_pair(int height, int adjacency) const;

    Rectangle left_rectangle(const NeighbouringPair& p) const;

    // Geometry of the initial filling: value -> box and back.
    int column_of_value(int v) const;
    int row_of_value(int v) const;
    Box box_of_value(int v) const { return {column_of_value(v), row_of_value(v)}; }
    int value_at(int col, int row) const;
    int first_value(int col) const { return col_start_.at(static_cast<size_t>(col - 1)); }

    // x_{i,j} lies in the nilradical iff i < j and the two values sit in
    // distinct Levi blocks (distinct columns of the initial filling).
    bool in_nilradical(int i, int j) const;
    std::vector<std::pair<int, int>> nilradical_coords() const;

private:
    Composition comp_;
    std::vector<int> col_start_;   // first value of each column
    std::vector<int> block_of_;    // value (1-based) -> column
    std::vector<NeighbouringPair> pairs_;
    int max_height_ = 0;
};

using DiagramPtr = std::shared_ptr<const Diagram>;

inline DiagramPtr make_diagram(Composition c) {
    return std::make_shared<const Diagram>(std::move(c));
}

// All 2^{n-1} compositions of n, in lexicographic order.
std::vector<Composition> all_compositions(int n);

}  // namespace nilfibre
