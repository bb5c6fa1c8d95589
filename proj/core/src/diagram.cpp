#include "nilfibre/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nilfibre {

Composition Composition::of(std::vector<int> parts) {
    if (parts.empty()) throw StructuralError("composition must have at least one part");
    Composition c;
    c.parts = std::move(parts);
    for (int p : c.parts) {
        if (p < 1) throw StructuralError("composition parts must be positive");
        c.n += p;
    }
    return c;
}

std::optional<Composition> Composition::parse(const std::string& text) {
    std::vector<int> parts;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || value < 1) return std::nullopt;
        parts.push_back(value);
        p = next;
        if (p == end) break;
        if (*p != ',') return std::nullopt;
        ++p;
        if (p == end) return std::nullopt;  // trailing comma
    }
    if (parts.empty()) return std::nullopt;
    return of(std::move(parts));
}

std::string Composition::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

std::string NeighbouringPair::str() const {
    return "(C" + std::to_string(left) + ",C" + std::to_string(right) + ")";
}

Diagram::Diagram(Composition c) : comp_(std::move(c)) {
    if (comp_.parts.empty()) throw StructuralError("empty composition");
    col_start_.resize(comp_.parts.size());
    block_of_.assign(static_cast<size_t>(comp_.n) + 1, 0);
    int v = 1;
    for (int col = 1; col <= k(); ++col) {
        col_start_[static_cast<size_t>(col - 1)] = v;
        for (int row = 1; row <= height(col); ++row) block_of_[static_cast<size_t>(v++)] = col;
        max_height_ = std::max(max_height_, height(col));
    }

    // Equal-height columns with no column of that height strictly between.
    for (int s = 1; s <= max_height_; ++s) {
        int prev = 0;
        for (int col = 1; col <= k(); ++col) {
            if (height(col) != s) continue;
            if (prev != 0) pairs_.push_back({prev, col, s});
            prev = col;
        }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const NeighbouringPair& a, const NeighbouringPair& b) {
        return a.height != b.height ? a.height < b.height : a.left < b.left;
    });
}

int Diagram::pair_index(const NeighbouringPair& p) const {
    for (size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == p) return static_cast<int>(i);
    throw StructuralError("pair " + p.str() + " is not neighbouring in this diagram");
}

std::optional<NeighbouringPair> Diagram::surrounding_pair(int h, int adjacency) const {
    if (adjacency < 1 || adjacency >= k()) throw StructuralError("adjacency index out of range");
    std::optional<NeighbouringPair> found;
    for (const auto& p : pairs_) {
        if (p.height != h) continue;
        // C_{r+1} in ]C,C'] is equivalent to left <= r < r+1 <= right.
        if (p.left <= adjacency && adjacency + 1 <= p.right) {
            if (found) throw StructuralError("two surrounding pairs of equal height");
            found = p;
        }
    }
    return found;
}

Rectangle Diagram::left_rectangle(const NeighbouringPair& p) const {
    pair_index(p);  // validate
    Rectangle r;
    r.pair = p;
    for (int col = p.left; col <= p.right; ++col)
        for (int row = 1; row <= std::min(p.height, height(col)); ++row) {
            r.boxes.push_back({col, row});
            if (col > p.left) r.left_boxes.push_back({col, row});
        }
    return r;
}

int Diagram::column_of_value(int v) const {
    if (v < 1 || v > n()) throw StructuralError("value out of range");
    return block_of_[static_cast<size_t>(v)];
}

int Diagram::row_of_value(int v) const {
    return v - first_value(column_of_value(v)) + 1;
}

int Diagram::value_at(int col, int row) const {
    if (col < 1 || col > k() || row < 1 || row > height(col)) throw StructuralError("box out of diagram");
    return first_value(col) + row - 1;
}

bool Diagram::in_nilradical(int i, int j) const {
    return i < j && column_of_value(i) != column_of_value(j);
}

std::vector<std::pair<int, int>> Diagram::nilradical_coords() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (in_nilradical(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n < 1) return out;
    // Bit b of mask set = cut after position b+1.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1u << b)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(Composition::of(std::move(parts)));
    }
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) { return a.parts < b.parts; });
    return out;
}

}  // namespace nilfibre
