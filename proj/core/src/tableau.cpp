#include "nilfibre/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace nilfibre {

int RedSet::cardinality() const {
    int c = 0;
    for (auto& [v, m] : mult) c += m;
    return c;
}

std::vector<int> RedSet::flatten() const {
    std::vector<int> out;
    for (auto& [v, m] : mult)
        for (int i = 0; i < m; ++i) out.push_back(v);
    return out;
}

std::string RedSet::str() const {
    std::ostringstream s;
    s << '(';
    bool first = true;
    for (int v : flatten()) {
        if (!first) s << ',';
        s << v;
        first = false;
    }
    s << ')';
    return s.str();
}

RedSet RedSet::of(std::vector<int> values) {
    RedSet r;
    for (int v : values) r.add(v);
    return r;
}

Tableau::Tableau(DiagramPtr diagram, Provenance prov) : diag_(std::move(diagram)), prov_(prov) {
    cols_.resize(static_cast<size_t>(diag_->k()));
}

Tableau Tableau::initial(DiagramPtr diagram) {
    Tableau t(diagram, Provenance::Base);
    for (int col = 1; col <= diagram->k(); ++col)
        for (int row = 1; row <= diagram->height(col); ++row)
            t.push_cell(col, {diagram->value_at(col, row), Color::Black});
    return t;
}

int Tableau::max_height() const {
    int h = 0;
    for (const auto& c : cols_) h = std::max<int>(h, static_cast<int>(c.size()));
    return h;
}

int Tableau::black_height(int col) const {
    const auto& c = cols_.at(static_cast<size_t>(col - 1));
    for (int row = static_cast<int>(c.size()); row >= 1; --row)
        if (c[static_cast<size_t>(row - 1)].color == Color::Black) return row;
    return 0;
}

bool Tableau::has_cell(int col, int row) const {
    if (col < 1 || col > column_count() || row < 1) return false;
    return row <= height(col);
}

const Cell& Tableau::cell(int col, int row) const {
    if (!has_cell(col, row)) throw StructuralError("no cell at requested box");
    return cols_[static_cast<size_t>(col - 1)][static_cast<size_t>(row - 1)];
}

void Tableau::push_cell(int col, Cell c) {
    cols_.at(static_cast<size_t>(col - 1)).push_back(c);
}

void Tableau::set_cell(int col, int row, Cell c) {
    if (!has_cell(col, row)) throw StructuralError("no cell at requested box");
    cols_[static_cast<size_t>(col - 1)][static_cast<size_t>(row - 1)] = c;
}

void Tableau::recolor(int col, int row, Color color) {
    if (!has_cell(col, row)) throw StructuralError("no cell at requested box");
    cols_[static_cast<size_t>(col - 1)][static_cast<size_t>(row - 1)].color = color;
}

Cell Tableau::take_cell(int col, int row) {
    auto& c = cols_.at(static_cast<size_t>(col - 1));
    if (row != static_cast<int>(c.size())) throw StructuralError("take_cell only removes column bottoms");
    Cell out = c.back();
    c.pop_back();
    return out;
}

std::optional<Box> Tableau::rightmost(int value) const {
    for (int col = column_count(); col >= 1; --col) {
        const auto& c = cols_[static_cast<size_t>(col - 1)];
        for (int row = 1; row <= static_cast<int>(c.size()); ++row)
            if (c[static_cast<size_t>(row - 1)].entry == value) return Box{col, row};
    }
    return std::nullopt;
}

std::optional<Box> Tableau::black_box(int value) const {
    std::optional<Box> found;
    for (int col = 1; col <= column_count(); ++col) {
        const auto& c = cols_[static_cast<size_t>(col - 1)];
        for (int row = 1; row <= static_cast<int>(c.size()); ++row) {
            const Cell& cell = c[static_cast<size_t>(row - 1)];
            if (cell.entry == value && cell.color == Color::Black) {
                if (found) throw StructuralError("two black cells share value " + std::to_string(value));
                found = Box{col, row};
            }
        }
    }
    return found;
}

std::vector<Box> Tableau::boxes_of(int value) const {
    std::vector<Box> out;
    for (int col = column_count(); col >= 1; --col) {
        const auto& c = cols_[static_cast<size_t>(col - 1)];
        for (int row = 1; row <= static_cast<int>(c.size()); ++row)
            if (c[static_cast<size_t>(row - 1)].entry == value) out.push_back(Box{col, row});
    }
    return out;
}

bool Tableau::is_standard_with_multiplicities() const {
    // Strict increase down columns.
    for (int col = 1; col <= column_count(); ++col)
        for (int row = 2; row <= height(col); ++row)
            if (cell(col, row).entry <= cell(col, row - 1).entry) return false;
    // Strict increase along rows, across occupied boxes left to right.
    int rows = max_height();
    for (int row = 1; row <= rows; ++row) {
        int prev = 0;
        for (int col = 1; col <= column_count(); ++col) {
            if (!has_cell(col, row)) continue;
            int e = cell(col, row).entry;
            if (prev != 0 && e <= prev) return false;
            prev = e;
        }
    }
    return true;
}

RedSet Tableau::red_set() const {
    RedSet r;
    for (int col = 1; col <= column_count(); ++col)
        for (int row = 1; row <= height(col); ++row)
            if (cell(col, row).color == Color::Red) r.add(cell(col, row).entry);
    return r;
}

std::map<int, std::vector<Box>> Tableau::strings() const {
    std::map<int, std::vector<Box>> out;
    for (int v = 1; v <= diag_->n(); ++v) {
        auto boxes = boxes_of(v);
        if (boxes.empty()) continue;
        if (prov_ == Provenance::Reverse) {
            // Reverse j-string: rightmost first, one row down per leftward
            // step, black exactly at the leftmost cell.
            for (size_t i = 0; i < boxes.size(); ++i) {
                const Box& b = boxes[i];
                if (b.row != boxes[0].row + static_cast<int>(i))
                    throw StructuralError("reverse string of " + std::to_string(v) + " skips a row");
                if (i + 1 < boxes.size() && boxes[i + 1].col >= b.col)
                    throw StructuralError("reverse string of " + std::to_string(v) + " does not move left");
                bool black = cell(b.col, b.row).color == Color::Black;
                if (black != (i + 1 == boxes.size()))
                    throw StructuralError("reverse string of " + std::to_string(v) + " miscolored");
            }
        }
        out.emplace(v, std::move(boxes));
    }
    return out;
}

static std::string cell_text(const Cell& c) {
    return (c.color == Color::Red ? "r" : "") + std::to_string(c.entry);
}

std::string Tableau::render(RenderMode mode) const {
    if (mode == RenderMode::Json) {
        nlohmann::ordered_json j;
        j["shape"] = {{"parts", diag_->composition().parts}, {"n", diag_->n()}};
        switch (prov_) {
            case Provenance::Base: j["provenance"] = "base"; break;
            case Provenance::ComponentInfinity: j["provenance"] = "component-infinity"; break;
            case Provenance::ComponentCollapsed: j["provenance"] = "component-collapsed"; break;
            case Provenance::Reverse: j["provenance"] = "reverse"; break;
        }
        auto cells = nlohmann::ordered_json::array();
        for (int col = 1; col <= column_count(); ++col)
            for (int row = 1; row <= height(col); ++row)
                cells.push_back({{"col", col},
                                 {"row", row},
                                 {"entry", cell(col, row).entry},
                                 {"color", cell(col, row).color == Color::Red ? "red" : "black"}});
        j["cells"] = cells;
        return j.dump(2) + "\n";
    }

    int rows = max_height();
    if (mode == RenderMode::Latex) {
        std::ostringstream s;
        s << "\\begin{array}{" << std::string(static_cast<size_t>(column_count()), 'c') << "}\n";
        for (int col = 1; col <= column_count(); ++col) s << (col > 1 ? " & " : "") << "C_" << col;
        s << " \\\\ \\hline\n";
        for (int row = 1; row <= rows; ++row) {
            for (int col = 1; col <= column_count(); ++col) {
                if (col > 1) s << " & ";
                if (has_cell(col, row)) {
                    const Cell& c = cell(col, row);
                    if (c.color == Color::Red)
                        s << "\\textcolor{red}{" << c.entry << "}";
                    else
                        s << c.entry;
                }
            }
            s << " \\\\\n";
        }
        s << "\\end{array}\n";
        return s.str();
    }

    // Text grid, '|' separated, red entries prefixed 'r'.
    size_t width = 2;
    for (int col = 1; col <= column_count(); ++col)
        for (int row = 1; row <= height(col); ++row) width = std::max(width, cell_text(cell(col, row)).size());
    auto pad = [&](std::string s) {
        while (s.size() < width) s.insert(s.begin(), ' ');
        return s;
    };
    std::ostringstream s;
    std::string rowlabel = "R" + std::to_string(std::max(rows, 1));
    size_t lwidth = rowlabel.size();
    s << std::string(lwidth, ' ');
    for (int col = 1; col <= column_count(); ++col) s << '|' << pad("C" + std::to_string(col));
    s << '\n';
    for (int row = 1; row <= rows; ++row) {
        std::string label = "R" + std::to_string(row);
        label.append(lwidth - label.size(), ' ');
        s << label;
        for (int col = 1; col <= column_count(); ++col)
            s << '|' << pad(has_cell(col, row) ? cell_text(cell(col, row)) : "");
        s << '\n';
    }
    return s.str();
}

Tableau Tableau::from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto comp = Composition::of(j.at("shape").at("parts").get<std::vector<int>>());
    Provenance prov = Provenance::Base;
    std::string p = j.value("provenance", "base");
    if (p == "component-infinity") prov = Provenance::ComponentInfinity;
    else if (p == "component-collapsed") prov = Provenance::ComponentCollapsed;
    else if (p == "reverse") prov = Provenance::Reverse;
    Tableau t(make_diagram(comp), prov);
    for (const auto& c : j.at("cells")) {
        int col = c.at("col").get<int>();
        int row = c.at("row").get<int>();
        Cell cell{c.at("entry").get<int>(), c.at("color").get<std::string>() == "red" ? Color::Red : Color::Black};
        if (row != t.height(col) + 1) throw StructuralError("tableau json cells out of order");
        t.push_cell(col, cell);
    }
    return t;
}

}  // namespace nilfibre
