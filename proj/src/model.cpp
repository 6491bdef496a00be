#include "muig/model.hpp"

#include <algorithm>
#include <map>

namespace muig {

std::size_t Bubble::size() const {
    std::size_t s = 0;
    for (const auto& q : quadrants) s += q.size();
    return s;
}

std::size_t Bubble::right_closed_size() const { return (*this)[Quadrant::PP].size() + (*this)[Quadrant::MP].size(); }

std::size_t Bubble::left_closed_size() const { return (*this)[Quadrant::PP].size() + (*this)[Quadrant::PM].size(); }

namespace {

const Bubble& empty_bubble() {
    static const Bubble empty;
    return empty;
}

bool cell_before(const Column::Cell& c, std::size_t row) { return c.first < row; }

} // namespace

Column::Column(std::initializer_list<Bubble> bubbles) {
    for (const Bubble& b : bubbles) push_back(b);
}

Column::Column(std::size_t rows, std::vector<Cell> cells) : rows_(rows), cells_(std::move(cells)) {}

const Bubble& Column::operator[](std::size_t i) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), i, cell_before);
    return it != cells_.end() && it->first == i ? it->second : empty_bubble();
}

Bubble& Column::operator[](std::size_t i) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), i, cell_before);
    if (it == cells_.end() || it->first != i) it = cells_.insert(it, Cell{i, Bubble{}});
    rows_ = std::max(rows_, i + 1);
    return it->second;
}

void Column::resize(std::size_t rows) {
    rows_ = rows;
    cells_.erase(std::lower_bound(cells_.begin(), cells_.end(), rows, cell_before), cells_.end());
}

void Column::shift_down(std::size_t count) {
    rows_ += count;
    for (auto& c : cells_) c.first += count;
}

bool operator==(const Column& a, const Column& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [i, bubble] : a.cells_)
        if (!(b[i] == bubble)) return false;
    for (const auto& [i, bubble] : b.cells_)
        if (!(a[i] == bubble)) return false;
    return true;
}

std::size_t UBubbleModel::row_count() const {
    std::size_t r = 0;
    for (const auto& c : columns) r = std::max(r, c.size());
    return r;
}

std::size_t UBubbleModel::vertex_count() const {
    std::size_t n = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) n += column_size(j);
    return n;
}

std::size_t UBubbleModel::column_size(std::size_t j) const {
    std::size_t n = 0;
    for (const auto& [i, b] : columns[j].stored()) n += b.size();
    return n;
}

std::size_t UBubbleModel::top(std::size_t j) const {
    for (const auto& [i, b] : columns[j].stored())
        if (!b.empty()) return i;
    return columns[j].size();
}

std::vector<std::pair<VertexId, Placement>> placements(const UBubbleModel& model) {
    std::vector<std::pair<VertexId, Placement>> out;
    for (std::size_t j = 0; j < model.columns.size(); ++j)
        for (const auto& [i, b] : model.columns[j].stored())
            for (Quadrant q : kAllQuadrants)
                for (VertexId v : b[q]) out.push_back({v, Placement{j, i, q}});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool model_adjacent(const Placement& u, const Placement& v) {
    if (u.column == v.column) return true;
    const Placement& lo = u.column < v.column ? u : v;
    const Placement& hi = u.column < v.column ? v : u;
    if (hi.column != lo.column + 1) return false;
    if (lo.row > hi.row) return true;
    if (lo.row < hi.row) return false;
    return kind_of(lo.quadrant).right_closed && kind_of(hi.quadrant).left_closed;
}

Graph graph_of_model(const UBubbleModel& model) {
    std::vector<std::vector<std::pair<VertexId, Placement>>> by_column(model.columns.size());
    std::vector<VertexId> ids;
    for (const auto& [v, p] : placements(model)) {
        by_column[p.column].push_back({v, p});
        ids.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < by_column.size(); ++j) {
        const auto& here = by_column[j];
        for (std::size_t a = 0; a < here.size(); ++a)
            for (std::size_t b = a + 1; b < here.size(); ++b) edges.push_back(make_edge(here[a].first, here[b].first));
        if (j + 1 == by_column.size()) continue;
        for (const auto& [u, pu] : here)
            for (const auto& [v, pv] : by_column[j + 1])
                if (model_adjacent(pu, pv)) edges.push_back(make_edge(u, v));
    }
    return Graph(std::move(ids), std::move(edges));
}

std::string to_string(ModelCondition c) {
    switch (c) {
    case ModelCondition::NonemptyColumnsAndRows: return "ii";
    case ModelCondition::ColumnEndsNonempty: return "iii";
    case ModelCondition::TopsMonotone: return "iv";
    case ModelCondition::DisjointVertices: return "disjoint";
    }
    return "?";
}

std::vector<Violation> validate_model(const UBubbleModel& model) {
    std::vector<Violation> out;
    const std::size_t k = model.columns.size();
    if (k == 0) {
        out.push_back({ModelCondition::NonemptyColumnsAndRows, 0, 0, "model has no columns"});
        return out;
    }

    for (std::size_t j = 0; j < k; ++j) {
        const Column& col = model.columns[j];
        if (model.top(j) == col.size()) {
            out.push_back({ModelCondition::NonemptyColumnsAndRows, j + 1, 0,
                           "column " + std::to_string(j + 1) + " has no nonempty bubble"});
            continue;
        }
        if (col.back().empty())
            out.push_back({ModelCondition::ColumnEndsNonempty, j + 1, col.size(),
                           "column " + std::to_string(j + 1) + " ends with an empty bubble"});
    }

    const std::size_t rows = model.row_count();
    std::vector<bool> covered(rows, false);
    for (const auto& col : model.columns)
        for (const auto& [i, b] : col.stored())
            if (!b.empty()) covered[i] = true;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!covered[i])
            out.push_back({ModelCondition::NonemptyColumnsAndRows, 0, i + 1,
                           "row " + std::to_string(i + 1) + " has no nonempty bubble"});
    }

    // top(1) = 1 and top(j) <= top(j+1); columns without a nonempty bubble are already reported.
    std::size_t last_top = 0;
    bool first = true;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t t = model.top(j);
        if (t == model.columns[j].size()) continue;
        if (first && (j != 0 || t != 0))
            out.push_back({ModelCondition::TopsMonotone, j + 1, t + 1, "first column must start in row 1"});
        else if (!first && t < last_top)
            out.push_back({ModelCondition::TopsMonotone, j + 1, t + 1,
                           "top of column " + std::to_string(j + 1) + " is above the top of column " +
                               std::to_string(j)});
        first = false;
        last_top = t;
    }

    std::map<VertexId, int> seen;
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [i, b] : model.columns[j].stored())
            for (Quadrant q : kAllQuadrants)
                for (VertexId v : b[q])
                    if (++seen[v] == 2)
                        out.push_back({ModelCondition::DisjointVertices, j + 1, i + 1,
                                       "vertex " + std::to_string(v) + " appears more than once"});
    return out;
}

} // namespace muig
