#ifndef MUIG_MODEL_HPP
#define MUIG_MODEL_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "muig/graph.hpp"
#include "muig/interval.hpp"

namespace muig {

// One cell of the model. Quadrants are indexed by Quadrant.
struct Bubble {
    std::array<std::vector<VertexId>, 4> quadrants;

    std::vector<VertexId>& operator[](Quadrant q) { return quadrants[static_cast<int>(q)]; }
    const std::vector<VertexId>& operator[](Quadrant q) const { return quadrants[static_cast<int>(q)]; }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::size_t quadrant_size(Quadrant q) const { return (*this)[q].size(); }
    // |B^{*+}|: (+,+) and (-,+) members.
    std::size_t right_closed_size() const;
    // |B^{+*}|: (+,+) and (+,-) members.
    std::size_t left_closed_size() const;

    friend bool operator==(const Bubble&, const Bubble&) = default;
};

// Rows 0..size()-1 of one column, kept sparse as (row, bubble) cells sorted
// by row; rows without a cell are empty. Row indices are global, so a column
// holding a handful of bubbles may still span almost every row of the model.
class Column {
public:
    using Cell = std::pair<std::size_t, Bubble>;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Bubble;
        using difference_type = std::ptrdiff_t;
        using pointer = const Bubble*;
        using reference = const Bubble&;

        const_iterator() = default;
        const_iterator(const Column* col, std::size_t row) : col_(col), row_(row) {}
        reference operator*() const { return (*col_)[row_]; }
        pointer operator->() const { return &(*col_)[row_]; }
        const_iterator& operator++() {
            ++row_;
            return *this;
        }
        const_iterator operator++(int) {
            const_iterator old = *this;
            ++row_;
            return old;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.row_ == b.row_; }

    private:
        const Column* col_ = nullptr;
        std::size_t row_ = 0;
    };

    Column() = default;
    Column(std::initializer_list<Bubble> bubbles);
    // Cells must be sorted by row, each row below `rows`.
    Column(std::size_t rows, std::vector<Cell> cells);

    std::size_t size() const { return rows_; }
    bool empty() const { return rows_ == 0; }
    // Stored cells in row order; may include empty bubbles.
    const std::vector<Cell>& stored() const { return cells_; }

    const Bubble& operator[](std::size_t i) const;
    // Creates the cell when row i has none.
    Bubble& operator[](std::size_t i);
    const Bubble& back() const { return (*this)[rows_ - 1]; }
    Bubble& back() { return (*this)[rows_ - 1]; }

    void push_back(Bubble b) { cells_.emplace_back(rows_++, std::move(b)); }
    void resize(std::size_t rows);
    // Adds `count` empty rows on top.
    void shift_down(std::size_t count);

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, rows_}; }

    friend bool operator==(const Column& a, const Column& b);

private:
    std::size_t rows_ = 0;
    std::vector<Cell> cells_;
};

// Columns j = 0..k-1, each a dense list of rows i = 0..r_j-1 (0-based here;
// the text and JSON formats use 1-based rows and columns).
struct UBubbleModel {
    std::vector<Column> columns;

    std::size_t column_count() const { return columns.size(); }
    // max r_j
    std::size_t row_count() const;
    std::size_t vertex_count() const;
    std::size_t column_size(std::size_t j) const;
    // 0-based index of the first nonempty bubble in column j, or r_j if none.
    std::size_t top(std::size_t j) const;

    friend bool operator==(const UBubbleModel&, const UBubbleModel&) = default;
};

// Where a vertex sits in a model (0-based).
struct Placement {
    std::size_t column = 0;
    std::size_t row = 0;
    Quadrant quadrant = Quadrant::PP;
};

// Every vertex of the model with its placement, ordered by vertex id.
std::vector<std::pair<VertexId, Placement>> placements(const UBubbleModel& model);

// Adjacency rule of the model for two distinct placed vertices.
bool model_adjacent(const Placement& u, const Placement& v);

Graph graph_of_model(const UBubbleModel& model);

enum class ModelCondition {
    NonemptyColumnsAndRows, // (ii)
    ColumnEndsNonempty,     // (iii)
    TopsMonotone,           // (iv)
    DisjointVertices,
};

std::string to_string(ModelCondition c);

struct Violation {
    ModelCondition condition;
    // 1-based indices; 0 when not applicable.
    std::size_t column = 0;
    std::size_t row = 0;
    std::string message;
};

// Empty result iff the model satisfies every structural condition.
std::vector<Violation> validate_model(const UBubbleModel& model);

} // namespace muig

#endif // MUIG_MODEL_HPP
