#ifndef MUIG_BUBBLE_HPP
#define MUIG_BUBBLE_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "muig/interval.hpp"
#include "muig/model.hpp"

namespace muig {

// A construction invariant (numbered 1..6) failed during a debug build run.
class PropertyViolation : public std::logic_error {
public:
    PropertyViolation(int property, const std::string& detail)
        : std::logic_error("construction property " + std::to_string(property) + " violated: " + detail),
          property_(property) {}
    int property() const noexcept { return property_; }

private:
    int property_;
};

// Almost twins merged into one bubble, keyed by their common left endpoint.
struct MergedBubble {
    Rational left;
    Bubble content;

    Rational right() const { return left + Rational(1); }
};

// Groups intervals by left endpoint and returns the bubbles in increasing
// left order (the processing order sigma).
std::vector<MergedBubble> merge_almost_twins(const Representation& rep);

// Incremental state of the linear-time model construction. Bubbles are
// inserted one by one in sigma order into a path bracketed by virtual START
// and END nodes; arcs whose endpoints touch (r(A) = l(B)) carry the level
// mark L. Rows are read off the path at the end: +1 per arc, +0 across L.
class ConstructionState {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    explicit ConstructionState(std::vector<MergedBubble> sigma_ordered, bool check_properties = false);

    bool done() const { return processed_ == bubbles_.size(); }
    std::size_t processed() const { return processed_; }
    std::size_t bubble_count() const { return bubbles_.size(); }
    const MergedBubble& bubble(std::size_t b) const { return bubbles_[b]; }

    // Processes the next bubble in sigma order. With property checking on,
    // verifies properties 1-6 afterwards and throws PropertyViolation.
    void process_next();
    void run() {
        while (!done()) process_next();
    }

    // prev pointer of bubble b; npos stands for START.
    std::size_t prev(std::size_t b) const { return prev_[b]; }
    std::size_t column_of(std::size_t b) const { return column_[b]; }
    // Processed bubbles in path order, START and END excluded.
    std::vector<std::size_t> path() const;
    // True if the path arc leaving bubble b carries the level mark.
    bool level_after(std::size_t b) const { return level_[b]; }

    // 1-based rows of all processed bubbles, indexed by bubble.
    std::vector<std::size_t> rows() const;
    UBubbleModel to_model() const;

    void check_properties(const std::vector<std::size_t>& path_before) const;

private:
    void insert_after(std::size_t node, std::size_t b, bool level);

    std::vector<MergedBubble> bubbles_;
    bool check_;
    std::size_t processed_ = 0;
    std::size_t start_;
    std::size_t end_;
    std::vector<std::size_t> next_;  // indexed by node (bubbles, then START, END)
    std::vector<char> level_;        // arc node -> next_[node] carries L
    std::vector<std::size_t> prev_;  // per bubble, npos = START
    std::vector<std::size_t> column_;
    std::vector<std::size_t> tops_;  // first bubble of each column
};

struct BuildOptions {
    // Build each gap-separated chunk of the input separately and concatenate
    // the column ranges instead of one run over the whole sigma order.
    bool per_component = false;
    // Assert construction properties 1-6 after every insertion.
    bool debug_properties = false;
};

// Linear-time model construction from a representation.
UBubbleModel build_model(const Representation& rep, const BuildOptions& options = {});

// Inverse direction: vertex in bubble (row i, column j), 1-based, becomes the
// interval of its quadrant's kind with left end j + (i-1)/max_rows.
Representation model_to_intervals(const UBubbleModel& model);

// Maximum independent set size, greedy by right endpoints.
std::size_t compute_alpha(const Representation& rep);

// Maximum clique size read off two consecutive columns.
std::size_t max_clique(const UBubbleModel& model);

// (ceil(k/2), k): the range that contains alpha for a model with k columns.
std::pair<std::size_t, std::size_t> column_alpha_bounds(const UBubbleModel& model);

// Structural parameters and the clique-width upper bounds derived from them.
struct BoundsReport {
    std::size_t k = 0;     // columns
    std::size_t r = 0;     // max rows
    std::size_t alpha = 0;
    std::size_t omega = 0;
    std::size_t phi = 0;   // group number
    std::size_t columns_bound = 0;  // k + 3
    std::size_t rows_bound = 0;     // 2r + 2
    std::size_t alpha_bound = 0;    // 2 alpha + 3
    std::size_t groups_bound = 0;   // phi + 2
    std::size_t clique_bound = 0;   // omega + 1
    std::size_t best = 0;           // minimum of the bounds above
};

} // namespace muig

#endif // MUIG_BUBBLE_HPP
