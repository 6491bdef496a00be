#ifndef MUIG_MAXCUT_HPP
#define MUIG_MAXCUT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "muig/graph.hpp"
#include "muig/model.hpp"

namespace muig {

// Crossing edges between two mutually complete sets with s1/t1 and s2/t2
// cut/non-cut vertices: s1*t2 + t1*s2.
constexpr std::int64_t crossing(std::int64_t s1, std::int64_t t1, std::int64_t s2, std::int64_t t2) {
    return s1 * t2 + t1 * s2;
}

inline constexpr std::size_t kBruteForceLimit = 30;

// Exhaustive search over all cuts with one vertex pinned. Refuses graphs with
// more than kBruteForceLimit vertices (ValidationError).
std::size_t maxcut_bruteforce(const Graph& g);
std::size_t maxcut_bruteforce(const Graph& g, Cut& witness);

// A column of the model by 0-based index, or nullopt for a virtual empty
// column added at either end of the model.
using ColumnRef = std::optional<std::size_t>;

// Consecutive heavy columns with their two light borders. A part may hold no
// heavy column when two light columns are adjacent.
struct HeavyPart {
    ColumnRef border_left;
    ColumnRef border_right;
    std::vector<std::size_t> heavy_columns;
};

struct HeavyPartition {
    std::size_t threshold = 0;
    // Light columns C_0..C_p; parts[t] lies between light_columns[t] and [t+1].
    std::vector<ColumnRef> light_columns;
    std::vector<HeavyPart> parts;
};

// Column j is heavy iff its vertex count exceeds `threshold`.
HeavyPartition partition_heavy(const UBubbleModel& model, std::size_t threshold);

// ceil(sqrt(n)), the default heaviness threshold (at least 1).
std::size_t default_threshold(std::size_t n);

// Fixed cut of a light column as cut counts per row and quadrant. Quadrant
// members are true twins, so counts determine every cut value.
struct BorderCut {
    std::vector<std::array<std::uint32_t, 4>> counts;

    friend bool operator==(const BorderCut&, const BorderCut&) = default;
};

// Every border cut of a column (one empty cut for a virtual column), in
// lexicographic order of the flattened counts.
std::vector<BorderCut> enumerate_border_cuts(const UBubbleModel& model, ColumnRef column);

// Checks counts against quadrant sizes; throws ValidationError.
void validate_border_cut(const UBubbleModel& model, ColumnRef column, const BorderCut& cut);

// Lowest-id vertices realizing a border cut.
std::vector<VertexId> border_cut_members(const UBubbleModel& model, ColumnRef column, const BorderCut& cut);

struct PartValue {
    std::int64_t value = 0;
    std::optional<Cut> cut;  // filled when requested
};

// Maximum cut of the part's induced graph agreeing with the border cuts,
// border-internal edges included. Requires at least one heavy column.
PartValue heavy_part_maxcut(const UBubbleModel& model, const HeavyPart& part, const BorderCut& left,
                            const BorderCut& right, bool with_cut = false);

// Same quantity for a part without heavy columns, computed directly.
std::int64_t light_pair_value(const UBubbleModel& model, const HeavyPart& part, const BorderCut& left,
                              const BorderCut& right);

// One bubble slot of a part's DP (0-based global row and column).
struct DpSlot {
    std::size_t row = 0;
    std::size_t column = 0;
    // The previous slot is (same row, column - 1): the level term applies.
    bool level_with_previous = false;
    // The previous slot's column is column - 1, regardless of its row.
    bool previous_in_left_column = false;
};

// Slot order of a part: row by row top to bottom, left to right within a row,
// every (row, column) with row < r_j. The DP always includes empty bubbles;
// `include_empty = false` lists only the nonempty ones, for comparison.
std::vector<DpSlot> part_slots(const UBubbleModel& model, const HeavyPart& part, bool include_empty = true);

struct MaxCutOptions {
    std::size_t threshold = 0;  // 0 selects default_threshold(n)
    bool with_cut = false;
    unsigned parallel = 1;      // worker threads for border-cut enumeration
};

struct MaxCutResult {
    std::int64_t value = 0;
    std::optional<Cut> cut;
    std::size_t threshold = 0;
    std::size_t parts = 0;
};

// Exact maximum cut: light columns swept left to right, keeping for each
// border cut of the current light column the best value to its left.
MaxCutResult maxcut(const UBubbleModel& model, const MaxCutOptions& options = {});

// Whole model as one heavy part with empty borders; two-column models drop
// the quadrant distinctions that cannot matter.
MaxCutResult maxcut_bounded_columns(const UBubbleModel& model, bool with_cut = false);

// The six-vertex two-column model on which the published polynomial
// recurrence reports 8 although the maximum cut is 7. Vertex ids 1..6.
UBubbleModel counterexample_model();

struct CounterexampleReport {
    static constexpr std::int64_t kClaimedByFlawedAlgorithm = 8;

    std::size_t bruteforce = 0;
    std::int64_t dp = 0;
    std::int64_t bounded = 0;
    std::int64_t claimed = kClaimedByFlawedAlgorithm;
    std::optional<Cut> witness;       // DP witness when requested
    Cut example_cut;                  // {v1, v4, v5}
    std::size_t example_cut_size = 0;
};

CounterexampleReport counterexample(bool with_cut = false);

} // namespace muig

#endif // MUIG_MAXCUT_HPP
