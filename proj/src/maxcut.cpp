#include "muig/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "muig/error.hpp"

namespace muig {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
constexpr std::size_t kMaxLayerStates = std::size_t{1} << 27;
constexpr std::size_t kMaxBorderCuts = std::size_t{1} << 24;

using Counts = std::array<std::uint32_t, 4>;

const Column* column_ptr(const UBubbleModel& model, ColumnRef ref) {
    if (!ref) return nullptr;
    if (*ref >= model.columns.size()) throw ValidationError("column reference out of range");
    return &model.columns[*ref];
}

std::int64_t sum(const Counts& c) { return std::int64_t{c[0]} + c[1] + c[2] + c[3]; }

std::int64_t internal_value(const Column* col, const BorderCut& cut) {
    if (!col) return 0;
    std::int64_t s = 0, total = 0;
    for (std::size_t i = 0; i < col->size(); ++i) {
        s += sum(cut.counts[i]);
        total += static_cast<std::int64_t>((*col)[i].size());
    }
    return s * (total - s);
}

// Left border seen from the first heavy column, for rows 0..rows-1.
struct LeftStats {
    std::vector<std::int64_t> below_cut, below_total;  // border rows strictly below r
    std::vector<std::int64_t> rc_cut, rc_total;        // border row r, right-closed quadrants
};

// Right border seen from the last heavy column.
struct RightStats {
    std::vector<std::int64_t> above_cut, above_total;  // border rows strictly above r
    std::vector<std::int64_t> lc_cut, lc_total;        // border row r, left-closed quadrants
};

LeftStats left_stats(const Column* col, const BorderCut& cut, std::size_t rows) {
    LeftStats s;
    s.below_cut.assign(rows, 0);
    s.below_total.assign(rows, 0);
    s.rc_cut.assign(rows, 0);
    s.rc_total.assign(rows, 0);
    if (!col) return s;
    const std::size_t h = col->size();
    std::vector<std::int64_t> suffix_cut(h + 1, 0), suffix_total(h + 1, 0);
    for (std::size_t i = h; i-- > 0;) {
        suffix_cut[i] = suffix_cut[i + 1] + sum(cut.counts[i]);
        suffix_total[i] = suffix_total[i + 1] + static_cast<std::int64_t>((*col)[i].size());
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (r + 1 <= h) {
            s.below_cut[r] = suffix_cut[r + 1];
            s.below_total[r] = suffix_total[r + 1];
        }
        if (r < h) {
            const Counts& c = cut.counts[r];
            s.rc_cut[r] = std::int64_t{c[0]} + c[2];
            s.rc_total[r] = static_cast<std::int64_t>((*col)[r].right_closed_size());
        }
    }
    return s;
}

RightStats right_stats(const Column* col, const BorderCut& cut, std::size_t rows) {
    RightStats s;
    s.above_cut.assign(rows, 0);
    s.above_total.assign(rows, 0);
    s.lc_cut.assign(rows, 0);
    s.lc_total.assign(rows, 0);
    if (!col) return s;
    const std::size_t h = col->size();
    std::int64_t acc_cut = 0, acc_total = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        s.above_cut[r] = acc_cut;
        s.above_total[r] = acc_total;
        if (r < h) {
            const Counts& c = cut.counts[r];
            s.lc_cut[r] = std::int64_t{c[0]} + c[1];
            s.lc_total[r] = static_cast<std::int64_t>((*col)[r].left_closed_size());
            acc_cut += sum(c);
            acc_total += static_cast<std::int64_t>((*col)[r].size());
        }
    }
    return s;
}

std::vector<std::int64_t> key_of(const LeftStats& s) {
    std::vector<std::int64_t> k = s.below_cut;
    k.insert(k.end(), s.rc_cut.begin(), s.rc_cut.end());
    return k;
}

std::vector<std::int64_t> key_of(const RightStats& s) {
    std::vector<std::int64_t> k = s.above_cut;
    k.insert(k.end(), s.lc_cut.begin(), s.lc_cut.end());
    return k;
}

// Cut edges between two consecutive columns given their cuts (no internal edges).
std::int64_t light_cross(const Column* left, const BorderCut& lc, const Column* right, const BorderCut& rc) {
    if (!left || !right) return 0;
    std::int64_t value = 0;
    std::int64_t above_cut = 0, above_total = 0;  // right column, rows < i
    for (std::size_t i = 0; i < left->size(); ++i) {
        const std::int64_t cut = sum(lc.counts[i]);
        const std::int64_t total = static_cast<std::int64_t>((*left)[i].size());
        value += crossing(cut, total - cut, above_cut, above_total - above_cut);
        if (i < right->size()) {
            const Counts& a = lc.counts[i];
            const Counts& b = rc.counts[i];
            const std::int64_t a_cut = std::int64_t{a[0]} + a[2];
            const std::int64_t a_total = static_cast<std::int64_t>((*left)[i].right_closed_size());
            const std::int64_t b_cut = std::int64_t{b[0]} + b[1];
            const std::int64_t b_total = static_cast<std::int64_t>((*right)[i].left_closed_size());
            value += crossing(a_cut, a_total - a_cut, b_cut, b_total - b_cut);
            above_cut += sum(b);
            above_total += static_cast<std::int64_t>((*right)[i].size());
        }
    }
    return value;
}

std::vector<VertexId> smallest_ids(const std::vector<VertexId>& ids, std::size_t count) {
    std::vector<VertexId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.resize(count);
    return sorted;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers; each index is
// handled by exactly one worker, so results written per index are identical
// for every thread count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// DP over the bubble slots of one heavy part.
class PartDp {
public:
    PartDp(const UBubbleModel& model, const HeavyPart& part);

    std::size_t left_rows() const { return heights_.front(); }
    std::size_t right_rows() const { return heights_.back(); }

    // Best cut value of the heavy columns plus their edges to the borders;
    // border-internal edges excluded. Fills per-slot quadrant counts of an
    // optimal cut when `witness` is given.
    std::int64_t run(const LeftStats& left, const RightStats& right, std::vector<Counts>* witness) const;

    std::vector<VertexId> members(const std::vector<Counts>& witness) const;

private:
    struct Choice {
        Counts x;
        std::int64_t b, lc, rc, within;
    };
    struct Slot {
        std::size_t row, c;
        bool level;
        std::int64_t size, lc_total, rc_total, prev_rc_total;
        std::int64_t above_same, above_next;  // processed sizes of columns c and c+1
        std::vector<Choice> choices;
    };

    const UBubbleModel& model_;
    std::vector<std::size_t> columns_;
    std::vector<std::size_t> heights_;
    std::vector<std::int64_t> caps_;
    std::vector<std::size_t> stride_;
    std::size_t a_radix_ = 1;
    std::size_t total_ = 1;
    std::vector<Slot> slots_;
};

PartDp::PartDp(const UBubbleModel& model, const HeavyPart& part) : model_(model), columns_(part.heavy_columns) {
    if (columns_.empty()) throw std::invalid_argument("heavy part without heavy columns");
    const std::size_t l = columns_.size();
    std::size_t rows = 0;
    for (std::size_t j : columns_) {
        if (j >= model.columns.size()) throw ValidationError("column reference out of range");
        heights_.push_back(model.columns[j].size());
        caps_.push_back(static_cast<std::int64_t>(model.column_size(j)));
        rows = std::max(rows, model.columns[j].size());
    }

    std::int64_t max_rc = 0;
    std::vector<std::int64_t> processed(l, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < l; ++c) {
            if (r >= heights_[c]) continue;
            const Bubble& bubble = model.columns[columns_[c]][r];
            Slot s;
            s.row = r;
            s.c = c;
            s.level = !slots_.empty() && slots_.back().row == r && slots_.back().c + 1 == c;
            s.size = static_cast<std::int64_t>(bubble.size());
            s.lc_total = static_cast<std::int64_t>(bubble.left_closed_size());
            s.rc_total = static_cast<std::int64_t>(bubble.right_closed_size());
            s.prev_rc_total = slots_.empty() ? 0 : slots_.back().rc_total;
            s.above_same = processed[c];
            s.above_next = c + 1 < l ? processed[c + 1] : 0;
            max_rc = std::max(max_rc, s.rc_total);

            Counts q;
            for (int k = 0; k < 4; ++k) q[k] = static_cast<std::uint32_t>(bubble.quadrants[k].size());
            for (std::uint32_t x0 = 0; x0 <= q[0]; ++x0)
                for (std::uint32_t x1 = 0; x1 <= q[1]; ++x1)
                    for (std::uint32_t x2 = 0; x2 <= q[2]; ++x2)
                        for (std::uint32_t x3 = 0; x3 <= q[3]; ++x3) {
                            Choice ch;
                            ch.x = {x0, x1, x2, x3};
                            ch.b = std::int64_t{x0} + x1 + x2 + x3;
                            ch.lc = std::int64_t{x0} + x1;
                            ch.rc = std::int64_t{x0} + x2;
                            ch.within = ch.b * (s.size - ch.b);
                            s.choices.push_back(ch);
                        }
            processed[c] += s.size;
            slots_.push_back(std::move(s));
        }
    }

    // Mixed radix index: a lowest, then s_1..s_l.
    a_radix_ = static_cast<std::size_t>(max_rc) + 1;
    total_ = a_radix_;
    stride_.resize(l);
    for (std::size_t c = 0; c < l; ++c) {
        stride_[c] = total_;
        const auto radix = static_cast<std::size_t>(caps_[c]) + 1;
        if (total_ > kMaxLayerStates / radix) throw std::length_error("DP layer too large for this heavy part");
        total_ *= radix;
    }
}

std::int64_t PartDp::run(const LeftStats& left, const RightStats& right, std::vector<Counts>* witness) const {
    struct Back {
        Counts x;
        std::uint32_t z;
    };
    auto better = [](const Counts& x, std::uint32_t z, const Back& b) {
        if (x != b.x) return x < b.x;
        return z < b.z;
    };

    const std::size_t l = columns_.size();
    std::vector<std::int64_t> cur(total_, kNegInf), next(total_, kNegInf);
    std::vector<std::size_t> cur_list{0}, next_list;
    cur[0] = 0;
    std::vector<Back> next_back;
    std::vector<std::vector<std::pair<std::size_t, Back>>> backs;
    if (witness) {
        next_back.resize(total_);
        backs.resize(slots_.size());
    }

    std::vector<std::int64_t> extra;
    for (std::size_t si = 0; si < slots_.size(); ++si) {
        const Slot& s = slots_[si];
        const std::size_t r = s.row;
        const std::size_t c = s.c;

        extra.assign(s.choices.size(), 0);
        for (std::size_t k = 0; k < s.choices.size(); ++k) {
            const Choice& ch = s.choices[k];
            std::int64_t e = ch.within;
            if (c == 0) {
                e += crossing(ch.b, s.size - ch.b, left.below_cut[r], left.below_total[r] - left.below_cut[r]);
                e += crossing(left.rc_cut[r], left.rc_total[r] - left.rc_cut[r], ch.lc, s.lc_total - ch.lc);
            }
            if (c + 1 == l) {
                e += crossing(ch.b, s.size - ch.b, right.above_cut[r], right.above_total[r] - right.above_cut[r]);
                e += crossing(ch.rc, s.rc_total - ch.rc, right.lc_cut[r], right.lc_total[r] - right.lc_cut[r]);
            }
            extra[k] = e;
        }

        const bool has_next = c + 1 < l;
        const std::size_t radix_c = static_cast<std::size_t>(caps_[c]) + 1;
        const std::size_t radix_n = has_next ? static_cast<std::size_t>(caps_[c + 1]) + 1 : 1;
        for (std::size_t idx : cur_list) {
            const std::int64_t v = cur[idx];
            const auto z = static_cast<std::int64_t>(idx % a_radix_);
            const auto sc = static_cast<std::int64_t>((idx / stride_[c]) % radix_c);
            const auto sn = has_next ? static_cast<std::int64_t>((idx / stride_[c + 1]) % radix_n) : 0;
            const std::size_t base = idx - static_cast<std::size_t>(z);
            for (std::size_t k = 0; k < s.choices.size(); ++k) {
                const Choice& ch = s.choices[k];
                const std::int64_t nb = s.size - ch.b;
                std::int64_t val = v + extra[k] + crossing(ch.b, nb, sc, s.above_same - sc);
                if (has_next) val += crossing(ch.b, nb, sn, s.above_next - sn);
                if (s.level) val += crossing(z, s.prev_rc_total - z, ch.lc, s.lc_total - ch.lc);
                const std::size_t nidx = base + static_cast<std::size_t>(ch.b) * stride_[c] + static_cast<std::size_t>(ch.rc);
                if (next[nidx] == kNegInf) {
                    next_list.push_back(nidx);
                    next[nidx] = val;
                    if (witness) next_back[nidx] = {ch.x, static_cast<std::uint32_t>(z)};
                } else if (val > next[nidx] ||
                           (witness && val == next[nidx] && better(ch.x, static_cast<std::uint32_t>(z), next_back[nidx]))) {
                    next[nidx] = val;
                    if (witness) next_back[nidx] = {ch.x, static_cast<std::uint32_t>(z)};
                }
            }
        }

        if (witness) {
            auto& list = backs[si];
            list.reserve(next_list.size());
            for (std::size_t idx : next_list) list.emplace_back(idx, next_back[idx]);
            std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        for (std::size_t idx : cur_list) cur[idx] = kNegInf;
        std::swap(cur, next);
        std::swap(cur_list, next_list);
        next_list.clear();
    }

    std::size_t best_idx = 0;
    std::int64_t best = kNegInf;
    for (std::size_t idx : cur_list)
        if (cur[idx] > best || (cur[idx] == best && idx < best_idx)) {
            best = cur[idx];
            best_idx = idx;
        }

    if (witness) {
        witness->assign(slots_.size(), Counts{});
        std::size_t idx = best_idx;
        for (std::size_t si = slots_.size(); si-- > 0;) {
            const auto& list = backs[si];
            auto it = std::lower_bound(list.begin(), list.end(), idx,
                                       [](const auto& e, std::size_t key) { return e.first < key; });
            if (it == list.end() || it->first != idx) throw std::logic_error("DP backtrack lost its state");
            const Back& b = it->second;
            (*witness)[si] = b.x;
            const std::size_t bsum = std::size_t{b.x[0]} + b.x[1] + b.x[2] + b.x[3];
            const std::size_t rc = std::size_t{b.x[0]} + b.x[2];
            idx = idx - rc - bsum * stride_[slots_[si].c] + b.z;
        }
        if (idx != 0) throw std::logic_error("DP backtrack did not reach the seed");
    }
    return best;
}

std::vector<VertexId> PartDp::members(const std::vector<Counts>& witness) const {
    std::vector<VertexId> out;
    for (std::size_t si = 0; si < slots_.size(); ++si) {
        const Bubble& bubble = model_.columns[columns_[slots_[si].c]][slots_[si].row];
        for (int q = 0; q < 4; ++q) {
            auto ids = smallest_ids(bubble.quadrants[q], witness[si][q]);
            out.insert(out.end(), ids.begin(), ids.end());
        }
    }
    return out;
}

} // namespace

std::size_t maxcut_bruteforce(const Graph& g) {
    Cut unused;
    return maxcut_bruteforce(g, unused);
}

std::size_t maxcut_bruteforce(const Graph& g, Cut& witness) {
    const std::size_t n = g.n();
    if (n > kBruteForceLimit)
        throw ValidationError("brute-force MaxCut refuses graphs with more than " + std::to_string(kBruteForceLimit) +
                              " vertices");
    witness = Cut{};
    if (n <= 1) return 0;

    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.neighbors(i)) adj[i] |= std::uint32_t{1} << j;

    // Gray code over the first n-1 vertices; the last one stays outside S.
    const std::uint32_t all = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    std::uint32_t s = 0, best_mask = 0;
    std::int64_t value = 0, best = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = std::countr_zero(k);
        const std::uint32_t in_s = adj[v] & s;
        const std::uint32_t out_s = adj[v] & ~s & all;
        if (s >> v & 1u)
            value += std::popcount(in_s) - std::popcount(out_s);
        else
            value += std::popcount(out_s) - std::popcount(in_s);
        s ^= std::uint32_t{1} << v;
        if (value > best) {
            best = value;
            best_mask = s;
        }
    }

    std::vector<VertexId> members;
    for (std::size_t i = 0; i < n; ++i)
        if (best_mask >> i & 1u) members.push_back(g.vertices()[i]);
    witness = Cut(std::move(members));
    return static_cast<std::size_t>(best);
}

std::size_t default_threshold(std::size_t n) {
    std::size_t t = 1;
    while (t * t < n) ++t;
    return t;
}

HeavyPartition partition_heavy(const UBubbleModel& model, std::size_t threshold) {
    if (threshold == 0) throw ValidationError("threshold must be positive");
    HeavyPartition out;
    out.threshold = threshold;
    std::vector<std::size_t> pending;
    for (std::size_t j = 0; j < model.columns.size(); ++j) {
        if (model.column_size(j) > threshold) {
            if (out.light_columns.empty()) out.light_columns.push_back(std::nullopt);
            pending.push_back(j);
            continue;
        }
        if (!out.light_columns.empty())
            out.parts.push_back(HeavyPart{out.light_columns.back(), j, std::move(pending)});
        pending.clear();
        out.light_columns.push_back(j);
    }
    if (!pending.empty()) {
        out.parts.push_back(HeavyPart{out.light_columns.back(), std::nullopt, std::move(pending)});
        out.light_columns.push_back(std::nullopt);
    }
    return out;
}

std::vector<BorderCut> enumerate_border_cuts(const UBubbleModel& model, ColumnRef column) {
    const Column* col = column_ptr(model, column);
    if (!col) return {BorderCut{}};

    std::vector<std::uint32_t> sizes;
    std::size_t count = 1;
    for (const Bubble& b : *col)
        for (const auto& q : b.quadrants) {
            sizes.push_back(static_cast<std::uint32_t>(q.size()));
            if (count > kMaxBorderCuts / (q.size() + 1)) throw std::length_error("too many border cuts for a light column");
            count *= q.size() + 1;
        }

    std::vector<BorderCut> out;
    out.reserve(count);
    std::vector<std::uint32_t> digits(sizes.size(), 0);
    for (std::size_t k = 0; k < count; ++k) {
        BorderCut cut;
        cut.counts.resize(col->size());
        for (std::size_t d = 0; d < digits.size(); ++d) cut.counts[d / 4][d % 4] = digits[d];
        out.push_back(std::move(cut));
        // Increment, last digit fastest.
        for (std::size_t d = digits.size(); d-- > 0;) {
            if (digits[d] < sizes[d]) {
                ++digits[d];
                break;
            }
            digits[d] = 0;
        }
    }
    return out;
}

void validate_border_cut(const UBubbleModel& model, ColumnRef column, const BorderCut& cut) {
    const Column* col = column_ptr(model, column);
    const std::size_t rows = col ? col->size() : 0;
    if (cut.counts.size() != rows)
        throw ValidationError("border cut has " + std::to_string(cut.counts.size()) + " rows, column has " +
                              std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (int q = 0; q < 4; ++q)
            if (cut.counts[i][q] > (*col)[i].quadrants[q].size())
                throw ValidationError("border cut count exceeds quadrant size in row " + std::to_string(i + 1));
}

std::vector<VertexId> border_cut_members(const UBubbleModel& model, ColumnRef column, const BorderCut& cut) {
    validate_border_cut(model, column, cut);
    std::vector<VertexId> out;
    const Column* col = column_ptr(model, column);
    if (!col) return out;
    for (std::size_t i = 0; i < col->size(); ++i)
        for (int q = 0; q < 4; ++q) {
            auto ids = smallest_ids((*col)[i].quadrants[q], cut.counts[i][q]);
            out.insert(out.end(), ids.begin(), ids.end());
        }
    return out;
}

PartValue heavy_part_maxcut(const UBubbleModel& model, const HeavyPart& part, const BorderCut& left,
                            const BorderCut& right, bool with_cut) {
    validate_border_cut(model, part.border_left, left);
    validate_border_cut(model, part.border_right, right);
    const Column* lcol = column_ptr(model, part.border_left);
    const Column* rcol = column_ptr(model, part.border_right);
    PartDp dp(model, part);

    std::vector<Counts> witness;
    PartValue out;
    out.value = dp.run(left_stats(lcol, left, dp.left_rows()), right_stats(rcol, right, dp.right_rows()),
                       with_cut ? &witness : nullptr) +
                internal_value(lcol, left) + internal_value(rcol, right);
    if (with_cut) {
        std::vector<VertexId> members = dp.members(witness);
        for (const auto& [ref, cut] : {std::pair{part.border_left, &left}, std::pair{part.border_right, &right}}) {
            auto ids = border_cut_members(model, ref, *cut);
            members.insert(members.end(), ids.begin(), ids.end());
        }
        out.cut = Cut(std::move(members));
    }
    return out;
}

std::int64_t light_pair_value(const UBubbleModel& model, const HeavyPart& part, const BorderCut& left,
                              const BorderCut& right) {
    if (!part.heavy_columns.empty()) throw std::invalid_argument("light pair part holds heavy columns");
    validate_border_cut(model, part.border_left, left);
    validate_border_cut(model, part.border_right, right);
    const Column* lcol = column_ptr(model, part.border_left);
    const Column* rcol = column_ptr(model, part.border_right);
    return internal_value(lcol, left) + internal_value(rcol, right) + light_cross(lcol, left, rcol, right);
}

std::vector<DpSlot> part_slots(const UBubbleModel& model, const HeavyPart& part, bool include_empty) {
    std::vector<DpSlot> out;
    std::size_t rows = 0;
    for (std::size_t j : part.heavy_columns) rows = std::max(rows, model.columns.at(j).size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < part.heavy_columns.size(); ++c) {
            const std::size_t j = part.heavy_columns[c];
            if (r >= model.columns[j].size()) continue;
            if (!include_empty && model.columns[j][r].empty()) continue;
            DpSlot s{r, j, false, false};
            if (!out.empty()) {
                s.previous_in_left_column = out.back().column + 1 == j;
                s.level_with_previous = s.previous_in_left_column && out.back().row == r;
            }
            out.push_back(s);
        }
    return out;
}

MaxCutResult maxcut(const UBubbleModel& model, const MaxCutOptions& options) {
    MaxCutResult result;
    result.threshold = options.threshold ? options.threshold : default_threshold(model.vertex_count());
    const HeavyPartition hp = partition_heavy(model, result.threshold);
    result.parts = hp.parts.size();
    if (hp.light_columns.empty()) {
        if (options.with_cut) result.cut = Cut{};
        return result;
    }

    const std::size_t p = hp.parts.size();
    std::vector<std::vector<BorderCut>> cuts(p + 1);
    cuts[0] = enumerate_border_cuts(model, hp.light_columns[0]);
    std::vector<std::int64_t> best(cuts[0].size());
    {
        const Column* col = column_ptr(model, hp.light_columns[0]);
        for (std::size_t i = 0; i < cuts[0].size(); ++i) best[i] = internal_value(col, cuts[0][i]);
    }
    std::vector<std::vector<std::size_t>> arg(p);

    for (std::size_t t = 0; t < p; ++t) {
        const HeavyPart& part = hp.parts[t];
        cuts[t + 1] = enumerate_border_cuts(model, hp.light_columns[t + 1]);
        const auto& lcuts = cuts[t];
        const auto& rcuts = cuts[t + 1];
        const Column* lcol = column_ptr(model, part.border_left);
        const Column* rcol = column_ptr(model, part.border_right);
        std::vector<std::int64_t> next(rcuts.size(), kNegInf);
        arg[t].assign(rcuts.size(), 0);

        if (part.heavy_columns.empty()) {
            parallel_for(rcuts.size(), options.parallel, [&](std::size_t j) {
                std::int64_t top = kNegInf;
                std::size_t who = 0;
                for (std::size_t i = 0; i < lcuts.size(); ++i) {
                    const std::int64_t v = best[i] + light_cross(lcol, lcuts[i], rcol, rcuts[j]);
                    if (v > top) {
                        top = v;
                        who = i;
                    }
                }
                next[j] = top + internal_value(rcol, rcuts[j]);
                arg[t][j] = who;
            });
        } else {
            const PartDp dp(model, part);
            // Only the border rows next to heavy slots matter, so border cuts
            // collapse into profiles; run the DP once per profile pair.
            std::vector<LeftStats> lstats;
            std::vector<std::int64_t> lbest;
            std::vector<std::size_t> lwho;
            {
                std::map<std::vector<std::int64_t>, std::size_t> index;
                for (std::size_t i = 0; i < lcuts.size(); ++i) {
                    LeftStats s = left_stats(lcol, lcuts[i], dp.left_rows());
                    auto [it, fresh] = index.try_emplace(key_of(s), lstats.size());
                    if (fresh) {
                        lstats.push_back(std::move(s));
                        lbest.push_back(best[i]);
                        lwho.push_back(i);
                    } else if (best[i] > lbest[it->second]) {
                        lbest[it->second] = best[i];
                        lwho[it->second] = i;
                    }
                }
            }
            std::vector<RightStats> rstats;
            std::vector<std::size_t> rkey(rcuts.size());
            {
                std::map<std::vector<std::int64_t>, std::size_t> index;
                for (std::size_t j = 0; j < rcuts.size(); ++j) {
                    RightStats s = right_stats(rcol, rcuts[j], dp.right_rows());
                    auto [it, fresh] = index.try_emplace(key_of(s), rstats.size());
                    if (fresh) rstats.push_back(std::move(s));
                    rkey[j] = it->second;
                }
            }

            std::vector<std::int64_t> kval(rstats.size(), kNegInf);
            std::vector<std::size_t> kwho(rstats.size(), 0);
            parallel_for(rstats.size(), options.parallel, [&](std::size_t kr) {
                for (std::size_t kl = 0; kl < lstats.size(); ++kl) {
                    const std::int64_t v = lbest[kl] + dp.run(lstats[kl], rstats[kr], nullptr);
                    if (v > kval[kr]) {
                        kval[kr] = v;
                        kwho[kr] = lwho[kl];
                    }
                }
            });
            for (std::size_t j = 0; j < rcuts.size(); ++j) {
                next[j] = kval[rkey[j]] + internal_value(rcol, rcuts[j]);
                arg[t][j] = kwho[rkey[j]];
            }
        }
        best = std::move(next);
    }

    std::size_t pick = 0;
    for (std::size_t j = 1; j < best.size(); ++j)
        if (best[j] > best[pick]) pick = j;
    result.value = best[pick];

    if (options.with_cut) {
        std::vector<std::size_t> chosen(p + 1);
        chosen[p] = pick;
        for (std::size_t t = p; t-- > 0;) chosen[t] = arg[t][chosen[t + 1]];
        std::vector<VertexId> members;
        for (std::size_t t = 0; t <= p; ++t) {
            auto ids = border_cut_members(model, hp.light_columns[t], cuts[t][chosen[t]]);
            members.insert(members.end(), ids.begin(), ids.end());
        }
        for (std::size_t t = 0; t < p; ++t) {
            const HeavyPart& part = hp.parts[t];
            if (part.heavy_columns.empty()) continue;
            const PartDp dp(model, part);
            std::vector<Counts> witness;
            dp.run(left_stats(column_ptr(model, part.border_left), cuts[t][chosen[t]], dp.left_rows()),
                   right_stats(column_ptr(model, part.border_right), cuts[t + 1][chosen[t + 1]], dp.right_rows()),
                   &witness);
            auto ids = dp.members(witness);
            members.insert(members.end(), ids.begin(), ids.end());
        }
        result.cut = Cut(std::move(members));
    }
    return result;
}

MaxCutResult maxcut_bounded_columns(const UBubbleModel& model, bool with_cut) {
    MaxCutResult result;
    result.parts = 1;
    result.threshold = 0;
    if (model.columns.empty()) {
        if (with_cut) result.cut = Cut{};
        return result;
    }

    UBubbleModel work = model;
    if (work.columns.size() == 2) {
        // Column 1 only meets column 2 through its right signs, column 2
        // only meets column 1 through its left signs.
        auto merge = [](std::vector<VertexId>& into, std::vector<VertexId>& from) {
            into.insert(into.end(), from.begin(), from.end());
            from.clear();
        };
        for (std::size_t i = 0; i < work.columns[0].size(); ++i) {
            Bubble& b = work.columns[0][i];
            merge(b[Quadrant::PP], b[Quadrant::MP]);
            merge(b[Quadrant::PM], b[Quadrant::MM]);
        }
        for (std::size_t i = 0; i < work.columns[1].size(); ++i) {
            Bubble& b = work.columns[1][i];
            merge(b[Quadrant::PP], b[Quadrant::PM]);
            merge(b[Quadrant::MM], b[Quadrant::MP]);
        }
    }

    HeavyPart part{std::nullopt, std::nullopt, {}};
    for (std::size_t j = 0; j < work.columns.size(); ++j) part.heavy_columns.push_back(j);
    PartValue v = heavy_part_maxcut(work, part, BorderCut{}, BorderCut{}, with_cut);
    result.value = v.value;
    result.cut = std::move(v.cut);
    return result;
}

UBubbleModel counterexample_model() {
    auto single = [](std::vector<VertexId> ids) {
        Bubble b;
        b[Quadrant::PM] = std::move(ids);
        return b;
    };
    UBubbleModel m;
    m.columns = {{single({1}), single({2})}, {single({3, 4, 5}), single({6})}};
    return m;
}

CounterexampleReport counterexample(bool with_cut) {
    const UBubbleModel model = counterexample_model();
    const Graph g = graph_of_model(model);
    CounterexampleReport report;
    report.bruteforce = maxcut_bruteforce(g);
    MaxCutOptions opts;
    opts.with_cut = with_cut;
    MaxCutResult dp = maxcut(model, opts);
    report.dp = dp.value;
    report.witness = std::move(dp.cut);
    report.bounded = maxcut_bounded_columns(model).value;
    report.example_cut = Cut({1, 4, 5});
    report.example_cut_size = cut_size(g, report.example_cut);
    return report;
}

} // namespace muig
