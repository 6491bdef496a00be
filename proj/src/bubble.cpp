#include "muig/bubble.hpp"

#include <algorithm>
#include <map>

namespace muig {

std::vector<MergedBubble> merge_almost_twins(const Representation& rep) {
    rep.validate();
    std::vector<const UnitInterval*> order;
    order.reserve(rep.intervals.size());
    for (const auto& iv : rep.intervals) order.push_back(&iv);
    std::sort(order.begin(), order.end(), [](const UnitInterval* a, const UnitInterval* b) {
        if (a->left != b->left) return a->left < b->left;
        return a->vertex < b->vertex;
    });

    std::vector<MergedBubble> out;
    for (const UnitInterval* iv : order) {
        if (out.empty() || out.back().left != iv->left) out.push_back(MergedBubble{iv->left, {}});
        out.back().content[quadrant_of(iv->kind)].push_back(iv->vertex);
    }
    return out;
}

ConstructionState::ConstructionState(std::vector<MergedBubble> sigma_ordered, bool check_properties)
    : bubbles_(std::move(sigma_ordered)), check_(check_properties) {
    const std::size_t m = bubbles_.size();
    start_ = m;
    end_ = m + 1;
    next_.assign(m + 2, npos);
    level_.assign(m + 2, 0);
    column_.assign(m, npos);
    next_[start_] = end_;

    // prev(B): the bubble ending exactly at l(B) if any, otherwise the last
    // bubble ending strictly before l(B), otherwise START.
    prev_.assign(m, npos);
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (p < i && bubbles_[p].right() <= bubbles_[i].left) ++p;
        if (p > 0) prev_[i] = p - 1;
    }
}

void ConstructionState::insert_after(std::size_t node, std::size_t b, bool level) {
    next_[b] = next_[node];
    level_[b] = 0;
    next_[node] = b;
    level_[node] = level ? 1 : 0;
}

void ConstructionState::process_next() {
    std::vector<std::size_t> before;
    if (check_) before = path();

    const std::size_t i = processed_;
    const MergedBubble& bi = bubbles_[i];
    if (i == 0) {
        column_[0] = 0;
        tops_.push_back(0);
        insert_after(start_, 0, false);
    } else {
        const std::size_t curr = tops_.size() - 1;
        const Rational top_right = bubbles_[tops_[curr]].right();
        bool placed = false;
        if (bi.left > top_right) {
            column_[i] = curr + 1;
            tops_.push_back(i);
        } else if (bi.left == top_right) {
            column_[i] = curr + 1;
            tops_.push_back(i);
            insert_after(tops_[curr], i, true);
            placed = true;
        } else {
            column_[i] = curr;
        }

        if (!placed) {
            const std::size_t p = prev_[i];
            if (p != npos && bubbles_[p].right() == bi.left)
                insert_after(p, i, true);
            else if (prev_[i - 1] == p)
                insert_after(i - 1, i, false);
            else
                insert_after(p == npos ? start_ : p, i, false);
        }
    }
    ++processed_;
    if (check_) check_properties(before);
}

std::vector<std::size_t> ConstructionState::path() const {
    std::vector<std::size_t> out;
    for (std::size_t node = next_[start_]; node != end_; node = next_[node]) out.push_back(node);
    return out;
}

void ConstructionState::check_properties(const std::vector<std::size_t>& path_before) const {
    const std::vector<std::size_t> now = path();

    // 1: exactly the first `processed_` bubbles are on the path.
    {
        std::vector<std::size_t> sorted = now;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != k) throw PropertyViolation(1, "path holds an out-of-order bubble");
        if (sorted.size() != processed_) throw PropertyViolation(1, "path size differs from processed count");
    }
    // 2: the previous path is the current one with the new bubble removed.
    {
        std::vector<std::size_t> without;
        for (std::size_t b : now)
            if (b + 1 != processed_) without.push_back(b);
        if (without != path_before) throw PropertyViolation(2, "relative path order changed");
    }
    // 3: L on arc (A,B) iff r(A) = l(B); L arcs go to a later column.
    {
        if (level_[start_]) throw PropertyViolation(3, "level mark on the arc leaving START");
        for (std::size_t k = 0; k < now.size(); ++k) {
            std::size_t a = now[k];
            bool touching = k + 1 < now.size() && bubbles_[a].right() == bubbles_[now[k + 1]].left;
            if (static_cast<bool>(level_[a]) != touching)
                throw PropertyViolation(3, "level mark disagrees with endpoints at bubble " + std::to_string(a));
            if (touching && column_[a] >= column_[now[k + 1]])
                throw PropertyViolation(3, "level arc does not advance the column");
        }
    }
    // 4: columns are monotone along sigma.
    for (std::size_t b = 1; b < processed_; ++b)
        if (column_[b] < column_[b - 1]) throw PropertyViolation(4, "column decreases at bubble " + std::to_string(b));
    // 5 and 6: prev is the closest path ancestor in the previous column, and
    // within a column the path order is sigma order.
    {
        std::map<std::size_t, std::size_t> last_in_column;
        for (std::size_t b : now) {
            const std::size_t c = column_[b];
            if (prev_[b] == npos) {
                if (c != 0) throw PropertyViolation(5, "START-prev bubble outside column 1");
            } else {
                auto it = last_in_column.find(c - 1);
                if (c == 0 || it == last_in_column.end() || it->second != prev_[b])
                    throw PropertyViolation(5, "prev pointer of bubble " + std::to_string(b) + " is not its ancestor");
            }
            auto here = last_in_column.find(c);
            if (here != last_in_column.end() && here->second > b)
                throw PropertyViolation(6, "path order within column " + std::to_string(c + 1) + " differs from sigma");
            last_in_column[c] = b;
        }
    }
}

std::vector<std::size_t> ConstructionState::rows() const {
    std::vector<std::size_t> row(bubbles_.size(), 0);
    std::size_t current = 0;  // START sits in row 0
    std::size_t node = start_;
    while (next_[node] != end_) {
        const std::size_t b = next_[node];
        if (!level_[node]) ++current;
        row[b] = current;
        node = b;
    }
    return row;
}

UBubbleModel ConstructionState::to_model() const {
    const std::vector<std::size_t> row = rows();
    UBubbleModel model;
    std::vector<std::vector<Column::Cell>> cells(tops_.size());
    for (std::size_t b = 0; b < processed_; ++b) cells[column_[b]].emplace_back(row[b] - 1, bubbles_[b].content);
    for (auto& c : cells) {
        std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        const std::size_t rows = c.empty() ? 0 : c.back().first + 1;
        model.columns.emplace_back(rows, std::move(c));
    }
    return model;
}

UBubbleModel build_model(const Representation& rep, const BuildOptions& options) {
    std::vector<MergedBubble> sigma = merge_almost_twins(rep);
    if (!options.per_component) {
        ConstructionState state(std::move(sigma), options.debug_properties);
        state.run();
        return state.to_model();
    }

    // Split where the next bubble starts strictly after the previous one ends:
    // nothing on the left can touch anything on the right.
    UBubbleModel out;
    std::size_t first = 0;
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
        if (i < sigma.size() && sigma[i].left <= sigma[i - 1].right()) continue;
        std::vector<MergedBubble> chunk(sigma.begin() + static_cast<std::ptrdiff_t>(first),
                                        sigma.begin() + static_cast<std::ptrdiff_t>(i));
        ConstructionState state(std::move(chunk), options.debug_properties);
        state.run();
        UBubbleModel part = state.to_model();
        // Shift below the last column so the two ranges stay non-adjacent.
        const std::size_t offset = out.columns.empty() ? 0 : out.columns.back().size();
        for (auto& col : part.columns) {
            col.shift_down(offset);
            out.columns.push_back(std::move(col));
        }
        first = i;
    }
    return out;
}

Representation model_to_intervals(const UBubbleModel& model) {
    Representation rep;
    const auto rows = static_cast<std::int64_t>(model.row_count());
    if (rows == 0) return rep;
    for (std::size_t j = 0; j < model.columns.size(); ++j)
        for (const auto& [i, b] : model.columns[j].stored()) {
            const Rational left = Rational(static_cast<std::int64_t>(j + 1)) + Rational(static_cast<std::int64_t>(i), rows);
            for (Quadrant q : kAllQuadrants)
                for (VertexId v : b[q]) rep.intervals.push_back(UnitInterval{v, left, kind_of(q)});
        }
    std::sort(rep.intervals.begin(), rep.intervals.end(),
              [](const UnitInterval& a, const UnitInterval& b) { return a.vertex < b.vertex; });
    return rep;
}

std::size_t compute_alpha(const Representation& rep) {
    // Endpoint keys on the line refined by infinitesimals: an open right end
    // sits just before its coordinate, an open left end just after it.
    struct Keyed {
        Rational start;
        int start_shift;
        Rational end;
        int end_shift;
    };
    std::vector<Keyed> items;
    items.reserve(rep.intervals.size());
    for (const auto& iv : rep.intervals)
        items.push_back({iv.left, iv.kind.left_closed ? 0 : 1, iv.right(), iv.kind.right_closed ? 0 : -1});
    std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) {
        if (a.end != b.end) return a.end < b.end;
        return a.end_shift < b.end_shift;
    });

    std::size_t count = 0;
    const Keyed* last = nullptr;
    for (const auto& it : items) {
        bool disjoint = !last || last->end < it.start || (last->end == it.start && last->end_shift < it.start_shift);
        if (disjoint) {
            ++count;
            last = &it;
        }
    }
    return count;
}

std::size_t max_clique(const UBubbleModel& model) {
    const std::size_t k = model.columns.size();
    if (k == 0) return 0;
    if (k == 1) return model.column_size(0);

    std::size_t best = 0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const Column& left = model.columns[j];
        const Column& right = model.columns[j + 1];
        // below[i] = vertices of the left column in rows > i.
        std::vector<std::size_t> below(left.size() + 1, 0);
        for (std::size_t i = left.size(); i-- > 0;) below[i] = below[i + 1] + left[i].size();
        std::size_t above = 0;  // right column, rows < i
        for (std::size_t i = 0; i < right.size(); ++i) {
            std::size_t split = right[i].size();
            std::size_t lower = 0;
            if (i < left.size()) {
                split = std::max({left[i].size(), right[i].size(),
                                  left[i].right_closed_size() + right[i].left_closed_size()});
                lower = below[i + 1];
            }
            best = std::max(best, lower + above + split);
            above += right[i].size();
        }
    }
    return best;
}

std::pair<std::size_t, std::size_t> column_alpha_bounds(const UBubbleModel& model) {
    const std::size_t k = model.columns.size();
    return {(k + 1) / 2, k};
}

} // namespace muig
