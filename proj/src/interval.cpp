#include "muig/interval.hpp"

#include <algorithm>

#include "muig/error.hpp"

namespace muig {

IntervalKind IntervalKind::parse(std::string_view text) {
    if (text == "++") return closed();
    if (text == "+-") return closed_open();
    if (text == "-+") return open_closed();
    if (text == "--") return open();
    throw ParseError("unknown interval kind '" + std::string(text) + "'");
}

std::string IntervalKind::to_string() const {
    return std::string{left_closed ? '+' : '-', right_closed ? '+' : '-'};
}

bool intersects(const UnitInterval& a, const UnitInterval& b) {
    const UnitInterval& lo = a.left <= b.left ? a : b;
    const UnitInterval& hi = a.left <= b.left ? b : a;
    Rational lo_right = lo.right();
    if (hi.left < lo_right) return true;
    return hi.left == lo_right && lo.kind.right_closed && hi.kind.left_closed;
}

void Representation::validate() const {
    std::vector<VertexId> ids;
    ids.reserve(intervals.size());
    for (const auto& iv : intervals) ids.push_back(iv.vertex);
    std::sort(ids.begin(), ids.end());
    if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
        throw ValidationError("duplicate vertex id " + std::to_string(*dup));
}

Graph graph_of_representation(const Representation& rep) {
    rep.validate();
    std::vector<UnitInterval> sorted = rep.intervals;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.left < y.left; });

    // Sweep: every partner of sorted[i] to the right starts at most one unit later.
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Rational reach = sorted[i].right();
        for (std::size_t j = i + 1; j < sorted.size() && sorted[j].left <= reach; ++j)
            if (intersects(sorted[i], sorted[j])) edges.push_back(make_edge(sorted[i].vertex, sorted[j].vertex));
    }
    std::vector<VertexId> ids;
    ids.reserve(sorted.size());
    for (const auto& iv : sorted) ids.push_back(iv.vertex);
    return Graph(std::move(ids), std::move(edges));
}

} // namespace muig
