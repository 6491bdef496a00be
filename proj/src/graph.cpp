#include "muig/graph.hpp"

#include <algorithm>
#include <string>

#include "muig/error.hpp"

namespace muig {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end()); dup != vertices_.end())
        throw ValidationError("duplicate vertex id " + std::to_string(*dup));

    for (auto& e : edges) {
        if (e.first == e.second) throw ValidationError("loop at vertex " + std::to_string(e.first));
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(vertices_.size(), {});
    for (const auto& [u, v] : edges_) {
        std::size_t iu = index_of(u);
        std::size_t iv = index_of(v);
        adjacency_[iu].push_back(iv);
        adjacency_[iv].push_back(iu);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::size_t Graph::index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw ValidationError("unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

Cut::Cut(std::vector<VertexId> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Cut::contains(VertexId v) const { return std::binary_search(members.begin(), members.end(), v); }

std::size_t cut_size(const Graph& g, const Cut& s) {
    std::vector<char> inside(g.n(), 0);
    for (VertexId v : s.members) inside[g.index_of(v)] = 1;
    std::size_t total = 0;
    for (const auto& [u, v] : g.edges())
        if (inside[g.index_of(u)] != inside[g.index_of(v)]) ++total;
    return total;
}

Cut complement(const Graph& g, const Cut& s) {
    std::vector<VertexId> rest;
    for (VertexId v : g.vertices())
        if (!s.contains(v)) rest.push_back(v);
    return Cut(std::move(rest));
}

} // namespace muig
