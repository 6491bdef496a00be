#ifndef MUIG_GRAPH_HPP
#define MUIG_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace muig {

using VertexId = std::uint32_t;

// Undirected edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph over arbitrary vertex ids. Vertices and edges are
// kept sorted, so two graphs built by different routes compare equal exactly
// when they have the same id set and the same edge set.
class Graph {
public:
    Graph() = default;

    // Throws ValidationError on duplicate vertices, loops, or edges that
    // mention unknown vertices. Duplicate edges are merged.
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    std::size_t n() const noexcept { return vertices_.size(); }
    std::size_t m() const noexcept { return edges_.size(); }

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool contains(VertexId v) const;
    // Position of v in vertices(); throws ValidationError if absent.
    std::size_t index_of(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    // Neighbors of the vertex at position `index`, as positions.
    const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_[index]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// One side S of a partition (S, V \ S); members sorted and unique.
struct Cut {
    std::vector<VertexId> members;

    Cut() = default;
    explicit Cut(std::vector<VertexId> ids);

    bool contains(VertexId v) const;
};

// |E(S, V \ S)|. Throws ValidationError if a member is not a vertex of g.
std::size_t cut_size(const Graph& g, const Cut& s);

// V(g) \ S.
Cut complement(const Graph& g, const Cut& s);

} // namespace muig

#endif // MUIG_GRAPH_HPP
