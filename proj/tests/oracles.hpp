// Independent reference computations for the tests. Everything here works on
// the plain graph (or plain interval list) by exhaustive search, never through
// the bubble model machinery it is used to check.
#ifndef MUIG_TESTS_ORACLES_HPP
#define MUIG_TESTS_ORACLES_HPP

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "muig/gen.hpp"
#include "muig/graph.hpp"
#include "muig/interval.hpp"
#include "muig/io.hpp"
#include "muig/model.hpp"

namespace oracle {

using muig::Graph;
using muig::VertexId;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    if (g.n() > 24) throw std::invalid_argument("oracle limited to 24 vertices");
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j : g.neighbors(i)) adj[i] |= 1u << j;
    return adj;
}

// Largest subset whose members are pairwise adjacent (or pairwise
// non-adjacent when `independent`).
inline std::size_t largest_set(const Graph& g, bool independent) {
    const auto adj = adjacency_masks(g);
    const std::size_t n = g.n();
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (!(s >> v & 1u)) continue;
            const std::uint32_t others = s & ~(1u << v);
            ok = independent ? (adj[v] & others) == 0 : (adj[v] & others) == others;
        }
        if (ok) best = size;
    }
    return best;
}

inline std::size_t clique_number(const Graph& g) { return largest_set(g, false); }
inline std::size_t independence_number(const Graph& g) { return largest_set(g, true); }

// Maximum cut over all cuts containing `in` and avoiding `out`.
inline std::size_t maxcut_completion(const Graph& g, const std::set<VertexId>& in, const std::set<VertexId>& out) {
    std::vector<VertexId> free;
    for (VertexId v : g.vertices())
        if (!in.count(v) && !out.count(v)) free.push_back(v);
    if (free.size() > 22) throw std::invalid_argument("too many free vertices for the oracle");
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::set<VertexId> s = in;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1u) s.insert(free[i]);
        std::size_t value = 0;
        for (const auto& [u, v] : g.edges()) value += s.count(u) != s.count(v);
        best = std::max(best, value);
    }
    return best;
}

inline std::size_t maxcut(const Graph& g) { return maxcut_completion(g, {}, {}); }

// Induced subgraph on `keep`.
inline Graph induced(const Graph& g, const std::set<VertexId>& keep) {
    std::vector<VertexId> vs(keep.begin(), keep.end());
    std::vector<muig::Edge> es;
    for (const auto& e : g.edges())
        if (keep.count(e.first) && keep.count(e.second)) es.push_back(e);
    return Graph(std::move(vs), std::move(es));
}

// Pairwise interval intersection on exact endpoints, written independently
// of the library's sweep: a point lies in both intervals.
inline Graph intersection_graph(const muig::Representation& rep) {
    std::vector<VertexId> vs;
    std::vector<muig::Edge> es;
    const auto& iv = rep.intervals;
    for (std::size_t a = 0; a < iv.size(); ++a) {
        vs.push_back(iv[a].vertex);
        for (std::size_t b = a + 1; b < iv.size(); ++b) {
            const auto& x = iv[a];
            const auto& y = iv[b];
            // Intersection is [max left, min right] with endpoint closure.
            const muig::Rational lo = std::max(x.left, y.left);
            const muig::Rational hi = std::min(x.left, y.left) + muig::Rational(1);
            bool meet = lo < hi;
            if (lo == hi) {
                const auto& first = x.left <= y.left ? x : y;
                const auto& second = x.left <= y.left ? y : x;
                meet = x.left != y.left && first.kind.right_closed && second.kind.left_closed;
            }
            if (meet) es.push_back(muig::make_edge(x.vertex, y.vertex));
        }
    }
    return Graph(std::move(vs), std::move(es));
}

struct CorpusEntry {
    std::size_t index = 0;
    std::size_t maxcut = 0;
    muig::UBubbleModel model;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto doc = nlohmann::json::parse(line);
        out.push_back({doc["index"].get<std::size_t>(), doc["maxcut"].get<std::size_t>(),
                       muig::model_from_json(doc["model"])});
    }
    return out;
}

// Mixed-parameter random representations used by the property tests.
inline muig::GenParams varied_params(std::size_t i, std::size_t max_n, std::uint64_t base) {
    muig::GenParams p;
    p.seed = base ^ (i * 0x9e3779b97f4a7c15ull);
    p.n = 1 + i % max_n;
    p.grid = static_cast<std::int64_t>(1 + i % 5);
    p.window = static_cast<std::int64_t>(1 + (i / 7) % (p.n / 2 + 2));
    p.twin_rate = (i % 4 == 0) ? 0.3 : 0.0;
    static const std::array<std::array<double, 4>, 4> weights = {{{1, 1, 1, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}, {2, 1, 1, 3}}};
    p.kind_weights = weights[(i / 3) % weights.size()];
    return p;
}

} // namespace oracle

#endif // MUIG_TESTS_ORACLES_HPP
