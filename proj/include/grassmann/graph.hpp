#pragma once

// The Grassmann graph G_q(n,k): k-subspaces of V(n,q), adjacent when they
// meet in a (k-1)-subspace. Distance is k - dim(A ∩ B).

#include "grassmann/error.hpp"
#include "grassmann/numeric.hpp"
#include "grassmann/subspaces.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <deque>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace grassmann {

class GrassmannGraph {
public:
    /// Requires 2 <= k <= n/2.
    GrassmannGraph(Field field, std::size_t n, std::size_t k, std::uint64_t budget = enumeration_budget())
        : field_(std::move(field)), n_(n), k_(k) {
        if (k_ < 2 || 2 * k_ > n_) {
            throw InvalidArgs("Grassmann graph needs 2 <= k <= n/2 (got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ")");
        }
        vertices_ = enumerate_k_subspaces(field_, n_, k_, budget);
    }

    const Field& field() const noexcept { return field_; }
    int q() const noexcept { return field_->q(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<Subspace>& vertices() const noexcept { return vertices_; }
    const Subspace& vertex(std::size_t i) const { return vertices_.at(i); }

    /// Ordinal of a vertex; vertices are kept sorted so this is a binary search.
    std::optional<std::size_t> index_of(const Subspace& s) const {
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
        if (it == vertices_.end() || !(*it == s)) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

private:
    Field field_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Subspace> vertices_;
};

/// Distance list of one vertex against a family.
struct Code {
    std::vector<int> dists;
    friend bool operator==(const Code&, const Code&) = default;
};

inline int distance(const Subspace& a, const Subspace& b) {
    require_same_space(a, b);
    if (a.dim() != b.dim()) throw DimensionMismatch("distance needs subspaces of equal dimension");
    return static_cast<int>(a.dim() - intersection_dim(a, b));
}

inline Code code_of(const Subspace& w, const SubspaceFamily& family) {
    Code c;
    c.dists.reserve(family.size());
    for (const auto& u : family) c.dists.push_back(distance(w, u));
    return c;
}

struct ResolvingVerdict {
    bool resolving = false;
    /// Lexicographically first colliding pair of vertex ordinals (a < b).
    std::optional<std::pair<std::size_t, std::size_t>> collision;
};

inline void require_family_in_graph(const SubspaceFamily& family, const GrassmannGraph& g) {
    if (family.empty()) throw InvalidArgs("family is empty");
    for (const auto& u : family) {
        if (!same_field(u.field(), g.field())) throw ContextMismatch("family member over a different field");
        if (u.n() != g.n() || u.dim() != g.k()) {
            throw DimensionMismatch("family member is not a vertex of G_q(n,k)");
        }
    }
}

/// Computes every vertex's code against the family and looks for a repeat by
/// sorting. A collision is reported as the lexicographically least pair.
inline ResolvingVerdict is_resolving(const SubspaceFamily& family, const GrassmannGraph& g) {
    require_family_in_graph(family, g);
    const std::size_t V = g.vertex_count();
    const std::size_t m = family.size();
    const std::size_t k = g.k();
    std::vector<std::uint8_t> codes(V * m);
    for (std::size_t v = 0; v < V; ++v) {
        const auto& w = g.vertex(v);
        std::uint8_t* out = codes.data() + v * m;
        for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<std::uint8_t>(k - intersection_dim(family[j], w));
    }

    std::vector<std::uint32_t> order(V);
    std::iota(order.begin(), order.end(), 0u);
    auto code_less = [&](std::uint32_t a, std::uint32_t b) {
        const auto* ca = codes.data() + a * m;
        const auto* cb = codes.data() + b * m;
        const int c = std::memcmp(ca, cb, m);
        return c != 0 ? c < 0 : a < b;
    };
    std::sort(order.begin(), order.end(), code_less);

    ResolvingVerdict verdict;
    verdict.resolving = true;
    for (std::size_t i = 0; i + 1 < V; ++i) {
        const auto a = order[i];
        const auto b = order[i + 1];
        if (std::memcmp(codes.data() + a * m, codes.data() + b * m, m) != 0) continue;
        // first two of an equal-code run are its least pair
        if (i > 0 && std::memcmp(codes.data() + order[i - 1] * m, codes.data() + a * m, m) == 0) continue;
        const std::pair<std::size_t, std::size_t> pair{a, b};
        if (!verdict.collision || pair < *verdict.collision) verdict.collision = pair;
        verdict.resolving = false;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// explicit graph structure (independent of the distance formula)

inline constexpr std::size_t kDefaultAdjacencyLimit = 5000;

using AdjacencyLists = std::vector<std::vector<std::uint32_t>>;

/// Neighbours of each vertex: pairs meeting in a (k-1)-subspace.
inline AdjacencyLists adjacency_lists(const GrassmannGraph& g, std::size_t limit = kDefaultAdjacencyLimit) {
    const std::size_t V = g.vertex_count();
    if (V > limit) {
        throw BudgetExceeded("adjacency for " + std::to_string(V) + " vertices exceeds limit " + std::to_string(limit));
    }
    AdjacencyLists adj(V);
    for (std::size_t a = 0; a < V; ++a) {
        for (std::size_t b = a + 1; b < V; ++b) {
            if (intersection_dim(g.vertex(a), g.vertex(b)) + 1 == g.k()) {
                adj[a].push_back(static_cast<std::uint32_t>(b));
                adj[b].push_back(static_cast<std::uint32_t>(a));
            }
        }
    }
    return adj;
}

/// Hop counts from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const AdjacencyLists& adj, std::size_t source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : adj[u]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

inline int bfs_distance(const GrassmannGraph& g, std::size_t a, std::size_t b,
                        std::size_t limit = kDefaultAdjacencyLimit) {
    if (a >= g.vertex_count() || b >= g.vertex_count()) throw InvalidArgs("vertex ordinal out of range");
    return bfs_distances(adjacency_lists(g, limit), a).at(b);
}

/// JSON header line {"q","n","k","vertices","edges"} followed by one "u v"
/// line per edge (0-based, u < v, sorted).
inline void write_edge_list(std::ostream& os, const GrassmannGraph& g, std::size_t limit = kDefaultAdjacencyLimit) {
    const auto adj = adjacency_lists(g, limit);
    std::size_t edges = 0;
    for (const auto& nb : adj) edges += nb.size();
    edges /= 2;
    os << "{\"q\": " << g.q() << ", \"n\": " << g.n() << ", \"k\": " << g.k() << ", \"vertices\": " << g.vertex_count()
       << ", \"edges\": " << edges << "}\n";
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (auto v : adj[u])
            if (v > u) os << u << ' ' << v << '\n';
    }
}

} // namespace grassmann
