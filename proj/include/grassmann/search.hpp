#pragma once

// Metric dimension of small graphs. A set S resolves the graph iff it hits,
// for every vertex pair {u,w}, the set of vertices v with d(u,v) != d(w,v).
// The exact solver is a branch and bound over that hitting-set problem.

#include "grassmann/error.hpp"
#include "grassmann/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace grassmann {

/// Symmetric all-pairs hop distances of a connected graph.
class DistanceTable {
public:
    DistanceTable(std::size_t size, std::vector<std::uint8_t> dist) : size_(size), d_(std::move(dist)) {
        if (d_.size() != size_ * size_) throw DimensionMismatch("distance table has wrong size");
        for (std::size_t u = 0; u < size_; ++u) {
            if (at(u, u) != 0) throw InvalidArgs("distance table has nonzero diagonal");
            for (std::size_t v = u + 1; v < size_; ++v) {
                if (at(u, v) != at(v, u)) throw InvalidArgs("distance table is not symmetric");
                if (at(u, v) == 0) throw InvalidArgs("distinct vertices at distance 0");
                diameter_ = std::max<int>(diameter_, at(u, v));
            }
        }
    }

    /// BFS from every vertex; the graph must be connected.
    static DistanceTable from_adjacency(const AdjacencyLists& adj) {
        const std::size_t V = adj.size();
        std::vector<std::uint8_t> d(V * V);
        for (std::size_t s = 0; s < V; ++s) {
            const auto row = bfs_distances(adj, s);
            for (std::size_t t = 0; t < V; ++t) {
                if (row[t] < 0) throw InvalidArgs("graph is disconnected");
                if (row[t] > 255) throw InvalidArgs("graph diameter exceeds 255");
                d[s * V + t] = static_cast<std::uint8_t>(row[t]);
            }
        }
        return DistanceTable(V, std::move(d));
    }

    /// Uses the distance formula k - dim(A ∩ B).
    static DistanceTable from_graph(const GrassmannGraph& g, std::size_t limit) {
        const std::size_t V = g.vertex_count();
        if (V > limit) {
            throw BudgetExceeded("graph has " + std::to_string(V) + " vertices, above the search limit " +
                                 std::to_string(limit));
        }
        std::vector<std::uint8_t> d(V * V, 0);
        for (std::size_t a = 0; a < V; ++a) {
            for (std::size_t b = a + 1; b < V; ++b) {
                const auto x = static_cast<std::uint8_t>(distance(g.vertex(a), g.vertex(b)));
                d[a * V + b] = x;
                d[b * V + a] = x;
            }
        }
        return DistanceTable(V, std::move(d));
    }

    static DistanceTable complete(std::size_t m) {
        std::vector<std::uint8_t> d(m * m, 1);
        for (std::size_t i = 0; i < m; ++i) d[i * m + i] = 0;
        return DistanceTable(m, std::move(d));
    }

    static DistanceTable path(std::size_t m) {
        std::vector<std::uint8_t> d(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d[i * m + j] = static_cast<std::uint8_t>(i > j ? i - j : j - i);
        return DistanceTable(m, std::move(d));
    }

    /// Vertex i of the result is vertex perm[i] of this table.
    DistanceTable permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != size_) throw DimensionMismatch("permutation has wrong length");
        std::vector<std::uint8_t> d(size_ * size_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j) d[i * size_ + j] = at(perm[i], perm[j]);
        return DistanceTable(size_, std::move(d));
    }

    std::size_t size() const noexcept { return size_; }
    int diameter() const noexcept { return diameter_; }
    std::uint8_t at(std::size_t u, std::size_t v) const { return d_[u * size_ + v]; }

private:
    std::size_t size_;
    std::vector<std::uint8_t> d_;
    int diameter_ = 0;
};

/// True when the distance vectors to `set` are pairwise distinct.
inline bool resolves(const DistanceTable& d, std::span<const std::size_t> set) {
    std::vector<std::vector<std::uint8_t>> codes(d.size());
    for (std::size_t v = 0; v < d.size(); ++v)
        for (auto s : set) codes[v].push_back(d.at(v, s));
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

/// For every unordered pair {u,w}, u < w, the vertices that tell them apart,
/// as fixed-width bitsets.
struct PairDistinguishers {
    std::size_t vertices = 0;
    std::size_t words = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::uint64_t> bits; // pairs.size() * words

    std::span<const std::uint64_t> set(std::size_t p) const { return {bits.data() + p * words, words}; }
    bool contains(std::size_t p, std::size_t v) const { return (bits[p * words + v / 64] >> (v % 64)) & 1u; }

    static PairDistinguishers build(const DistanceTable& d) {
        PairDistinguishers pd;
        pd.vertices = d.size();
        pd.words = (d.size() + 63) / 64;
        for (std::size_t u = 0; u < d.size(); ++u) {
            for (std::size_t w = u + 1; w < d.size(); ++w) {
                pd.pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(w));
                const auto base = pd.bits.size();
                pd.bits.resize(base + pd.words, 0);
                for (std::size_t v = 0; v < d.size(); ++v)
                    if (d.at(u, v) != d.at(w, v)) pd.bits[base + v / 64] |= std::uint64_t{1} << (v % 64);
            }
        }
        return pd;
    }
};

/// Repeatedly adds the vertex that separates the most pairs still sharing a
/// code (ties go to the lowest index).
inline std::vector<std::size_t> metric_dimension_greedy(const DistanceTable& d) {
    const std::size_t V = d.size();
    const std::size_t D = static_cast<std::size_t>(d.diameter()) + 1;
    std::vector<std::size_t> chosen;
    std::vector<std::uint32_t> cls(V, 0);
    std::size_t num_classes = V > 0 ? 1 : 0;
    std::vector<std::uint8_t> used(V, 0);
    std::vector<std::uint32_t> tally;
    while (num_classes < V) {
        std::size_t best_v = V;
        std::uint64_t best_split = 0;
        for (std::size_t v = 0; v < V; ++v) {
            if (used[v]) continue;
            tally.assign(num_classes * D, 0);
            std::vector<std::uint32_t> size(num_classes, 0);
            for (std::size_t u = 0; u < V; ++u) {
                ++tally[cls[u] * D + d.at(u, v)];
                ++size[cls[u]];
            }
            std::uint64_t split = 0;
            for (std::size_t c = 0; c < num_classes; ++c) {
                std::uint64_t same = 0;
                for (std::size_t x = 0; x < D; ++x) {
                    const std::uint64_t t = tally[c * D + x];
                    same += t * (t - (t > 0)) / 2;
                }
                const std::uint64_t s = size[c];
                split += s * (s - (s > 0)) / 2 - same;
            }
            if (split > best_split) {
                best_split = split;
                best_v = v;
            }
        }
        if (best_v == V) throw Error("greedy metric dimension made no progress");
        used[best_v] = 1;
        chosen.push_back(best_v);
        std::vector<std::int64_t> remap(num_classes * D, -1);
        std::uint32_t next = 0;
        for (std::size_t u = 0; u < V; ++u) {
            auto& slot = remap[cls[u] * D + d.at(u, best_v)];
            if (slot < 0) slot = next++;
            cls[u] = static_cast<std::uint32_t>(slot);
        }
        num_classes = next;
    }
    return chosen;
}

struct MetricDimensionResult {
    std::size_t mu = 0;
    std::vector<std::size_t> witness; // sorted vertex ordinals
    std::uint64_t nodes = 0;          // branch-and-bound nodes visited
    std::size_t greedy_size = 0;      // initial upper bound
};

inline constexpr std::size_t kDefaultExactLimit = 120;

namespace detail {

class HittingSetSolver {
public:
    HittingSetSolver(const DistanceTable& d, const PairDistinguishers& pd)
        : V_(d.size()), W_(pd.words), diameter_(d.diameter()), pd_(pd) {}

    MetricDimensionResult solve(std::vector<std::size_t> upper) {
        std::sort(upper.begin(), upper.end());
        best_ = upper;
        result_.greedy_size = upper.size();
        std::vector<std::uint64_t> chosen(W_, 0), excluded(W_, 0);
        std::vector<std::uint32_t> unhit(pd_.pairs.size());
        std::iota(unhit.begin(), unhit.end(), 0u);
        std::vector<std::size_t> current;
        recurse(current, excluded, unhit);
        result_.mu = best_.size();
        result_.witness = best_;
        return result_;
    }

private:
    std::size_t available(std::size_t p, const std::vector<std::uint64_t>& excluded) const {
        std::size_t c = 0;
        const auto s = pd_.set(p);
        for (std::size_t w = 0; w < W_; ++w) c += static_cast<std::size_t>(std::popcount(s[w] & ~excluded[w]));
        return c;
    }

    /// Vertices sharing a code form classes; one more vertex splits a class
    /// into at most diameter+1 parts.
    std::size_t class_bound(const std::vector<std::uint32_t>& unhit) const {
        std::vector<std::uint32_t> parent(V_);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto p : unhit) {
            const auto a = find(pd_.pairs[p].first);
            const auto b = find(pd_.pairs[p].second);
            if (a != b) parent[a] = b;
        }
        std::vector<std::uint32_t> size(V_, 0);
        std::uint32_t largest = 1;
        for (std::uint32_t v = 0; v < V_; ++v) largest = std::max(largest, ++size[find(v)]);
        std::size_t r = 0;
        std::uint64_t reach = 1;
        while (reach < largest) {
            reach *= static_cast<std::uint64_t>(diameter_) + 1;
            ++r;
        }
        return r;
    }

    void recurse(std::vector<std::size_t>& current, std::vector<std::uint64_t> excluded,
                 const std::vector<std::uint32_t>& unhit) {
        ++result_.nodes;
        if (unhit.empty()) {
            if (current.size() < best_.size()) {
                best_ = current;
                std::sort(best_.begin(), best_.end());
            }
            return;
        }
        if (current.size() + 1 >= best_.size()) return;

        std::vector<std::pair<std::size_t, std::uint32_t>> by_size;
        by_size.reserve(unhit.size());
        for (auto p : unhit) {
            const auto a = available(p, excluded);
            if (a == 0) return;
            by_size.emplace_back(a, p);
        }
        std::sort(by_size.begin(), by_size.end());

        // disjoint available sets each need their own vertex
        std::vector<std::uint64_t> used(W_, 0);
        std::size_t disjoint = 0;
        for (const auto& [a, p] : by_size) {
            const auto s = pd_.set(p);
            bool clash = false;
            for (std::size_t w = 0; w < W_ && !clash; ++w) clash = (s[w] & ~excluded[w] & used[w]) != 0;
            if (clash) continue;
            for (std::size_t w = 0; w < W_; ++w) used[w] |= s[w] & ~excluded[w];
            ++disjoint;
        }
        const std::size_t lb = std::max(disjoint, class_bound(unhit));
        if (current.size() + lb >= best_.size()) return;

        const auto branch_pair = by_size.front().second;
        const auto s = pd_.set(branch_pair);
        std::vector<std::size_t> candidates;
        for (std::size_t v = 0; v < V_; ++v)
            if (((s[v / 64] & ~excluded[v / 64]) >> (v % 64)) & 1u) candidates.push_back(v);

        std::vector<std::uint32_t> next;
        for (auto v : candidates) {
            next.clear();
            for (auto p : unhit)
                if (!pd_.contains(p, v)) next.push_back(p);
            current.push_back(v);
            recurse(current, excluded, next);
            current.pop_back();
            excluded[v / 64] |= std::uint64_t{1} << (v % 64);
            if (current.size() + 1 >= best_.size()) return;
        }
    }

    std::size_t V_;
    std::size_t W_;
    int diameter_;
    const PairDistinguishers& pd_;
    std::vector<std::size_t> best_;
    MetricDimensionResult result_;
};

} // namespace detail

/// Minimum resolving set by branch and bound: greedy upper bound first,
/// lower bounds from disjoint distinguisher sets and from class sizes,
/// branching on the pair with the fewest available distinguishers.
inline MetricDimensionResult metric_dimension_exact(const DistanceTable& d, std::size_t limit = kDefaultExactLimit) {
    if (d.size() > limit) {
        throw BudgetExceeded("exact metric dimension limited to " + std::to_string(limit) + " vertices (got " +
                             std::to_string(d.size()) + ")");
    }
    if (d.size() <= 1) return {};
    const auto pd = PairDistinguishers::build(d);
    detail::HittingSetSolver solver(d, pd);
    return solver.solve(metric_dimension_greedy(d));
}

struct GrassmannMetricDimension {
    std::size_t mu = 0;
    SubspaceFamily witness;
    std::uint64_t nodes = 0;
    std::size_t greedy_size = 0;
};

inline GrassmannMetricDimension metric_dimension_exact(const GrassmannGraph& g, std::size_t limit = kDefaultExactLimit) {
    const auto res = metric_dimension_exact(DistanceTable::from_graph(g, limit), limit);
    GrassmannMetricDimension out{res.mu, {}, res.nodes, res.greedy_size};
    for (auto v : res.witness) out.witness.push_back(g.vertex(v));
    return out;
}

inline constexpr std::size_t kDefaultGreedyLimit = 5000;

inline SubspaceFamily metric_dimension_greedy(const GrassmannGraph& g, std::size_t limit = kDefaultGreedyLimit) {
    const auto picks = metric_dimension_greedy(DistanceTable::from_graph(g, limit));
    SubspaceFamily out;
    for (auto v : picks) out.push_back(g.vertex(v));
    return out;
}

} // namespace grassmann
