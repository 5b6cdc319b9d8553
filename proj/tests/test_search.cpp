#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "grassmann/constructions.hpp"
#include "grassmann/search.hpp"

using namespace grassmann;

namespace {

/// Smallest resolving set size by trying every subset in increasing size.
std::size_t brute_metric_dimension(const DistanceTable& d) {
    const std::size_t V = d.size();
    if (V <= 1) return 0;
    for (std::size_t size = 1; size <= V; ++size) {
        std::vector<bool> mask(V, false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
        do {
            std::vector<std::size_t> set;
            for (std::size_t i = 0; i < V; ++i)
                if (mask[i]) set.push_back(i);
            if (resolves(d, set)) return size;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return V;
}

DistanceTable cycle(std::size_t m) {
    AdjacencyLists adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        adj[i].push_back(static_cast<std::uint32_t>((i + 1) % m));
        adj[(i + 1) % m].push_back(static_cast<std::uint32_t>(i));
    }
    return DistanceTable::from_adjacency(adj);
}

DistanceTable star(std::size_t leaves) {
    AdjacencyLists adj(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) {
        adj[0].push_back(static_cast<std::uint32_t>(i));
        adj[i].push_back(0);
    }
    return DistanceTable::from_adjacency(adj);
}

DistanceTable random_connected(std::size_t V, std::mt19937_64& rng) {
    AdjacencyLists adj(V);
    auto link = [&](std::size_t a, std::size_t b) {
        if (a == b || std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return;
        adj[a].push_back(static_cast<std::uint32_t>(b));
        adj[b].push_back(static_cast<std::uint32_t>(a));
    };
    for (std::size_t v = 1; v < V; ++v) link(v, rng() % v); // spanning tree
    for (std::size_t e = 0; e < V; ++e) link(rng() % V, rng() % V);
    return DistanceTable::from_adjacency(adj);
}

} // namespace

TEST_CASE("distance table validation", "[search]") {
    CHECK_THROWS_AS(DistanceTable(2, {0, 1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(DistanceTable(2, {1, 1, 1, 0}), InvalidArgs);
    CHECK_THROWS_AS(DistanceTable(2, {0, 1, 2, 0}), InvalidArgs);
    CHECK_THROWS_AS(DistanceTable(2, {0, 0, 0, 0}), InvalidArgs);
    CHECK_THROWS_AS(DistanceTable::from_adjacency(AdjacencyLists(2)), InvalidArgs);
    CHECK(DistanceTable::path(4).diameter() == 3);
    CHECK(DistanceTable::complete(5).diameter() == 1);
}

TEST_CASE("metric dimension of small fixtures", "[search]") {
    for (std::size_t m = 2; m <= 7; ++m) {
        const auto res = metric_dimension_exact(DistanceTable::complete(m));
        CHECK(res.mu == m - 1);
        CHECK(resolves(DistanceTable::complete(m), res.witness));
    }
    const auto p3 = metric_dimension_exact(DistanceTable::path(3));
    CHECK(p3.mu == 1);
    CHECK((p3.witness == std::vector<std::size_t>{0} || p3.witness == std::vector<std::size_t>{2}));
    CHECK(metric_dimension_exact(DistanceTable::path(9)).mu == 1);
    CHECK(metric_dimension_exact(cycle(7)).mu == 2);
    CHECK(metric_dimension_exact(star(5)).mu == 4);
    CHECK(metric_dimension_exact(DistanceTable::complete(1)).mu == 0);
}

TEST_CASE("exact search matches exhaustive subsets", "[search][oracle]") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = random_connected(3 + rng() % 9, rng);
        const auto res = metric_dimension_exact(d);
        INFO("trial " << trial << ", V=" << d.size());
        REQUIRE(res.mu == brute_metric_dimension(d));
        REQUIRE(res.witness.size() == res.mu);
        REQUIRE(resolves(d, res.witness));
        REQUIRE(std::is_sorted(res.witness.begin(), res.witness.end()));
        const auto greedy = metric_dimension_greedy(d);
        REQUIRE(resolves(d, greedy));
        REQUIRE(greedy.size() >= res.mu);
    }
}

TEST_CASE("exact value is invariant under relabelling", "[search][property]") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = random_connected(4 + rng() % 10, rng);
        std::vector<std::size_t> perm(d.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(metric_dimension_exact(d).mu == metric_dimension_exact(d.permuted(perm)).mu);
    }
}

TEST_CASE("pair distinguishers", "[search]") {
    const auto d = DistanceTable::path(4);
    const auto pd = PairDistinguishers::build(d);
    CHECK(pd.vertices == 4);
    CHECK(pd.pairs.size() == 6);
    // every set is nonempty: both endpoints of the pair always distinguish it
    for (std::size_t p = 0; p < pd.pairs.size(); ++p) {
        const auto [u, w] = pd.pairs[p];
        CHECK(pd.contains(p, u));
        CHECK(pd.contains(p, w));
    }
}

TEST_CASE("G_2(4,2): exact, greedy and constructions", "[search][grassmann]") {
    const auto f2 = field_new(2);
    const GrassmannGraph g(f2, 4, 2);
    const auto res = metric_dimension_exact(g);
    CHECK(res.mu >= 5); // ceil(log2 35) - 1
    CHECK(res.mu <= 15);
    CHECK(res.witness.size() == res.mu);
    CHECK(is_resolving(res.witness, g).resolving);
    for (std::size_t drop = 0; drop < res.witness.size(); ++drop) {
        SubspaceFamily smaller;
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            if (i != drop) smaller.push_back(res.witness[i]);
        CHECK_FALSE(is_resolving(smaller, g).resolving);
    }
    const auto greedy = metric_dimension_greedy(g);
    CHECK(is_resolving(greedy, g).resolving);
    CHECK(res.mu <= greedy.size());
    CHECK(greedy.size() <= resolving_from_partition(f2, 4, 2).size());
    CHECK(greedy.size() <= resolving_greedy_rank(f2, 4, 2).size());
    CHECK(res.mu >= static_cast<std::size_t>(std::ceil(static_cast<double>(lower_bound(2, 4, 2)))) - 1);
}

TEST_CASE("greedy on larger Grassmann graphs", "[search][grassmann]") {
    const auto f2 = field_new(2);
    const GrassmannGraph g5(f2, 5, 2);
    const auto greedy5 = metric_dimension_greedy(g5);
    CHECK(is_resolving(greedy5, g5).resolving);
    CHECK(greedy5.size() <= resolving_from_partition(f2, 5, 2).size());

    const GrassmannGraph g6(f2, 6, 2);
    const auto greedy6 = metric_dimension_greedy(g6);
    CHECK(is_resolving(greedy6, g6).resolving);
    CHECK(greedy6.size() <= 63);

    const GrassmannGraph g3(field_new(3), 4, 2);
    const auto greedy3 = metric_dimension_greedy(g3);
    CHECK(is_resolving(greedy3, g3).resolving);
    CHECK(greedy3.size() <= 40);
}

TEST_CASE("search limits", "[search]") {
    const GrassmannGraph g(field_new(2), 5, 2);
    CHECK_THROWS_AS(metric_dimension_exact(g), BudgetExceeded); // 155 > 120
    CHECK_THROWS_AS(metric_dimension_greedy(g, 100), BudgetExceeded);
    CHECK_THROWS_AS(metric_dimension_exact(DistanceTable::complete(10), 5), BudgetExceeded);
}
