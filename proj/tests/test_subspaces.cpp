#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "grassmann/subspaces.hpp"

using namespace grassmann;

TEST_CASE("gaussian_binomial examples", "[subspaces]") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(6, 2, 3) == 11011);
    CHECK(gaussian_binomial(6, 3, 3) == 33880);
    CHECK(gaussian_binomial(6, 1, 3) == 364);
    for (long n = 0; n < 8; ++n) CHECK(gaussian_binomial(n, 0, 5) == 1);
    CHECK(gaussian_binomial(5, 2, 6) == oracle::pascal_binomial(5, 2, 6)); // q need not be a prime power
}

TEST_CASE("gaussian_binomial rejects bad arguments", "[subspaces]") {
    CHECK_THROWS_AS(gaussian_binomial(4, 5, 2), InvalidArgs);
    CHECK_THROWS_AS(gaussian_binomial(4, -1, 2), InvalidArgs);
    CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), InvalidArgs);
    CHECK_THROWS_AS(gaussian_binomial(4, 2, 1), InvalidArgs);
}

TEST_CASE("gaussian_binomial agrees with the Pascal recurrence", "[subspaces][oracle]") {
    for (long q : {2, 3, 4, 5, 7, 16})
        for (long n = 0; n <= 12; ++n)
            for (long k = 0; k <= n; ++k) {
                INFO("n=" << n << " k=" << k << " q=" << q);
                REQUIRE(gaussian_binomial(n, k, q) == oracle::pascal_binomial(n, k, q));
                REQUIRE(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
            }
    // beyond 64 bits
    CHECK(gaussian_binomial(12, 6, 3) == oracle::pascal_binomial(12, 6, 3));
    CHECK(gaussian_binomial(30, 15, 16) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("point count is the all-ones polynomial", "[subspaces]") {
    for (long n = 1; n <= 10; ++n) {
        const auto coeffs = point_count_polynomial(n);
        REQUIRE(coeffs.size() == static_cast<std::size_t>(n));
        long at_one = 0;
        for (auto c : coeffs) {
            CHECK(c == 1);
            at_one += c;
        }
        CHECK(at_one == n);
        // and the polynomial really is [n 1]_q
        for (long q : {2, 3, 5}) {
            BigInt v = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * q + *it;
            CHECK(v == gaussian_binomial(n, 1, q));
        }
    }
}

TEST_CASE("enumerate_k_subspaces examples", "[subspaces]") {
    const auto f2 = field_new(2);
    const auto lines = enumerate_k_subspaces(f2, 2, 1);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].basis() == MatGFq::from_rows(f2, {{0, 1}}));
    CHECK(lines[1].basis() == MatGFq::from_rows(f2, {{1, 0}}));
    CHECK(lines[2].basis() == MatGFq::from_rows(f2, {{1, 1}}));

    CHECK(enumerate_k_subspaces(f2, 4, 2).size() == 35);

    const auto whole = enumerate_k_subspaces(field_new(3), 2, 2);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == Subspace::whole(field_new(3), 2));
}

TEST_CASE("enumeration counts match the Gaussian binomial", "[subspaces][property]") {
    for (int q : {2, 3, 4}) {
        const auto f = field_new(q);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
                INFO("q=" << q << " n=" << n << " k=" << k);
                const auto all = enumerate_k_subspaces(f, n, k);
                REQUIRE(BigInt(all.size()) == gaussian_binomial(static_cast<long>(n), static_cast<long>(k), q));
                REQUIRE(std::is_sorted(all.begin(), all.end()));
                REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
                bool shapes = true;
                for (const auto& s : all) shapes = shapes && s.dim() == k && s.n() == n && is_rref(s.basis());
                REQUIRE(shapes);
            }
        }
    }
}

TEST_CASE("enumeration matches brute-force closure", "[subspaces][oracle]") {
    for (auto [q, n, k] : std::vector<std::tuple<int, std::size_t, std::size_t>>{
             {2, 4, 1}, {2, 4, 2}, {2, 4, 3}, {3, 3, 1}, {3, 3, 2}, {4, 3, 2}, {2, 5, 2}}) {
        const auto f = field_new(q);
        std::set<std::set<std::uint64_t>> ours;
        for (const auto& s : enumerate_k_subspaces(f, n, k)) ours.insert(oracle::span_vectors(s.basis()));
        INFO("q=" << q << " n=" << n << " k=" << k);
        CHECK(ours == oracle::brute_subspaces(f, n, k));
    }
}

TEST_CASE("enumeration respects the budget", "[subspaces]") {
    const auto f2 = field_new(2);
    CHECK_THROWS_AS(enumerate_k_subspaces(f2, 4, 2, 34), BudgetExceeded);
    CHECK(enumerate_k_subspaces(f2, 4, 2, 35).size() == 35);
    CHECK_THROWS_AS(PointIndex(f2, 4, 14), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_k_subspaces(f2, 3, 4), InvalidArgs);
}

TEST_CASE("subspace construction and containment", "[subspaces]") {
    const auto f3 = field_new(3);
    const auto s = Subspace::span(MatGFq::from_rows(f3, {{2, 2, 0}, {0, 1, 1}, {2, 0, 1}}));
    CHECK(s.dim() == 2);
    CHECK(s.basis() == MatGFq::from_rows(f3, {{1, 0, 2}, {0, 1, 1}}));
    CHECK(s.pivots() == std::vector<std::uint16_t>{0, 1});
    CHECK(s.contains(std::vector<std::uint8_t>{1, 1, 0}));
    CHECK_FALSE(s.contains(std::vector<std::uint8_t>{1, 0, 0}));
    CHECK_THROWS_AS(s.contains(std::vector<std::uint8_t>{1, 0}), DimensionMismatch);
    CHECK(Subspace::whole(f3, 3).contains(s));
    CHECK(s.contains(Subspace::zero(f3, 3)));
    CHECK_FALSE(s.contains(Subspace::whole(f3, 3)));
}

TEST_CASE("fast intersection_dim agrees with the brute-force count", "[subspaces][oracle]") {
    std::mt19937_64 rng(3);
    for (int q : {2, 3, 4}) {
        const auto f = field_new(q);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t n = 2 + rng() % 4;
            const auto a = oracle::random_subspace(f, n, 1 + rng() % n, rng);
            const auto b = oracle::random_subspace(f, n, 1 + rng() % n, rng);
            const auto d = intersection_dim(a, b);
            REQUIRE(d == oracle::brute_intersection_dim(a, b));
            REQUIRE(d == intersect_dim(a.basis(), b.basis()));
            REQUIRE(d + subspace_sum(a, b).dim() == a.dim() + b.dim());
        }
    }
    CHECK_THROWS_AS(intersection_dim(Subspace::whole(field_new(2), 3), Subspace::whole(field_new(3), 3)),
                    ContextMismatch);
}

TEST_CASE("subspaces_of lists the k-subspaces inside a subspace", "[subspaces]") {
    const auto f2 = field_new(2);
    const auto w = Subspace::span(MatGFq::from_rows(f2, {{1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}}));
    const auto inside = subspaces_of(w, 2);
    CHECK(inside.size() == 7);
    CHECK(std::is_sorted(inside.begin(), inside.end()));
    std::size_t matches = 0;
    for (const auto& s : enumerate_k_subspaces(f2, 5, 2)) matches += w.contains(s) ? 1 : 0;
    CHECK(matches == 7);
    for (const auto& s : inside) CHECK(w.contains(s));
}

TEST_CASE("PointIndex lists normalized representatives in order", "[subspaces]") {
    for (int q : {2, 3, 4}) {
        const auto f = field_new(q);
        for (std::size_t n = 1; n <= 4; ++n) {
            const PointIndex idx(f, n);
            REQUIRE(BigInt(idx.size()) == gaussian_binomial(static_cast<long>(n), 1, q));
            REQUIRE(std::is_sorted(idx.encodings().begin(), idx.encodings().end()));
            REQUIRE(std::adjacent_find(idx.encodings().begin(), idx.encodings().end()) == idx.encodings().end());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                const auto v = idx.point(i);
                const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
                REQUIRE(lead != v.end());
                REQUIRE(*lead == 1);
                REQUIRE(idx.index_of(v) == i);
            }
        }
    }
    const PointIndex idx(field_new(3), 2);
    CHECK_FALSE(idx.index_of(std::vector<std::uint8_t>{2, 1}).has_value()); // not normalized
    CHECK_THROWS_AS(PointIndex(field_new(2), 0), InvalidArgs);
}

TEST_CASE("incidence_vector examples", "[subspaces]") {
    const auto f2 = field_new(2);
    const PointIndex idx2(f2, 4);
    const auto whole = incidence_vector(Subspace::whole(f2, 4), idx2);
    CHECK(whole.popcount() == 15);

    const auto plane = Subspace::span(MatGFq::from_rows(f2, {{1, 0, 1, 1}, {0, 1, 0, 1}}));
    CHECK(incidence_vector(plane, idx2).popcount() == 3);

    const auto f3 = field_new(3);
    const PointIndex idx3(f3, 4);
    const auto plane3 = Subspace::span(MatGFq::from_rows(f3, {{1, 2, 0, 1}, {0, 0, 1, 2}}));
    CHECK(idx3.size() == 40);
    CHECK(incidence_vector(plane3, idx3).popcount() == 4);
}

TEST_CASE("incidence_vector marks exactly the contained points", "[subspaces][oracle]") {
    std::mt19937_64 rng(5);
    for (int q : {2, 3, 4}) {
        const auto f = field_new(q);
        const std::size_t n = 4;
        const PointIndex idx(f, n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto u = oracle::random_subspace(f, n, 1 + rng() % n, rng);
            const auto iv = incidence_vector(u, idx);
            bool ok = iv.bits.size() == idx.size();
            for (std::size_t i = 0; i < idx.size(); ++i) ok = ok && (iv.bits[i] == 1) == u.contains(idx.point(i));
            REQUIRE(ok);
            REQUIRE(BigInt(iv.popcount()) == gaussian_binomial(static_cast<long>(u.dim()), 1, q));
        }
    }
}

TEST_CASE("incidence_vector rejects mismatched contexts", "[subspaces]") {
    const PointIndex idx(field_new(2), 4);
    CHECK_THROWS_AS(incidence_vector(Subspace::whole(field_new(2), 3), idx), ContextMismatch);
    CHECK_THROWS_AS(incidence_vector(Subspace::whole(field_new(3), 4), idx), ContextMismatch);
}

TEST_CASE("incidence vectors are injective on 2-subspaces of V(4,2)", "[subspaces][property]") {
    const auto f2 = field_new(2);
    const PointIndex idx(f2, 4);
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& s : enumerate_k_subspaces(f2, 4, 2)) seen.insert(incidence_vector(s, idx).bits);
    CHECK(seen.size() == 35);
}

TEST_CASE("canonical families", "[subspaces]") {
    const auto f2 = field_new(2);
    auto all = enumerate_k_subspaces(f2, 3, 1);
    SubspaceFamily fam{all[3], all[1], all[3], all[0]};
    CHECK(has_duplicates(fam));
    const auto canon = canonical_family(fam);
    CHECK(canon == SubspaceFamily{all[0], all[1], all[3]});
    CHECK_FALSE(has_duplicates(canon));
}
