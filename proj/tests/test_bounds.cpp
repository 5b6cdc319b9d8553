#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "grassmann/bounds.hpp"

using namespace grassmann;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double d(const BigFloat& x) { return static_cast<double>(x); }

} // namespace

// Reference values below were evaluated independently at 50 significant digits.

TEST_CASE("lower_bound examples", "[bounds]") {
    CHECK_THAT(d(lower_bound(2, 4, 2)), WithinAbs(5.129283, 1e-6));
    CHECK_THAT(d(lower_bound(2, 6, 2)), WithinAbs(9.346514, 1e-6));
    CHECK_THAT(d(lower_bound(2, 6, 3)), WithinAbs(6.590723, 1e-6));
    CHECK_THROWS_AS(lower_bound(2, 4, 1), InvalidArgs);
}

TEST_CASE("babai_general examples", "[bounds]") {
    CHECK_THAT(d(babai_general(2, 4, 2)), WithinAbs(84.134891, 1e-6));
    CHECK_THAT(d(babai_general(2, 6, 2)), WithinAbs(661.188962, 1e-6));
    CHECK_THAT(d(babai_general(2, 6, 3)), WithinAbs(1081.744341, 1e-6));
    // base changes divide by ln 2 and ln 10
    CHECK_THAT(d(babai_general(2, 4, 2, LogBase::two)), WithinRel(d(babai_general(2, 4, 2)) / std::log(2.0), 1e-12));
    CHECK_THAT(d(babai_general(2, 4, 2, LogBase::ten)), WithinRel(d(babai_general(2, 4, 2)) / std::log(10.0), 1e-12));
}

TEST_CASE("babai_strong examples", "[bounds]") {
    CHECK(babai_term(2, 4, 2, 0) == 1);
    CHECK(babai_term(2, 4, 2, 1) == 18);
    CHECK(babai_term(2, 4, 2, 2) == 16);
    const auto s = babai_strong(2, 4, 2);
    CHECK(s.M == 18);
    CHECK(s.argmax_j == 1);
    CHECK_THAT(d(s.bound), WithinAbs(29.279337, 1e-6));

    CHECK(babai_term(2, 6, 2, 1) == 90);
    CHECK(babai_term(2, 6, 2, 2) == 560);
    const auto s6 = babai_strong(2, 6, 2);
    CHECK(s6.M == 560);
    CHECK(s6.argmax_j == 2);
    CHECK_THAT(d(s6.bound), WithinAbs(185.385045, 1e-6));

    const auto s63 = babai_strong(2, 6, 3);
    CHECK(s63.M == 784);
    CHECK(s63.argmax_j == 2);
    CHECK_THAT(d(s63.bound), WithinAbs(99.188605, 1e-6));

    for (int q : {2, 3, 7})
        for (std::size_t n = 2; n <= 8; ++n)
            for (std::size_t k = 0; 2 * k <= n; ++k) CHECK(babai_term(q, n, k, 0) == 1);

    CHECK_THROWS_AS(babai_strong(2, 4, 3), InvalidArgs);
}

TEST_CASE("babai_strong degenerates when M reaches the vertex count", "[bounds]") {
    // G_2(2,1): V = 3, terms 1 and 2*1*1 = 2, fine; G_q(2,1) in general has V = q+1, M = q
    CHECK_NOTHROW(babai_strong(2, 2, 1));
    // G_q(n,0) has one vertex and M = 1
    CHECK_THROWS_AS(babai_strong(2, 4, 0), DegenerateBound);
}

TEST_CASE("M agrees with an independent evaluation", "[bounds][oracle]") {
    for (int q : {2, 3, 4, 5})
        for (std::size_t n = 4; n <= 10; ++n)
            for (std::size_t k = 2; 2 * k <= n; ++k) {
                BigInt M = 0;
                for (std::size_t j = 0; j <= k; ++j) {
                    BigInt term = oracle::pascal_binomial(static_cast<long>(n - k), static_cast<long>(j), q) *
                                  oracle::pascal_binomial(static_cast<long>(k), static_cast<long>(j), q);
                    for (std::size_t i = 0; i < j * j; ++i) term *= q;
                    M = std::max(M, term);
                }
                INFO("q=" << q << " n=" << n << " k=" << k);
                const auto s = babai_strong(q, n, k);
                REQUIRE(s.M == M);
                REQUIRE(s.bound > 0);
                long double M_ld = 0;
                const auto ld = oracle::babai_strong_ld(q, static_cast<long>(n), static_cast<long>(k), &M_ld);
                REQUIRE_THAT(d(s.bound), WithinRel(static_cast<double>(ld), 1e-9));
                REQUIRE_THAT(d(babai_general(q, n, k)),
                             WithinRel(static_cast<double>(oracle::babai_general_ld(q, static_cast<long>(n),
                                                                                    static_cast<long>(k))),
                                       1e-9));
            }
}

TEST_CASE("compare report", "[bounds]") {
    const auto r = compare(2, 4, 2);
    CHECK(r.num_vertices == 35);
    CHECK(r.paper_bound == 15);
    CHECK_THAT(d(r.lower_log), WithinAbs(5.129283, 1e-6));
    CHECK_THAT(d(r.babai_general), WithinAbs(84.134891, 1e-6));
    REQUIRE(r.babai_strong.has_value());
    CHECK_THAT(d(*r.babai_strong), WithinAbs(29.279337, 1e-6));
    CHECK(r.babai_M == 18);
    CHECK(r.paper_beats_babai_general());
    CHECK_FALSE(r.babai_strong_beats_paper());
    CHECK(r.construction_sizes.at("partition") == 19);
    CHECK(r.construction_sizes.at("greedy") == 15);
    CHECK(r.construction_sizes.count("spread") == 0);

    const auto r63 = compare(2, 6, 3);
    CHECK(r63.paper_bound == 63);
    CHECK_THAT(d(r63.babai_general), WithinAbs(1081.744341, 1e-6));
    CHECK(r63.paper_beats_babai_general());

    const auto r62 = compare(2, 6, 2);
    CHECK(r62.construction_sizes.at("spread") == 63);
}

TEST_CASE("large q with k = 2 favours the stronger Babai bound", "[bounds]") {
    const auto r = compare(5, 4, 2);
    CHECK(r.num_vertices == 806);
    CHECK(r.paper_bound == 156);
    CHECK(r.babai_M == 625);
    CHECK_THAT(d(*r.babai_strong), WithinAbs(119.200, 1e-3));
    CHECK(r.babai_strong_beats_paper());
}

TEST_CASE("compare options", "[bounds]") {
    CompareOptions opt;
    opt.constructions = false;
    CHECK(compare(2, 4, 2, opt).construction_sizes.empty());
    opt.constructions = true;
    opt.construction_limit = 10;
    CHECK(compare(2, 4, 2, opt).construction_sizes.empty());
    // formulas work for any q; constructions need a field
    const auto r6 = compare(6, 4, 2);
    CHECK(r6.construction_sizes.empty());
    CHECK(r6.paper_bound == 1 + 6 + 36 + 216);
    opt.log_base = LogBase::two;
    CHECK(compare(2, 4, 2, opt).log_base == LogBase::two);
    CHECK_THROWS_AS(compare(2, 4, 3), InvalidArgs);
    CHECK_THROWS_AS(compare(2, 4, 1), InvalidArgs);
}

TEST_CASE("log base parsing", "[bounds]") {
    CHECK(parse_log_base("e") == LogBase::e);
    CHECK(parse_log_base("2") == LogBase::two);
    CHECK(parse_log_base("10") == LogBase::ten);
    CHECK_THROWS_AS(parse_log_base("3"), InvalidArgs);
    CHECK(std::string(to_string(LogBase::ten)) == "10");
}

TEST_CASE("the [n 1]_q bound beats the general Babai bound for k > 2", "[bounds]") {
    for (int q : {2, 3, 4, 5})
        for (std::size_t n = 6; n <= 12; ++n)
            for (std::size_t k = 3; 2 * k <= n; ++k) {
                CompareOptions opt;
                opt.constructions = false;
                INFO("q=" << q << " n=" << n << " k=" << k);
                CHECK(compare(q, n, k, opt).paper_beats_babai_general());
            }
}

TEST_CASE("lower bound stays below [n 1]_q", "[bounds]") {
    for (int q : {2, 3, 4})
        for (std::size_t n = 4; n <= 10; ++n)
            for (std::size_t k = 2; 2 * k <= n; ++k) CHECK(lower_bound(q, n, k) <= BigFloat(gaussian_binomial(n, 1, q)));
}
