#include <catch2/catch_amalgamated.hpp>

#include "grassmann/constructions.hpp"
#include "grassmann/io.hpp"

#include <sstream>

using namespace grassmann;

namespace {

FamilyFile parse(const std::string& text) {
    std::istringstream is(text);
    return read_family(is);
}

} // namespace

TEST_CASE("write then read round-trips", "[io]") {
    for (int q : {2, 3, 4}) {
        const auto f = field_new(q);
        const auto fam = resolving_greedy_rank(f, 4, 2);
        const auto text = family_to_string(f, 4, 2, fam);
        const auto back = parse(text);
        INFO("q=" << q);
        CHECK(back.field->q() == q);
        CHECK(back.n == 4);
        CHECK(back.k == 2);
        CHECK(back.family == fam);
        CHECK(family_to_string(back.field, back.n, back.k, back.family) == text);
    }
}

TEST_CASE("written format", "[io]") {
    const auto f2 = field_new(2);
    std::ostringstream os;
    write_family(os, f2, 3, 1, {Subspace::span(MatGFq::from_rows(f2, {{0, 1, 1}}))}, {"done"});
    CHECK(os.str() == "# GF(2) modulus 0 1\n2 3 1 1\n\n0 1 1\n# done\n");
    CHECK_THROWS_AS(write_family(os, f2, 4, 1, {Subspace::whole(f2, 3)}), DimensionMismatch);
}

TEST_CASE("comments and blank lines are skipped", "[io]") {
    const auto file = parse("# hello\n\n2 4 2 2\n# first\n1 0 0 0\n0 1 0 0\n\n   \n0 0 1 0\n0 0 0 1\n# end\n");
    REQUIRE(file.family.size() == 2);
    CHECK(file.family[0].basis() == MatGFq::from_rows(file.field, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(parse("3 2 1 0\n").family.empty());
}

TEST_CASE("malformed family files", "[io]") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 2\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 5 1\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("6 4 2 0\n"), NotPrimePower);
    // entry out of range
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 2 0\n0 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 -1 0\n0 1 0 0\n"), ParseError);
    // wrong row length
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 0\n0 1 0 0\n"), ParseError);
    // not RREF, or rank-deficient
    CHECK_THROWS_AS(parse("2 4 2 1\n1 1 0 0\n1 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 1 0\n0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("3 3 1 1\n2 0 0\n"), ParseError);
    // short block
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 0 0\n"), ParseError);
    // trailing data
    CHECK_THROWS_AS(parse("2 4 2 1\n1 0 0 0\n0 1 0 0\n0 0 1 0\n"), ParseError);
    // duplicates
    CHECK_THROWS_AS(parse("2 4 1 2\n0 0 1 1\n0 0 1 1\n"), ParseError);
}

TEST_CASE("subspace tokens", "[io]") {
    const auto f3 = field_new(3);
    const auto s = Subspace::span(MatGFq::from_rows(f3, {{1, 0, 2}, {0, 1, 1}}));
    CHECK(subspace_token(s) == "1,0,2/0,1,1");
    CHECK(subspace_token(Subspace::span(MatGFq::from_rows(f3, {{0, 2, 1}}))) == "0,1,2");
}
