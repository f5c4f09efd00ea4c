#include "doctest.h"

#include "gln/errors.hpp"
#include "gln/jsonio.hpp"
#include "gln/rng.hpp"

using namespace gln;
using jsonio::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("partitions serialize as arrays of parts") {
    partitions::Partition lambda({4, 2, 1});
    CHECK(jsonio::to_json(lambda) == json({4, 2, 1}));
    CHECK(jsonio::to_json(partitions::Partition{}) == json::array());
}

TEST_CASE("orbits carry ambient rank and partition") {
    orbits::NilpotentOrbit o(partitions::Partition({2, 2}));
    json j = jsonio::to_json(o);
    CHECK(j["n"] == 4);
    CHECK(j["partition"] == json({2, 2}));
}

TEST_CASE("exact scalars expose rational coefficients as strings") {
    infchar::ExactScalar z{AffineForm(Rational(1, 2)) + AffineForm::parameter("s"),
                           AffineForm::parameter("t")};
    json j = jsonio::to_json(z);
    CHECK(j["re"]["const"] == "1/2");
    CHECK(j["re"]["params"]["s"] == "1");
    CHECK(j["im"]["const"] == "0");
    CHECK(j["im"]["params"]["t"] == "1");
}

TEST_CASE("rep serialization mirrors the tagged union") {
    reps::UnitaryRep pi = reps::parse_rep("chi(3,1,t) x speh(4,2)");
    json j = jsonio::to_json(pi);
    CHECK(j["n"] == 7);
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["type"] == "character");
    CHECK(j["factors"][0]["eps"] == 1);
    CHECK(j["factors"][1]["type"] == "speh");
    CHECK(j["factors"][1]["k"] == 2);
}

TEST_CASE("segment polynomials serialize as coefficient/monomial pairs") {
    segring::SegmentPoly p = segring::parse_poly("2*seg(a,1,0,2) + 1");
    json j = jsonio::to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["monomial"] == json::array());
    CHECK(j[0]["coeff"] == 1);
    CHECK(j[1]["coeff"] == 2);
    CHECK(j[1]["monomial"][0]["label"] == "a");
    CHECK(j[1]["monomial"][0]["l"] == 2);
}

TEST_CASE("matrices round-trip through JSON") {
    exactmat::RationalMatrix m(2, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(-2);
    json j = jsonio::to_json(m);
    CHECK(j[0][1] == "1/3");
    CHECK(jsonio::matrix_from_json(j) == m);

    // Integer cells are accepted too.
    json plain = json::parse("[[0, 1], [0, 0]]");
    CHECK(jsonio::matrix_from_json(plain) ==
          exactmat::jordan_matrix(partitions::Composition({2})));
}

TEST_CASE("geo reports include the seed") {
    auto report = exactmat::verify_projection_injectivity(partitions::Partition({2}), 5, 99);
    json j = jsonio::to_json(report);
    CHECK(j["seed"] == 99);
    CHECK(j["trials"] == 5);
    CHECK(j["violations"] == 0);
}

TEST_CASE("parsers reject garbage input with parse errors, never crashes") {
    Rng rng(2026);
    const std::string charset = "0123456789^,()+-*/x s_egchinpta";
    auto fuzz_one = [](auto&& parse, const std::string& input) {
        try {
            parse(input);
        } catch (const ParseError&) {
        } catch (const std::invalid_argument&) {
        }
        // Anything else escapes and fails the test.
    };
    for (int round = 0; round < 4000; ++round) {
        std::string s;
        for (long long len = rng.uniform(0, 16); len > 0; --len)
            s += charset[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(charset.size()) - 1))];
        fuzz_one([](const std::string& t) { return partitions::parse_exponential(t); }, s);
        fuzz_one([](const std::string& t) { return partitions::parse_flexible(t); }, s);
        fuzz_one([](const std::string& t) { return reps::parse_rep(t); }, s);
        fuzz_one([](const std::string& t) { return segring::parse_poly(t); }, s);
        fuzz_one([](const std::string& t) { return Rational::parse(t); }, s);
    }
    CHECK(true);
}

TEST_SUITE_END();
