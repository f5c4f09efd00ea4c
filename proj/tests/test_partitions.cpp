#include "doctest.h"

#include <algorithm>
#include <vector>

#include "gln/errors.hpp"
#include "gln/partitions.hpp"

using namespace gln::partitions;

namespace {

// Independent transpose oracle: build the Young diagram as a grid and count
// filled boxes per column.
Partition transpose_by_grid(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) cols.resize(lambda.parts().front());
    for (int row : lambda.parts())
        for (int c = 0; c < row; ++c) ++cols[c];
    return Partition(std::move(cols));
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_SUITE_BEGIN("partitions");

TEST_CASE("reorder sorts both ways and preserves the multiset") {
    CHECK(reorder(C({1, 3, 2}), Direction::Nonincreasing) == C({3, 2, 1}));
    CHECK(reorder(C({1, 3, 2}), Direction::Nondecreasing) == C({1, 2, 3}));
    CHECK(reorder(C({2, 2}), Direction::Nonincreasing) == C({2, 2}));
    CHECK(reorder(C({2, 2}), Direction::Nondecreasing) == C({2, 2}));
    CHECK(reorder(C({1, 4, 1, 2}), Direction::Nonincreasing) == C({4, 2, 1, 1}));
}

TEST_CASE("transpose matches the box-count oracle") {
    CHECK(transpose(P({4, 4, 2, 1, 1, 1})) == transpose_by_grid(P({4, 4, 2, 1, 1, 1})));
    CHECK(transpose(P({4, 4, 2, 1, 1, 1})) == P({6, 3, 2, 2}));
    CHECK(transpose(P({5})) == P({1, 1, 1, 1, 1}));
    CHECK(transpose(P({})) == P({}));
}

TEST_CASE("transpose is an involution, exhaustively to n = 30") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            CHECK(transpose(transpose(lambda)) == lambda);
            CHECK(transpose(lambda) == transpose_by_grid(lambda));
            CHECK(transpose(lambda).n() == lambda.n());
        }
    }
}

TEST_CASE("orbit_sum componentwise examples") {
    CHECK(orbit_sum(P({3, 1}), P({2, 2})) == P({5, 3}));
    CHECK(orbit_sum(P({4, 2, 1}), P({})) == P({4, 2, 1}));
    CHECK(orbit_sum(P({1, 1, 1}), P({1})) == P({2, 1, 1}));
}

TEST_CASE("orbit_sum transposes to column concatenation, pairs up to total 15") {
    for (int a = 0; a <= 15; ++a) {
        auto as = partitions_of(a);
        for (int b = 0; a + b <= 15; ++b) {
            for (const auto& lambda : as) {
                for (const auto& mu : partitions_of(b)) {
                    Partition sum = orbit_sum(lambda, mu);
                    CHECK(sum.n() == lambda.n() + mu.n());
                    CHECK(sum == orbit_sum(mu, lambda));
                    std::vector<int> cols = transpose(lambda).parts();
                    auto mu_cols = transpose(mu).parts();
                    cols.insert(cols.end(), mu_cols.begin(), mu_cols.end());
                    std::sort(cols.begin(), cols.end(), std::greater<int>());
                    CHECK(transpose(sum) == Partition(cols));
                }
            }
        }
    }
}

TEST_CASE("orbit_sum is associative, triples up to total 15") {
    for (int a = 1; a <= 13; ++a) {
        for (int b = 1; a + b <= 14; ++b) {
            for (int c = 1; a + b + c <= 15; ++c) {
                for (const auto& x : partitions_of(a))
                    for (const auto& y : partitions_of(b))
                        for (const auto& z : partitions_of(c))
                            CHECK(orbit_sum(orbit_sum(x, y), z) == orbit_sum(x, orbit_sum(y, z)));
            }
        }
    }
}

TEST_CASE("dominance examples") {
    CHECK(dominates(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK(dominates(P({2, 2}), P({2, 2})));
    CHECK_THROWS_AS(dominates(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on each n up to 12") {
    for (int n = 0; n <= 12; ++n) {
        auto parts = partitions_of(n);
        for (const auto& a : parts) CHECK(dominates(a, a));
        for (const auto& a : parts)
            for (const auto& b : parts)
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (!dominates(a, b)) continue;
                for (const auto& c : parts)
                    if (dominates(b, c)) CHECK(dominates(a, c));
            }
    }
}

TEST_CASE("exponential notation") {
    CHECK(parse_exponential("4^2 2 1^3") == C({4, 4, 2, 1, 1, 1}));
    CHECK(parse_exponential("3") == C({3}));
    CHECK(parse_exponential("4^2 2^1 1^3") == C({4, 4, 2, 1, 1, 1}));
    CHECK(format_exponential(C({4, 4, 2, 1, 1, 1})) == "4^2 2 1^3");
    CHECK_THROWS_AS(parse_exponential("2^0"), gln::ParseError);
    CHECK_THROWS_AS(parse_exponential(""), gln::ParseError);
    CHECK_THROWS_AS(parse_exponential("2^"), gln::ParseError);
    CHECK_THROWS_AS(parse_exponential("0"), gln::ParseError);

    try {
        parse_exponential("4^2 0^3");
    } catch (const gln::ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("exponential round-trips on all partitions up to 12") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(parse_exponential(format_exponential(lambda.composition())) ==
                  lambda.composition());
}

TEST_CASE("flexible partition syntax") {
    CHECK(parse_flexible("2^2") == C({2, 2}));
    CHECK(parse_flexible("2,2") == C({2, 2}));
    CHECK(parse_flexible("(3,1,1)") == C({3, 1, 1}));
    CHECK(parse_flexible(" 3 , 1 ") == C({3, 1}));
    CHECK(parse_flexible("()") == C({}));
}

TEST_CASE("composition invariants are enforced") {
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition::sorted_from(C({1, 2})) == P({2, 1}));
    CHECK(C({}).n() == 0);
}

TEST_SUITE_END();
