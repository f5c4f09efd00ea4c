#include "doctest.h"

#include <vector>

#include "gln/exactmat.hpp"
#include "gln/rng.hpp"

using namespace gln;
using namespace gln::exactmat;
using partitions::Composition;
using partitions::Partition;
using partitions::compositions_of;
using partitions::partitions_of;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

// Plain rational Gaussian elimination, used as an independent rank oracle.
int rank_by_rational_elimination(RationalMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("exactmat");

TEST_CASE("jordan matrices") {
    RationalMatrix j2 = jordan_matrix(C({2}));
    CHECK(j2.at(0, 1) == Rational(1));
    CHECK(j2.at(0, 0).is_zero());
    CHECK(j2.at(1, 0).is_zero());
    CHECK(j2.at(1, 1).is_zero());

    CHECK(jordan_matrix(C({1, 1})).is_zero());

    RationalMatrix j21 = jordan_matrix(C({2, 1}));
    int ones = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!j21.at(i, j).is_zero()) ++ones;
    CHECK(ones == 1);
    CHECK(j21.at(0, 1) == Rational(1));

    // J^max(alpha) = 0.
    for (const auto& alpha : compositions_of(5)) {
        RationalMatrix j = jordan_matrix(alpha);
        int top = *std::max_element(alpha.parts().begin(), alpha.parts().end());
        RationalMatrix power = RationalMatrix::identity(5);
        for (int e = 0; e < top; ++e) power = power * j;
        CHECK(power.is_zero());
    }
}

TEST_CASE("rank agrees with a rational-elimination oracle") {
    Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        int n = static_cast<int>(rng.uniform(1, 5));
        int m = static_cast<int>(rng.uniform(1, 5));
        RationalMatrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                a.at(i, j) = rng.uniform(0, 2) == 0 ? Rational(0) : rng.small_rational();
        CHECK(rank(a) == rank_by_rational_elimination(a));
    }
}

TEST_CASE("rank of Jordan powers has the closed form") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            RationalMatrix j = jordan_matrix(lambda.composition());
            RationalMatrix power = RationalMatrix::identity(n);
            for (int k = 1; k <= n; ++k) {
                power = power * j;
                long long expected = 0;
                for (int part : lambda.parts()) expected += std::max(part - k, 0);
                CHECK(rank(power) == expected);
            }
        }
    }
}

TEST_CASE("partition recovery from ranks of powers") {
    CHECK(partition_of_nilpotent(jordan_matrix(C({2, 1}))) == P({2, 1}));
    CHECK(partition_of_nilpotent(RationalMatrix(4, 4)) == P({1, 1, 1, 1}));
    CHECK_THROWS_AS(partition_of_nilpotent(RationalMatrix::identity(2)), std::invalid_argument);

    // Conjugation invariance on random rational conjugates.
    Rng rng(11);
    for (const auto& lambda : {P({3, 1}), P({2, 2, 1}), P({4})}) {
        RationalMatrix j = jordan_matrix(lambda.composition());
        for (int round = 0; round < 5; ++round) {
            RationalMatrix g = random_invertible(static_cast<int>(lambda.n()), rng);
            CHECK(partition_of_nilpotent(conjugate(g, j)) == lambda);
        }
    }
}

TEST_CASE("dominance oracle on the worked pairs") {
    CHECK(dominance_oracle(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominance_oracle(P({2, 2}), P({3, 1})));
    CHECK(dominance_oracle(P({2, 2}), P({2, 2})));
    CHECK_THROWS_AS(dominance_oracle(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("trace form") {
    CHECK(trace_form(RationalMatrix::identity(4), RationalMatrix::identity(4)) == Rational(4));
    RationalMatrix j2 = jordan_matrix(C({2}));
    CHECK(trace_form(j2, j2).is_zero());
    CHECK_THROWS_AS(trace_form(RationalMatrix::identity(2), RationalMatrix::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(trace_form(RationalMatrix(2, 3), RationalMatrix(3, 2)),
                    std::invalid_argument);

    // Symmetry and conjugation invariance on random samples.
    Rng rng(13);
    for (int round = 0; round < 10; ++round) {
        int n = 3;
        RationalMatrix x(n, n), y(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                x.at(i, j) = rng.small_rational();
                y.at(i, j) = rng.small_rational();
            }
        CHECK(trace_form(x, y) == trace_form(y, x));
        RationalMatrix g = random_invertible(n, rng);
        CHECK(trace_form(conjugate(g, x), conjugate(g, y)) == trace_form(x, y));
    }
}

TEST_CASE("trace-form Gram matrix of the elementary basis is a permutation") {
    for (int n = 2; n <= 5; ++n) {
        // Basis E_{ij} in row-major order; Gram entry should be 1 exactly
        // when the pair is (E_{ij}, E_{ji}).
        std::vector<RationalMatrix> basis;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RationalMatrix e(n, n);
                e.at(i, j) = Rational(1);
                basis.push_back(e);
            }
        for (int a = 0; a < n * n; ++a) {
            int ones = 0;
            for (int b = 0; b < n * n; ++b) {
                Rational g = trace_form(basis[a], basis[b]);
                int ai = a / n, aj = a % n, bi = b / n, bj = b % n;
                bool transposed_pair = (aj == bi && ai == bj);
                CHECK(g == (transposed_pair ? Rational(1) : Rational(0)));
                if (!g.is_zero()) ++ones;
            }
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("projection-injectivity harness reports no violations") {
    auto r1 = verify_projection_injectivity(P({2}), 100, 1);
    CHECK(r1.violations == 0);
    CHECK(r1.trace_identity_ok);
    CHECK(r1.u_hits > 0);

    auto r2 = verify_projection_injectivity(P({3, 1}), 100, 2);
    CHECK(r2.violations == 0);
    CHECK(r2.u_hits > 0);

    // Degenerate orbit: every conjugate is zero, U is all of it.
    auto r3 = verify_projection_injectivity(P({1, 1, 1}), 100, 3);
    CHECK(r3.violations == 0);
    CHECK(r3.u_hits == 100);

    CHECK_THROWS_AS(verify_projection_injectivity(P({}), 10, 1), std::invalid_argument);
}

TEST_SUITE_END();
