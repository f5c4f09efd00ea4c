#pragma once

#include <cstdint>
#include <vector>

#include "gln/partitions.hpp"
#include "gln/rational.hpp"
#include "gln/rng.hpp"

namespace gln::exactmat {

using partitions::Composition;
using partitions::Partition;

// Dense matrix over exact rationals. No floating point: every rank decision
// is exact.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rational trace() const;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Nilpotent Jordan matrix with diagonal blocks of sizes alpha_1..alpha_k:
// ones on the superdiagonal except at block boundaries.
RationalMatrix jordan_matrix(const Composition& alpha);

// Rank by fraction-free (Bareiss) elimination after clearing denominators.
int rank(const RationalMatrix& m);

bool is_nilpotent(const RationalMatrix& x);

// Jordan partition from ranks of powers: nu_j = rank(X^{j-1}) - rank(X^j),
// lambda = transpose(nu). Throws std::invalid_argument for non-nilpotent X.
Partition partition_of_nilpotent(const RationalMatrix& x);

// Rank-based closure test: rank(J_mu^k) <= rank(J_lambda^k) for all k.
// Independent of the prefix-sum criterion.
bool dominance_oracle(const Partition& lambda, const Partition& mu);

// <X,Y> = trace(XY). Symmetric, conjugation-invariant.
Rational trace_form(const RationalMatrix& x, const RationalMatrix& y);

RationalMatrix inverse(const RationalMatrix& m);  // throws if singular
RationalMatrix conjugate(const RationalMatrix& g, const RationalMatrix& x);  // g x g^{-1}

// Sets the last column to zero (the projection to p_n^* under the trace
// form).
RationalMatrix drop_last_column(const RationalMatrix& m);

RationalMatrix random_invertible(int n, Rng& rng);

// Falsification harness for injectivity of the last-column projection on
// U = {A in O_lambda : e_n' A^{k-1} != 0}, k = lambda_1. Samples conjugates
// A = g J_lambda g^{-1}; for U-hits perturbs the last column by nonzero v
// and checks that B = A + v e_n' is never again nilpotent of type lambda.
// Also verifies Tr(B) = Tr(A) + e_n' v and pr(A) = pr(B) on every sample.
struct GeoReport {
    long long trials = 0;
    long long u_hits = 0;
    long long violations = 0;
    std::uint64_t seed = 0;
    bool trace_identity_ok = true;
};
GeoReport verify_projection_injectivity(const Partition& lambda, long long trials,
                                        std::uint64_t seed);

}  // namespace gln::exactmat
