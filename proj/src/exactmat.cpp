#include "gln/exactmat.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace gln::exactmat {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Rational RationalMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    RationalMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

RationalMatrix jordan_matrix(const Composition& alpha) {
    int n = static_cast<int>(alpha.n());
    RationalMatrix m(n, n);
    std::vector<bool> boundary(n + 1, false);
    long long acc = 0;
    for (int part : alpha.parts()) {
        acc += part;
        if (acc <= n) boundary[static_cast<int>(acc)] = true;
    }
    for (int i = 1; i < n; ++i)
        if (!boundary[i]) m.at(i - 1, i) = Rational(1);
    return m;
}

int rank(const RationalMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    // Clear denominators per row; row scaling preserves rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm_den = 1;
        for (int j = 0; j < cols; ++j) {
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), m.at(i, j).den().get_mpz_t());
            lcm_den = g;
        }
        for (int j = 0; j < cols; ++j)
            a[i][j] = m.at(i, j).num() * (lcm_den / m.at(i, j).den());
    }

    // Bareiss fraction-free elimination.
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

bool is_nilpotent(const RationalMatrix& x) {
    if (!x.is_square()) throw std::invalid_argument("nilpotency of a non-square matrix");
    RationalMatrix power = x;
    for (int e = 1; e <= x.rows(); ++e) {
        if (power.is_zero()) return true;
        if (e < x.rows()) power = power * x;
    }
    return power.is_zero();
}

Partition partition_of_nilpotent(const RationalMatrix& x) {
    if (!is_nilpotent(x)) throw std::invalid_argument("matrix is not nilpotent");
    std::vector<int> nu;
    int prev_rank = x.rows();
    RationalMatrix power = RationalMatrix::identity(x.rows());
    while (prev_rank > 0) {
        power = power * x;
        int r = rank(power);
        nu.push_back(prev_rank - r);
        prev_rank = r;
    }
    return transpose(Partition(std::move(nu)));
}

bool dominance_oracle(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("dominance oracle compares partitions of the same n");
    RationalMatrix jl = jordan_matrix(lambda.composition());
    RationalMatrix jm = jordan_matrix(mu.composition());
    RationalMatrix pl = jl, pm = jm;
    for (long long k = 1; k <= lambda.n(); ++k) {
        if (rank(pm) > rank(pl)) return false;
        if (k < lambda.n()) {
            pl = pl * jl;
            pm = pm * jm;
        }
    }
    return true;
}

Rational trace_form(const RationalMatrix& x, const RationalMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw std::invalid_argument("trace form needs square matrices of equal size");
    Rational t;
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) t += x.at(i, k) * y.at(k, i);
    return t;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    int n = m.rows();
    RationalMatrix a = m, inv = RationalMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(pivot, j));
                std::swap(inv.at(c, j), inv.at(pivot, j));
            }
        }
        Rational p = a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

RationalMatrix conjugate(const RationalMatrix& g, const RationalMatrix& x) {
    return g * x * inverse(g);
}

RationalMatrix drop_last_column(const RationalMatrix& m) {
    RationalMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) out.at(i, m.cols() - 1) = Rational(0);
    return out;
}

RationalMatrix random_invertible(int n, Rng& rng) {
    for (;;) {
        RationalMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = rng.small_rational();
        if (rank(g) == n) return g;
    }
}

GeoReport verify_projection_injectivity(const Partition& lambda, long long trials,
                                        std::uint64_t seed) {
    if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
    int n = static_cast<int>(lambda.n());
    int k = lambda.part(1);
    RationalMatrix j_lambda = jordan_matrix(lambda.composition());

    Rng rng(seed);
    GeoReport report;
    report.seed = seed;
    report.trials = trials;

    for (long long trial = 0; trial < trials; ++trial) {
        RationalMatrix g = random_invertible(n, rng);
        RationalMatrix a = conjugate(g, j_lambda);

        // Membership in U: the last row of A^{k-1} is nonzero.
        RationalMatrix power = RationalMatrix::identity(n);
        for (int e = 1; e < k; ++e) power = power * a;
        bool u_hit = false;
        for (int j = 0; j < n; ++j)
            if (!power.at(n - 1, j).is_zero()) u_hit = true;
        if (!u_hit) continue;
        ++report.u_hits;

        for (int sample = 0; sample < 3; ++sample) {
            std::vector<Rational> v(n);
            bool nonzero = false;
            while (!nonzero) {
                for (int i = 0; i < n; ++i) {
                    v[i] = rng.small_rational();
                    if (!v[i].is_zero()) nonzero = true;
                }
            }
            RationalMatrix b = a;
            for (int i = 0; i < n; ++i) b.at(i, n - 1) += v[i];

            // Base identity of the proof: Tr(B) = Tr(A) + e_n' v.
            if (b.trace() != a.trace() + v[n - 1]) {
                report.trace_identity_ok = false;
                ++report.violations;
            }
            // A and B agree after zeroing the last column, by construction.
            if (drop_last_column(a) != drop_last_column(b)) ++report.violations;

            // Injectivity would be refuted by a nilpotent B of type lambda.
            if (is_nilpotent(b) && partition_of_nilpotent(b) == lambda) ++report.violations;
        }
    }
    return report;
}

}  // namespace gln::exactmat
