#pragma once

#include "gln/partitions.hpp"

namespace gln::orbits {

using partitions::Composition;
using partitions::Partition;

// Nilpotent (co)adjoint orbit of gl(n), identified by its Jordan partition.
// Compositions normalize to their nonincreasing reordering on construction.
class NilpotentOrbit {
public:
    NilpotentOrbit() = default;
    NilpotentOrbit(long long ambient_n, Partition partition);
    explicit NilpotentOrbit(const Composition& alpha);
    explicit NilpotentOrbit(const Partition& lambda);

    long long ambient_n() const { return n_; }
    const Partition& partition() const { return partition_; }

    friend bool operator==(const NilpotentOrbit&, const NilpotentOrbit&) = default;

private:
    long long n_ = 0;
    Partition partition_;
};

// dim O_lambda = n^2 - sum nu_j^2 for nu the transpose. Always even.
long long dimension(const NilpotentOrbit& o);
long long dimension(const Partition& lambda);

struct DimensionBound {
    long long bound;  // n^2 + n - 2 * sum_i i*alpha_i
    bool is_tight;    // alpha already nonincreasing; then bound == dim O_alpha
};
DimensionBound dimension_lower_bound(const Composition& alpha);

// Lusztig-Spaltenstein induction from gl(l) x gl(m) to gl(l+m): the orbit of
// the componentwise sum. dim grows by exactly 2*l*m.
NilpotentOrbit induce(const NilpotentOrbit& o1, const NilpotentOrbit& o2);

// Depth-rigidity verifier. Returns true iff both hypotheses hold:
//   (1) O_{(d,mu)} lies in the closure of O_lambda,
//   (2) dim O_lambda <= dim O_mu + (2n-d)(d-1),
// and in that case additionally asserts the forced conclusion
// lambda = (d,mu) with d >= mu_1, throwing std::logic_error on a
// contradiction.
bool check_depth_rigidity(const Partition& lambda, const Partition& mu, int d);

// dim O_{(d,mu) sorted} - dim O_mu - (2n-d)(d-1) with n = |mu| + d.
// Nonnegative; zero exactly when d >= mu_1.
long long dimmu_gap(const Partition& mu, int d);

}  // namespace gln::orbits
