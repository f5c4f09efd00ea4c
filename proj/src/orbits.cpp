#include "gln/orbits.hpp"

#include <stdexcept>
#include <vector>

namespace gln::orbits {

NilpotentOrbit::NilpotentOrbit(long long ambient_n, Partition partition)
    : n_(ambient_n), partition_(std::move(partition)) {
    if (partition_.n() != n_)
        throw std::invalid_argument("orbit partition must sum to the ambient rank");
}

NilpotentOrbit::NilpotentOrbit(const Composition& alpha)
    : n_(alpha.n()), partition_(Partition::sorted_from(alpha)) {}

NilpotentOrbit::NilpotentOrbit(const Partition& lambda) : n_(lambda.n()), partition_(lambda) {}

long long dimension(const Partition& lambda) {
    long long n = lambda.n();
    long long sum_sq = 0;
    Partition nu = transpose(lambda);
    for (int nu_j : nu.parts()) sum_sq += static_cast<long long>(nu_j) * nu_j;
    return n * n - sum_sq;
}

long long dimension(const NilpotentOrbit& o) { return dimension(o.partition()); }

DimensionBound dimension_lower_bound(const Composition& alpha) {
    long long n = alpha.n();
    long long weighted = 0;
    for (int i = 1; i <= alpha.length(); ++i) weighted += static_cast<long long>(i) * alpha.part(i);
    return {n * n + n - 2 * weighted, alpha.is_nonincreasing()};
}

NilpotentOrbit induce(const NilpotentOrbit& o1, const NilpotentOrbit& o2) {
    return NilpotentOrbit(o1.ambient_n() + o2.ambient_n(),
                          orbit_sum(o1.partition(), o2.partition()));
}

bool check_depth_rigidity(const Partition& lambda, const Partition& mu, int d) {
    if (d < 1 || lambda.n() != mu.n() + d)
        throw std::invalid_argument("expected |lambda| = |mu| + d with d >= 1");
    long long n = lambda.n();

    std::vector<int> with_d = mu.parts();
    with_d.insert(with_d.begin(), d);
    Partition d_mu_sorted = Partition::sorted_from(Composition(with_d));

    bool closure = dominates(lambda, d_mu_sorted);
    bool dim_bound = dimension(lambda) <= dimension(mu) + (2 * n - d) * (d - 1);
    if (!(closure && dim_bound)) return false;

    if (lambda != d_mu_sorted || d < mu.part(1))
        throw std::logic_error("depth rigidity hypotheses hold but conclusion fails");
    return true;
}

long long dimmu_gap(const Partition& mu, int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    long long n = mu.n() + d;
    std::vector<int> with_d = mu.parts();
    with_d.insert(with_d.begin(), d);
    Partition sorted = Partition::sorted_from(Composition(with_d));
    return dimension(sorted) - dimension(mu) - (2 * n - d) * (d - 1);
}

}  // namespace gln::orbits
