#pragma once

#include <string>
#include <vector>

#include "gln/affine.hpp"
#include "gln/partitions.hpp"

namespace gln::reps {

using partitions::Composition;
using partitions::Partition;

enum class FactorKind { Character, Stein, Speh, SpehCS };

// One basic factor of the unitary classification of GL(n,R):
//   Character(m; eps, t)  on G_m      (sgn det)^eps |det|^{it}
//   Stein(m; s, eps, t)   on G_{2m}   complementary series, s in (0,1/2)
//   Speh(m, k; t)         on G_{2m}
//   SpehCS(m, k; s, t)    on G_{4m}   Speh complementary series
// Parameters s and t are exact affine forms in named formal parameters; all
// identities computed here are parameter-independent, so keeping them
// symbolic makes that checkable exactly. Speh and SpehCS never carry a sign
// twist (twisting by sign leaves them unchanged).
struct BasicRep {
    FactorKind kind = FactorKind::Character;
    int m = 1;
    int k = 0;     // Speh/SpehCS discrete parameter
    int eps = 0;   // Character/Stein sign
    AffineForm s;  // Stein/SpehCS continuous parameter
    AffineForm t;  // unitary twist |det|^{it}

    static BasicRep character(int m, int eps = 0, AffineForm t = {});
    static BasicRep stein(int m, AffineForm s, int eps = 0, AffineForm t = {});
    static BasicRep speh(int m, int k, AffineForm t = {});
    static BasicRep speh_cs(int m, int k, AffineForm s, AffineForm t = {});

    long long ambient() const;
    // Size drop of one adduction step applied to this factor.
    int depth() const;

    friend bool operator==(const BasicRep&, const BasicRep&) = default;
    friend std::strong_ordering operator<=>(const BasicRep&, const BasicRep&);
};

// Finite multiset of basic factors; the product is commutative, so factors
// are kept in a fixed canonical order. The empty product is the trivial
// representation of G_0.
class UnitaryRep {
public:
    UnitaryRep() = default;
    explicit UnitaryRep(std::vector<BasicRep> factors);

    const std::vector<BasicRep>& factors() const { return factors_; }
    long long n() const;
    bool empty() const { return factors_.empty(); }

    UnitaryRep times(const UnitaryRep& other) const;

    friend bool operator==(const UnitaryRep&, const UnitaryRep&) = default;
    friend std::strong_ordering operator<=>(const UnitaryRep& a, const UnitaryRep& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<BasicRep> factors_;
};

// Block sizes of the classification decomposition: one m per Character, two
// per Stein/Speh, four per Speh-CS. The associated partition is the
// transpose of their nonincreasing sort.
std::vector<int> block_sizes(const UnitaryRep& pi);
Partition associated_partition(const UnitaryRep& pi);

long long rank(const UnitaryRep& pi);          // n - length(AP); requires n >= 1
long long gk_dimension(const UnitaryRep& pi);  // dim O_{AP} / 2
long long howe_rank(const UnitaryRep& pi);     // min(floor(n/2), rank); requires n >= 1

struct AdduceResult {
    UnitaryRep primary;
    long long depth = 0;
    // True when some Speh-CS factor has k == m; then the adduced rep is only
    // determined up to the alternate candidates below (primary follows the
    // conjectural factorwise rule).
    bool ambiguous = false;
    std::vector<UnitaryRep> alternates;  // distinct from primary, deduplicated
};
AdduceResult adduce(const UnitaryRep& pi);  // requires n >= 1

struct DepthCompositionResult {
    Composition dc;
    bool ambiguity_encountered = false;  // DC itself is unaffected either way
};
DepthCompositionResult depth_composition(const UnitaryRep& pi);

// Three-valued verdict: nonvanishing is guaranteed exactly on the associated
// orbit, vanishing is guaranteed outside its closure, and strictly inside
// the closure only the upper bound is asserted.
enum class WhittakerVerdict { GuaranteedTrue, GuaranteedFalse, UpperBoundOnly };
WhittakerVerdict whittaker_nonvanishing(const UnitaryRep& pi, const Composition& alpha);
std::string to_string(WhittakerVerdict v);

UnitaryRep sign_twist(const UnitaryRep& pi);
UnitaryRep unitary_twist(const UnitaryRep& pi, const AffineForm& t);

// Ranges of the formal parameters declared by this rep's factors: a name
// used alone in an s slot has range (0,1/2); everything else is unbounded.
ParamRanges param_ranges(const UnitaryRep& pi);

// Text grammar: chi(m[,eps[,t]]), stein(2m,s[,eps,t]), speh(2m,k[,t]),
// spehcs(4m,k,s[,t]), joined by 'x'.
UnitaryRep parse_rep(const std::string& text);
std::string format_rep(const UnitaryRep& pi);

// All products of factor shapes with total size exactly n (resp. 0..n), the
// discrete parameter running over {1..kmax}, and fresh symbolic parameters
// assigned per factor.
std::vector<UnitaryRep> catalog_of_size(int n, int kmax = 3);
std::vector<UnitaryRep> catalog_up_to(int n, int kmax = 3);

}  // namespace gln::reps
