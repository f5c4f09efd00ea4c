#pragma once

#include <string>
#include <vector>

#include "gln/affine.hpp"
#include "gln/reps.hpp"

namespace gln::infchar {

// Exact complex scalar with affine real and imaginary parts over named
// formal parameters. Equality is coefficientwise, which is equality for
// generic parameter values.
struct ExactScalar {
    AffineForm re, im;

    // z -> -conj(z): negate the real part, keep the imaginary part.
    ExactScalar negbar() const { return {-re, im}; }
    ExactScalar shifted_re(const Rational& delta) const { return {re + AffineForm(delta), im}; }

    friend bool operator==(const ExactScalar&, const ExactScalar&) = default;
    friend std::strong_ordering operator<=>(const ExactScalar&, const ExactScalar&) = default;

    std::string str() const;
};

// Multiset of exact scalars, kept canonically sorted.
class InfChar {
public:
    InfChar() = default;
    explicit InfChar(std::vector<ExactScalar> entries);

    const std::vector<ExactScalar>& entries() const { return entries_; }
    long long size() const { return static_cast<long long>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    InfChar disjoint_union(const InfChar& other) const;
    InfChar shifted_re(const Rational& delta) const;

    // Every z has the same multiplicity as -conj(z).
    bool is_symmetric() const;
    bool submultiset_of(const InfChar& other) const;

    friend bool operator==(const InfChar&, const InfChar&) = default;
    friend std::strong_ordering operator<=>(const InfChar& a, const InfChar& b) {
        return a.entries_ <=> b.entries_;
    }

    std::string str() const;

private:
    std::vector<ExactScalar> entries_;
};

// Arithmetic progression of length m, mean z, common difference 1:
// { z + (m+1)/2 - j : j = 1..m }.
InfChar segment(int m, const ExactScalar& z);

// Infinitesimal character of a classified unitary rep; cardinality n, and
// symmetric whenever all twists are unitary.
InfChar inf_char(const reps::UnitaryRep& pi);

// All symmetric submultisets of xi with the given cardinality, formal
// parameters treated generically. Entries are grouped into orbits under
// z -> -conj(z); a symmetric submultiset picks equal multiplicities from the
// two sides of each orbit. Deterministic canonical order, no duplicates.
std::vector<InfChar> symmetric_submultisets(const InfChar& xi, long long target_size);

struct CassOsCandidate {
    reps::UnitaryRep adduced;
    bool passes = false;
};

// Consistency check of one adduction step against the infinitesimal
// character: xi(A pi) shifted by -1/2 must be a submultiset of xi(pi) with
// deficit exactly depth(pi). Checks the primary value and, for ambiguous
// Speh-CS steps, every alternate candidate.
struct CassOsReport {
    long long depth = 0;
    std::vector<CassOsCandidate> candidates;  // primary first
    bool all_pass() const;
};
CassOsReport casselman_osborne_check(const reps::UnitaryRep& pi);

struct ShapeVerdict {
    std::string shape;
    bool excluded = false;
    bool is_self = false;  // the shape of the rep under test
    std::string reason;
};

// Verifies that psi(4m,k,s;it) is pinned down by its associated partition
// and infinitesimal character: condition (1): no entry has generically
// integral 2 Re(z); condition (2): max 2 Re(z) = m-1+k+2s; plus an
// exhaustive scan of all classification shapes of total size 4m showing
// none other can carry the same (AP, xi) pair.
struct UniquenessReport {
    bool re_never_generically_integer = false;
    AffineForm max_two_re;
    bool max_matches_expected = false;
    bool unique = false;
    std::vector<ShapeVerdict> scan;
};
UniquenessReport uniqueness_of_spehcs(int m, int k, const std::string& s_name,
                                      const std::string& t_name);

}  // namespace gln::infchar
