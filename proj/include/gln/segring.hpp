#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gln/partitions.hpp"

namespace gln::segring {

using partitions::Composition;
using partitions::Partition;

// Segment over an opaque cuspidal: label identifies the cuspidal, depth_d is
// the rank of the group it lives on, start is the twist exponent (the
// segment spans exponents start .. start+length_l-1). Segments that differ
// in any field are distinct ring indeterminates.
struct Segment {
    std::string label;
    int depth_d = 1;
    long long start = 0;
    int length_l = 1;

    long long size() const { return static_cast<long long>(depth_d) * length_l; }

    // Drops the last cuspidal of the progression; empty when length is 1.
    std::optional<Segment> minus() const;

    friend bool operator==(const Segment&, const Segment&) = default;
    friend std::strong_ordering operator<=>(const Segment&, const Segment&) = default;

    std::string str() const;  // "seg(label,d,start,l)"
};

// Product of segment indeterminates, kept sorted.
using Monomial = std::vector<Segment>;

Monomial normalized(Monomial mono);
long long monomial_size(const Monomial& mono);

// Integer-coefficient sparse polynomial in segment indeterminates, graded by
// total size. The zero polynomial has no terms.
class SegmentPoly {
public:
    SegmentPoly() = default;
    static SegmentPoly constant(long long c);
    static SegmentPoly one() { return constant(1); }
    static SegmentPoly indeterminate(const Segment& seg);
    static SegmentPoly from_monomial(Monomial mono, long long coeff = 1);

    const std::map<Monomial, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Monomial& mono) const;
    long long constant_term() const { return coeff(Monomial{}); }

    // Size shared by all terms; nullopt for mixed or zero polynomials.
    std::optional<long long> homogeneous_size() const;
    SegmentPoly component_of_size(long long size) const;

    SegmentPoly operator-() const;
    SegmentPoly& operator+=(const SegmentPoly& o);
    SegmentPoly& operator-=(const SegmentPoly& o);
    friend SegmentPoly operator+(SegmentPoly a, const SegmentPoly& b) { return a += b; }
    friend SegmentPoly operator-(SegmentPoly a, const SegmentPoly& b) { return a -= b; }
    friend SegmentPoly operator*(const SegmentPoly& a, const SegmentPoly& b);
    SegmentPoly scaled(long long c) const;

    friend bool operator==(const SegmentPoly&, const SegmentPoly&) = default;

    std::string str() const;

private:
    void add_term(Monomial mono, long long coeff);
    std::map<Monomial, long long> terms_;
};

// The ring homomorphism with D(<Delta>) = <Delta> + <Delta->, where the
// empty segment is the unit.
SegmentPoly total_derivative(const SegmentPoly& x);

// Size-(n-k) homogeneous component of D(x) for x homogeneous of size n.
// Throws on non-homogeneous input; the zero polynomial maps to zero.
SegmentPoly graded_derivative(const SegmentPoly& x, long long k);

// Applies D^{alpha_1} first, then D^{alpha_2}, ..., finally D^{alpha_len};
// requires |alpha| = size(x). The result is a constant, returned as the
// integer it multiplies the unit by.
long long derivative_word(const SegmentPoly& x, const Composition& alpha);

struct HighestDerivativeResult {
    Monomial reduced;      // product of <Delta_i^->, exhausted segments dropped
    long long depth = 0;   // sum of segment depths
};
HighestDerivativeResult highest_derivative(const Monomial& mono);

// depth_d^{length_l} per segment, combined with the componentwise orbit sum.
Partition wf_partition(const Monomial& mono);

// Iterates highest_derivative to the unit, collecting depths.
Composition depth_composition_padic(const Monomial& mono);

// Expression grammar: integer literals, seg(label,d,start,l), '+', '-', '*',
// '^' powers, parentheses.
SegmentPoly parse_poly(const std::string& text);
// A poly that must be a single monomial with coefficient 1.
Monomial parse_monomial(const std::string& text);
std::string format_poly(const SegmentPoly& p);

}  // namespace gln::segring
