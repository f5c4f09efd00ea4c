#pragma once

#include <compare>
#include <map>
#include <string>

#include "gln/rational.hpp"

namespace gln {

// Affine form  c + sum_i q_i * x_i  with exact rational coefficients over
// named formal parameters. Two forms are equal iff all coefficients match,
// which is equality for generic (algebraically independent) parameter values.
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Rational constant) : const_(std::move(constant)) {}
    AffineForm(long long constant) : const_(constant) {}

    static AffineForm parameter(const std::string& name, Rational coeff = Rational(1));

    const Rational& constant() const { return const_; }
    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const std::string& name) const;

    bool is_zero() const { return const_.is_zero() && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }
    // True iff the form takes an integer value for generic parameter values,
    // i.e. it is a constant integer.
    bool is_generically_integer() const { return coeffs_.empty() && const_.is_integer(); }

    AffineForm operator-() const;
    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator-=(const AffineForm& o);
    AffineForm& operator*=(const Rational& r);

    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& r) { return a *= r; }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b);

    // "0", "1/2", "s", "1/2-s+2t"
    std::string str() const;

private:
    Rational const_;
    std::map<std::string, Rational> coeffs_;  // no zero entries
};

// Interval with rational endpoints, possibly unbounded; used to decide signs
// of affine forms given parameter ranges.
struct Interval {
    bool lo_unbounded = true;
    bool hi_unbounded = true;
    Rational lo, hi;
    bool lo_open = true, hi_open = true;

    static Interval all() { return {}; }
    static Interval open(Rational lo, Rational hi) { return {false, false, std::move(lo), std::move(hi), true, true}; }
    static Interval point(const Rational& v) { return {false, false, v, v, false, false}; }
};

using ParamRanges = std::map<std::string, Interval>;

// Range of the form when each parameter varies over its interval. Parameters
// absent from the map are unbounded.
Interval range_of(const AffineForm& form, const ParamRanges& ranges);

enum class Order { Less, Equal, Greater, Unknown };

// Sign of (a - b) over the given ranges: Equal only for identical forms,
// Unknown when the difference's range straddles zero.
Order compare(const AffineForm& a, const AffineForm& b, const ParamRanges& ranges);

}  // namespace gln
