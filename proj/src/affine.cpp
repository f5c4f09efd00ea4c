#include "gln/affine.hpp"

namespace gln {

AffineForm AffineForm::parameter(const std::string& name, Rational coeff) {
    AffineForm f;
    if (!coeff.is_zero()) f.coeffs_.emplace(name, std::move(coeff));
    return f;
}

Rational AffineForm::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

AffineForm AffineForm::operator-() const {
    AffineForm out;
    out.const_ = -const_;
    for (const auto& [name, c] : coeffs_) out.coeffs_.emplace(name, -c);
    return out;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    const_ += o.const_;
    for (const auto& [name, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) { return *this += -o; }

AffineForm& AffineForm::operator*=(const Rational& r) {
    if (r.is_zero()) {
        const_ = Rational(0);
        coeffs_.clear();
        return *this;
    }
    const_ *= r;
    for (auto& [name, c] : coeffs_) c *= r;
    return *this;
}

std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
    if (auto c = a.const_ <=> b.const_; c != 0) return c;
    auto ai = a.coeffs_.begin(), bi = b.coeffs_.begin();
    for (; ai != a.coeffs_.end() && bi != b.coeffs_.end(); ++ai, ++bi) {
        if (auto c = ai->first <=> bi->first; c != 0) return c;
        if (auto c = ai->second <=> bi->second; c != 0) return c;
    }
    if (ai != a.coeffs_.end()) return std::strong_ordering::greater;
    if (bi != b.coeffs_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string AffineForm::str() const {
    std::string out;
    if (!const_.is_zero() || coeffs_.empty()) out = const_.str();
    for (const auto& [name, c] : coeffs_) {
        if (c.sign() > 0 && !out.empty()) out += '+';
        if (c == Rational(1)) {
        } else if (c == Rational(-1)) {
            out += '-';
        } else {
            out += c.str();
        }
        out += name;
    }
    return out;
}

Interval range_of(const AffineForm& form, const ParamRanges& ranges) {
    Interval acc = Interval::point(form.constant());
    for (const auto& [name, c] : form.coeffs()) {
        auto it = ranges.find(name);
        Interval pr = (it == ranges.end()) ? Interval::all() : it->second;
        // Scale by c (nonzero by invariant).
        Interval scaled;
        if (c.sign() > 0) {
            scaled = pr;
        } else {
            scaled.lo_unbounded = pr.hi_unbounded;
            scaled.hi_unbounded = pr.lo_unbounded;
            scaled.lo = pr.hi;
            scaled.hi = pr.lo;
            scaled.lo_open = pr.hi_open;
            scaled.hi_open = pr.lo_open;
        }
        if (!scaled.lo_unbounded) scaled.lo *= c;
        if (!scaled.hi_unbounded) scaled.hi *= c;
        // Add to the accumulator.
        Interval next;
        next.lo_unbounded = acc.lo_unbounded || scaled.lo_unbounded;
        next.hi_unbounded = acc.hi_unbounded || scaled.hi_unbounded;
        if (!next.lo_unbounded) {
            next.lo = acc.lo + scaled.lo;
            next.lo_open = acc.lo_open || scaled.lo_open;
        }
        if (!next.hi_unbounded) {
            next.hi = acc.hi + scaled.hi;
            next.hi_open = acc.hi_open || scaled.hi_open;
        }
        acc = next;
    }
    return acc;
}

Order compare(const AffineForm& a, const AffineForm& b, const ParamRanges& ranges) {
    if (a == b) return Order::Equal;
    Interval r = range_of(a - b, ranges);
    Rational zero(0);
    bool strictly_pos = !r.lo_unbounded && (r.lo > zero || (r.lo == zero && r.lo_open));
    bool strictly_neg = !r.hi_unbounded && (r.hi < zero || (r.hi == zero && r.hi_open));
    if (strictly_pos) return Order::Greater;
    if (strictly_neg) return Order::Less;
    bool pinned_zero = !r.lo_unbounded && !r.hi_unbounded && r.lo == zero && r.hi == zero &&
                       !r.lo_open && !r.hi_open;
    if (pinned_zero) return Order::Equal;
    return Order::Unknown;
}

}  // namespace gln
