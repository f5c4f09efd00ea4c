#include "gln/segring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gln/errors.hpp"

namespace gln::segring {

std::optional<Segment> Segment::minus() const {
    if (length_l == 1) return std::nullopt;
    return Segment{label, depth_d, start, length_l - 1};
}

std::string Segment::str() const {
    return "seg(" + label + "," + std::to_string(depth_d) + "," + std::to_string(start) + "," +
           std::to_string(length_l) + ")";
}

Monomial normalized(Monomial mono) {
    std::sort(mono.begin(), mono.end());
    return mono;
}

long long monomial_size(const Monomial& mono) {
    long long total = 0;
    for (const auto& seg : mono) total += seg.size();
    return total;
}

void SegmentPoly::add_term(Monomial mono, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SegmentPoly SegmentPoly::constant(long long c) {
    SegmentPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

SegmentPoly SegmentPoly::indeterminate(const Segment& seg) {
    SegmentPoly p;
    p.add_term(Monomial{seg}, 1);
    return p;
}

SegmentPoly SegmentPoly::from_monomial(Monomial mono, long long coeff) {
    SegmentPoly p;
    p.add_term(normalized(std::move(mono)), coeff);
    return p;
}

long long SegmentPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<long long> SegmentPoly::homogeneous_size() const {
    std::optional<long long> size;
    for (const auto& [mono, c] : terms_) {
        long long s = monomial_size(mono);
        if (!size)
            size = s;
        else if (*size != s)
            return std::nullopt;
    }
    return size;
}

SegmentPoly SegmentPoly::component_of_size(long long size) const {
    SegmentPoly out;
    for (const auto& [mono, c] : terms_)
        if (monomial_size(mono) == size) out.add_term(mono, c);
    return out;
}

SegmentPoly SegmentPoly::operator-() const {
    SegmentPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

SegmentPoly& SegmentPoly::operator+=(const SegmentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

SegmentPoly& SegmentPoly::operator-=(const SegmentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

SegmentPoly operator*(const SegmentPoly& a, const SegmentPoly& b) {
    SegmentPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial prod;
            prod.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(prod));
            out.add_term(std::move(prod), ca * cb);
        }
    }
    return out;
}

SegmentPoly SegmentPoly::scaled(long long c) const {
    SegmentPoly out;
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

std::string SegmentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        long long abs_c = c < 0 ? -c : c;
        if (abs_c != 1 || mono.empty()) out += std::to_string(abs_c);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (abs_c != 1 || i) out += "*";
            out += mono[i].str();
        }
    }
    return out;
}

SegmentPoly total_derivative(const SegmentPoly& x) {
    SegmentPoly out;
    for (const auto& [mono, c] : x.terms()) {
        // Expand the product of (<Delta> + <Delta^->) over the factors.
        SegmentPoly expansion = SegmentPoly::constant(c);
        for (const auto& seg : mono) {
            SegmentPoly binomial = SegmentPoly::indeterminate(seg);
            if (auto m = seg.minus())
                binomial += SegmentPoly::indeterminate(*m);
            else
                binomial += SegmentPoly::one();
            expansion = expansion * binomial;
        }
        out += expansion;
    }
    return out;
}

SegmentPoly graded_derivative(const SegmentPoly& x, long long k) {
    if (x.is_zero()) return x;
    auto size = x.homogeneous_size();
    if (!size) throw std::invalid_argument("graded derivative requires a homogeneous polynomial");
    if (k < 0 || k > *size) throw std::invalid_argument("derivative order out of range");
    return total_derivative(x).component_of_size(*size - k);
}

long long derivative_word(const SegmentPoly& x, const Composition& alpha) {
    if (!x.is_zero()) {
        auto size = x.homogeneous_size();
        if (!size) throw std::invalid_argument("derivative word requires a homogeneous polynomial");
        if (*size != alpha.n())
            throw std::invalid_argument("composition must sum to the polynomial size");
    } else if (alpha.n() != 0) {
        return 0;
    }
    SegmentPoly current = x;
    for (int part : alpha.parts()) {
        if (current.is_zero()) return 0;
        current = graded_derivative(current, part);
    }
    return current.constant_term();
}

HighestDerivativeResult highest_derivative(const Monomial& mono) {
    HighestDerivativeResult out;
    for (const auto& seg : mono) {
        out.depth += seg.depth_d;
        if (auto m = seg.minus()) out.reduced.push_back(*m);
    }
    out.reduced = normalized(std::move(out.reduced));
    return out;
}

Partition wf_partition(const Monomial& mono) {
    Partition total;
    for (const auto& seg : mono) {
        std::vector<int> parts(seg.length_l, seg.depth_d);
        total = orbit_sum(total, Partition(std::move(parts)));
    }
    return total;
}

Composition depth_composition_padic(const Monomial& mono) {
    std::vector<int> depths;
    Monomial current = normalized(mono);
    while (!current.empty()) {
        HighestDerivativeResult step = highest_derivative(current);
        depths.push_back(static_cast<int>(step.depth));
        current = std::move(step.reduced);
    }
    return Composition(std::move(depths));
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    }
    long long integer() {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits = i;
        long long value = 0;
        bool neg = text[start] == '-';
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000000) throw ParseError("integer too large", start);
            ++i;
        }
        if (i == digits) throw ParseError("expected integer", start);
        return neg ? -value : value;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start) throw ParseError("expected identifier", start);
        return text.substr(start, i - start);
    }

    SegmentPoly expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text[i] == '-';
            ++i;
        }
        SegmentPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i;
                SegmentPoly t = term();
                if (c == '+')
                    acc += t;
                else
                    acc -= t;
            } else {
                break;
            }
        }
        return acc;
    }

    SegmentPoly term() {
        SegmentPoly acc = factor();
        while (peek() == '*') {
            ++i;
            acc = acc * factor();
        }
        return acc;
    }

    SegmentPoly factor() {
        SegmentPoly base = atom();
        if (peek() == '^') {
            ++i;
            std::size_t pos = i;
            long long e = integer();
            if (e < 0) throw ParseError("exponent must be >= 0", pos);
            SegmentPoly out = SegmentPoly::one();
            for (long long j = 0; j < e; ++j) out = out * base;
            return out;
        }
        return base;
    }

    SegmentPoly atom() {
        char c = peek();
        if (c == '(') {
            ++i;
            SegmentPoly inner = expression();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SegmentPoly::constant(integer());
        std::size_t pos = i;
        std::string name = ident();
        if (name != "seg") throw ParseError("expected 'seg' or a number", pos);
        expect('(');
        std::string label = ident();
        expect(',');
        long long d = integer();
        if (d < 1) throw ParseError("segment depth must be >= 1", pos);
        expect(',');
        long long start = integer();
        expect(',');
        long long l = integer();
        if (l < 1) throw ParseError("segment length must be >= 1", pos);
        expect(')');
        return SegmentPoly::indeterminate(
            Segment{label, static_cast<int>(d), start, static_cast<int>(l)});
    }
};

}  // namespace

SegmentPoly parse_poly(const std::string& text) {
    PolyParser parser{text};
    SegmentPoly p = parser.expression();
    parser.skip_ws();
    if (parser.i != text.size()) throw ParseError("trailing characters", parser.i);
    return p;
}

Monomial parse_monomial(const std::string& text) {
    SegmentPoly p = parse_poly(text);
    if (p.terms().size() != 1 || p.terms().begin()->second != 1)
        throw ParseError("expected a single monomial with coefficient 1", 0);
    return p.terms().begin()->first;
}

std::string format_poly(const SegmentPoly& p) { return p.str(); }

}  // namespace gln::segring
