#include "gln/reps.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <tuple>

#include "gln/errors.hpp"
#include "gln/orbits.hpp"

namespace gln::reps {

BasicRep BasicRep::character(int m, int eps, AffineForm t) {
    if (m < 1) throw std::invalid_argument("character size must be >= 1");
    if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
    return BasicRep{FactorKind::Character, m, 0, eps, AffineForm{}, std::move(t)};
}

BasicRep BasicRep::stein(int m, AffineForm s, int eps, AffineForm t) {
    if (m < 1) throw std::invalid_argument("stein half-size must be >= 1");
    if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
    if (s.is_constant() && !(Rational(0) < s.constant() && s.constant() < Rational(1, 2)))
        throw std::invalid_argument("stein parameter must lie in (0,1/2)");
    return BasicRep{FactorKind::Stein, m, 0, eps, std::move(s), std::move(t)};
}

BasicRep BasicRep::speh(int m, int k, AffineForm t) {
    if (m < 1 || k < 1) throw std::invalid_argument("speh parameters must be >= 1");
    return BasicRep{FactorKind::Speh, m, k, 0, AffineForm{}, std::move(t)};
}

BasicRep BasicRep::speh_cs(int m, int k, AffineForm s, AffineForm t) {
    if (m < 1 || k < 1) throw std::invalid_argument("speh-cs parameters must be >= 1");
    if (s.is_constant() && !(Rational(0) < s.constant() && s.constant() < Rational(1, 2)))
        throw std::invalid_argument("speh-cs parameter must lie in (0,1/2)");
    return BasicRep{FactorKind::SpehCS, m, k, 0, std::move(s), std::move(t)};
}

long long BasicRep::ambient() const {
    switch (kind) {
        case FactorKind::Character: return m;
        case FactorKind::Stein: return 2LL * m;
        case FactorKind::Speh: return 2LL * m;
        case FactorKind::SpehCS: return 4LL * m;
    }
    return 0;
}

int BasicRep::depth() const {
    switch (kind) {
        case FactorKind::Character: return 1;
        case FactorKind::Stein: return 2;
        case FactorKind::Speh: return 2;
        case FactorKind::SpehCS: return 4;
    }
    return 0;
}

std::strong_ordering operator<=>(const BasicRep& a, const BasicRep& b) {
    return std::tie(a.kind, a.m, a.k, a.eps, a.s, a.t) <=> std::tie(b.kind, b.m, b.k, b.eps, b.s, b.t);
}

UnitaryRep::UnitaryRep(std::vector<BasicRep> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if ((f.kind == FactorKind::Speh || f.kind == FactorKind::SpehCS) && f.eps != 0)
            throw std::invalid_argument("Speh factors cannot carry a sign twist");
    }
    std::sort(factors_.begin(), factors_.end());
}

long long UnitaryRep::n() const {
    long long total = 0;
    for (const auto& f : factors_) total += f.ambient();
    return total;
}

UnitaryRep UnitaryRep::times(const UnitaryRep& other) const {
    std::vector<BasicRep> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return UnitaryRep(std::move(all));
}

std::vector<int> block_sizes(const UnitaryRep& pi) {
    std::vector<int> blocks;
    for (const auto& f : pi.factors()) {
        int copies = f.depth();  // 1, 2, 2, 4: one block per unit of depth
        for (int c = 0; c < copies; ++c) blocks.push_back(f.m);
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<int>());
    return blocks;
}

Partition associated_partition(const UnitaryRep& pi) {
    return transpose(Partition(block_sizes(pi)));
}

long long rank(const UnitaryRep& pi) {
    if (pi.n() < 1) throw std::invalid_argument("rank requires n >= 1");
    return pi.n() - associated_partition(pi).length();
}

long long gk_dimension(const UnitaryRep& pi) {
    return orbits::dimension(associated_partition(pi)) / 2;
}

long long howe_rank(const UnitaryRep& pi) {
    if (pi.n() < 1) throw std::invalid_argument("howe_rank requires n >= 1");
    return std::min(pi.n() / 2, rank(pi));
}

AdduceResult adduce(const UnitaryRep& pi) {
    if (pi.n() < 1) throw std::invalid_argument("the trivial rep of G_0 has no adduced representation");

    AdduceResult result;
    std::vector<std::vector<std::vector<BasicRep>>> choices;  // per factor, per candidate
    for (const auto& f : pi.factors()) {
        result.depth += f.depth();
        std::vector<std::vector<BasicRep>> per_factor;
        auto survive = [](BasicRep g) -> std::vector<BasicRep> {
            if (g.m == 0) return {};
            return {std::move(g)};
        };
        BasicRep primary = f;
        primary.m -= 1;
        per_factor.push_back(survive(primary));
        if (f.kind == FactorKind::SpehCS && f.k == f.m) {
            result.ambiguous = true;
            if (f.m == 1) {
                per_factor.push_back({});  // the alternate also exhausts to nothing
            } else {
                BasicRep alt = f;
                alt.m -= 1;
                alt.k -= 1;
                alt.s = AffineForm(Rational(1, 2)) - f.s;
                per_factor.push_back({alt});
            }
        }
        choices.push_back(std::move(per_factor));
    }

    // Cartesian product of per-factor candidates; index 0 everywhere is the
    // primary (conjectural) value.
    std::vector<UnitaryRep> candidates;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<BasicRep> factors;
        for (std::size_t i = 0; i < choices.size(); ++i)
            for (const auto& g : choices[i][pick[i]]) factors.push_back(g);
        candidates.emplace_back(std::move(factors));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }

    result.primary = candidates.front();
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        if (c == result.primary) continue;
        if (std::find(result.alternates.begin(), result.alternates.end(), c) == result.alternates.end())
            result.alternates.push_back(c);
    }
    return result;
}

DepthCompositionResult depth_composition(const UnitaryRep& pi) {
    DepthCompositionResult out;
    std::vector<int> depths;
    UnitaryRep current = pi;
    while (current.n() > 0) {
        AdduceResult step = adduce(current);
        depths.push_back(static_cast<int>(step.depth));
        out.ambiguity_encountered = out.ambiguity_encountered || step.ambiguous;
        current = step.primary;
    }
    out.dc = Composition(std::move(depths));
    return out;
}

WhittakerVerdict whittaker_nonvanishing(const UnitaryRep& pi, const Composition& alpha) {
    if (alpha.n() != pi.n())
        throw std::invalid_argument("composition size must match the ambient rank");
    Partition lambda = associated_partition(pi);
    Partition sorted = Partition::sorted_from(alpha);
    if (sorted == lambda) return WhittakerVerdict::GuaranteedTrue;
    if (!dominates(lambda, sorted)) return WhittakerVerdict::GuaranteedFalse;
    return WhittakerVerdict::UpperBoundOnly;
}

std::string to_string(WhittakerVerdict v) {
    switch (v) {
        case WhittakerVerdict::GuaranteedTrue: return "guaranteed-true";
        case WhittakerVerdict::GuaranteedFalse: return "guaranteed-false";
        case WhittakerVerdict::UpperBoundOnly: return "upper-bound-only";
    }
    return "?";
}

UnitaryRep sign_twist(const UnitaryRep& pi) {
    std::vector<BasicRep> factors = pi.factors();
    for (auto& f : factors) {
        if (f.kind == FactorKind::Character || f.kind == FactorKind::Stein) f.eps ^= 1;
    }
    return UnitaryRep(std::move(factors));
}

UnitaryRep unitary_twist(const UnitaryRep& pi, const AffineForm& t) {
    std::vector<BasicRep> factors = pi.factors();
    for (auto& f : factors) f.t += t;
    return UnitaryRep(std::move(factors));
}

ParamRanges param_ranges(const UnitaryRep& pi) {
    ParamRanges ranges;
    for (const auto& f : pi.factors()) {
        if (f.kind == FactorKind::Stein || f.kind == FactorKind::SpehCS) {
            if (!f.s.is_constant() && f.s.constant().is_zero() && f.s.coeffs().size() == 1 &&
                f.s.coeffs().begin()->second == Rational(1)) {
                ranges[f.s.coeffs().begin()->first] = Interval::open(Rational(0), Rational(1, 2));
            }
        }
        for (const auto& [name, c] : f.t.coeffs()) {
            (void)c;
            ranges.try_emplace(name, Interval::all());
        }
    }
    return ranges;
}

// ---------------------------------------------------------------------------
// Parsing and formatting
// ---------------------------------------------------------------------------

namespace {

struct RepLexer {
    const std::string& text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= text.size();
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
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start) throw ParseError("expected identifier", start);
        return text.substr(start, i - start);
    }
    Rational rational() {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '/') {
            ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        }
        if (i == start) throw ParseError("expected number", start);
        return Rational::parse(text.substr(start, i - start));
    }
    long long integer() {
        Rational r = rational();
        if (!r.is_integer()) throw ParseError("expected integer", i);
        if (!r.num().fits_slong_p()) throw ParseError("integer too large", i);
        return r.num().get_si();
    }

    // Affine form: signed sum of atoms, each a rational, an identifier, or a
    // rational immediately followed by an identifier (coefficient).
    AffineForm affine() {
        AffineForm out;
        skip_ws();
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (text[i] == '-') ? -1 : 1;
                ++i;
            } else if (!first) {
                break;
            }
            skip_ws();
            bool have_number = i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])));
            Rational coeff(1);
            if (have_number) coeff = rational();
            bool have_ident =
                i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
            if (!have_number && !have_ident) throw ParseError("expected parameter or number", i);
            if (sign < 0) coeff = -coeff;
            if (have_ident)
                out += AffineForm::parameter(ident(), coeff);
            else
                out += AffineForm(coeff);
            first = false;
        }
        return out;
    }
};

}  // namespace

UnitaryRep parse_rep(const std::string& text) {
    RepLexer lx{text};
    std::vector<BasicRep> factors;
    std::set<std::string> declared;

    auto declare = [&](const AffineForm& form, std::size_t pos) {
        // Only bare identifiers count as declarations of a parameter name.
        if (form.is_constant() || form.coeffs().size() != 1 || !form.constant().is_zero()) return;
        const std::string& name = form.coeffs().begin()->first;
        if (!declared.insert(name).second)
            throw ParseError("parameter name '" + name + "' reused", pos);
    };

    for (;;) {
        std::size_t name_pos = lx.i;
        std::string name = lx.ident();
        lx.expect('(');
        if (name == "chi") {
            long long m = lx.integer();
            long long eps = 0;
            AffineForm t;
            if (lx.peek() == ',') {
                lx.expect(',');
                eps = lx.integer();
                if (lx.peek() == ',') {
                    lx.expect(',');
                    std::size_t pos = lx.i;
                    t = lx.affine();
                    declare(t, pos);
                }
            }
            factors.push_back(BasicRep::character(static_cast<int>(m), static_cast<int>(eps), t));
        } else if (name == "stein") {
            long long size = lx.integer();
            if (size < 2 || size % 2 != 0) throw ParseError("stein size must be even", name_pos);
            lx.expect(',');
            std::size_t spos = lx.i;
            AffineForm s = lx.affine();
            declare(s, spos);
            long long eps = 0;
            AffineForm t;
            if (lx.peek() == ',') {
                lx.expect(',');
                eps = lx.integer();
                lx.expect(',');
                std::size_t pos = lx.i;
                t = lx.affine();
                declare(t, pos);
            }
            factors.push_back(
                BasicRep::stein(static_cast<int>(size / 2), s, static_cast<int>(eps), t));
        } else if (name == "speh") {
            long long size = lx.integer();
            if (size < 2 || size % 2 != 0) throw ParseError("speh size must be even", name_pos);
            lx.expect(',');
            long long k = lx.integer();
            AffineForm t;
            if (lx.peek() == ',') {
                lx.expect(',');
                std::size_t pos = lx.i;
                t = lx.affine();
                declare(t, pos);
            }
            factors.push_back(BasicRep::speh(static_cast<int>(size / 2), static_cast<int>(k), t));
        } else if (name == "spehcs") {
            long long size = lx.integer();
            if (size < 4 || size % 4 != 0)
                throw ParseError("spehcs size must be divisible by 4", name_pos);
            lx.expect(',');
            long long k = lx.integer();
            lx.expect(',');
            std::size_t spos = lx.i;
            AffineForm s = lx.affine();
            declare(s, spos);
            AffineForm t;
            if (lx.peek() == ',') {
                lx.expect(',');
                std::size_t pos = lx.i;
                t = lx.affine();
                declare(t, pos);
            }
            factors.push_back(
                BasicRep::speh_cs(static_cast<int>(size / 4), static_cast<int>(k), s, t));
        } else {
            throw ParseError("unknown factor '" + name + "'", name_pos);
        }
        lx.expect(')');
        if (lx.eof()) break;
        std::size_t xpos = lx.i;
        std::string sep = lx.ident();
        if (sep != "x") throw ParseError("expected 'x' between factors", xpos);
    }
    return UnitaryRep(std::move(factors));
}

std::string format_rep(const UnitaryRep& pi) {
    if (pi.empty()) return "1";
    std::string out;
    for (const auto& f : pi.factors()) {
        if (!out.empty()) out += " x ";
        switch (f.kind) {
            case FactorKind::Character:
                out += "chi(" + std::to_string(f.m);
                if (f.eps != 0 || !f.t.is_zero()) out += "," + std::to_string(f.eps);
                if (!f.t.is_zero()) out += "," + f.t.str();
                out += ")";
                break;
            case FactorKind::Stein:
                out += "stein(" + std::to_string(2 * f.m) + "," + f.s.str();
                if (f.eps != 0 || !f.t.is_zero()) out += "," + std::to_string(f.eps) + "," + f.t.str();
                out += ")";
                break;
            case FactorKind::Speh:
                out += "speh(" + std::to_string(2 * f.m) + "," + std::to_string(f.k);
                if (!f.t.is_zero()) out += "," + f.t.str();
                out += ")";
                break;
            case FactorKind::SpehCS:
                out += "spehcs(" + std::to_string(4 * f.m) + "," + std::to_string(f.k) + "," + f.s.str();
                if (!f.t.is_zero()) out += "," + f.t.str();
                out += ")";
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog enumeration
// ---------------------------------------------------------------------------

namespace {

struct ShapeDescriptor {
    FactorKind kind;
    int m;
    int k;
    long long ambient;
};

std::vector<ShapeDescriptor> shapes_up_to(int n, int kmax) {
    std::vector<ShapeDescriptor> shapes;
    for (int m = 1; m <= n; ++m) shapes.push_back({FactorKind::Character, m, 0, m});
    for (int m = 1; 2 * m <= n; ++m) {
        shapes.push_back({FactorKind::Stein, m, 0, 2LL * m});
        for (int k = 1; k <= kmax; ++k) shapes.push_back({FactorKind::Speh, m, k, 2LL * m});
    }
    for (int m = 1; 4 * m <= n; ++m)
        for (int k = 1; k <= kmax; ++k) shapes.push_back({FactorKind::SpehCS, m, k, 4LL * m});
    return shapes;
}

std::string two_digits(std::size_t v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

UnitaryRep instantiate(const std::vector<ShapeDescriptor>& chosen) {
    std::vector<BasicRep> factors;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const auto& d = chosen[i];
        AffineForm t = AffineForm::parameter("t" + two_digits(i + 1));
        AffineForm s = AffineForm::parameter("s" + two_digits(i + 1));
        switch (d.kind) {
            case FactorKind::Character: factors.push_back(BasicRep::character(d.m, 0, t)); break;
            case FactorKind::Stein: factors.push_back(BasicRep::stein(d.m, s, 0, t)); break;
            case FactorKind::Speh: factors.push_back(BasicRep::speh(d.m, d.k, t)); break;
            case FactorKind::SpehCS: factors.push_back(BasicRep::speh_cs(d.m, d.k, s, t)); break;
        }
    }
    return UnitaryRep(std::move(factors));
}

}  // namespace

std::vector<UnitaryRep> catalog_of_size(int n, int kmax) {
    std::vector<UnitaryRep> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<ShapeDescriptor> shapes = shapes_up_to(n, kmax);
    std::vector<ShapeDescriptor> chosen;
    auto rec = [&](auto&& self, std::size_t first, long long remaining) -> void {
        if (remaining == 0) {
            out.push_back(instantiate(chosen));
            return;
        }
        for (std::size_t i = first; i < shapes.size(); ++i) {
            if (shapes[i].ambient > remaining) continue;
            chosen.push_back(shapes[i]);
            self(self, i, remaining - shapes[i].ambient);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<UnitaryRep> catalog_up_to(int n, int kmax) {
    std::vector<UnitaryRep> out;
    for (int size = 0; size <= n; ++size) {
        auto part = catalog_of_size(size, kmax);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace gln::reps
