#include "gln/infchar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gln::infchar {

std::string ExactScalar::str() const {
    if (im.is_zero()) return re.str();
    std::string out;
    if (!re.is_zero()) out = re.str();
    std::string ims = im.str();
    if (!out.empty() && ims[0] != '-') out += '+';
    out += "(" + ims + ")i";
    return out;
}

InfChar::InfChar(std::vector<ExactScalar> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

InfChar InfChar::disjoint_union(const InfChar& other) const {
    std::vector<ExactScalar> all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    return InfChar(std::move(all));
}

InfChar InfChar::shifted_re(const Rational& delta) const {
    std::vector<ExactScalar> out;
    out.reserve(entries_.size());
    for (const auto& z : entries_) out.push_back(z.shifted_re(delta));
    return InfChar(std::move(out));
}

bool InfChar::is_symmetric() const {
    std::map<ExactScalar, int> counts;
    for (const auto& z : entries_) ++counts[z];
    for (const auto& [z, c] : counts) {
        auto it = counts.find(z.negbar());
        if (it == counts.end() || it->second != c) return false;
    }
    return true;
}

bool InfChar::submultiset_of(const InfChar& other) const {
    std::map<ExactScalar, int> counts;
    for (const auto& z : other.entries_) ++counts[z];
    for (const auto& z : entries_) {
        auto it = counts.find(z);
        if (it == counts.end() || it->second == 0) return false;
        --it->second;
    }
    return true;
}

std::string InfChar::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i].str();
    }
    return out + "}";
}

InfChar segment(int m, const ExactScalar& z) {
    if (m < 0) throw std::invalid_argument("segment length must be >= 0");
    std::vector<ExactScalar> entries;
    entries.reserve(m);
    for (int j = 1; j <= m; ++j)
        entries.push_back(z.shifted_re(Rational(m + 1, 2) - Rational(j)));
    return InfChar(std::move(entries));
}

InfChar inf_char(const reps::UnitaryRep& pi) {
    using reps::FactorKind;
    InfChar xi;
    for (const auto& f : pi.factors()) {
        AffineForm im = f.t;
        auto center = [&](AffineForm re) { return ExactScalar{std::move(re), im}; };
        switch (f.kind) {
            case FactorKind::Character:
                xi = xi.disjoint_union(segment(f.m, center(AffineForm{})));
                break;
            case FactorKind::Stein:
                xi = xi.disjoint_union(segment(f.m, center(f.s)));
                xi = xi.disjoint_union(segment(f.m, center(-f.s)));
                break;
            case FactorKind::Speh:
                xi = xi.disjoint_union(segment(f.m, center(AffineForm(Rational(f.k, 2)))));
                xi = xi.disjoint_union(segment(f.m, center(AffineForm(Rational(-f.k, 2)))));
                break;
            case FactorKind::SpehCS:
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        AffineForm re = AffineForm(Rational(e1 * f.k, 2)) + f.s * Rational(e2);
                        xi = xi.disjoint_union(segment(f.m, center(std::move(re))));
                    }
                break;
        }
    }
    return xi;
}

std::vector<InfChar> symmetric_submultisets(const InfChar& xi, long long target_size) {
    if (target_size < 0 || target_size > xi.size())
        throw std::invalid_argument("target size out of range");

    std::map<ExactScalar, int> counts;
    for (const auto& z : xi.entries()) ++counts[z];

    // Orbits under z -> -conj(z). A fixed point contributes any multiplicity
    // up to its count; a two-element orbit contributes j copies of each side,
    // j up to the smaller count. Entries whose partner is absent cannot occur.
    struct Orbit {
        ExactScalar a, b;
        bool fixed;
        int cap;  // max contribution to the submultiset, in entries
        int step; // entries added per unit choice: 1 for fixed, 2 for pairs
    };
    std::vector<Orbit> orbits;
    for (const auto& [z, c] : counts) {
        ExactScalar nb = z.negbar();
        if (nb == z) {
            orbits.push_back({z, z, true, c, 1});
        } else if (z < nb) {
            auto it = counts.find(nb);
            if (it != counts.end()) orbits.push_back({z, nb, false, 2 * std::min(c, it->second), 2});
        }
    }

    std::vector<long long> suffix_cap(orbits.size() + 1, 0);
    for (std::size_t i = orbits.size(); i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + orbits[i].cap;

    std::vector<InfChar> results;
    std::vector<ExactScalar> current;
    auto rec = [&](auto&& self, std::size_t i, long long remaining) -> void {
        if (remaining == 0 && i == orbits.size()) {
            results.push_back(InfChar(current));
            return;
        }
        if (i == orbits.size() || remaining > suffix_cap[i]) return;
        const Orbit& o = orbits[i];
        for (int take = 0; take <= o.cap && take <= remaining; take += o.step) {
            for (int u = 0; u < take / o.step; ++u) {
                current.push_back(o.a);
                if (!o.fixed) current.push_back(o.b);
            }
            self(self, i + 1, remaining - take);
            current.resize(current.size() - take);
        }
    };
    rec(rec, 0, target_size);
    std::sort(results.begin(), results.end());
    return results;
}

bool CassOsReport::all_pass() const {
    for (const auto& c : candidates)
        if (!c.passes) return false;
    return true;
}

CassOsReport casselman_osborne_check(const reps::UnitaryRep& pi) {
    if (pi.n() < 1) throw std::invalid_argument("check requires n >= 1");
    reps::AdduceResult ar = reps::adduce(pi);
    InfChar xi = inf_char(pi);

    CassOsReport report;
    report.depth = ar.depth;
    std::vector<reps::UnitaryRep> candidates{ar.primary};
    candidates.insert(candidates.end(), ar.alternates.begin(), ar.alternates.end());
    for (const auto& cand : candidates) {
        InfChar xi_prime = inf_char(cand);
        bool deficit_ok = xi.size() - xi_prime.size() == ar.depth;
        bool subset_ok = xi_prime.shifted_re(Rational(-1, 2)).submultiset_of(xi);
        report.candidates.push_back({cand, deficit_ok && subset_ok});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Uniqueness of the Speh complementary series from (AP, xi)
// ---------------------------------------------------------------------------

namespace {

// Largest value of the forms under the given ranges; the maximum must be
// strictly resolved pairwise, otherwise throws.
AffineForm strict_max(const std::vector<AffineForm>& forms, const ParamRanges& ranges) {
    AffineForm best = forms.at(0);
    for (std::size_t i = 1; i < forms.size(); ++i) {
        Order o = compare(forms[i], best, ranges);
        if (o == Order::Greater)
            best = forms[i];
        else if (o == Order::Unknown)
            throw std::logic_error("maximum of affine forms not resolved by parameter ranges");
    }
    return best;
}

bool has_generically_integer_two_re(const InfChar& xi) {
    for (const auto& z : xi.entries())
        if ((z.re * Rational(2)).is_generically_integer()) return true;
    return false;
}

}  // namespace

UniquenessReport uniqueness_of_spehcs(int m, int k, const std::string& s_name,
                                      const std::string& t_name) {
    if (m < 1 || k < 1) throw std::invalid_argument("m and k must be >= 1");
    using reps::BasicRep;
    using reps::FactorKind;
    using reps::UnitaryRep;

    AffineForm s = AffineForm::parameter(s_name);
    AffineForm t = AffineForm::parameter(t_name);
    UnitaryRep pi(std::vector<BasicRep>{BasicRep::speh_cs(m, k, s, t)});
    InfChar xi = inf_char(pi);
    ParamRanges ranges = reps::param_ranges(pi);

    UniquenessReport report;
    report.re_never_generically_integer = !has_generically_integer_two_re(xi);

    std::vector<AffineForm> two_res;
    for (const auto& z : xi.entries()) two_res.push_back(z.re * Rational(2));
    report.max_two_re = strict_max(two_res, ranges);
    AffineForm expected = AffineForm(Rational(m - 1 + k)) + s * Rational(2);
    report.max_matches_expected = (report.max_two_re == expected);

    partitions::Partition four_to_m = reps::associated_partition(pi);

    bool all_excluded = true;
    for (const auto& entry : reps::catalog_of_size(4 * m, std::max(3, k + 1))) {
        ShapeVerdict verdict;
        verdict.shape = reps::format_rep(entry);

        if (reps::associated_partition(entry) != four_to_m) {
            verdict.excluded = true;
            verdict.reason = "different associated partition";
            report.scan.push_back(std::move(verdict));
            continue;
        }

        bool has_char_or_speh = false;
        bool is_single_spehcs = entry.factors().size() == 1 &&
                                entry.factors()[0].kind == FactorKind::SpehCS;
        for (const auto& f : entry.factors())
            if (f.kind == FactorKind::Character || f.kind == FactorKind::Speh)
                has_char_or_speh = true;

        if (has_char_or_speh) {
            // Character and Speh factors produce entries whose 2 Re is an
            // integer for every parameter value, while every entry of xi has
            // 2 Re = integer +- 2s, never an integer for generic s.
            bool witness = has_generically_integer_two_re(inf_char(entry));
            verdict.excluded = witness && report.re_never_generically_integer;
            verdict.reason = "carries an entry with integral 2Re; xi has none";
        } else if (is_single_spehcs) {
            const auto& f = entry.factors()[0];
            if (f.k == k) {
                verdict.excluded = false;
                verdict.is_self = true;
                verdict.reason = "matches only with s'=s and t'=t (the rep itself)";
            } else {
                // Equality of maxima would force k-k' = 2s'-2s, but the right
                // side lies in (-1,1) while the left is a nonzero integer.
                ParamRanges r2 = reps::param_ranges(entry);
                AffineForm diff = (f.s - s) * Rational(2);
                ParamRanges merged = ranges;
                merged.insert(r2.begin(), r2.end());
                Interval range = range_of(diff, merged);
                bool within_unit = !range.lo_unbounded && !range.hi_unbounded &&
                                   range.lo >= Rational(-1) && range.hi <= Rational(1);
                verdict.excluded = (f.k != k) && within_unit;
                verdict.reason = "discrete parameter differs: max 2Re cannot match";
            }
        } else {
            // Stein-only product: each entry has 2 Re in (c-1, c+1) for an
            // integer c <= m-1, so max 2Re < m, while max 2Re(xi) > m.
            ParamRanges r2 = reps::param_ranges(entry);
            bool below_m = true;
            InfChar entry_xi = inf_char(entry);
            for (const auto& z : entry_xi.entries()) {
                Interval range = range_of(z.re * Rational(2), r2);
                if (range.hi_unbounded || range.hi > Rational(m) ||
                    (range.hi == Rational(m) && !range.hi_open))
                    below_m = false;
            }
            bool target_above_m =
                compare(report.max_two_re, AffineForm(Rational(m)), ranges) == Order::Greater;
            verdict.excluded = below_m && target_above_m;
            verdict.reason = "Stein-only product: max 2Re < " + std::to_string(m) +
                             " < max 2Re of xi";
        }

        if (!verdict.excluded && !verdict.is_self) all_excluded = false;
        report.scan.push_back(std::move(verdict));
    }

    report.unique = report.re_never_generically_integer && report.max_matches_expected && all_excluded;
    return report;
}

}  // namespace gln::infchar
