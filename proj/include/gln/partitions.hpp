#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gln::partitions {

enum class Direction { Nonincreasing, Nondecreasing };

// Finite sequence of positive integers. The empty sequence is the unique
// composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long n() const;

    // Part at 1-based index i, 0 beyond the length.
    int part(int i) const;

    bool is_nonincreasing() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Nonincreasing composition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Sorts the parts of an arbitrary composition.
    static Partition sorted_from(const Composition& alpha);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long n() const;
    int part(int i) const;

    Composition composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

Composition reorder(const Composition& alpha, Direction direction);

// Conjugate partition: nu_j = #{i : lambda_i >= j}. Involution.
Partition transpose(const Partition& lambda);

// Componentwise sum with missing parts treated as 0.
Partition orbit_sum(const Partition& lambda, const Partition& mu);

// Closure order: every prefix sum of mu is <= the matching prefix sum of
// lambda. Requires |lambda| = |mu|; throws std::invalid_argument otherwise.
bool dominates(const Partition& lambda, const Partition& mu);

// Exponential notation, e.g. "4^2 2 1^3" for (4,4,2,1,1,1). Parsing accepts
// optional whitespace between factors and rejects exponent 0; formatting
// groups runs of equal parts and writes '^' only for exponents > 1.
Composition parse_exponential(const std::string& text);
std::string format_exponential(const Composition& alpha);

// Accepts either exponential notation or a comma-separated list, with
// optional surrounding parentheses: "2^2", "2,2", "(2,2)".
Composition parse_flexible(const std::string& text);

// "(4,4,2,1,1,1)"; "()" for the empty sequence.
std::string tuple_str(const Composition& alpha);
std::string tuple_str(const Partition& lambda);

std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);

}  // namespace gln::partitions
