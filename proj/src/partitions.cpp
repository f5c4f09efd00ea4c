#include "gln/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "gln/errors.hpp"

namespace gln::partitions {

namespace {

void check_positive(const std::vector<int>& parts) {
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) { check_positive(parts_); }

long long Composition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

int Composition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

bool Composition::is_nonincreasing() const {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_positive(parts_);
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>()))
        throw std::invalid_argument("partition parts must be nonincreasing");
}

Partition Partition::sorted_from(const Composition& alpha) {
    std::vector<int> p = alpha.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

long long Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Composition reorder(const Composition& alpha, Direction direction) {
    std::vector<int> p = alpha.parts();
    if (direction == Direction::Nonincreasing)
        std::sort(p.begin(), p.end(), std::greater<int>());
    else
        std::sort(p.begin(), p.end());
    return Composition(std::move(p));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> nu;
    if (!lambda.empty()) {
        nu.resize(lambda.parts().front());
        for (int part : lambda.parts()) {
            for (int j = 0; j < part; ++j) ++nu[j];
        }
    }
    return Partition(std::move(nu));
}

Partition orbit_sum(const Partition& lambda, const Partition& mu) {
    int len = std::max(lambda.length(), mu.length());
    std::vector<int> sum(len);
    for (int i = 1; i <= len; ++i) sum[i - 1] = lambda.part(i) + mu.part(i);
    return Partition(std::move(sum));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("dominance compares partitions of the same n; got " +
                                    std::to_string(lambda.n()) + " vs " + std::to_string(mu.n()));
    long long lam_sum = 0, mu_sum = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int k = 1; k <= len; ++k) {
        lam_sum += lambda.part(k);
        mu_sum += mu.part(k);
        if (mu_sum > lam_sum) return false;
    }
    return true;
}

Composition parse_exponential(const std::string& text) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&](const char* what) -> long long {
        std::size_t start = i;
        long long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) throw ParseError("number too large", start);
            ++i;
        }
        if (i == start) throw ParseError(std::string("expected ") + what, i);
        return value;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty partition text", i);
    while (i < text.size()) {
        std::size_t base_pos = i;
        long long base = read_int("base");
        if (base < 1) throw ParseError("base must be >= 1", base_pos);
        long long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t exp_pos = i;
            exponent = read_int("exponent");
            if (exponent < 1) throw ParseError("exponent must be >= 1", exp_pos);
        }
        for (long long e = 0; e < exponent; ++e) parts.push_back(static_cast<int>(base));
        skip_ws();
    }
    return Composition(std::move(parts));
}

std::string format_exponential(const Composition& alpha) {
    if (alpha.empty()) return "";
    std::string out;
    const auto& p = alpha.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(p[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Composition parse_flexible(const std::string& text) {
    std::string body = text;
    // Strip one layer of parentheses; "()" is the empty composition.
    std::size_t first = body.find_first_not_of(" \t");
    std::size_t last = body.find_last_not_of(" \t");
    if (first != std::string::npos && body[first] == '(' && body[last] == ')') {
        body = body.substr(first + 1, last - first - 1);
        if (body.find_first_not_of(" \t") == std::string::npos) return Composition{};
    }
    if (body.find(',') == std::string::npos) return parse_exponential(body);
    std::vector<int> parts;
    std::size_t i = 0;
    while (i <= body.size()) {
        std::size_t comma = body.find(',', i);
        std::string piece = body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
        std::size_t off = piece.find_first_not_of(" \t");
        if (off == std::string::npos) throw ParseError("empty part in list", i);
        std::size_t end = piece.find_last_not_of(" \t");
        piece = piece.substr(off, end - off + 1);
        try {
            std::size_t used = 0;
            int value = std::stoi(piece, &used);
            if (used != piece.size() || value < 1) throw std::invalid_argument("");
            parts.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("expected positive integer part", i + off);
        }
        if (comma == std::string::npos) break;
        i = comma + 1;
    }
    return Composition(std::move(parts));
}

namespace {

std::string tuple_str_impl(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string tuple_str(const Composition& alpha) { return tuple_str_impl(alpha.parts()); }
std::string tuple_str(const Partition& lambda) { return tuple_str_impl(lambda.parts()); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace gln::partitions
