#include "gln/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "gln/errors.hpp"

namespace gln {

Rational::Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    auto read_int = [&](const char* what) -> mpz_class {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError(std::string("expected ") + what, start);
        return mpz_class(text.substr(start, i - start));
    };
    mpz_class num = read_int("integer");
    mpz_class den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int("denominator");
        if (den == 0) throw ParseError("zero denominator", i - 1);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational", i);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gln
