#include "bnint/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace bnint {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw DomainError("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw DomainError("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

namespace {

wide_int gcd128(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(wide_int n, wide_int d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide_int g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational q;
    q.num_ = static_cast<std::int64_t>(n);
    q.den_ = static_cast<std::int64_t>(d);
    return q;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
                               static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(n);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        std::int64_t n = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        std::int64_t d = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw DomainError("not a rational: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace bnint
