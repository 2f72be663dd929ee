#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bnint {

// 128-bit scratch type for exact cross-multiplication.
__extension__ typedef __int128 wide_int;

// Thrown for arithmetic outside an operation's domain (zero denominators,
// negative moduli, tuples with no curve behind them).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Floor and ceiling of a/b for b != 0, rounding toward -inf / +inf.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// Exact rational with 64-bit numerator and positive denominator, always in
// lowest terms. Intermediate products go through 128 bits so comparisons
// never overflow for the magnitudes this library produces.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: integers convert implicitly
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const { return floor_div(num_, den_); }
    std::int64_t ceil() const { return ceil_div(num_, den_); }
    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "7/3", or "4" for integers.
    std::string to_string() const;
    // Accepts "p" or "p/q".
    static Rational parse(const std::string& text);

private:
    static Rational from_wide(wide_int n, wide_int d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace bnint
