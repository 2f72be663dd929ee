#include "bnint/intfeas.hpp"

#include <algorithm>

namespace bnint {

std::optional<std::int64_t> integer_in_interval(const BoundSystem& s) {
    std::optional<Rational> lo, hi;
    for (const auto& f : s.lowers) {
        Rational v = f.value();
        if (!lo || v > *lo) lo = v;
    }
    for (const auto& f : s.uppers) {
        Rational v = f.value();
        if (!hi || v < *hi) hi = v;
    }
    if (!lo && !hi) return 0;
    if (!lo) return hi->floor();
    std::int64_t n = lo->ceil();
    if (hi && Rational(n) > *hi) return std::nullopt;
    return n;
}

bool eliminate_sufficient(const BoundSystem& s) {
    for (const auto& a : s.lowers) {
        if (a.den < 1) throw DomainError("denominators must be positive");
        for (const auto& c : s.uppers) {
            if (c.den < 1) throw DomainError("denominators must be positive");
            // a/b <= c/d - (b-1)(d-1)/(bd)  <=>  a*d <= c*b - (b-1)(d-1)
            wide_int lhs = static_cast<wide_int>(a.num) * c.den;
            wide_int rhs = static_cast<wide_int>(c.num) * a.den - static_cast<wide_int>(a.den - 1) * (c.den - 1);
            if (lhs > rhs) return false;
        }
    }
    return true;
}

}  // namespace bnint
