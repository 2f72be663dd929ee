#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bnint/rational.hpp"

namespace bnint {

// (d, g, r, ell, m): degree, genus, dimension, number of point-pair
// modifications, number of rational-curve modifications. Any five integers
// are allowed; goodness is a separate predicate.
struct Tuple {
    int d = 0;
    int g = 0;
    int r = 0;
    int ell = 0;
    int m = 0;

    friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

// Degree, genus, dimension only.
struct Triple {
    int d = 0;
    int g = 0;
    int r = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline Triple triple_of(const Tuple& t) { return {t.d, t.g, t.r}; }

std::string to_string(const Tuple& t);   // "(d, g, r, l, m)"
std::string to_string(const Triple& t);  // "(d, g, r)"
std::ostream& operator<<(std::ostream& os, const Tuple& t);
std::ostream& operator<<(std::ostream& os, const Triple& t);

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : {t.d, t.g, t.r, t.ell, t.m}) {
            h ^= static_cast<std::uint32_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Termination order used by certificates: (r, d, m) lexicographically.
struct Measure {
    int r, d, m;
    friend auto operator<=>(const Measure&, const Measure&) = default;
};
inline Measure measure_of(const Tuple& t) { return {t.r, t.d, t.m}; }

// (r+1)d - rg - r(r+1); a curve exists iff this is >= 0.
std::int64_t rho(std::int64_t d, std::int64_t g, std::int64_t r);

// 2d + 2g - 2r + 2ell + (r+1)m, the numerator of delta before reduction.
std::int64_t delta_numerator(const Tuple& t);

// delta = delta_numerator / (r - 1). Throws DomainError for r <= 1.
Rational delta(const Tuple& t);

// Representative of a mod b in [0, b). Throws DomainError for b <= 0.
std::int64_t reduced_residue(std::int64_t a, std::int64_t b);

enum class GoodnessFailure {
    DegreeBelowGPlusR,
    EllTooLarge,
    MExceedsRho,
    RationalResidue,
    InXExList,
    NegativeField,
};

std::string_view failure_name(GoodnessFailure f);

struct GoodnessVerdict {
    std::vector<GoodnessFailure> failures;

    bool is_good() const { return failures.empty(); }
    bool has(GoodnessFailure f) const;
    // "good" or "not good (XEx)" style one-liner.
    std::string describe() const;
};

// Full verdict listing every failed condition.
GoodnessVerdict goodness(const Tuple& t);
// Fast path used by searches.
bool is_good(const Tuple& t);

}  // namespace bnint
