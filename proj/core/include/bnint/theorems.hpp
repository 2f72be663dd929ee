#pragma once

#include <optional>
#include <span>
#include <string>

#include "bnint/tuple.hpp"

namespace bnint {

// Ground field characteristic. Only "2 or not 2" changes any answer.
class Characteristic {
public:
    static Characteristic zero() { return Characteristic(0); }
    // Throws DomainError unless p is prime.
    static Characteristic prime(int p);
    // 0 means characteristic zero.
    static Characteristic from_int(int p) { return p == 0 ? zero() : prime(p); }

    int value() const { return p_; }
    bool is_two() const { return p_ == 2; }

private:
    explicit Characteristic(int p) : p_(p) {}
    int p_;
};

enum class InterpolationReason { Generic, SporadicException, Char2Rational };

struct InterpolationVerdict {
    bool holds = true;
    InterpolationReason reason = InterpolationReason::Generic;
    Triple triple;  // the queried (d, g, r)

    // "holds", "exception: (6,4,3)" or "exception: char 2 rational (6,0,4)"
    std::string describe() const;
};

// Does a general curve of degree d and genus g in P^r pass through the
// expected number of general points? Needs rho >= 0, r >= 1, d >= 1.
InterpolationVerdict bn_interpolation(int d, int g, int r, Characteristic ch = Characteristic::zero());

struct PointCountAnswer {
    long long predicted_n = 0;
    bool is_exception = false;
    // Known upper bound for the exceptional triples; not claimed sharp.
    std::optional<int> exception_upper_bound;
};

// floor(((r+1)d - (r-3)(g-1)) / (r-1)) together with the exceptional bound.
// Needs rho >= 0 and r >= 3.
PointCountAnswer max_points(int d, int g, int r);

// A bundle O(e_1) + ... + O(e_n) on P^1 has interpolation iff the e_i are
// within one of each other and all at least -1. Empty input is a DomainError.
bool splitting_type_interpolation(std::span<const int> e);

}  // namespace bnint
