#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bnint/rational.hpp"

namespace bnint {

// A fraction as written, not reduced: 2/4 and 1/2 are different
// presentations of the same value. den must be >= 1.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational value() const { return Rational(num, den); }
};

// One unknown integer n with constraints lower_i <= n <= upper_j.
struct BoundSystem {
    std::vector<Fraction> lowers;
    std::vector<Fraction> uppers;
};

// Smallest feasible n when there is a lower bound. With no lower bounds the
// answer is floor(min upper), and with no bounds at all it is 0.
std::optional<std::int64_t> integer_in_interval(const BoundSystem& s);

// Pairwise test a/b <= c/d - (b-1)(d-1)/(bd) over all lower a/b and upper
// c/d, using the presentations as given. When it holds an integer exists.
bool eliminate_sufficient(const BoundSystem& s);

}  // namespace bnint
