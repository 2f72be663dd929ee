#include "bnint/theorems.hpp"

#include <algorithm>

#include "bnint/tables.hpp"

namespace bnint {

Characteristic Characteristic::prime(int p) {
    if (p < 2) throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(p));
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(p));
    return Characteristic(p);
}

std::string InterpolationVerdict::describe() const {
    auto compact = "(" + std::to_string(triple.d) + "," + std::to_string(triple.g) + "," + std::to_string(triple.r) + ")";
    switch (reason) {
        case InterpolationReason::Generic: return "holds";
        case InterpolationReason::SporadicException: return "exception: " + compact;
        case InterpolationReason::Char2Rational: return "exception: char 2 rational " + compact;
    }
    return "?";
}

namespace {

void require_curve(int d, int g, int r) {
    if (r < 1) throw DomainError("r must be at least 1");
    if (g < 0) throw DomainError("g must be nonnegative");
    if (d < 1) throw DomainError("d must be at least 1");
    if (rho(d, g, r) < 0) throw DomainError("no BN-curve exists (rho = " + std::to_string(rho(d, g, r)) + ")");
}

}  // namespace

InterpolationVerdict bn_interpolation(int d, int g, int r, Characteristic ch) {
    require_curve(d, g, r);
    InterpolationVerdict v;
    v.triple = {d, g, r};
    if (is_counterexample(v.triple)) {
        v.holds = false;
        v.reason = InterpolationReason::SporadicException;
    } else if (ch.is_two() && g == 0 && r >= 2 && reduced_residue(d - 1, r - 1) != 0) {
        v.holds = false;
        v.reason = InterpolationReason::Char2Rational;
    }
    return v;
}

PointCountAnswer max_points(int d, int g, int r) {
    if (r < 3) throw DomainError("max_points needs r >= 3");
    require_curve(d, g, r);
    PointCountAnswer a;
    long long num = static_cast<long long>(r + 1) * d - static_cast<long long>(r - 3) * (g - 1);
    a.predicted_n = floor_div(num, r - 1);
    Triple t{d, g, r};
    const auto& ex = constants().point_count_exceptions;
    if (std::find(ex.begin(), ex.end(), t) != ex.end()) {
        a.is_exception = true;
        a.exception_upper_bound = (t == Triple{10, 6, 5}) ? 11 : 9;
    }
    return a;
}

bool splitting_type_interpolation(std::span<const int> e) {
    if (e.empty()) throw DomainError("splitting type must be nonempty");
    auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    return *hi - *lo <= 1 && *lo >= -1;
}

}  // namespace bnint
