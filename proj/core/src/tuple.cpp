#include "bnint/tuple.hpp"

#include <algorithm>
#include <ostream>

#include "bnint/tables.hpp"

namespace bnint {

std::string to_string(const Tuple& t) {
    return "(" + std::to_string(t.d) + ", " + std::to_string(t.g) + ", " + std::to_string(t.r) + ", " +
           std::to_string(t.ell) + ", " + std::to_string(t.m) + ")";
}

std::string to_string(const Triple& t) {
    return "(" + std::to_string(t.d) + ", " + std::to_string(t.g) + ", " + std::to_string(t.r) + ")";
}

std::ostream& operator<<(std::ostream& os, const Tuple& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << to_string(t); }

std::int64_t rho(std::int64_t d, std::int64_t g, std::int64_t r) { return (r + 1) * d - r * g - r * (r + 1); }

std::int64_t delta_numerator(const Tuple& t) {
    return 2 * std::int64_t{t.d} + 2 * std::int64_t{t.g} - 2 * std::int64_t{t.r} + 2 * std::int64_t{t.ell} +
           (std::int64_t{t.r} + 1) * t.m;
}

Rational delta(const Tuple& t) {
    if (t.r <= 1) throw DomainError("delta needs r >= 2, got r = " + std::to_string(t.r));
    return Rational(delta_numerator(t), t.r - 1);
}

std::int64_t reduced_residue(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw DomainError("modulus must be positive");
    std::int64_t x = a % b;
    return x < 0 ? x + b : x;
}

std::string_view failure_name(GoodnessFailure f) {
    switch (f) {
        case GoodnessFailure::DegreeBelowGPlusR: return "DegreeBelowGPlusR";
        case GoodnessFailure::EllTooLarge: return "EllTooLarge";
        case GoodnessFailure::MExceedsRho: return "MExceedsRho";
        case GoodnessFailure::RationalResidue: return "RationalResidue";
        case GoodnessFailure::InXExList: return "InXExList";
        case GoodnessFailure::NegativeField: return "NegativeField";
    }
    return "?";
}

bool GoodnessVerdict::has(GoodnessFailure f) const {
    return std::find(failures.begin(), failures.end(), f) != failures.end();
}

std::string GoodnessVerdict::describe() const {
    if (is_good()) return "good";
    std::string out = "not good (";
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (i) out += ", ";
        switch (failures[i]) {
            case GoodnessFailure::DegreeBelowGPlusR: out += "d < g + r"; break;
            case GoodnessFailure::EllTooLarge: out += "2l > r"; break;
            case GoodnessFailure::MExceedsRho: out += "m > rho"; break;
            case GoodnessFailure::RationalResidue: out += "2l < (1 - d) mod (r - 1)"; break;
            case GoodnessFailure::InXExList: out += "XEx"; break;
            case GoodnessFailure::NegativeField: out += "negative field"; break;
        }
    }
    return out + ")";
}

// r = 1 has no residue condition (the modulus r - 1 would be zero).
GoodnessVerdict goodness(const Tuple& t) {
    GoodnessVerdict v;
    if (t.g < 0 || t.r < 1 || t.ell < 0 || t.m < 0) v.failures.push_back(GoodnessFailure::NegativeField);
    if (t.d < t.g + t.r) v.failures.push_back(GoodnessFailure::DegreeBelowGPlusR);
    if (2 * t.ell > t.r) v.failures.push_back(GoodnessFailure::EllTooLarge);
    if (t.m > rho(t.d, t.g, t.r)) v.failures.push_back(GoodnessFailure::MExceedsRho);
    if (t.g == 0 && t.m == 0 && t.r >= 2 && 2 * std::int64_t{t.ell} < reduced_residue(1 - std::int64_t{t.d}, t.r - 1))
        v.failures.push_back(GoodnessFailure::RationalResidue);
    if (in_xex(t)) v.failures.push_back(GoodnessFailure::InXExList);
    return v;
}

bool is_good(const Tuple& t) {
    if (t.g < 0 || t.r < 1 || t.ell < 0 || t.m < 0) return false;
    if (t.d < t.g + t.r || 2 * t.ell > t.r || t.m > rho(t.d, t.g, t.r)) return false;
    if (t.g == 0 && t.m == 0 && t.r >= 2 && 2 * std::int64_t{t.ell} < reduced_residue(1 - std::int64_t{t.d}, t.r - 1))
        return false;
    return !in_xex(t);
}

}  // namespace bnint
