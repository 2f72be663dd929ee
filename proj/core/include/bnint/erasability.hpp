#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bnint {

enum class Strength { Strong, Weak };

// Rank data (t1, t2) of a pointing modification plus the generality tag of
// the larger subspace.
struct ModType {
    int t1 = 0;
    int t2 = 0;
    Strength strength = Strength::Strong;

    friend auto operator<=>(const ModType&, const ModType&) = default;
};

// Accumulated state of a limiting order: a ModType plus the number of full
// twists absorbed so far.
struct AccState {
    int t1 = 0;
    int t2 = 0;
    Strength strength = Strength::Strong;
    int twist = 0;

    friend bool operator==(const AccState&, const AccState&) = default;
};

// Impossible ranks, e.g. t1 >= r or t2 > t1.
class CalculusError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Thrown by the brute-force oracle when the multiset is too large.
class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

// Absorb full-rank subspaces into twists until t1 <= r - 2.
AccState normalize(AccState s, int r);

// A raw type viewed as a fresh state (twist 0), normalized.
AccState start_state(const ModType& type, int r);

// Collide the incoming modification with the current state. Both role
// assignments of the case table are tried; when several cases apply they
// agree on ranks and twist, and the strongest result is kept. Absent when
// nothing applies.
std::optional<AccState> combine(const AccState& state, const AccState& incoming, int r);
std::optional<AccState> combine(const AccState& state, const ModType& incoming, int r);

// twist*(r-1) + t1 + t2 is preserved by every combination.
inline long long conserved_rank(const AccState& s, int r) {
    return static_cast<long long>(s.twist) * (r - 1) + s.t1 + s.t2;
}

using ModCollection = std::map<ModType, int>;

int total_count(const ModCollection& c);

struct ErasabilityResult {
    bool erasable = false;
    std::vector<ModType> witness;  // a successful order when erasable
};

// Fold one specific order; true when it ends with t2 = 0 and a strong Λ1.
bool order_erases(const std::vector<ModType>& order, int r);

// Memoized search over limiting orders.
ErasabilityResult is_erasable(const ModCollection& c, int r);

// Tries every distinct permutation; only for up to 9 elements.
bool brute_force_erasable(const ModCollection& c, int r);

// Counts of the five types that rule-generated collections use:
// (1,0) strong, (1,1) strong, (2,0) strong, (2,1) strong, (1,0) weak.
struct CatalogueCounts {
    int s10 = 0, s11 = 0, s20 = 0, s21 = 0, w10 = 0;
    friend auto operator<=>(const CatalogueCounts&, const CatalogueCounts&) = default;
};

ModCollection to_collection(const CatalogueCounts& c);

// is_erasable with a process-wide cache safe for concurrent callers.
bool catalogue_erasable(const CatalogueCounts& c, int r);

// "s1,0" / "w1,0"
std::string type_name(const ModType& t);
ModType parse_type_name(const std::string& s);

// {"r": 3, "s": {"1,0": 1, "2,1": 2}, "w": {}}
nlohmann::json collection_to_json(const ModCollection& c, int r);
std::pair<ModCollection, int> collection_from_json(const nlohmann::json& j);

}  // namespace bnint
