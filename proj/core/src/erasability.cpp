#include "bnint/erasability.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bnint/rational.hpp"

namespace bnint {

AccState normalize(AccState s, int r) {
    if (r < 3) throw CalculusError("erasability needs r >= 3");
    if (s.t1 > r - 1 || s.t2 > s.t1 || s.t2 < 0) throw CalculusError("ranks out of range");
    while (s.t1 == r - 1) s = {s.t2, 0, Strength::Strong, s.twist + 1};
    return s;
}

AccState start_state(const ModType& type, int r) { return normalize({type.t1, type.t2, type.strength, 0}, r); }

namespace {

Strength both(Strength a, Strength b) {
    return (a == Strength::Strong && b == Strength::Strong) ? Strength::Strong : Strength::Weak;
}

// One role assignment of the case table: `a` is the state, `b` the newcomer.
void cases(const AccState& a, const AccState& b, int r, std::vector<AccState>& out) {
    const int full = r - 1;
    const int n = a.twist + b.twist;
    if (a.t1 + b.t1 < full) out.push_back({a.t1 + b.t1, a.t2 + b.t2, both(a.strength, b.strength), n});
    if (a.t2 + b.t2 < a.t1 + b.t1 && a.t1 + b.t1 == full) out.push_back({a.t2 + b.t2, 0, Strength::Strong, n + 1});
    if (b.t2 == 0 && b.t1 + a.t2 <= full && full <= b.t1 + a.t1)
        out.push_back({a.t2 + a.t1 + b.t1 - full, 0, both(a.strength, b.strength), n + 1});
    if (b.t1 + a.t2 < a.t1 + b.t2 && a.t1 + b.t2 == full) out.push_back({a.t2 + b.t1, 0, b.strength, n + 1});
    if (a.t1 + b.t2 == full && b.t1 + a.t2 == full) out.push_back({0, 0, Strength::Strong, n + 2});
}

}  // namespace

std::optional<AccState> combine(const AccState& state, const AccState& incoming, int r) {
    std::vector<AccState> found;
    cases(state, incoming, r, found);
    cases(incoming, state, r, found);
    if (found.empty()) return std::nullopt;
    std::optional<AccState> best;
    for (auto& s : found) {
        AccState n = normalize(s, r);
        if (!best) {
            best = n;
            continue;
        }
        if (n.t1 != best->t1 || n.t2 != best->t2 || n.twist != best->twist)
            throw CalculusError("applicable cases disagree on ranks");
        if (n.strength == Strength::Strong) best->strength = Strength::Strong;
    }
    if (conserved_rank(*best, r) != conserved_rank(state, r) + conserved_rank(incoming, r))
        throw CalculusError("combination lost rank");
    return best;
}

std::optional<AccState> combine(const AccState& state, const ModType& incoming, int r) {
    return combine(state, start_state(incoming, r), r);
}

int total_count(const ModCollection& c) {
    int n = 0;
    for (const auto& [type, k] : c) {
        if (k < 0) throw CalculusError("negative multiplicity");
        n += k;
    }
    return n;
}

namespace {

bool final_ok(const AccState& s) { return s.t2 == 0 && s.strength == Strength::Strong; }

class Search {
public:
    Search(const ModCollection& c, int r) : r_(r) {
        for (const auto& [type, k] : c) {
            if (k <= 0) continue;
            if (type.t2 > type.t1 || type.t2 < 0 || type.t1 > r - 1)
                throw CalculusError("type " + type_name(type) + " impossible for r = " + std::to_string(r));
            types_.push_back(type);
            counts_.push_back(k);
            starts_.push_back(start_state(type, r));
        }
    }

    ErasabilityResult run() {
        ErasabilityResult res;
        if (types_.empty()) {
            res.erasable = true;
            return res;
        }
        const auto saved = counts_;
        for (std::size_t i = 0; i < types_.size(); ++i) {
            --counts_[i];
            if (go(starts_[i])) {
                res.erasable = true;
                res.witness.push_back(types_[i]);
                trace(starts_[i], res.witness);
                break;
            }
            ++counts_[i];
        }
        counts_ = saved;
        return res;
    }

private:
    std::string key(const AccState& s) const {
        std::string k;
        k.reserve(3 + counts_.size());
        k.push_back(static_cast<char>(s.t1));
        k.push_back(static_cast<char>(s.t2));
        k.push_back(s.strength == Strength::Strong ? 'S' : 'W');
        for (int c : counts_) {
            k.append(reinterpret_cast<const char*>(&c), sizeof c);
        }
        return k;
    }

    bool exhausted() const {
        return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
    }

    // Twist never enters a guard, so the memo ignores it.
    bool go(const AccState& s) {
        if (exhausted()) return final_ok(s);
        std::string k = key(s);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        bool ok = false;
        for (std::size_t i = 0; i < types_.size() && !ok; ++i) {
            if (counts_[i] == 0) continue;
            auto next = combine(s, starts_[i], r_);
            if (!next) continue;
            --counts_[i];
            ok = go(*next);
            ++counts_[i];
        }
        memo_.emplace(std::move(k), ok);
        return ok;
    }

    // Replays a successful search, choosing the first child that succeeds.
    void trace(AccState s, std::vector<ModType>& order) {
        while (!exhausted()) {
            bool moved = false;
            for (std::size_t i = 0; i < types_.size(); ++i) {
                if (counts_[i] == 0) continue;
                auto next = combine(s, starts_[i], r_);
                if (!next) continue;
                --counts_[i];
                if (go(*next)) {
                    order.push_back(types_[i]);
                    s = *next;
                    moved = true;
                    break;
                }
                ++counts_[i];
            }
            if (!moved) throw CalculusError("witness replay lost its way");
        }
    }

    int r_;
    std::vector<ModType> types_;
    std::vector<int> counts_;
    std::vector<AccState> starts_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace

bool order_erases(const std::vector<ModType>& order, int r) {
    if (order.empty()) return true;
    AccState s = start_state(order.front(), r);
    for (std::size_t i = 1; i < order.size(); ++i) {
        auto next = combine(s, order[i], r);
        if (!next) return false;
        s = *next;
    }
    return final_ok(s);
}

ErasabilityResult is_erasable(const ModCollection& c, int r) {
    if (r < 3) throw CalculusError("erasability needs r >= 3");
    total_count(c);
    return Search(c, r).run();
}

bool brute_force_erasable(const ModCollection& c, int r) {
    if (r < 3) throw CalculusError("erasability needs r >= 3");
    int n = total_count(c);
    if (n > 9) throw TooLarge("brute force limited to 9 modifications, got " + std::to_string(n));
    std::vector<ModType> order;
    for (const auto& [type, k] : c) order.insert(order.end(), k, type);
    if (order.empty()) return true;
    std::sort(order.begin(), order.end());
    do {
        if (order_erases(order, r)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

ModCollection to_collection(const CatalogueCounts& c) {
    ModCollection out;
    auto put = [&](ModType t, int k) {
        if (k < 0) throw CalculusError("negative multiplicity");
        if (k > 0) out[t] = k;
    };
    put({1, 0, Strength::Strong}, c.s10);
    put({1, 1, Strength::Strong}, c.s11);
    put({2, 0, Strength::Strong}, c.s20);
    put({2, 1, Strength::Strong}, c.s21);
    put({1, 0, Strength::Weak}, c.w10);
    return out;
}

namespace {

struct CacheKey {
    std::array<int, 6> v;
    bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const noexcept {
        std::size_t h = 0;
        for (int x : k.v) h = h * 1000003u + static_cast<std::size_t>(x);
        return h;
    }
};

}  // namespace

bool catalogue_erasable(const CatalogueCounts& c, int r) {
    static std::shared_mutex mu;
    static std::unordered_map<CacheKey, bool, CacheKeyHash> cache;
    CacheKey key{{r, c.s10, c.s11, c.s20, c.s21, c.w10}};
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    bool v = is_erasable(to_collection(c), r).erasable;
    std::unique_lock lock(mu);
    cache.emplace(key, v);
    return v;
}

std::string type_name(const ModType& t) {
    return std::string(t.strength == Strength::Strong ? "s" : "w") + std::to_string(t.t1) + "," + std::to_string(t.t2);
}

namespace {

std::pair<int, int> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw DomainError("expected 'i,j', got '" + s + "'");
    try {
        std::size_t a = 0, b = 0;
        int i = std::stoi(s.substr(0, comma), &a);
        int j = std::stoi(s.substr(comma + 1), &b);
        if (a != comma || b != s.size() - comma - 1 || i < 0 || j < 0 || j > i) throw std::invalid_argument(s);
        return {i, j};
    } catch (const std::logic_error&) {
        throw DomainError("expected 'i,j' with 0 <= j <= i, got '" + s + "'");
    }
}

}  // namespace

ModType parse_type_name(const std::string& s) {
    if (s.size() < 4 || (s[0] != 's' && s[0] != 'w')) throw DomainError("bad modification type '" + s + "'");
    auto [i, j] = parse_pair(s.substr(1));
    return {i, j, s[0] == 's' ? Strength::Strong : Strength::Weak};
}

nlohmann::json collection_to_json(const ModCollection& c, int r) {
    nlohmann::json j;
    j["r"] = r;
    j["s"] = nlohmann::json::object();
    j["w"] = nlohmann::json::object();
    for (const auto& [type, k] : c) {
        if (k == 0) continue;
        auto key = std::to_string(type.t1) + "," + std::to_string(type.t2);
        j[type.strength == Strength::Strong ? "s" : "w"][key] = k;
    }
    return j;
}

std::pair<ModCollection, int> collection_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("r") || !j["r"].is_number_integer())
        throw DomainError("collection needs an integer 'r'");
    ModCollection c;
    for (const char* side : {"s", "w"}) {
        if (!j.contains(side)) continue;
        if (!j[side].is_object()) throw DomainError(std::string("'") + side + "' must be an object");
        for (const auto& [key, val] : j[side].items()) {
            if (!val.is_number_integer() || val.get<int>() < 0) throw DomainError("counts must be nonnegative integers");
            auto [i, jj] = parse_pair(key);
            ModType t{i, jj, side[0] == 's' ? Strength::Strong : Strength::Weak};
            c[t] += val.get<int>();
        }
    }
    return {c, j["r"].get<int>()};
}

}  // namespace bnint
