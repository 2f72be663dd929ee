#include "bnint/rules.hpp"

#include <algorithm>

#include "bnint/erasability.hpp"

namespace bnint {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "gather-lines", "peel-onion", "pancake-onions", "m0-delta2", "m0-delta4", "m0-delta35",
    "two-proj",     "delta5",     "delta1-step",    "master",    "master-111", "master-erasable",
};

}  // namespace

std::string_view rule_name(RuleId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<RuleId> rule_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<RuleId>(i);
    return std::nullopt;
}

// ---- parameters ----------------------------------------------------------

namespace {

using Field = std::optional<int> RuleParams::*;

struct FieldInfo {
    const char* name;
    Field ptr;
};

constexpr std::array<FieldInfo, 10> kFields = {{
    {"ell_prime", &RuleParams::ell_prime},
    {"m_prime", &RuleParams::m_prime},
    {"m_dprime", &RuleParams::m_dprime},
    {"d_prime", &RuleParams::d_prime},
    {"g_prime", &RuleParams::g_prime},
    {"eps_in", &RuleParams::eps_in},
    {"eps_out", &RuleParams::eps_out},
    {"sum_n", &RuleParams::sum_n},
    {"eps", &RuleParams::eps},
    {"k", &RuleParams::k},
}};

std::vector<Field> fields_of(RuleId id) {
    switch (id) {
        case RuleId::Master:
        case RuleId::Master111:
            return {&RuleParams::ell_prime, &RuleParams::m_prime, &RuleParams::d_prime, &RuleParams::sum_n};
        case RuleId::MasterErasable:
            return {&RuleParams::ell_prime, &RuleParams::m_prime, &RuleParams::m_dprime, &RuleParams::d_prime,
                    &RuleParams::g_prime,   &RuleParams::eps_in,  &RuleParams::eps_out,  &RuleParams::sum_n};
        case RuleId::TwoProj:
        case RuleId::M0Delta35: return {&RuleParams::eps};
        case RuleId::Delta5: return {&RuleParams::k};
        default: return {};
    }
}

}  // namespace

nlohmann::json RuleParams::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& f : kFields)
        if (this->*(f.ptr)) j[f.name] = *(this->*(f.ptr));
    return j;
}

RuleParams RuleParams::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("rule params must be a JSON object");
    RuleParams p;
    for (const auto& [key, val] : j.items()) {
        auto it = std::find_if(kFields.begin(), kFields.end(), [&](const FieldInfo& f) { return key == f.name; });
        if (it == kFields.end()) throw DomainError("unknown rule parameter '" + key + "'");
        if (!val.is_number_integer()) throw DomainError("rule parameter '" + key + "' must be an integer");
        p.*(it->ptr) = val.get<int>();
    }
    return p;
}

std::string RuleParams::describe() const {
    std::string out;
    for (const auto& f : kFields) {
        if (!(this->*(f.ptr))) continue;
        if (!out.empty()) out += ';';
        out += f.name;
        out += '=';
        out += std::to_string(*(this->*(f.ptr)));
    }
    return out;
}

nlohmann::json instance_to_json(RuleId rule, const RuleParams& p) {
    return {{"rule", std::string(rule_name(rule))}, {"params", p.to_json()}};
}

// ---- hypotheses ----------------------------------------------------------

namespace {

using Goals = std::vector<Tuple>;

// |D/(r-1) - T| <= 1 - w/(r-1), i.e. |D - T(r-1)| <= r-1-w, D the delta numerator.
bool in_window(const Tuple& t, long long target, int w) {
    long long q = t.r - 1;
    long long diff = delta_numerator(t) - target * q;
    if (diff < 0) diff = -diff;
    return diff <= q - w;
}

// All integer targets T passing in_window; lo > hi when there are none.
std::pair<long long, long long> window_targets(const Tuple& t, int w) {
    long long q = t.r - 1, D = delta_numerator(t), slack = q - w;
    if (slack < 0) return {1, 0};
    return {ceil_div(D - slack, q), floor_div(D + slack, q)};
}

// Feasible sums n_1 + ... + n_{m'} with each n_i = r-1 mod 2 in [2, r-1],
// and n_i != 2 when no_two. Values run from lo to hi in steps of 2.
struct SumRange {
    bool any = false;
    int lo = 0, hi = -1;
    bool contains(int s) const { return any && s >= lo && s <= hi && (s - lo) % 2 == 0; }
};

SumRange sum_range(int mp, int r, bool no_two) {
    if (mp == 0) return {true, 0, 0};
    int nmin = (r % 2 == 1) ? (no_two ? 4 : 2) : 3;
    if (nmin > r - 1) return {};
    return {true, mp * nmin, mp * (r - 1)};
}

struct Eval {
    const Tuple& t;
    const RuleParams& p;
    const RuleOptions& opts;
    Goals& out;

    const char* run(RuleId id) {
        if (t.r < 3) return "r >= 3";
        switch (id) {
            case RuleId::GatherLines: return gather();
            case RuleId::PeelOnion: return peel();
            case RuleId::PancakeOnions: return pancake();
            case RuleId::M0Delta2: return m0_delta2();
            case RuleId::M0Delta4: return m0_delta4();
            case RuleId::M0Delta35: return m0_delta35();
            case RuleId::TwoProj: return two_proj();
            case RuleId::Delta5: return delta5();
            case RuleId::Delta1Step: return delta1_step();
            case RuleId::Master: return master(false);
            case RuleId::Master111: return master(true);
            case RuleId::MasterErasable: return master_erasable();
        }
        return "unknown rule";
    }

    const char* gather() {
        if (t.d < t.g + 2 * t.r - 1) return "d >= g + 2r - 1";
        out = {{t.d - (t.r - 1), t.g, t.r, t.ell, t.m}};
        return nullptr;
    }

    const char* peel() {
        if (t.g < t.r) return "g >= r";
        if (rho(t.d, t.g, t.r) < 0) return "rho(d, g, r) >= 0";
        if (!is_good(t)) return "source tuple good";
        out = {{t.d - (t.r - 1), t.g - t.r, t.r, t.ell, t.m + 1}};
        return nullptr;
    }

    const char* pancake() {
        if (t.m < t.r - 1) return "m >= r - 1";
        out = {{t.d, t.g, t.r, t.ell, t.m - (t.r - 1)}};
        return nullptr;
    }

    const char* m0_delta2() {
        if (t.m != 0) return "m = 0";
        if (t.g < 1) return "g >= 1";
        if (!in_window(t, 2, 1)) return "|delta - 2| <= 1 - 1/(r-1)";
        out = {{t.d - 2, t.g - 1, t.r - 1, t.ell + 1, 0}};
        return nullptr;
    }

    const char* m0_delta4() {
        if (t.m != 0) return "m = 0";
        if (t.g < 3) return "g >= 3";
        if (t.r < 6) return "r >= 6";
        if (!in_window(t, 4, 2)) return "|delta - 4| <= 1 - 2/(r-1)";
        out = {{t.d - 5, t.g - 3, t.r - 2, t.ell + 1, 0}, {t.d - 5, t.g - 3, t.r - 2, t.ell, 0}};
        return nullptr;
    }

    const char* m0_delta35() {
        if (t.m != 0) return "m = 0";
        if (t.g < 3) return "g >= 3";
        if (t.r < 6) return "r >= 6";
        int e = *p.eps;
        if (e < 0) return "eps >= 0";
        if (3 * e > t.d - t.g - t.r) return "3 eps <= d - g - r";
        if (!in_window(t, 2LL * e + 3, 3)) return "|delta - (2 eps + 3)| <= 1 - 3/(r-1)";
        int d2 = t.d - 3 * e - 6;
        out = {{d2, t.g - 3, t.r - 3, t.ell + 1, 0}, {d2, t.g - 3, t.r - 3, t.ell, 0}};
        return nullptr;
    }

    const char* two_proj() {
        if (t.ell != 0) return "l = 0";
        if (t.m != 1) return "m = 1";
        int e = *p.eps;
        if (e < 0) return "eps >= 0";
        if (2 * e > t.d - t.g - t.r) return "2 eps <= d - g - r";
        if (t.g == 0 && 2 * e >= t.d - t.g - t.r) return "2 eps < d - g - r when g = 0";
        if (!in_window(t, 2LL * e + 1, 2)) return "|delta - (2 eps + 1)| <= 1 - 2/(r-1)";
        out = {{t.d - 2 * e - 2, t.g, t.r - 2, 0, 1}};
        return nullptr;
    }

    const char* delta5() {
        int k = *p.k;
        if (k < 3) return "k >= 3";
        if (t != Tuple{4 * k + 1, 2 * k - 1, 2 * k + 1, 0, 1}) return "tuple = (4k+1, 2k-1, 2k+1, 0, 1)";
        out = {{4 * k - 3, 2 * k - 2, 2 * k - 1, k - 3, 0}};
        return nullptr;
    }

    const char* delta1_step() {
        if (t.ell != 0 || t.m != 0) return "l = m = 0";
        if (2 * t.d + 2 * t.g != 3 * t.r - 1) return "2d + 2g = 3r - 1";
        if (t.d <= t.g + t.r) return "d > g + r";
        out = {{t.d - 3, t.g, t.r - 2, 0, 0}};
        return nullptr;
    }

    const char* master(bool variant111) {
        int lp = *p.ell_prime, mp = *p.m_prime, dp = *p.d_prime, s = *p.sum_n;
        if (lp < 0 || lp > t.ell) return "0 <= l' <= l";
        if (mp < 0 || mp > t.m) return "0 <= m' <= m";
        if (t.r == 3 && mp != 0) return "m' = 0 when r = 3";
        if (dp < t.g + t.r || dp > t.d) return "g + r <= d' <= d";
        if (t.g == 0 && t.m != 0 && dp == t.g + t.r) return "d' > g + r when g = 0 and m > 0";
        if (variant111) {
            if (mp >= t.m) return "m' < m";
            if (2 * mp + lp >= t.r - 2) return "2m' + l' < r - 2";
        } else if (2 * mp + lp > t.r - 2) {
            return "2m' + l' <= r - 2";
        }
        if (!sum_range(mp, t.r, dp == t.r + 1 && t.g == 1).contains(s)) return "feasible sum of n_i";
        long long target = lp + 2LL * (t.d - dp) + s + (variant111 ? 1 : 0);
        if (!in_window(t, target, opts.master_window_slack)) return "delta window";
        int lbar = t.ell - lp + ((t.r - 1) * mp - s) / 2;
        int mbar = t.m - mp;
        if (variant111)
            out = {{dp - 1, t.g, t.r - 1, lbar, mbar}, {dp - 1, t.g, t.r - 1, lbar, mbar - 1}, {dp - 2, t.g, t.r - 2, lbar, mbar}};
        else
            out = {{dp - 1, t.g, t.r - 1, lbar, mbar}};
        return nullptr;
    }

    const char* master_erasable() {
        int lp = *p.ell_prime, mp = *p.m_prime, mpp = *p.m_dprime, gp = *p.g_prime, dp = *p.d_prime;
        int ein = *p.eps_in, eout = *p.eps_out, s = *p.sum_n;
        if (lp < 0 || lp > t.ell) return "0 <= l' <= l";
        if (mp < 0 || mpp < 0 || mp + mpp > t.m) return "m' + m'' <= m";
        if (t.r == 3 && mp != 0) return "m' = 0 when r = 3";
        if (gp < 0 || gp > t.g) return "0 <= g' <= g";
        if (dp < gp + t.r || dp > t.d - t.g + gp) return "g' + r <= d' <= d - g + g'";
        if (gp == 0 && t.m != 0 && dp == gp + t.r) return "d' > g' + r when g' = 0 and m > 0";
        if (ein < 0 || eout < 0 || ein + eout != t.d - t.g - dp + gp) return "eps_in + eps_out = d - g - d' + g'";
        if (!sum_range(mp, t.r, dp == t.r + 1 && gp == 1).contains(s)) return "feasible sum of n_i";
        long long spill = floor_div(2LL * eout + 3LL * (t.g - gp) + t.m + mp + lp, t.r - 1);
        long long target = 2LL * ein + (t.g - gp) + mpp + lp + spill + s;
        if (!in_window(t, target, opts.master_window_slack)) return "delta window";
        CatalogueCounts c{lp + t.m - mp - mpp, eout, mp, t.g - gp, mpp};
        if (!catalogue_erasable(c, t.r)) return "collection erasable";
        int lbar = t.ell - lp + ((t.r - 1) * mp - s) / 2;
        out.clear();
        for (int mb = t.m - mp - mpp; mb <= t.m - mp; ++mb) out.push_back({dp - 1, gp, t.r - 1, lbar, mb});
        return nullptr;
    }
};

const char* evaluate(RuleId id, const Tuple& t, const RuleParams& p, const RuleOptions& opts, Goals& out) {
    return Eval{t, p, opts, out}.run(id);
}

}  // namespace

std::vector<Tuple> apply(RuleId rule, const Tuple& t, const RuleParams& p, const RuleOptions& opts) {
    auto wanted = fields_of(rule);
    for (const auto& f : kFields) {
        bool needed = std::find(wanted.begin(), wanted.end(), f.ptr) != wanted.end();
        if (needed && !(p.*(f.ptr)))
            throw PreconditionViolated(std::string(rule_name(rule)) + ": missing parameter " + f.name);
        if (!needed && (p.*(f.ptr)))
            throw PreconditionViolated(std::string(rule_name(rule)) + ": unexpected parameter " + f.name);
    }
    Goals out;
    if (const char* why = evaluate(rule, t, p, opts, out))
        throw PreconditionViolated(std::string(rule_name(rule)) + " at " + to_string(t) + ": needs " + why);
    return out;
}

// ---- enumeration ---------------------------------------------------------

namespace {

class Enumerator {
public:
    Enumerator(RuleId id, const Tuple& t, const Acceptor& accept, const std::function<bool(const RuleInstance&)>& visit,
               const RuleOptions& opts)
        : id_(id), t_(t), accept_(accept), visit_(visit), opts_(opts) {}

    void run() {
        if (t_.r < 3) return;
        switch (id_) {
            case RuleId::M0Delta35: {
                for (int e = 0; 3 * e <= t_.d - t_.g - t_.r && !stop_; ++e) {
                    RuleParams p;
                    p.eps = e;
                    offer(p);
                }
                break;
            }
            case RuleId::TwoProj: {
                for (int e = 0; 2 * e <= t_.d - t_.g - t_.r && !stop_; ++e) {
                    RuleParams p;
                    p.eps = e;
                    offer(p);
                }
                break;
            }
            case RuleId::Delta5: {
                if (t_.r % 2 == 1) {
                    RuleParams p;
                    p.k = (t_.r - 1) / 2;
                    offer(p);
                }
                break;
            }
            case RuleId::Master: master(false); break;
            case RuleId::Master111: master(true); break;
            case RuleId::MasterErasable: master_erasable(); break;
            default: offer(RuleParams{}); break;
        }
    }

private:
    void offer(const RuleParams& p) {
        if (stop_) return;
        goals_.clear();
        if (evaluate(id_, t_, p, opts_, goals_)) return;
        for (const auto& g : goals_)
            if (!accept_(g)) return;
        if (!visit_(RuleInstance{id_, p, goals_})) stop_ = true;
    }

    // Sums s in the feasible range with base + s a window target.
    template <class F>
    void sums_for(const SumRange& sr, long long base, F&& f) {
        if (!sr.any) return;
        long long lo = std::max<long long>(sr.lo, tlo_ - base);
        long long hi = std::min<long long>(sr.hi, thi_ - base);
        if ((lo - sr.lo) % 2 != 0) ++lo;
        for (long long s = lo; s <= hi && !stop_; s += 2) f(static_cast<int>(s));
    }

    void master(bool variant111) {
        std::tie(tlo_, thi_) = window_targets(t_, opts_.master_window_slack);
        if (tlo_ > thi_) return;
        const int r = t_.r, g = t_.g, d = t_.d;
        for (int lp = 0; lp <= t_.ell && !stop_; ++lp) {
            for (int mp = 0; mp <= t_.m && !stop_; ++mp) {
                if (r == 3 && mp > 0) break;
                if (variant111 ? (mp >= t_.m || 2 * mp + lp >= r - 2) : (2 * mp + lp > r - 2)) break;
                int dp_min = g + r + ((g == 0 && t_.m != 0) ? 1 : 0);
                for (int dp = dp_min; dp <= d && !stop_; ++dp) {
                    long long base = lp + 2LL * (d - dp) + (variant111 ? 1 : 0);
                    sums_for(sum_range(mp, r, dp == r + 1 && g == 1), base, [&](int s) {
                        RuleParams p;
                        p.ell_prime = lp;
                        p.m_prime = mp;
                        p.d_prime = dp;
                        p.sum_n = s;
                        offer(p);
                    });
                }
            }
        }
    }

    void master_erasable() {
        std::tie(tlo_, thi_) = window_targets(t_, opts_.master_window_slack);
        if (tlo_ > thi_) return;
        const int r = t_.r, g = t_.g, d = t_.d, m = t_.m;
        for (int lp = 0; lp <= t_.ell && !stop_; ++lp)
            for (int mp = 0; mp <= m && !stop_; ++mp) {
                if (r == 3 && mp > 0) break;
                for (int mpp = 0; mp + mpp <= m && !stop_; ++mpp)
                    for (int gp = 0; gp <= g && !stop_; ++gp) {
                        int dp_min = gp + r + ((gp == 0 && m != 0) ? 1 : 0);
                        for (int dp = dp_min; dp <= d - g + gp && !stop_; ++dp) {
                            SumRange sr = sum_range(mp, r, dp == r + 1 && gp == 1);
                            if (!sr.any) continue;
                            int total = d - g - dp + gp;
                            for (int ein = 0; ein <= total && !stop_; ++ein) {
                                int eout = total - ein;
                                long long spill = floor_div(2LL * eout + 3LL * (g - gp) + m + mp + lp, r - 1);
                                long long base = 2LL * ein + (g - gp) + mpp + lp + spill;
                                sums_for(sr, base, [&](int s) {
                                    RuleParams p;
                                    p.ell_prime = lp;
                                    p.m_prime = mp;
                                    p.m_dprime = mpp;
                                    p.d_prime = dp;
                                    p.g_prime = gp;
                                    p.eps_in = ein;
                                    p.eps_out = eout;
                                    p.sum_n = s;
                                    offer(p);
                                });
                            }
                        }
                    }
            }
    }

    RuleId id_;
    const Tuple& t_;
    const Acceptor& accept_;
    const std::function<bool(const RuleInstance&)>& visit_;
    const RuleOptions& opts_;
    Goals goals_;
    bool stop_ = false;
    long long tlo_ = 0, thi_ = -1;
};

}  // namespace

void for_each_instance(RuleId rule, const Tuple& t, const Acceptor& accept,
                       const std::function<bool(const RuleInstance&)>& visit, const RuleOptions& opts) {
    Enumerator(rule, t, accept, visit, opts).run();
}

std::vector<RuleInstance> enumerate_instances(RuleId rule, const Tuple& t, const Acceptor& accept,
                                              const RuleOptions& opts) {
    std::vector<RuleInstance> out;
    for_each_instance(
        rule, t, accept,
        [&](const RuleInstance& i) {
            out.push_back(i);
            return true;
        },
        opts);
    return out;
}

std::optional<RuleInstance> first_instance(RuleId rule, const Tuple& t, const Acceptor& accept,
                                           const RuleOptions& opts) {
    std::optional<RuleInstance> found;
    for_each_instance(
        rule, t, accept,
        [&](const RuleInstance& i) {
            found = i;
            return false;
        },
        opts);
    return found;
}

}  // namespace bnint
