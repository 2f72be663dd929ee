#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bnint/tuple.hpp"

namespace bnint {

// Declared in search order: cheap arithmetic guards first.
enum class RuleId {
    GatherLines,
    PeelOnion,
    PancakeOnions,
    M0Delta2,
    M0Delta4,
    M0Delta35,
    TwoProj,
    Delta5,
    Delta1Step,
    Master,
    Master111,
    MasterErasable,
};

inline constexpr std::array<RuleId, 12> kAllRules = {
    RuleId::GatherLines, RuleId::PeelOnion,  RuleId::PancakeOnions, RuleId::M0Delta2,
    RuleId::M0Delta4,    RuleId::M0Delta35,  RuleId::TwoProj,       RuleId::Delta5,
    RuleId::Delta1Step,  RuleId::Master,     RuleId::Master111,     RuleId::MasterErasable,
};

// Stable kebab-case names used in files and on the command line.
std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);

// Integer parameters of a rule instance. Only the fields a rule reads may be
// set; the multiset n_1..n_{m'} is carried by its sum.
struct RuleParams {
    std::optional<int> ell_prime, m_prime, m_dprime, d_prime, g_prime, eps_in, eps_out, sum_n, eps, k;

    friend bool operator==(const RuleParams&, const RuleParams&) = default;

    nlohmann::json to_json() const;
    static RuleParams from_json(const nlohmann::json& j);
    // "d_prime=7;ell_prime=0" in field order; empty when nothing is set.
    std::string describe() const;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RuleOptions {
    // The master-family windows read |delta - T| <= 1 - w/(r-1) with w = 1.
    // Lowering w widens the window; only used to probe that the guard binds.
    int master_window_slack = 1;
};

// Check every hypothesis of the rule at t and return its subgoals. Throws
// PreconditionViolated naming the first failed hypothesis.
std::vector<Tuple> apply(RuleId rule, const Tuple& t, const RuleParams& p, const RuleOptions& opts = {});

struct RuleInstance {
    RuleId rule;
    RuleParams params;
    std::vector<Tuple> goals;
};

using Acceptor = std::function<bool(const Tuple&)>;

// Visit, in ascending parameter order, every parameter choice that passes
// apply's checks and whose subgoals all pass `accept`. The visitor returns
// false to stop early.
void for_each_instance(RuleId rule, const Tuple& t, const Acceptor& accept,
                       const std::function<bool(const RuleInstance&)>& visit, const RuleOptions& opts = {});

std::vector<RuleInstance> enumerate_instances(RuleId rule, const Tuple& t, const Acceptor& accept,
                                              const RuleOptions& opts = {});

std::optional<RuleInstance> first_instance(RuleId rule, const Tuple& t, const Acceptor& accept,
                                           const RuleOptions& opts = {});

// {"rule": "master", "params": {...}}
nlohmann::json instance_to_json(RuleId rule, const RuleParams& p);

}  // namespace bnint
