#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bnint/axioms.hpp"
#include "bnint/rules.hpp"
#include "bnint/tuple.hpp"

namespace bnint {

inline constexpr std::string_view kCertificateSchema = "bnint-certificate/1";

// What counts as an acceptable subgoal: a good tuple (or an axiom), or
// anything that itself certifies.
enum class AcceptMode { Good, Recursive };

std::string_view accept_mode_name(AcceptMode m);
std::optional<AcceptMode> accept_mode_from_name(std::string_view name);

struct Justification {
    std::optional<AxiomTag> axiom;  // set for leaves
    RuleId rule = RuleId::GatherLines;
    RuleParams params;
    std::vector<Tuple> children;
    std::string proviso;  // side condition not checked arithmetically

    bool is_axiom() const { return axiom.has_value(); }
    static Justification from_axiom(AxiomTag tag);
    static Justification from_instance(const RuleInstance& inst);

    friend bool operator==(const Justification&, const Justification&) = default;
};

struct Certificate {
    Tuple root;
    AcceptMode acceptance = AcceptMode::Good;
    std::map<Tuple, Justification> nodes;

    // Longest path from the root, counted in edges.
    int depth() const;

    nlohmann::json to_json() const;
    // Throws DomainError on a malformed document.
    static Certificate from_json(const nlohmann::json& j);
};

enum class VerifyFailure {
    None,
    MissingRoot,
    MissingNode,
    AxiomNotMember,
    NotGood,
    MeasureViolation,
    RuleRejected,
    ChildMismatch,
};

std::string_view verify_failure_name(VerifyFailure f);

struct VerifyResult {
    VerifyFailure failure = VerifyFailure::None;
    std::string diagnostic;

    bool ok() const { return failure == VerifyFailure::None; }
    explicit operator bool() const { return ok(); }
};

// Re-checks every node from scratch: axiom membership, rule hypotheses via
// apply, agreement of the recorded children, strict (r, d, m) decrease on
// every edge, presence of every child. Stops at the first failure.
VerifyResult verify_certificate(const Certificate& c, const AxiomSet& axioms);

}  // namespace bnint
