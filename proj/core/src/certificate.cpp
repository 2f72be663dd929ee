#include "bnint/certificate.hpp"

#include <functional>

#include "bnint/tables.hpp"

namespace bnint {

std::string_view accept_mode_name(AcceptMode m) { return m == AcceptMode::Good ? "good" : "recursive"; }

std::optional<AcceptMode> accept_mode_from_name(std::string_view name) {
    if (name == "good") return AcceptMode::Good;
    if (name == "recursive") return AcceptMode::Recursive;
    return std::nullopt;
}

Justification Justification::from_axiom(AxiomTag tag) {
    Justification j;
    j.axiom = tag;
    return j;
}

Justification Justification::from_instance(const RuleInstance& inst) {
    Justification j;
    j.rule = inst.rule;
    j.params = inst.params;
    j.children = inst.goals;
    if (inst.rule == RuleId::Delta1Step) j.proviso = "g > 0 or characteristic != 2";
    return j;
}

int Certificate::depth() const {
    std::map<Tuple, int> memo;
    std::function<int(const Tuple&)> go = [&](const Tuple& t) -> int {
        if (auto it = memo.find(t); it != memo.end()) return it->second;
        int best = 0;
        auto node = nodes.find(t);
        if (node != nodes.end())
            for (const auto& c : node->second.children)
                if (measure_of(c) < measure_of(t)) best = std::max(best, 1 + go(c));
        memo[t] = best;
        return best;
    };
    return go(root);
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["schema"] = std::string(kCertificateSchema);
    j["root"] = tuple_to_json(root);
    j["acceptance"] = std::string(accept_mode_name(acceptance));
    j["nodes"] = nlohmann::json::array();
    for (const auto& [t, just] : nodes) {
        nlohmann::json n;
        n["tuple"] = tuple_to_json(t);
        nlohmann::json js;
        if (just.axiom) {
            js["axiom"] = std::string(axiom_name(*just.axiom));
        } else {
            js["rule"] = std::string(rule_name(just.rule));
            js["params"] = just.params.to_json();
            js["children"] = nlohmann::json::array();
            for (const auto& c : just.children) js["children"].push_back(tuple_to_json(c));
            if (!just.proviso.empty()) js["proviso"] = just.proviso;
        }
        n["justification"] = js;
        j["nodes"].push_back(n);
    }
    return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("certificate must be a JSON object");
    if (j.value("schema", std::string{}) != kCertificateSchema)
        throw DomainError("unsupported certificate schema '" + j.value("schema", std::string{}) + "'");
    Certificate c;
    if (!j.contains("root")) throw DomainError("certificate lacks 'root'");
    c.root = tuple_from_json(j["root"]);
    auto mode = accept_mode_from_name(j.value("acceptance", std::string("good")));
    if (!mode) throw DomainError("unknown acceptance mode");
    c.acceptance = *mode;
    if (!j.contains("nodes") || !j["nodes"].is_array()) throw DomainError("certificate lacks a 'nodes' array");
    for (const auto& n : j["nodes"]) {
        if (!n.is_object() || !n.contains("tuple") || !n.contains("justification"))
            throw DomainError("malformed node: " + n.dump());
        Tuple t = tuple_from_json(n["tuple"]);
        const auto& js = n["justification"];
        Justification just;
        if (js.contains("axiom")) {
            auto tag = axiom_from_name(js["axiom"].get<std::string>());
            if (!tag) throw DomainError("unknown axiom tag " + js["axiom"].dump());
            just.axiom = tag;
        } else if (js.contains("rule")) {
            auto id = rule_from_name(js["rule"].get<std::string>());
            if (!id) throw DomainError("unknown rule " + js["rule"].dump());
            just.rule = *id;
            just.params = RuleParams::from_json(js.value("params", nlohmann::json::object()));
            if (!js.contains("children") || !js["children"].is_array()) throw DomainError("rule node lacks children");
            for (const auto& ch : js["children"]) just.children.push_back(tuple_from_json(ch));
            just.proviso = js.value("proviso", std::string{});
        } else {
            throw DomainError("justification needs 'axiom' or 'rule'");
        }
        if (!c.nodes.emplace(t, std::move(just)).second) throw DomainError("duplicate node " + to_string(t));
    }
    return c;
}

std::string_view verify_failure_name(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::None: return "None";
        case VerifyFailure::MissingRoot: return "MissingRoot";
        case VerifyFailure::MissingNode: return "MissingNode";
        case VerifyFailure::AxiomNotMember: return "AxiomNotMember";
        case VerifyFailure::NotGood: return "NotGood";
        case VerifyFailure::MeasureViolation: return "MeasureViolation";
        case VerifyFailure::RuleRejected: return "RuleRejected";
        case VerifyFailure::ChildMismatch: return "ChildMismatch";
    }
    return "?";
}

VerifyResult verify_certificate(const Certificate& c, const AxiomSet& axioms) {
    auto fail = [](VerifyFailure f, std::string msg) { return VerifyResult{f, std::move(msg)}; };
    if (!c.nodes.count(c.root)) return fail(VerifyFailure::MissingRoot, "root " + to_string(c.root) + " has no node");
    const bool strict = c.acceptance == AcceptMode::Good;
    for (const auto& [t, just] : c.nodes) {
        if (just.axiom) {
            auto tag = axioms.classify(t);
            if (tag != just.axiom)
                return fail(VerifyFailure::AxiomNotMember,
                            to_string(t) + " is not in axiom family " + std::string(axiom_name(*just.axiom)));
            continue;
        }
        const std::string where = to_string(t) + " via " + std::string(rule_name(just.rule));
        if (strict && !is_good(t) && !axioms.contains(t))
            return fail(VerifyFailure::NotGood, where + ": source is not good");
        for (const auto& child : just.children)
            if (!(measure_of(child) < measure_of(t)))
                return fail(VerifyFailure::MeasureViolation, where + ": child " + to_string(child) + " does not decrease (r, d, m)");
        std::vector<Tuple> expect;
        try {
            expect = apply(just.rule, t, just.params);
        } catch (const PreconditionViolated& e) {
            return fail(VerifyFailure::RuleRejected, e.what());
        }
        if (expect != just.children) {
            std::string got;
            for (const auto& x : expect) got += " " + to_string(x);
            return fail(VerifyFailure::ChildMismatch, where + ": recorded children differ from rule output" + got);
        }
        for (const auto& child : just.children) {
            if (!c.nodes.count(child)) return fail(VerifyFailure::MissingNode, where + ": child " + to_string(child) + " has no node");
            if (strict && !is_good(child) && !axioms.contains(child))
                return fail(VerifyFailure::NotGood, where + ": child " + to_string(child) + " is not good");
        }
    }
    return {};
}

}  // namespace bnint
