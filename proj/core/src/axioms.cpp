#include "bnint/axioms.hpp"

#include "bnint/tables.hpp"

namespace bnint {

namespace {
constexpr std::array<std::string_view, 5> kAxiomNames = {"small-r", "delta1-base", "sporadic30", "canonical-even",
                                                          "extra"};
}

std::string_view axiom_name(AxiomTag tag) { return kAxiomNames[static_cast<std::size_t>(tag)]; }

std::optional<AxiomTag> axiom_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kAxiomNames.size(); ++i)
        if (kAxiomNames[i] == name) return static_cast<AxiomTag>(i);
    return std::nullopt;
}

AxiomSet AxiomSet::standard() { return AxiomSet{}; }

void AxiomSet::add_extra(const Tuple& t, std::string citation) { extras_[t] = std::move(citation); }

void AxiomSet::load_extra_json(const nlohmann::json& j) {
    const nlohmann::json* list = &j;
    if (j.is_object()) {
        if (!j.contains("axioms")) throw DomainError("axiom file needs an 'axioms' array");
        list = &j.at("axioms");
    }
    if (!list->is_array()) throw DomainError("axiom list must be an array");
    for (const auto& entry : *list) {
        if (!entry.is_object() || !entry.contains("tuple"))
            throw DomainError("each axiom needs a 'tuple' field: " + entry.dump());
        std::string cite;
        if (entry.contains("citation")) {
            if (!entry["citation"].is_string()) throw DomainError("'citation' must be a string");
            cite = entry["citation"].get<std::string>();
        }
        add_extra(tuple_from_json(entry["tuple"]), cite);
    }
}

std::optional<AxiomTag> AxiomSet::classify(const Tuple& t) const {
    if (enabled(AxiomTag::SmallR) && t.r >= 1 && t.r <= 2 && is_good(t)) return AxiomTag::SmallR;
    if (enabled(AxiomTag::Delta1Base) && t.g >= 1 && t == Tuple{5 * t.g + 1, t.g, 4 * t.g + 1, 0, 0})
        return AxiomTag::Delta1Base;
    if (enabled(AxiomTag::Sporadic30) && is_sporadic30(t)) return AxiomTag::Sporadic30;
    if (enabled(AxiomTag::CanonicalEven) && t.r >= 3 && t.r % 2 == 1 && t == Tuple{2 * t.r, t.r + 1, t.r, 0, 0})
        return AxiomTag::CanonicalEven;
    if (enabled(AxiomTag::Extra) && extras_.count(t)) return AxiomTag::Extra;
    return std::nullopt;
}

}  // namespace bnint
