#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bnint/tuple.hpp"

namespace bnint {

// Families of tuples taken as proven without a reduction.
enum class AxiomTag {
    SmallR,         // good tuples with r <= 2
    Delta1Base,     // (5g+1, g, 4g+1, 0, 0), g >= 1
    Sporadic30,     // the 30 irreducible sporadic tuples
    CanonicalEven,  // (2r, r+1, r, 0, 0) for odd r >= 3
    Extra,          // user-supplied, each with a citation
};

std::string_view axiom_name(AxiomTag tag);
std::optional<AxiomTag> axiom_from_name(std::string_view name);

class AxiomSet {
public:
    // All built-in families enabled, no extras.
    static AxiomSet standard();

    void enable(AxiomTag tag, bool on = true) { enabled_[static_cast<std::size_t>(tag)] = on; }
    bool enabled(AxiomTag tag) const { return enabled_[static_cast<std::size_t>(tag)]; }

    void add_extra(const Tuple& t, std::string citation);
    const std::map<Tuple, std::string>& extras() const { return extras_; }

    // Accepts {"axioms": [{"tuple": [d,g,r,l,m], "citation": "..."}]} or the
    // bare array.
    void load_extra_json(const nlohmann::json& j);

    // Which enabled family, if any, contains t.
    std::optional<AxiomTag> classify(const Tuple& t) const;
    bool contains(const Tuple& t) const { return classify(t).has_value(); }

private:
    std::array<bool, 5> enabled_{true, true, true, true, true};
    std::map<Tuple, std::string> extras_;
};

}  // namespace bnint
