#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "bnint/axioms.hpp"
#include "bnint/certificate.hpp"
#include "bnint/rules.hpp"
#include "bnint/tuple.hpp"

namespace bnint {

// The region d <= g + 2r - 1, g <= r - 1, m <= r - 2 + [g = 0].
bool in_box(const Tuple& t);

// Good tuples with 3 <= r <= r_max inside the box, plus good tuples whose
// pancake reduction lands in the XEx list; the delta = 1, l = m = 0 family
// is left out. Sorted.
std::vector<Tuple> enumerate_sporadic(int r_max = 13);

// Just the second source above: good (d, g, r, l, m + r - 1) with
// (d, g, r, l, m) in XEx.
std::vector<Tuple> shifted_exceptions();

struct CertifyBounds {
    int r_max = 64;
    int d_max = 1024;
};

struct SearchConfig {
    AcceptMode accept = AcceptMode::Good;
    std::vector<RuleId> rules{kAllRules.begin(), kAllRules.end()};
    RuleOptions rule_options;
    unsigned workers = 1;
    int r_max = 13;
    AxiomSet axioms = AxiomSet::standard();
    CertifyBounds bounds;

    void disable(RuleId id);
};

struct Outcome {
    Tuple tuple;
    std::optional<RuleInstance> witness;  // empty when irreducible
};

struct SporadicReport {
    int r_max = 13;
    std::vector<std::string> disabled_rules;
    std::size_t examined = 0;
    std::size_t reducible = 0;
    std::vector<Tuple> irreducible;  // sorted
    std::map<std::string, std::size_t> witness_counts;  // rule name -> tuples it reduced first
    std::vector<Outcome> outcomes;   // in enumeration order; not serialized to JSON

    nlohmann::json to_json() const;
    static SporadicReport from_json(const nlohmann::json& j);
    // d,g,r,l,m,verdict,rule,params
    std::string to_csv() const;
};

// First rule instance, in the configured order, whose subgoals pass accept.
std::optional<RuleInstance> find_reduction(const Tuple& t, const std::vector<RuleId>& rules, const Acceptor& accept,
                                           const RuleOptions& opts = {});

SporadicReport run_sporadic_search(const SearchConfig& config = {});

struct CoverageReport {
    int r_min = 14;
    int r_max = 14;
    std::size_t examined = 0;        // good box tuples tried
    std::size_t skipped_delta1 = 0;  // (delta, l, m) = (1, 0, 0)
    std::vector<Tuple> violators;    // box tuples with no rule
    std::size_t outside_checked = 0;        // tuples just outside the box
    std::vector<Tuple> outside_violators;   // ... where no large-parameter rule applies
    std::map<int, std::size_t> examined_per_r;

    bool ok() const { return violators.empty() && outside_violators.empty(); }
    nlohmann::json to_json() const;
    static CoverageReport from_json(const nlohmann::json& j);
};

// The rules usable for r >= 14 (no erasable master, no delta-1 chain).
std::vector<RuleId> large_r_rules();

// For each r, every good box tuple must have a reduction with good subgoals.
// Tuples one step outside the box must satisfy the hypotheses of gathering,
// peeling or pancaking.
CoverageReport verify_thm14(int r_min, int r_max, unsigned workers = 1);

class Irreducible : public std::runtime_error {
public:
    explicit Irreducible(const Tuple& t)
        : std::runtime_error("no rule applies to " + to_string(t)), tuple(t) {}
    Tuple tuple;
};

class BoundsExceeded : public std::runtime_error {
public:
    explicit BoundsExceeded(const Tuple& t)
        : std::runtime_error(to_string(t) + " is outside the certification bounds"), tuple(t) {}
    Tuple tuple;
};

// Depth-first reduction search down to axioms. Results are memoized across
// calls, so one Certifier should be reused for many roots. Thread-safe.
class Certifier {
public:
    explicit Certifier(SearchConfig config = {});

    // Throws DomainError if t is neither good nor an axiom, Irreducible if
    // the search dead-ends, BoundsExceeded outside config.bounds.
    Certificate certify(const Tuple& t);

    // Same search without exceptions.
    bool provable(const Tuple& t);

    const SearchConfig& config() const { return config_; }

private:
    bool prove(const Tuple& t);
    bool accepts(const Tuple& t);
    bool in_bounds(const Tuple& t) const;

    SearchConfig config_;
    std::recursive_mutex mu_;
    // nullopt marks a tuple known to fail
    std::unordered_map<Tuple, std::optional<Justification>, TupleHash> memo_;
    std::optional<Tuple> dead_end_;
};

}  // namespace bnint
