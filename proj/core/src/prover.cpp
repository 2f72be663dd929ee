#include "bnint/prover.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "bnint/tables.hpp"

namespace bnint {

bool in_box(const Tuple& t) {
    int eps0 = t.g == 0 ? 1 : 0;
    return t.d <= t.g + 2 * t.r - 1 && t.g <= t.r - 1 && t.m <= t.r - 2 + eps0;
}

namespace {

bool delta_one_family(const Tuple& t) {
    return t.ell == 0 && t.m == 0 && t.r >= 2 && delta_numerator(t) == t.r - 1;
}

// Good box tuples for one r, minus the delta = 1 family.
void box_tuples(int r, std::vector<Tuple>& out, std::size_t* skipped = nullptr) {
    for (int g = 0; g <= r - 1; ++g) {
        int mmax = r - 2 + (g == 0 ? 1 : 0);
        for (int d = g + r; d <= g + 2 * r - 1; ++d)
            for (int l = 0; 2 * l <= r; ++l)
                for (int m = 0; m <= mmax; ++m) {
                    Tuple t{d, g, r, l, m};
                    if (!is_good(t)) continue;
                    if (delta_one_family(t)) {
                        if (skipped) ++*skipped;
                        continue;
                    }
                    out.push_back(t);
                }
    }
}

// Runs body(i) for i in [0, n) on `workers` threads.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                next = n;
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

nlohmann::json tuples_json(const std::vector<Tuple>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : v) a.push_back(tuple_to_json(t));
    return a;
}

std::vector<Tuple> tuples_from(const nlohmann::json& j, const char* key) {
    std::vector<Tuple> out;
    if (!j.contains(key) || !j[key].is_array()) throw DomainError(std::string("report lacks array '") + key + "'");
    for (const auto& t : j[key]) out.push_back(tuple_from_json(t));
    return out;
}

}  // namespace

std::vector<Tuple> shifted_exceptions() {
    std::vector<Tuple> out;
    for (const auto& x : constants().xex) {
        Tuple t{x.d, x.g, x.r, x.ell, x.m + x.r - 1};
        if (is_good(t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tuple> enumerate_sporadic(int r_max) {
    std::vector<Tuple> out;
    for (int r = 3; r <= r_max; ++r) box_tuples(r, out);
    for (const auto& t : shifted_exceptions())
        if (t.r <= r_max && !delta_one_family(t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void SearchConfig::disable(RuleId id) { rules.erase(std::remove(rules.begin(), rules.end(), id), rules.end()); }

std::optional<RuleInstance> find_reduction(const Tuple& t, const std::vector<RuleId>& rules, const Acceptor& accept,
                                           const RuleOptions& opts) {
    for (RuleId id : rules)
        if (auto inst = first_instance(id, t, accept, opts)) return inst;
    return std::nullopt;
}

SporadicReport run_sporadic_search(const SearchConfig& config) {
    SporadicReport rep;
    rep.r_max = config.r_max;
    for (RuleId id : kAllRules)
        if (std::find(config.rules.begin(), config.rules.end(), id) == config.rules.end())
            rep.disabled_rules.emplace_back(rule_name(id));

    auto tuples = enumerate_sporadic(config.r_max);
    rep.outcomes.resize(tuples.size());

    std::unique_ptr<Certifier> certifier;
    if (config.accept == AcceptMode::Recursive) certifier = std::make_unique<Certifier>(config);
    const AxiomSet& axioms = config.axioms;
    Acceptor accept = [&](const Tuple& g) {
        if (is_good(g) || axioms.contains(g)) return true;
        return certifier && certifier->provable(g);
    };

    parallel_for(tuples.size(), config.workers, [&](std::size_t i) {
        rep.outcomes[i].tuple = tuples[i];
        rep.outcomes[i].witness = find_reduction(tuples[i], config.rules, accept, config.rule_options);
    });

    rep.examined = tuples.size();
    for (const auto& o : rep.outcomes) {
        if (o.witness) {
            ++rep.reducible;
            ++rep.witness_counts[std::string(rule_name(o.witness->rule))];
        } else
            rep.irreducible.push_back(o.tuple);
    }
    std::sort(rep.irreducible.begin(), rep.irreducible.end());
    return rep;
}

nlohmann::json SporadicReport::to_json() const {
    nlohmann::json j;
    j["r_max"] = r_max;
    j["disabled_rules"] = disabled_rules;
    j["examined"] = examined;
    j["reducible"] = reducible;
    j["irreducible"] = tuples_json(irreducible);
    j["witness_counts"] = witness_counts;
    return j;
}

SporadicReport SporadicReport::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("report must be a JSON object");
    SporadicReport rep;
    try {
        rep.r_max = j.at("r_max").get<int>();
        rep.disabled_rules = j.at("disabled_rules").get<std::vector<std::string>>();
        rep.examined = j.at("examined").get<std::size_t>();
        rep.reducible = j.at("reducible").get<std::size_t>();
        rep.witness_counts = j.at("witness_counts").get<std::map<std::string, std::size_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed report: ") + e.what());
    }
    rep.irreducible = tuples_from(j, "irreducible");
    if (rep.examined != rep.reducible + rep.irreducible.size()) throw DomainError("report counts do not add up");
    return rep;
}

std::string SporadicReport::to_csv() const {
    std::ostringstream os;
    os << "d,g,r,l,m,verdict,rule,params\n";
    for (const auto& o : outcomes) {
        const auto& t = o.tuple;
        os << t.d << ',' << t.g << ',' << t.r << ',' << t.ell << ',' << t.m << ',';
        if (o.witness)
            os << "reducible," << rule_name(o.witness->rule) << ',' << o.witness->params.describe() << '\n';
        else
            os << "irreducible,,\n";
    }
    return os.str();
}

std::vector<RuleId> large_r_rules() {
    std::vector<RuleId> out;
    for (RuleId id : kAllRules)
        if (id != RuleId::MasterErasable && id != RuleId::Delta1Step) out.push_back(id);
    return out;
}

CoverageReport verify_thm14(int r_min, int r_max, unsigned workers) {
    if (r_min < 14 || r_max < r_min) throw DomainError("need 14 <= r_min <= r_max");
    CoverageReport rep;
    rep.r_min = r_min;
    rep.r_max = r_max;
    const auto rules = large_r_rules();
    Acceptor good = [](const Tuple& g) { return is_good(g); };
    Acceptor any = [](const Tuple&) { return true; };
    const std::vector<RuleId> large = {RuleId::GatherLines, RuleId::PeelOnion, RuleId::PancakeOnions};

    for (int r = r_min; r <= r_max; ++r) {
        std::vector<Tuple> box;
        box_tuples(r, box, &rep.skipped_delta1);
        std::vector<char> covered(box.size(), 0);
        parallel_for(box.size(), workers,
                     [&](std::size_t i) { covered[i] = find_reduction(box[i], rules, good).has_value(); });
        for (std::size_t i = 0; i < box.size(); ++i)
            if (!covered[i]) rep.violators.push_back(box[i]);
        rep.examined += box.size();
        rep.examined_per_r[r] = box.size();

        // One layer past each face of the box.
        for (int g = 0; g <= r + 1; ++g)
            for (int d = g + r; d <= g + 2 * r + 1; ++d)
                for (int l = 0; 2 * l <= r; ++l)
                    for (int m = 0; m <= r + 1; ++m) {
                        Tuple t{d, g, r, l, m};
                        if (in_box(t) || !is_good(t)) continue;
                        ++rep.outside_checked;
                        if (!find_reduction(t, large, any)) rep.outside_violators.push_back(t);
                    }
    }
    return rep;
}

nlohmann::json CoverageReport::to_json() const {
    nlohmann::json j;
    j["r_min"] = r_min;
    j["r_max"] = r_max;
    j["examined"] = examined;
    j["skipped_delta1"] = skipped_delta1;
    j["violators"] = tuples_json(violators);
    j["outside_checked"] = outside_checked;
    j["outside_violators"] = tuples_json(outside_violators);
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [r, n] : examined_per_r) per[std::to_string(r)] = n;
    j["examined_per_r"] = per;
    return j;
}

CoverageReport CoverageReport::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("coverage report must be a JSON object");
    CoverageReport rep;
    try {
        rep.r_min = j.at("r_min").get<int>();
        rep.r_max = j.at("r_max").get<int>();
        rep.examined = j.at("examined").get<std::size_t>();
        rep.skipped_delta1 = j.at("skipped_delta1").get<std::size_t>();
        rep.outside_checked = j.at("outside_checked").get<std::size_t>();
        for (const auto& [k, v] : j.at("examined_per_r").items()) rep.examined_per_r[std::stoi(k)] = v.get<std::size_t>();
    } catch (const std::exception& e) {
        throw DomainError(std::string("malformed coverage report: ") + e.what());
    }
    rep.violators = tuples_from(j, "violators");
    rep.outside_violators = tuples_from(j, "outside_violators");
    return rep;
}

// ---- certification ---------------------------------------------------------

Certifier::Certifier(SearchConfig config) : config_(std::move(config)) {}

bool Certifier::in_bounds(const Tuple& t) const { return t.r <= config_.bounds.r_max && t.d <= config_.bounds.d_max; }

bool Certifier::accepts(const Tuple& t) {
    if (config_.accept == AcceptMode::Good) return is_good(t) || config_.axioms.contains(t);
    return t.r >= 1 && t.g >= 0 && t.ell >= 0 && t.m >= 0 && in_bounds(t);
}

bool Certifier::prove(const Tuple& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second.has_value();
    std::optional<Justification> just;
    if (auto tag = config_.axioms.classify(t)) {
        just = Justification::from_axiom(*tag);
    } else if (config_.accept == AcceptMode::Recursive || is_good(t)) {
        Acceptor accept = [this](const Tuple& g) { return accepts(g); };
        for (RuleId id : config_.rules) {
            for_each_instance(
                id, t, accept,
                [&](const RuleInstance& inst) {
                    for (const auto& g : inst.goals)
                        if (!prove(g)) return true;
                    just = Justification::from_instance(inst);
                    return false;
                },
                config_.rule_options);
            if (just) break;
        }
    }
    if (!just && !dead_end_ && is_good(t)) dead_end_ = t;
    memo_.emplace(t, just);
    return just.has_value();
}

bool Certifier::provable(const Tuple& t) {
    std::lock_guard lock(mu_);
    if (!in_bounds(t)) return false;
    return prove(t);
}

Certificate Certifier::certify(const Tuple& t) {
    std::lock_guard lock(mu_);
    if (!in_bounds(t)) throw BoundsExceeded(t);
    if (!config_.axioms.contains(t)) {
        auto verdict = goodness(t);
        if (!verdict.is_good()) throw DomainError(verdict.describe());
    }
    dead_end_.reset();
    if (!prove(t)) throw Irreducible(dead_end_.value_or(t));

    Certificate cert;
    cert.root = t;
    cert.acceptance = config_.accept;
    std::vector<Tuple> stack{t};
    while (!stack.empty()) {
        Tuple cur = stack.back();
        stack.pop_back();
        if (cert.nodes.count(cur)) continue;
        const auto& just = *memo_.at(cur);
        cert.nodes.emplace(cur, just);
        for (const auto& c : just.children) stack.push_back(c);
    }
    return cert;
}

}  // namespace bnint
