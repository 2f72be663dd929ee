#include "bnint/tables.hpp"

#include <algorithm>

namespace bnint {

const ConstantTables& constants() {
    static const ConstantTables tables = [] {
        ConstantTables c;
        c.xex = {
            {5, 2, 3, 0, 0}, {4, 1, 3, 1, 0}, {4, 1, 3, 0, 1}, {4, 1, 3, 1, 1},
            {6, 2, 4, 0, 0}, {5, 1, 4, 1, 0}, {5, 1, 4, 1, 1}, {5, 1, 4, 2, 1},
            {6, 2, 4, 1, 1}, {7, 2, 5, 0, 0}, {6, 1, 5, 0, 1}, {6, 1, 5, 1, 1},
        };
        c.counterexamples = {{5, 2, 3}, {6, 4, 3}, {6, 2, 4}, {7, 2, 5}, {10, 6, 5}};
        c.point_count_exceptions = {{5, 2, 3}, {6, 4, 3}, {7, 2, 5}, {10, 6, 5}};
        // Laid out by r, as in the usual grid.
        c.sporadic30 = {
            {4, 0, 3, 0, 1}, {4, 0, 3, 0, 2}, {4, 0, 3, 1, 1}, {5, 0, 3, 0, 1}, {5, 1, 3, 0, 1},
            {5, 1, 3, 1, 1}, {5, 2, 3, 0, 1}, {5, 2, 3, 0, 2}, {5, 2, 3, 1, 1}, {6, 2, 3, 0, 1},
            {5, 0, 4, 0, 1}, {5, 0, 4, 2, 0}, {6, 2, 4, 0, 2}, {7, 3, 4, 0, 1}, {7, 3, 4, 1, 1},
            {7, 1, 5, 0, 1}, {7, 2, 5, 0, 1}, {7, 2, 5, 2, 2}, {9, 2, 5, 0, 0}, {8, 3, 5, 2, 0},
            {9, 4, 5, 0, 0}, {9, 4, 5, 1, 0}, {7, 0, 6, 0, 1}, {7, 1, 6, 2, 1}, {7, 1, 6, 3, 1},
            {8, 2, 6, 2, 0}, {11, 5, 6, 0, 0}, {8, 1, 7, 0, 1}, {8, 1, 7, 1, 1}, {11, 4, 7, 1, 0},
        };
        return c;
    }();
    return tables;
}

bool in_xex(const Tuple& t) {
    // Every entry has 3 <= r <= 5; skip the scan for everything else.
    if (t.r < 3 || t.r > 5) return false;
    const auto& x = constants().xex;
    return std::find(x.begin(), x.end(), t) != x.end();
}

bool is_counterexample(const Triple& t) {
    const auto& x = constants().counterexamples;
    return std::find(x.begin(), x.end(), t) != x.end();
}

bool is_sporadic30(const Tuple& t) {
    if (t.r < 3 || t.r > 7) return false;
    const auto& x = constants().sporadic30;
    return std::find(x.begin(), x.end(), t) != x.end();
}

nlohmann::json tuple_to_json(const Tuple& t) { return nlohmann::json::array({t.d, t.g, t.r, t.ell, t.m}); }

Tuple tuple_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 5) throw DomainError("expected a 5-element integer array, got " + j.dump());
    for (const auto& v : j)
        if (!v.is_number_integer()) throw DomainError("expected integers, got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>(), j[4].get<int>()};
}

nlohmann::json triple_to_json(const Triple& t) { return nlohmann::json::array({t.d, t.g, t.r}); }

Triple triple_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw DomainError("expected a 3-element integer array, got " + j.dump());
    for (const auto& v : j)
        if (!v.is_number_integer()) throw DomainError("expected integers, got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

nlohmann::json constants_to_json() {
    const auto& c = constants();
    nlohmann::json j;
    auto tuples = [](const std::vector<Tuple>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& t : v) a.push_back(tuple_to_json(t));
        return a;
    };
    auto triples = [](const std::vector<Triple>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& t : v) a.push_back(triple_to_json(t));
        return a;
    };
    j["xex"] = tuples(c.xex);
    j["counterexamples"] = triples(c.counterexamples);
    j["point_count_exceptions"] = triples(c.point_count_exceptions);
    j["sporadic30"] = tuples(c.sporadic30);
    return j;
}

ConstantTables constants_from_json(const nlohmann::json& j) {
    ConstantTables c;
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
            throw DomainError(std::string("constants document lacks array '") + key + "'");
        return j.at(key);
    };
    for (const auto& t : need("xex")) c.xex.push_back(tuple_from_json(t));
    for (const auto& t : need("counterexamples")) c.counterexamples.push_back(triple_from_json(t));
    for (const auto& t : need("point_count_exceptions")) c.point_count_exceptions.push_back(triple_from_json(t));
    for (const auto& t : need("sporadic30")) c.sporadic30.push_back(tuple_from_json(t));
    return c;
}

}  // namespace bnint
