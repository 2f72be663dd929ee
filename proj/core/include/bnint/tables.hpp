#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "bnint/tuple.hpp"

namespace bnint {

// Fixed lists the rest of the library is checked against.
struct ConstantTables {
    std::vector<Tuple> xex;                   // 12 tuples excluded from goodness
    std::vector<Triple> counterexamples;      // 5 triples where interpolation fails
    std::vector<Triple> point_count_exceptions;  // 4 triples where the point count is lower
    std::vector<Tuple> sporadic30;            // tuples no generic reduction handles
};

const ConstantTables& constants();

bool in_xex(const Tuple& t);
bool is_counterexample(const Triple& t);
bool is_sporadic30(const Tuple& t);

// {"xex": [[d,g,r,l,m],...], "counterexamples": [[d,g,r],...], ...}
nlohmann::json constants_to_json();
ConstantTables constants_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const Tuple& t);
Tuple tuple_from_json(const nlohmann::json& j);
nlohmann::json triple_to_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);

}  // namespace bnint
