#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weightprop/propagate.hpp"

namespace weightprop {

struct MatrixEntry {
    std::string rows;
    std::optional<std::string> cols;  // absent: column degrees are inferred from the entries
    PolyMatrix matrix;
};

struct ProblemFile {
    RingPtr ring;
    std::map<std::string, FreeModule> modules;
    std::map<std::string, MatrixEntry> matrices;
    std::map<std::string, WeightList> weightlists;
    std::vector<std::string> resolution;  // names of d_1, d_2, ...
    std::optional<ModuleOrderKind> module_order;

    const MatrixEntry& matrix(const std::string& name) const;
    const WeightList& weights(const std::string& name) const;
};

// Structural problems raise InputError, unparsable polynomials ParseError, inhomogeneous matrices DomainError.
ProblemFile problem_from_json(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);
nlohmann::json problem_to_json(const ProblemFile& p);

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json to_json(const ScalarMatrix& c);
nlohmann::json to_json(const WeightList& w);
nlohmann::json to_json(const Multidegree& d);
// Rows of canonical polynomial strings.
nlohmann::json entries_to_json(const PolyMatrix& m);

Multidegree parse_multidegree(const std::string& csv);

}  // namespace weightprop
