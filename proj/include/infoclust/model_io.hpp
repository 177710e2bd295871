#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "infoclust/sources.hpp"

namespace infoclust {

using json = nlohmann::ordered_json;

struct LoadedModel {
    SourceModel model;
    std::optional<std::string> dependent;
};

// Parses a model document. Backends: "linear_atomic", "pmf",
// "entropy_table". Rational strings are "p/q", integer, or decimal
// literals. Unknown keys are rejected. Throws ModelParseError.
LoadedModel load_model(const json& doc);
LoadedModel load_model_file(const std::string& path);

// "Y,X1" -> subset over the ground set. Throws UnknownVariable / EmptySet.
Subset parse_variable_set(const GroundSet& ground, const std::string& csv);

} // namespace infoclust
