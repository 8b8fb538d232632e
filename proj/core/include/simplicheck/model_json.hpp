#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "simplicheck/model.hpp"

namespace simplicheck {

/// Model file schema: one JSON object with exactly the keys `agents`,
/// `atoms`, `vertices`, `facets`. Facet entries are either arrays of vertex
/// ids or objects {"name": ..., "vertices": [...]}. Unknown keys are errors.
RawModel raw_model_from_json(const nlohmann::json& doc);
SimplicialModel model_from_json(const nlohmann::json& doc);
SimplicialModel model_from_string(const std::string& text);
SimplicialModel model_from_file(const std::string& path);

/// Canonical serialization: sorted keys, vertices and facets in canonical
/// order. Two runs over the same model produce identical bytes.
nlohmann::json model_to_json(const SimplicialModel& m);
std::string model_to_string(const SimplicialModel& m);

}  // namespace simplicheck
