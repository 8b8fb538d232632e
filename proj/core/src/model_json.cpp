#include "simplicheck/model_json.hpp"

#include <fstream>

#include "simplicheck/error.hpp"

namespace simplicheck {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!obj.is_object()) {
    throw Error(ErrorCode::InvalidModelJson, where + " must be a JSON object");
  }
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw Error(ErrorCode::InvalidModelJson,
                  "unknown key '" + key + "' in " + where);
    }
  }
  for (const char* k : keys) {
    if (!obj.contains(k)) {
      throw Error(ErrorCode::InvalidModelJson,
                  "missing key '" + std::string(k) + "' in " + where);
    }
  }
}

std::vector<std::string> string_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) {
    throw Error(ErrorCode::InvalidModelJson, where + " must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw Error(ErrorCode::InvalidModelJson,
                  where + " must contain strings only");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

RawModel raw_model_from_json(const json& doc) {
  require_keys(doc, {"agents", "atoms", "vertices", "facets"}, "model");
  RawModel raw;
  raw.agents = string_array(doc.at("agents"), "agents");

  const auto& atoms = doc.at("atoms");
  if (!atoms.is_object()) {
    throw Error(ErrorCode::InvalidModelJson, "atoms must be an object");
  }
  for (const auto& [agent, list] : atoms.items()) {
    raw.atoms_by_agent[agent] = string_array(list, "atoms of '" + agent + "'");
  }

  const auto& vertices = doc.at("vertices");
  if (!vertices.is_array()) {
    throw Error(ErrorCode::InvalidModelJson, "vertices must be an array");
  }
  for (const auto& entry : vertices) {
    require_keys(entry, {"id", "agent", "true_atoms"}, "vertex");
    Vertex v;
    if (!entry.at("id").is_string() || !entry.at("agent").is_string()) {
      throw Error(ErrorCode::InvalidModelJson,
                  "vertex id and agent must be strings");
    }
    v.id = entry.at("id").get<std::string>();
    v.color = entry.at("agent").get<std::string>();
    v.true_atoms = string_array(entry.at("true_atoms"),
                                "true_atoms of vertex '" + v.id + "'");
    raw.vertices.push_back(std::move(v));
  }

  const auto& facets = doc.at("facets");
  if (!facets.is_array()) {
    throw Error(ErrorCode::InvalidModelJson, "facets must be an array");
  }
  for (const auto& entry : facets) {
    if (entry.is_array()) {
      raw.facets.push_back(string_array(entry, "facet"));
      raw.facet_names.emplace_back();
    } else if (entry.is_object()) {
      require_keys(entry, {"name", "vertices"}, "facet");
      if (!entry.at("name").is_string()) {
        throw Error(ErrorCode::InvalidModelJson, "facet name must be a string");
      }
      raw.facets.push_back(string_array(entry.at("vertices"), "facet vertices"));
      raw.facet_names.push_back(entry.at("name").get<std::string>());
    } else {
      throw Error(ErrorCode::InvalidModelJson,
                  "facet entries must be arrays or {name, vertices} objects");
    }
  }
  return raw;
}

SimplicialModel model_from_json(const json& doc) {
  return validate_model(raw_model_from_json(doc));
}

SimplicialModel model_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidModelJson, e.what());
  }
  return model_from_json(doc);
}

SimplicialModel model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidModelJson, "cannot open '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return model_from_string(text);
}

json model_to_json(const SimplicialModel& m) {
  json doc;
  doc["agents"] = m.universe().agents();
  json atoms = json::object();
  for (const auto& agent : m.universe().agents()) {
    atoms[agent] = m.universe().atoms_of(agent);
  }
  doc["atoms"] = atoms;
  json vertices = json::array();
  for (const auto& v : m.vertices()) {
    vertices.push_back(
        {{"id", v.id}, {"agent", v.color}, {"true_atoms", v.true_atoms}});
  }
  doc["vertices"] = vertices;
  json facets = json::array();
  for (std::size_t i = 0; i < m.facets().size(); ++i) {
    auto ids = m.face_ids(m.facets()[i]);
    if (m.facet_name(i).empty()) {
      facets.push_back(ids);
    } else {
      facets.push_back({{"name", m.facet_name(i)}, {"vertices", ids}});
    }
  }
  doc["facets"] = facets;
  return doc;
}

std::string model_to_string(const SimplicialModel& m) {
  return model_to_json(m).dump(2);
}

}  // namespace simplicheck
