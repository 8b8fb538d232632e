#include "simplicheck/report.hpp"

namespace simplicheck {

using nlohmann::json;

json Counterexample::to_json() const {
  json doc;
  doc["model"] = model;
  doc["face"] = face;
  doc["formula"] = formula;
  doc["expected"] = expected;
  doc["actual"] = actual;
  doc["check"] = check;
  if (!extra.empty()) doc["extra"] = extra;
  return doc;
}

Counterexample Counterexample::from_json(const json& doc) {
  Counterexample cex;
  cex.model = doc.at("model");
  cex.face = doc.at("face").get<std::vector<std::string>>();
  cex.formula = doc.at("formula").get<std::string>();
  cex.expected = doc.at("expected").get<std::string>();
  cex.actual = doc.at("actual").get<std::string>();
  cex.check = doc.at("check").get<std::string>();
  if (doc.contains("extra")) cex.extra = doc.at("extra");
  return cex;
}

json CheckReport::to_json() const {
  json doc;
  doc["theorem"] = theorem;
  doc["family"] = family;
  doc["outcome"] = pass ? "pass" : "counterexample";
  if (counterexample) doc["counterexample"] = counterexample->to_json();
  doc["stats"] = {{"models", stats.models},
                  {"points", stats.points},
                  {"formulas", stats.formulas},
                  {"elapsed_ms", stats.elapsed_ms}};
  if (!note.empty()) doc["note"] = note;
  return doc;
}

json strip_elapsed(json doc) {
  if (doc.is_object()) {
    for (auto& [key, value] : doc.items()) {
      if (key == "elapsed_ms") {
        value = 0.0;
      } else {
        value = strip_elapsed(value);
      }
    }
  } else if (doc.is_array()) {
    for (auto& item : doc) item = strip_elapsed(item);
  }
  return doc;
}

}  // namespace simplicheck
