#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace simplicheck {

struct CheckStats {
  std::int64_t models = 0;
  std::int64_t points = 0;
  std::int64_t formulas = 0;
  double elapsed_ms = 0.0;
};

/// A replayable witness: the model it lives in, the evaluation point, the
/// formula, and what was expected versus observed. `check` names the
/// comparison that failed so it can be re-run; kind-specific context (second
/// face, second formula, agent, group, mode) goes into `extra`.
struct Counterexample {
  nlohmann::json model;
  std::vector<std::string> face;
  std::string formula;
  std::string expected;
  std::string actual;
  std::string check;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  static Counterexample from_json(const nlohmann::json& doc);
};

/// Outcome of one bounded check. A passing report never claims validity,
/// only that no counterexample exists in the family that was searched.
struct CheckReport {
  std::string theorem;
  nlohmann::json family;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  CheckStats stats;
  std::string note;

  nlohmann::json to_json() const;
};

/// Copy of a report (or list of reports) with every elapsed-time field
/// zeroed, for byte-identical comparisons across runs.
nlohmann::json strip_elapsed(nlohmann::json doc);

}  // namespace simplicheck
