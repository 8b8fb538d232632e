#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicheck/model.hpp"

namespace simplicheck {

/// Bounds for the small-model generators. Agents are named a, b, c; each
/// agent owns atoms_per_agent local atoms p_<agent>; vertex variants are the
/// atom valuations.
struct FamilySpec {
  int agents = 2;           // 2..3
  int atoms_per_agent = 1;  // 0..1
  int max_facets = 2;       // 1..3
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All models over the spec's vertex pool: every antichain of candidate
/// facets of size 1..max_facets, in canonical order, pruned of duplicates
/// under vertex renaming. Throws SpecTooLarge when the projected number of
/// candidate combinations exceeds `cap`.
std::vector<SimplicialModel> enumerate_models(
    const FamilySpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

/// Deterministic random model over the spec's pool; always valid.
SimplicialModel random_model(std::uint64_t seed, const FamilySpec& spec);

/// An ordered, finite collection of models used to bound "for any simplicial
/// model" quantifiers. Iteration order is fixed and platform-independent.
class ModelFamily {
 public:
  static ModelFamily exhaustive(const FamilySpec& spec,
                                std::uint64_t cap = kDefaultEnumerationCap);
  static ModelFamily random(const FamilySpec& spec, std::uint64_t seed,
                            int count);
  /// Exhaustive 2-agent models (1 atom, <= 2 facets) plus 500 seeded random
  /// 3-agent models (1 atom, <= 3 facets), seed 42.
  static ModelFamily default_family();
  static ModelFamily of_models(std::string name,
                               std::vector<SimplicialModel> models);

  ModelFamily& extend(const ModelFamily& other);

  const std::vector<SimplicialModel>& models() const { return models_; }
  std::size_t size() const { return models_.size(); }

  /// Union vocabulary of all member models.
  const Universe& universe() const { return universe_; }

  const nlohmann::json& describe() const { return description_; }

 private:
  std::vector<SimplicialModel> models_;
  Universe universe_;
  nlohmann::json description_ = nlohmann::json::array();

  void rebuild_universe();
};

}  // namespace simplicheck
