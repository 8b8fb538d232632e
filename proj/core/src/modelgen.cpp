#include "simplicheck/modelgen.hpp"

#include <algorithm>
#include <set>

#include "simplicheck/error.hpp"
#include "simplicheck/rng.hpp"

namespace simplicheck {

namespace {

constexpr const char* kAgentNames[] = {"a", "b", "c"};

void check_spec(const FamilySpec& spec) {
  if (spec.agents < 2 || spec.agents > 3 || spec.atoms_per_agent < 0 ||
      spec.atoms_per_agent > 1 || spec.max_facets < 1 || spec.max_facets > 3) {
    throw Error(ErrorCode::InvalidFamilySpec,
                "supported bounds: agents 2..3, atoms_per_agent 0..1, "
                "max_facets 1..3");
  }
}

struct Pool {
  std::vector<AgentId> agents;
  std::map<AgentId, std::vector<std::string>> atoms_by_agent;
  std::vector<Vertex> vertices;                    // sorted by id
  std::vector<std::vector<std::string>> candidates;  // facet id-lists, canonical
};

Pool build_pool(const FamilySpec& spec) {
  Pool pool;
  for (int i = 0; i < spec.agents; ++i) {
    AgentId agent = kAgentNames[i];
    std::vector<std::string> atoms;
    for (int k = 0; k < spec.atoms_per_agent; ++k) {
      atoms.push_back("p_" + agent);
    }
    pool.atoms_by_agent[agent] = atoms;
    pool.agents.push_back(agent);

    const int variants = 1 << spec.atoms_per_agent;
    for (int v = 0; v < variants; ++v) {
      Vertex vertex;
      vertex.id = std::to_string(v) + "_" + agent;
      vertex.color = agent;
      for (int k = 0; k < spec.atoms_per_agent; ++k) {
        if (v & (1 << k)) vertex.true_atoms.push_back(atoms[k]);
      }
      pool.vertices.push_back(std::move(vertex));
    }
  }
  std::sort(pool.vertices.begin(), pool.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });

  // chromatic nonempty subsets: one vertex per agent of a nonempty agent set
  std::map<AgentId, std::vector<std::string>> ids_by_agent;
  for (const auto& v : pool.vertices) ids_by_agent[v.color].push_back(v.id);

  const std::size_t n = pool.agents.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<const std::vector<std::string>*> slots;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) slots.push_back(&ids_by_agent[pool.agents[i]]);
    }
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
      std::vector<std::string> facet;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        facet.push_back((*slots[i])[pick[i]]);
      }
      std::sort(facet.begin(), facet.end());
      pool.candidates.push_back(std::move(facet));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == slots[i]->size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  }
  std::sort(pool.candidates.begin(), pool.candidates.end());
  return pool;
}

bool id_subset(const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialModel model_from_candidates(
    const Pool& pool, const std::vector<std::size_t>& chosen) {
  RawModel raw;
  raw.agents = pool.agents;
  raw.atoms_by_agent = pool.atoms_by_agent;
  std::set<std::string> used;
  for (std::size_t ci : chosen) {
    raw.facets.push_back(pool.candidates[ci]);
    raw.facet_names.emplace_back();
    used.insert(pool.candidates[ci].begin(), pool.candidates[ci].end());
  }
  for (const auto& v : pool.vertices) {
    if (used.count(v.id)) raw.vertices.push_back(v);
  }
  return validate_model(raw);
}

}  // namespace

std::vector<SimplicialModel> enumerate_models(const FamilySpec& spec,
                                              std::uint64_t cap) {
  check_spec(spec);
  Pool pool = build_pool(spec);
  const std::size_t n = pool.candidates.size();

  std::uint64_t projected = 0;
  for (int s = 1; s <= spec.max_facets; ++s) {
    std::uint64_t combos = 1;
    for (int i = 0; i < s; ++i) combos = combos * (n - i) / (i + 1);
    projected += combos;
    if (projected > cap) {
      throw Error(ErrorCode::SpecTooLarge,
                  "projected " + std::to_string(projected) +
                      " candidate facet combinations exceed cap " +
                      std::to_string(cap));
    }
  }

  std::vector<SimplicialModel> out;
  std::set<std::string> signatures;
  std::vector<std::size_t> combo;

  auto emit = [&](const std::vector<std::size_t>& chosen) {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (i != j && id_subset(pool.candidates[chosen[i]],
                                pool.candidates[chosen[j]])) {
          return;
        }
      }
    }
    SimplicialModel m = model_from_candidates(pool, chosen);
    if (signatures.insert(m.canonical_signature()).second) {
      out.push_back(std::move(m));
    }
  };

  for (int size = 1; size <= spec.max_facets; ++size) {
    combo.assign(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    if (static_cast<std::size_t>(size) > n) break;
    while (true) {
      emit(combo);
      // next combination
      int i = size - 1;
      while (i >= 0 &&
             combo[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(size - i)) {
        --i;
      }
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

SimplicialModel random_model(std::uint64_t seed, const FamilySpec& spec) {
  check_spec(spec);
  Pool pool = build_pool(spec);
  Rng rng(seed);

  const std::size_t want = 1 + rng.below(static_cast<std::uint64_t>(spec.max_facets));
  std::vector<std::size_t> order(pool.candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);

  std::vector<std::size_t> chosen;
  for (std::size_t ci : order) {
    bool ok = true;
    for (std::size_t cj : chosen) {
      if (id_subset(pool.candidates[ci], pool.candidates[cj]) ||
          id_subset(pool.candidates[cj], pool.candidates[ci])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen.push_back(ci);
      if (chosen.size() == want) break;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return model_from_candidates(pool, chosen);
}

ModelFamily ModelFamily::exhaustive(const FamilySpec& spec, std::uint64_t cap) {
  ModelFamily family;
  family.models_ = enumerate_models(spec, cap);
  family.description_.push_back({{"kind", "exhaustive"},
                                 {"agents", spec.agents},
                                 {"atoms_per_agent", spec.atoms_per_agent},
                                 {"max_facets", spec.max_facets}});
  family.rebuild_universe();
  return family;
}

ModelFamily ModelFamily::random(const FamilySpec& spec, std::uint64_t seed,
                                int count) {
  ModelFamily family;
  family.models_.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    family.models_.push_back(
        random_model(mix64(seed, static_cast<std::uint64_t>(i)), spec));
  }
  family.description_.push_back({{"kind", "random"},
                                 {"agents", spec.agents},
                                 {"atoms_per_agent", spec.atoms_per_agent},
                                 {"max_facets", spec.max_facets},
                                 {"seed", seed},
                                 {"count", count}});
  family.rebuild_universe();
  return family;
}

ModelFamily ModelFamily::default_family() {
  ModelFamily family = exhaustive(FamilySpec{2, 1, 2});
  family.extend(random(FamilySpec{3, 1, 3}, 42, 500));
  return family;
}

ModelFamily ModelFamily::of_models(std::string name,
                                   std::vector<SimplicialModel> models) {
  ModelFamily family;
  family.models_ = std::move(models);
  family.description_.push_back(
      {{"kind", "explicit"}, {"name", std::move(name)},
       {"count", family.models_.size()}});
  family.rebuild_universe();
  return family;
}

ModelFamily& ModelFamily::extend(const ModelFamily& other) {
  models_.insert(models_.end(), other.models_.begin(), other.models_.end());
  for (const auto& part : other.description_) description_.push_back(part);
  rebuild_universe();
  return *this;
}

void ModelFamily::rebuild_universe() {
  std::vector<AgentId> agents;
  std::map<AgentId, std::vector<std::string>> atoms;
  for (const auto& m : models_) {
    for (const auto& agent : m.universe().agents()) {
      agents.push_back(agent);
      for (const auto& atom : m.universe().atoms_of(agent)) {
        atoms[agent].push_back(atom);
      }
    }
  }
  for (auto& [agent, list] : atoms) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  universe_ = Universe(std::move(agents), std::move(atoms));
}

}  // namespace simplicheck
