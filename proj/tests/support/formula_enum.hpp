#pragma once

// Exhaustive enumeration of all core formulas up to a height bound over a
// fixed universe. Test-only; sizes grow fast (1444 formulas already at
// height 2 over two agents with one atom each).

#include <vector>

#include "simplicheck/formula.hpp"
#include "simplicheck/universe.hpp"

namespace simplicheck::oracle {

inline std::vector<std::vector<AgentId>> nonempty_groups(const Universe& u) {
  std::vector<std::vector<AgentId>> groups;
  const auto& agents = u.agents();
  for (std::uint64_t mask = 1; mask < (1ULL << agents.size()); ++mask) {
    std::vector<AgentId> g;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (mask & (1ULL << i)) g.push_back(agents[i]);
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

inline std::vector<Formula> enumerate_formulas(const Universe& u,
                                               int max_depth) {
  std::vector<Formula> layer;
  for (const auto& agent : u.agents()) {
    layer.push_back(Formula::global_atom(agent));
  }
  for (const auto& atom : u.atoms()) {
    layer.push_back(Formula::local_atom(atom, *u.owner_of(atom)));
  }
  auto groups = nonempty_groups(u);
  for (int d = 0; d < max_depth; ++d) {
    std::vector<Formula> next = layer;
    for (const auto& f : layer) {
      next.push_back(Formula::negation(f));
      for (const auto& g : groups) {
        next.push_back(Formula::diamond_d(g, f));
      }
    }
    for (const auto& f : layer) {
      for (const auto& g : layer) {
        next.push_back(Formula::conjunction(f, g));
      }
    }
    // drop structural duplicates (negations of depth-d formulas rebuilt at
    // depth d+1, etc.)
    std::vector<Formula> dedup;
    for (const auto& f : next) {
      bool seen = false;
      for (const auto& g : dedup) {
        if (f == g) {
          seen = true;
          break;
        }
      }
      if (!seen) dedup.push_back(f);
    }
    layer = std::move(dedup);
  }
  return layer;
}

}  // namespace simplicheck::oracle
