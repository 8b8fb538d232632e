#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace simplicheck {

using AgentId = std::string;

/// The vocabulary a model or formula is written over: a finite agent set
/// and, per agent, the local atoms it owns. Atom names are globally unique
/// since the per-agent atom sets are pairwise disjoint.
class Universe {
 public:
  Universe() = default;
  Universe(std::vector<AgentId> agents,
           std::map<AgentId, std::vector<std::string>> atoms_by_agent);

  const std::vector<AgentId>& agents() const { return agents_; }
  const std::vector<std::string>& atoms_of(const AgentId& agent) const;
  /// All atom names, sorted.
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool has_agent(const AgentId& agent) const;
  bool has_atom(const std::string& atom) const;
  std::optional<AgentId> owner_of(const std::string& atom) const;

  int agent_index(const AgentId& agent) const;  // -1 if absent
  int atom_index(const std::string& atom) const;

  /// Lexicographically first atom of the lexicographically first agent that
  /// declares any; nullopt when no atoms are declared at all.
  std::optional<std::pair<AgentId, std::string>> first_atom() const;

  /// True when every agent/atom of `other` is declared here.
  bool contains(const Universe& other) const;

  bool operator==(const Universe& other) const = default;

 private:
  std::vector<AgentId> agents_;                                // sorted
  std::map<AgentId, std::vector<std::string>> atoms_by_agent_; // values sorted
  std::vector<std::string> atoms_;                             // sorted
  std::vector<AgentId> atom_owner_;                            // parallel to atoms_
};

}  // namespace simplicheck
