#include "simplicheck/universe.hpp"

#include <algorithm>

#include "simplicheck/error.hpp"

namespace simplicheck {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateColorInFace: return "DuplicateColorInFace";
    case ErrorCode::AtomOwnerMismatch: return "AtomOwnerMismatch";
    case ErrorCode::SubsumedFacet: return "SubsumedFacet";
    case ErrorCode::UnknownVertexRef: return "UnknownVertexRef";
    case ErrorCode::FewerThanTwoAgents: return "FewerThanTwoAgents";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::DuplicateAtom: return "DuplicateAtom";
    case ErrorCode::UnusedVertex: return "UnusedVertex";
    case ErrorCode::EmptyFace: return "EmptyFace";
    case ErrorCode::EmptyModel: return "EmptyModel";
    case ErrorCode::InvalidModelJson: return "InvalidModelJson";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::TopNotExpressible: return "TopNotExpressible";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::EvaluationPointNotInModel: return "EvaluationPointNotInModel";
    case ErrorCode::FacetRequired: return "FacetRequired";
    case ErrorCode::SpecTooLarge: return "SpecTooLarge";
    case ErrorCode::InvalidFamilySpec: return "InvalidFamilySpec";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::NoAtomsDeclared: return "NoAtomsDeclared";
  }
  return "Error";
}

Universe::Universe(std::vector<AgentId> agents,
                   std::map<AgentId, std::vector<std::string>> atoms_by_agent)
    : agents_(std::move(agents)), atoms_by_agent_(std::move(atoms_by_agent)) {
  std::sort(agents_.begin(), agents_.end());
  agents_.erase(std::unique(agents_.begin(), agents_.end()), agents_.end());
  for (const auto& agent : agents_) {
    if (agent.empty()) {
      throw Error(ErrorCode::UnknownAgent, "empty agent name");
    }
  }
  for (auto& [agent, atoms] : atoms_by_agent_) {
    if (!has_agent(agent)) {
      throw Error(ErrorCode::UnknownAgent,
                  "atom table mentions undeclared agent '" + agent + "'");
    }
    std::sort(atoms.begin(), atoms.end());
    for (const auto& atom : atoms) {
      atoms_.push_back(atom);
      atom_owner_.push_back(agent);
    }
  }
  // sort the flat atom list, keeping owners aligned
  std::vector<std::size_t> order(atoms_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms_[a] < atoms_[b]; });
  std::vector<std::string> atoms;
  std::vector<AgentId> owners;
  atoms.reserve(atoms_.size());
  owners.reserve(atoms_.size());
  for (std::size_t i : order) {
    atoms.push_back(atoms_[i]);
    owners.push_back(atom_owner_[i]);
  }
  atoms_ = std::move(atoms);
  atom_owner_ = std::move(owners);
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i] == atoms_[i - 1]) {
      throw Error(ErrorCode::DuplicateAtom,
                  "atom '" + atoms_[i] + "' declared for both '" +
                      atom_owner_[i - 1] + "' and '" + atom_owner_[i] + "'");
    }
  }
}

const std::vector<std::string>& Universe::atoms_of(const AgentId& agent) const {
  static const std::vector<std::string> kEmpty;
  auto it = atoms_by_agent_.find(agent);
  return it == atoms_by_agent_.end() ? kEmpty : it->second;
}

bool Universe::has_agent(const AgentId& agent) const {
  return std::binary_search(agents_.begin(), agents_.end(), agent);
}

bool Universe::has_atom(const std::string& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::optional<AgentId> Universe::owner_of(const std::string& atom) const {
  int i = atom_index(atom);
  if (i < 0) return std::nullopt;
  return atom_owner_[static_cast<std::size_t>(i)];
}

int Universe::agent_index(const AgentId& agent) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), agent);
  if (it == agents_.end() || *it != agent) return -1;
  return static_cast<int>(it - agents_.begin());
}

int Universe::atom_index(const std::string& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return -1;
  return static_cast<int>(it - atoms_.begin());
}

std::optional<std::pair<AgentId, std::string>> Universe::first_atom() const {
  for (const auto& agent : agents_) {
    const auto& atoms = atoms_of(agent);
    if (!atoms.empty()) return std::make_pair(agent, atoms.front());
  }
  return std::nullopt;
}

bool Universe::contains(const Universe& other) const {
  for (const auto& agent : other.agents()) {
    if (!has_agent(agent)) return false;
  }
  for (const auto& atom : other.atoms()) {
    auto mine = owner_of(atom);
    auto theirs = other.owner_of(atom);
    if (!mine || *mine != *theirs) return false;
  }
  return true;
}

}  // namespace simplicheck
