#include "simplicheck/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "simplicheck/error.hpp"

namespace simplicheck {

namespace {

bool subset_of(const Face& a, const Face& b) {
  return std::includes(b.vertices.begin(), b.vertices.end(),
                       a.vertices.begin(), a.vertices.end());
}

}  // namespace

SimplicialModel validate_model(const RawModel& raw) {
  SimplicialModel m;
  m.universe_ = Universe(raw.agents, raw.atoms_by_agent);
  if (m.universe_.agents().size() < 2) {
    throw Error(ErrorCode::FewerThanTwoAgents,
                "model declares " + std::to_string(m.universe_.agents().size()) +
                    " agent(s)");
  }

  m.vertices_ = raw.vertices;
  std::sort(m.vertices_.begin(), m.vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < m.vertices_.size(); ++i) {
    if (m.vertices_[i].id == m.vertices_[i - 1].id) {
      throw Error(ErrorCode::DuplicateVertexId,
                  "vertex id '" + m.vertices_[i].id + "' declared twice");
    }
  }
  for (auto& v : m.vertices_) {
    if (v.id.empty()) {
      throw Error(ErrorCode::UnknownVertexRef, "vertex with empty id");
    }
    if (!m.universe_.has_agent(v.color)) {
      throw Error(ErrorCode::UnknownAgent,
                  "vertex '" + v.id + "' colored by undeclared agent '" +
                      v.color + "'");
    }
    std::sort(v.true_atoms.begin(), v.true_atoms.end());
    v.true_atoms.erase(std::unique(v.true_atoms.begin(), v.true_atoms.end()),
                       v.true_atoms.end());
    for (const auto& atom : v.true_atoms) {
      auto owner = m.universe_.owner_of(atom);
      if (!owner) {
        throw Error(ErrorCode::UnknownAtom,
                    "vertex '" + v.id + "' lists undeclared atom '" + atom + "'");
      }
      if (*owner != v.color) {
        throw Error(ErrorCode::AtomOwnerMismatch,
                    "atom '" + atom + "' of agent '" + *owner +
                        "' listed on vertex '" + v.id + "' of agent '" +
                        v.color + "'");
      }
    }
  }

  if (raw.facets.empty()) {
    throw Error(ErrorCode::EmptyModel, "model has no facets");
  }
  std::vector<std::pair<Face, std::string>> facets;
  facets.reserve(raw.facets.size());
  for (std::size_t fi = 0; fi < raw.facets.size(); ++fi) {
    const auto& ids = raw.facets[fi];
    if (ids.empty()) {
      throw Error(ErrorCode::EmptyFace,
                  "facet #" + std::to_string(fi) + " is empty");
    }
    Face face;
    for (const auto& id : ids) {
      auto idx = m.vertex_index(id);
      if (!idx) {
        throw Error(ErrorCode::UnknownVertexRef,
                    "facet #" + std::to_string(fi) +
                        " references unknown vertex '" + id + "'");
      }
      face.vertices.push_back(*idx);
    }
    std::sort(face.vertices.begin(), face.vertices.end());
    face.vertices.erase(
        std::unique(face.vertices.begin(), face.vertices.end()),
        face.vertices.end());
    std::vector<bool> seen(m.universe_.agents().size(), false);
    for (auto vi : face.vertices) {
      int ai = m.universe_.agent_index(m.vertices_[vi].color);
      if (seen[static_cast<std::size_t>(ai)]) {
        throw Error(ErrorCode::DuplicateColorInFace,
                    "facet #" + std::to_string(fi) +
                        " has two vertices of agent '" +
                        m.vertices_[vi].color + "'");
      }
      seen[static_cast<std::size_t>(ai)] = true;
    }
    std::string name =
        fi < raw.facet_names.size() ? raw.facet_names[fi] : std::string();
    facets.emplace_back(std::move(face), std::move(name));
  }

  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      if (subset_of(facets[i].first, facets[j].first)) {
        std::ostringstream msg;
        msg << "facet #" << i << " {";
        for (auto vi : facets[i].first.vertices) msg << " " << m.vertices_[vi].id;
        msg << " } is contained in facet #" << j;
        throw Error(ErrorCode::SubsumedFacet, msg.str());
      }
    }
  }

  std::sort(facets.begin(), facets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<bool> used(m.vertices_.size(), false);
  for (auto& [face, name] : facets) {
    for (auto vi : face.vertices) used[vi] = true;
    m.facets_.push_back(std::move(face));
    m.facet_names_.push_back(std::move(name));
  }
  for (std::size_t vi = 0; vi < used.size(); ++vi) {
    if (!used[vi]) {
      throw Error(ErrorCode::UnusedVertex,
                  "vertex '" + m.vertices_[vi].id + "' is not in any facet");
    }
  }

  std::set<Face> closure;
  for (const auto& facet : m.facets_) {
    const std::size_t n = facet.vertices.size();
    if (n > 24) {
      throw Error(ErrorCode::SpecTooLarge,
                  "facet of dimension " + std::to_string(n - 1) +
                      " exceeds the supported size for face enumeration");
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.vertices.push_back(facet.vertices[i]);
      }
      closure.insert(std::move(sub));
    }
  }
  m.faces_.assign(closure.begin(), closure.end());
  return m;
}

std::optional<std::uint32_t> SimplicialModel::vertex_index(
    const std::string& id) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), id,
      [](const Vertex& v, const std::string& key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

Face SimplicialModel::face_from_ids(std::span<const std::string> ids) const {
  Face face;
  for (const auto& id : ids) {
    auto idx = vertex_index(id);
    if (!idx) {
      throw Error(ErrorCode::UnknownVertexRef, "unknown vertex '" + id + "'");
    }
    face.vertices.push_back(*idx);
  }
  std::sort(face.vertices.begin(), face.vertices.end());
  face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()),
                      face.vertices.end());
  if (face.vertices.empty()) {
    throw Error(ErrorCode::EmptyFace, "empty vertex list");
  }
  return face;
}

std::vector<std::string> SimplicialModel::face_ids(const Face& face) const {
  std::vector<std::string> ids;
  ids.reserve(face.vertices.size());
  for (auto vi : face.vertices) ids.push_back(vertices_[vi].id);
  return ids;
}

bool SimplicialModel::is_face(const Face& face) const {
  if (face.vertices.empty()) return false;
  for (const auto& facet : facets_) {
    if (subset_of(face, facet)) return true;
  }
  return false;
}

bool SimplicialModel::is_facet(const Face& face) const {
  return facet_index(face) >= 0;
}

int SimplicialModel::face_index(const Face& face) const {
  const auto& all = faces();
  auto it = std::lower_bound(all.begin(), all.end(), face);
  if (it == all.end() || *it != face) return -1;
  return static_cast<int>(it - all.begin());
}

int SimplicialModel::facet_index(const Face& face) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), face);
  if (it == facets_.end() || *it != face) return -1;
  return static_cast<int>(it - facets_.begin());
}

std::optional<Face> SimplicialModel::facet_by_name(
    const std::string& name) const {
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facet_names_[i] == name) return facets_[i];
  }
  return std::nullopt;
}

const std::string& SimplicialModel::facet_name(std::size_t facet_idx) const {
  return facet_names_[facet_idx];
}

std::vector<AgentId> SimplicialModel::colors_of(const Face& face) const {
  std::vector<AgentId> colors;
  colors.reserve(face.vertices.size());
  for (auto vi : face.vertices) colors.push_back(vertices_[vi].color);
  std::sort(colors.begin(), colors.end());
  return colors;
}

std::vector<std::string> SimplicialModel::atoms_of(const Face& face) const {
  std::vector<std::string> atoms;
  for (auto vi : face.vertices) {
    atoms.insert(atoms.end(), vertices_[vi].true_atoms.begin(),
                 vertices_[vi].true_atoms.end());
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<std::int32_t> SimplicialModel::color_vertex_table(
    const Face& face) const {
  std::vector<std::int32_t> table(universe_.agents().size(), -1);
  for (auto vi : face.vertices) {
    table[static_cast<std::size_t>(universe_.agent_index(vertices_[vi].color))] =
        static_cast<std::int32_t>(vi);
  }
  return table;
}

bool SimplicialModel::is_pure() const {
  for (const auto& facet : facets_) {
    if (facet.vertices.size() != universe_.agents().size()) return false;
  }
  return true;
}

std::string SimplicialModel::canonical_signature() const {
  // Vertices with the same color and valuation are interchangeable; take the
  // lexicographically least facet structure over all such relabelings.
  std::vector<std::string> keys(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::string key = vertices_[i].color + "|";
    for (const auto& atom : vertices_[i].true_atoms) key += atom + ",";
    keys[i] = std::move(key);
  }
  std::map<std::string, std::vector<std::uint32_t>> classes;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    classes[keys[i]].push_back(static_cast<std::uint32_t>(i));
  }

  auto render = [&](const std::vector<std::uint32_t>& relabel) {
    std::vector<std::vector<std::string>> rendered;
    for (const auto& facet : facets_) {
      std::vector<std::string> f;
      for (auto vi : facet.vertices) {
        f.push_back(keys[vi] + "#" + std::to_string(relabel[vi]));
      }
      std::sort(f.begin(), f.end());
      rendered.push_back(std::move(f));
    }
    std::sort(rendered.begin(), rendered.end());
    std::string out;
    for (const auto& f : rendered) {
      out += "[";
      for (const auto& v : f) out += v + ";";
      out += "]";
    }
    return out;
  };

  // Enumerate per-class permutations (classes are tiny at the scales this
  // library targets).
  std::vector<std::vector<std::uint32_t>> class_members;
  for (auto& [key, members] : classes) class_members.push_back(members);

  std::vector<std::uint32_t> relabel(vertices_.size(), 0);
  std::string best;
  bool first = true;

  std::vector<std::vector<std::uint32_t>> perms;
  for (auto& members : class_members) {
    std::vector<std::uint32_t> p(members.size());
    std::iota(p.begin(), p.end(), 0u);
    perms.push_back(std::move(p));
  }
  while (true) {
    for (std::size_t c = 0; c < class_members.size(); ++c) {
      for (std::size_t k = 0; k < class_members[c].size(); ++k) {
        relabel[class_members[c][k]] = perms[c][k];
      }
    }
    std::string sig = render(relabel);
    if (first || sig < best) {
      best = std::move(sig);
      first = false;
    }
    // advance the odometer of permutations
    std::size_t c = 0;
    while (c < perms.size() &&
           !std::next_permutation(perms[c].begin(), perms[c].end())) {
      ++c;
    }
    if (c == perms.size()) break;
  }
  return best;
}

std::vector<Face> all_faces(const SimplicialModel& m) { return m.faces(); }

std::vector<Face> facets_containing(const SimplicialModel& m, const Face& x) {
  if (!m.is_face(x)) {
    std::string ids;
    for (const auto& id : m.face_ids(x)) ids += id + " ";
    throw Error(ErrorCode::NotAFace, "{ " + ids + "} is not a face");
  }
  std::vector<Face> out;
  for (const auto& facet : m.facets()) {
    if (std::includes(facet.vertices.begin(), facet.vertices.end(),
                      x.vertices.begin(), x.vertices.end())) {
      out.push_back(facet);
    }
  }
  return out;
}

bool is_pure(const SimplicialModel& m) { return m.is_pure(); }

}  // namespace simplicheck
