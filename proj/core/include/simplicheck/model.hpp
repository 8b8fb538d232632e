#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "simplicheck/universe.hpp"

namespace simplicheck {

struct Vertex {
  std::string id;
  AgentId color;
  std::vector<std::string> true_atoms;  // sorted; all owned by `color`
};

/// A face is a set of vertices of one model, held as sorted indices into
/// the model's vertex table. Vertices are sorted by id, so index order and
/// id order agree; faces compare lexicographically on their id tuples.
struct Face {
  std::vector<std::uint32_t> vertices;

  auto operator<=>(const Face&) const = default;
  std::size_t size() const { return vertices.size(); }
};

/// Raw, unvalidated model description as read from a model file.
struct RawModel {
  std::vector<AgentId> agents;
  std::map<AgentId, std::vector<std::string>> atoms_by_agent;
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::string>> facets;  // vertex-id lists
  std::vector<std::string> facet_names;          // parallel; "" when unnamed
};

/// A chromatic simplicial model: colored vertices carrying local valuations,
/// stored by its facets. The full downward-closed complex is derived on
/// demand and cached; the object is immutable after construction.
class SimplicialModel {
 public:
  const Universe& universe() const { return universe_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  /// Every nonempty subset of every facet, deduplicated, sorted by vertex-id
  /// tuple.
  const std::vector<Face>& faces() const { return faces_; }

  const Vertex& vertex(std::uint32_t index) const { return vertices_[index]; }
  std::optional<std::uint32_t> vertex_index(const std::string& id) const;

  /// Builds a face value from vertex ids; the ids must exist but the result
  /// is not required to be a face of the complex (use is_face to test).
  Face face_from_ids(std::span<const std::string> ids) const;
  std::vector<std::string> face_ids(const Face& face) const;

  bool is_face(const Face& face) const;
  bool is_facet(const Face& face) const;

  /// Index into faces() / facets(); -1 when absent.
  int face_index(const Face& face) const;
  int facet_index(const Face& face) const;

  std::optional<Face> facet_by_name(const std::string& name) const;
  const std::string& facet_name(std::size_t facet_idx) const;

  /// Colors χ(X) as sorted agent names, and the derived atom set ℓ(X).
  std::vector<AgentId> colors_of(const Face& face) const;
  std::vector<std::string> atoms_of(const Face& face) const;

  /// For each agent index, the vertex of `face` with that color (-1 if the
  /// agent is dead in the face). χ is injective on faces, so this is total.
  std::vector<std::int32_t> color_vertex_table(const Face& face) const;

  bool is_pure() const;

  /// Structural identity up to vertex renaming: equal strings iff the models
  /// are isomorphic as labeled complexes (agents and valuations fixed).
  std::string canonical_signature() const;

  friend SimplicialModel validate_model(const RawModel& raw);

 private:
  SimplicialModel() = default;

  Universe universe_;
  std::vector<Vertex> vertices_;  // sorted by id
  std::vector<Face> facets_;      // canonical order
  std::vector<std::string> facet_names_;
  std::vector<Face> faces_;       // downward closure, canonical order
};

/// Checks every model invariant and returns the validated model. Facet lists
/// containing subsumed faces are rejected, not pruned.
SimplicialModel validate_model(const RawModel& raw);

std::vector<Face> all_faces(const SimplicialModel& m);

/// All facets containing x, canonical order. Throws NotAFace when x is not
/// a face of the complex.
std::vector<Face> facets_containing(const SimplicialModel& m, const Face& x);

bool is_pure(const SimplicialModel& m);

}  // namespace simplicheck
