#include "doctest.h"

#include "simplicheck/error.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/model.hpp"
#include "simplicheck/model_json.hpp"

using namespace simplicheck;

namespace {

RawModel model_c_raw() {
  RawModel raw;
  raw.agents = {"a", "b", "c"};
  raw.atoms_by_agent = {{"a", {"p_a"}}, {"b", {"p_b"}}, {"c", {"p_c"}}};
  raw.vertices = {{"0_a", "a", {}},
                  {"1_b", "b", {"p_b"}},
                  {"0_b", "b", {}},
                  {"1_c", "c", {"p_c"}}};
  raw.facets = {{"0_a", "1_b"}, {"0_a", "0_b", "1_c"}};
  return raw;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::EmptyModel;
}

}  // namespace

TEST_CASE("validate_model accepts the worked example model") {
  SimplicialModel m = validate_model(model_c_raw());
  CHECK(m.universe().agents() == std::vector<AgentId>{"a", "b", "c"});
  CHECK(m.facets().size() == 2);
  CHECK(m.vertices().size() == 4);
}

TEST_CASE("validate_model rejects two vertices of one agent in a facet") {
  RawModel raw = model_c_raw();
  raw.facets.push_back({"1_b", "0_b"});
  CHECK(code_of([&] { validate_model(raw); }) ==
        ErrorCode::DuplicateColorInFace);
}

TEST_CASE("validate_model rejects subsumed facets instead of pruning") {
  RawModel raw = model_c_raw();
  raw.facets.push_back({"0_a"});
  CHECK(code_of([&] { validate_model(raw); }) == ErrorCode::SubsumedFacet);

  SUBCASE("duplicate facets are subsumed too") {
    RawModel dup = model_c_raw();
    dup.facets.push_back({"1_b", "0_a"});
    CHECK(code_of([&] { validate_model(dup); }) == ErrorCode::SubsumedFacet);
  }
}

TEST_CASE("validate_model names the offending element") {
  RawModel raw = model_c_raw();
  raw.facets = {{"0_a", "ghost"}};
  try {
    validate_model(raw);
    FAIL("expected UnknownVertexRef");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVertexRef);
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }
}

TEST_CASE("validate_model rejects single-agent models") {
  RawModel raw;
  raw.agents = {"a"};
  raw.vertices = {{"v", "a", {}}};
  raw.facets = {{"v"}};
  CHECK(code_of([&] { validate_model(raw); }) == ErrorCode::FewerThanTwoAgents);
}

TEST_CASE("validate_model rejects atoms on the wrong vertex") {
  RawModel raw = model_c_raw();
  raw.vertices[0].true_atoms = {"p_b"};
  CHECK(code_of([&] { validate_model(raw); }) == ErrorCode::AtomOwnerMismatch);
}

TEST_CASE("validate_model rejects vertices outside every facet") {
  RawModel raw = model_c_raw();
  raw.vertices.push_back({"stray", "c", {}});
  CHECK(code_of([&] { validate_model(raw); }) == ErrorCode::UnusedVertex);
}

TEST_CASE("all_faces enumerates the downward closure in canonical order") {
  SimplicialModel m = validate_model(model_c_raw());
  auto faces = all_faces(m);
  CHECK(faces.size() == 9);  // 4 vertices, 4 edges, 1 triangle
  int by_size[4] = {0, 0, 0, 0};
  for (const auto& f : faces) by_size[f.size()] += 1;
  CHECK(by_size[1] == 4);
  CHECK(by_size[2] == 4);
  CHECK(by_size[3] == 1);
  CHECK(std::is_sorted(faces.begin(), faces.end()));

  SUBCASE("downward closure: every nonempty subset of a face is a face") {
    for (const auto& f : faces) {
      const auto n = f.vertices.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) sub.vertices.push_back(f.vertices[i]);
        }
        CHECK(m.face_index(sub) >= 0);
      }
    }
  }

  SUBCASE("single edge facet gives three faces") {
    RawModel raw;
    raw.agents = {"a", "b"};
    raw.vertices = {{"v1", "a", {}}, {"v2", "b", {}}};
    raw.facets = {{"v1", "v2"}};
    CHECK(all_faces(validate_model(raw)).size() == 3);
  }
}

TEST_CASE("facets_containing") {
  SimplicialModel m = validate_model(model_c_raw());
  Face a0 = m.face_from_ids(std::vector<std::string>{"0_a"});

  auto around = facets_containing(m, a0);
  CHECK(around.size() == 2);  // both facets share the a-vertex

  Face b1 = m.face_from_ids(std::vector<std::string>{"1_b"});
  CHECK(facets_containing(m, b1).size() == 1);

  SUBCASE("a facet contains only itself") {
    for (const auto& facet : m.facets()) {
      auto up = facets_containing(m, facet);
      REQUIRE(up.size() == 1);
      CHECK(up[0] == facet);
    }
  }

  SUBCASE("non-face input is an error") {
    Face bogus = m.face_from_ids(std::vector<std::string>{"1_b", "1_c"});
    CHECK(code_of([&] { facets_containing(m, bogus); }) == ErrorCode::NotAFace);
  }
}

TEST_CASE("purity per the fixture models") {
  CHECK(is_pure(fixture("Csecond")));
  CHECK(is_pure(fixture("Fig1i")));
  CHECK(is_pure(fixture("Fig1viii")));
  CHECK_FALSE(is_pure(fixture("C")));
  // same dimension everywhere is not enough: two edges over three agents
  CHECK_FALSE(is_pure(fixture("Fig1ix")));
  for (const auto& facet : fixture("Fig1ix").facets()) {
    CHECK(facet.size() == 2);
  }
}

TEST_CASE("chromatic invariant: colors are injective on every face") {
  for (const auto& [name, m] : fixtures()) {
    for (const auto& face : m.faces()) {
      auto colors = m.colors_of(face);
      CHECK(std::adjacent_find(colors.begin(), colors.end()) == colors.end());
    }
  }
}

TEST_CASE("model JSON round-trips through the canonical serialization") {
  for (const auto& [name, m] : fixtures()) {
    SimplicialModel back = model_from_string(model_to_string(m));
    CHECK(model_to_string(back) == model_to_string(m));
    CHECK(back.canonical_signature() == m.canonical_signature());
  }
}

TEST_CASE("model JSON rejects unknown keys") {
  auto doc = model_to_json(fixture("Cminus"));
  doc["comment"] = "not allowed";
  CHECK(code_of([&] { model_from_json(doc); }) == ErrorCode::InvalidModelJson);
}

TEST_CASE("named facets are addressable") {
  const auto& m = fixture("C");
  auto x = m.facet_by_name("X");
  REQUIRE(x.has_value());
  CHECK(m.face_ids(*x) == std::vector<std::string>{"0_a", "1_b"});
  CHECK_FALSE(m.facet_by_name("Z").has_value());
}

TEST_CASE("canonical signature identifies models up to vertex renaming") {
  RawModel raw;
  raw.agents = {"a", "b"};
  raw.atoms_by_agent = {{"a", {"p_a"}}, {"b", {"p_b"}}};
  raw.vertices = {{"u", "a", {}}, {"w", "b", {"p_b"}}};
  raw.facets = {{"u", "w"}};
  SimplicialModel renamed = validate_model(raw);
  CHECK(renamed.canonical_signature() ==
        fixture("Cminus").canonical_signature());

  // different valuation, different structure
  raw.vertices[1].true_atoms = {};
  CHECK(validate_model(raw).canonical_signature() !=
        fixture("Cminus").canonical_signature());
}
