#include "simplicheck/fixtures.hpp"

#include "simplicheck/error.hpp"

namespace simplicheck {

namespace {

RawModel three_agent_base() {
  RawModel raw;
  raw.agents = {"a", "b", "c"};
  raw.atoms_by_agent = {{"a", {"p_a"}}, {"b", {"p_b"}}, {"c", {"p_c"}}};
  return raw;
}

Vertex vert(std::string id, std::string agent,
            std::vector<std::string> atoms = {}) {
  return Vertex{std::move(id), std::move(agent), std::move(atoms)};
}

}  // namespace

std::map<std::string, SimplicialModel> fixtures() {
  std::map<std::string, SimplicialModel> out;

  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("0_b", "b"),
                    vert("1_b", "b", {"p_b"}), vert("1_c", "c", {"p_c"})};
    raw.facets = {{"0_a", "1_b"}, {"0_a", "0_b", "1_c"}};
    raw.facet_names = {"X", "Y"};
    out.emplace("C", validate_model(raw));
  }
  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("0_b1", "b"), vert("0_b2", "b"),
                    vert("1_c", "c", {"p_c"})};
    raw.facets = {{"0_a", "0_b1"}, {"0_a", "0_b2", "1_c"}};
    raw.facet_names = {"X'", "Y'"};
    out.emplace("Cprime", validate_model(raw));
  }
  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("0_b", "b"),
                    vert("1_c", "c", {"p_c"})};
    raw.facets = {{"0_a", "0_b", "1_c"}};
    raw.facet_names = {"Y''"};
    out.emplace("Csecond", validate_model(raw));
  }
  {
    RawModel raw;
    raw.agents = {"a", "b"};
    raw.atoms_by_agent = {{"a", {"p_a"}}, {"b", {"p_b"}}};
    raw.vertices = {vert("0_a", "a"), vert("1_b", "b", {"p_b"})};
    raw.facets = {{"0_a", "1_b"}};
    raw.facet_names = {"X"};
    out.emplace("Cminus", validate_model(raw));
  }
  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("0_b", "b"),
                    vert("1_b", "b", {"p_b"}), vert("1_c1", "c", {"p_c"}),
                    vert("1_c2", "c", {"p_c"})};
    raw.facets = {{"0_a", "1_b", "1_c1"}, {"0_a", "0_b", "1_c2"}};
    out.emplace("Fig1i", validate_model(raw));
  }
  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("0_b", "b"),
                    vert("1_b", "b", {"p_b"}), vert("0_c", "c"),
                    vert("1_c", "c", {"p_c"})};
    raw.facets = {{"0_a", "1_b", "0_c"}, {"0_a", "0_b", "1_c"}};
    out.emplace("Fig1viii", validate_model(raw));
  }
  {
    RawModel raw = three_agent_base();
    raw.vertices = {vert("0_a", "a"), vert("1_b", "b", {"p_b"}),
                    vert("1_c", "c", {"p_c"})};
    raw.facets = {{"1_b", "0_a"}, {"0_a", "1_c"}};
    out.emplace("Fig1ix", validate_model(raw));
  }
  return out;
}

const SimplicialModel& fixture(const std::string& name) {
  static const std::map<std::string, SimplicialModel> all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) {
    std::string names;
    for (const auto& [key, model] : all) names += key + " ";
    throw Error(ErrorCode::InvalidModelJson,
                "unknown fixture '" + name + "'; known: " + names);
  }
  return it->second;
}

}  // namespace simplicheck
