#include "doctest.h"

#include "simplicheck/checker.hpp"
#include "simplicheck/error.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/model_json.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/semantics2.hpp"

using namespace simplicheck;

namespace {

const FormulaBudget kSmallBudget{42, 30, 3};

ModelFamily small_family() {
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  family.extend(ModelFamily::random(FamilySpec{3, 1, 3}, 42, 25));
  return family;
}

}  // namespace

TEST_CASE("the registry lists the documented checks") {
  auto ids = registered_theorems();
  CHECK(ids.size() == 15);
  CHECK(std::find(ids.begin(), ids.end(), "P3.6-gap") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "T4.5-purity-iff") != ids.end());
  CHECK_THROWS_AS(run_theorem("no-such-theorem", small_family(), kSmallBudget),
                  Error);
}

TEST_CASE("every registered check passes on a mixed family") {
  ModelFamily family = small_family();
  for (const auto& report : run_all(family, kSmallBudget)) {
    CAPTURE(report.theorem);
    CHECK(report.pass);
  }
}

TEST_CASE("run_all with an empty random budget still passes") {
  // curated formulas alone drive the checks
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  for (const auto& report : run_all(family, FormulaBudget{42, 0, 3})) {
    CAPTURE(report.theorem);
    CHECK(report.pass);
  }
}

TEST_CASE("monotonicity is trivial on vertex-only models") {
  RawModel raw;
  raw.agents = {"a", "b"};
  raw.vertices = {{"v_a", "a", {}}, {"v_b", "b", {}}};
  raw.facets = {{"v_a"}, {"v_b"}};
  ModelFamily family =
      ModelFamily::of_models("vertices-only", {validate_model(raw)});
  CheckReport report =
      run_theorem("L2.6-monotonicity", family, kSmallBudget);
  CHECK(report.pass);
  CHECK(report.stats.points == 0);  // no strict face inclusions to test
}

TEST_CASE("the gap check records the single-edge witness") {
  CheckReport report = run_theorem("P3.6-gap", small_family(), kSmallBudget);
  REQUIRE(report.pass);
  REQUIRE(report.counterexample.has_value());
  SimplicialModel witness = model_from_json(report.counterexample->model);
  CHECK(witness.canonical_signature() ==
        fixture("Cminus").canonical_signature());
  CHECK(report.counterexample->check == "eval2-facet");

  SUBCASE("the recorded witness replays") {
    CHECK(replay_counterexample(*report.counterexample));
  }
  SUBCASE("report JSON carries the stable keys") {
    auto doc = report.to_json();
    for (const char* key : {"theorem", "family", "outcome", "stats"}) {
      CHECK(doc.contains(key));
    }
    CHECK(doc["outcome"] == "pass");
    for (const char* key : {"model", "face", "formula", "expected", "actual",
                            "check"}) {
      CHECK(doc["counterexample"].contains(key));
    }
    for (const char* key : {"models", "points", "formulas", "elapsed_ms"}) {
      CHECK(doc["stats"].contains(key));
    }
  }
}

TEST_CASE("reports are deterministic modulo elapsed time") {
  ModelFamily family = small_family();
  auto first = run_all(family, kSmallBudget);
  auto second = run_all(family, kSmallBudget);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(strip_elapsed(first[i].to_json()).dump() ==
          strip_elapsed(second[i].to_json()).dump());
  }
}

TEST_CASE("validity counterexamples replay and minimize") {
  ModelFamily family = small_family();
  Universe u = family.universe();
  CheckReport report =
      check_validity2(parse("p_a", u, TopPolicy::TwoValuedLocal), family,
                      SemanticsMode::Facet);
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.counterexample.has_value());
  CHECK(replay_counterexample(*report.counterexample));

  Counterexample shrunk = minimize_counterexample(*report.counterexample);
  CHECK(replay_counterexample(shrunk));
  CHECK(shrunk.model.at("facets").size() <=
        report.counterexample->model.at("facets").size());
}

TEST_CASE("minimization drops facets irrelevant to the failure") {
  // p_b fails at facet {0_a, 0_b}; the triangle facet is irrelevant
  const auto& C = fixture("C");
  Counterexample cex;
  cex.model = model_to_json(C);
  cex.face = {"0_a", "1_b"};
  cex.formula = "@c";
  cex.expected = "true";
  cex.actual = "false";
  cex.check = "eval2-facet";
  REQUIRE(replay_counterexample(cex));

  Counterexample shrunk = minimize_counterexample(cex);
  CHECK(shrunk.model.at("facets").size() == 1);
  CHECK(replay_counterexample(shrunk));
}

TEST_CASE("three-valued validity counterexamples replay") {
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  Universe u = family.universe();
  CheckReport report =
      check_validity3(parse("<K a> p_a", u), family, SemanticsMode::Face);
  REQUIRE_FALSE(report.pass);
  CHECK(report.counterexample->check == "eval3-face");
  CHECK(replay_counterexample(*report.counterexample));
}
