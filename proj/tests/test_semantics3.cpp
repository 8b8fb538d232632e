#include "doctest.h"

#include "simplicheck/rng.hpp"
#include "simplicheck/model_json.hpp"

#include "simplicheck/error.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/formula_gen.hpp"
#include "simplicheck/modelgen.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/semantics3.hpp"
#include "support/formula_enum.hpp"
#include "support/naive_semantics.hpp"

using namespace simplicheck;

namespace {

Face face_of(const SimplicialModel& m, std::initializer_list<const char*> ids) {
  std::vector<std::string> v(ids.begin(), ids.end());
  return m.face_from_ids(v);
}

Truth3 at(const SimplicialModel& m, const Face& x, const char* text,
          SemanticsMode mode = SemanticsMode::Face) {
  return eval3(m, x, parse(text, m.universe()), mode);
}

}  // namespace

TEST_CASE("worked example: dead agents make formulas undefined") {
  const auto& C = fixture("C");
  Face X = face_of(C, {"0_a", "1_b"});
  CHECK(at(C, X, "p_c") == Truth3::Undefined);
  CHECK(at(C, X, "~p_c") == Truth3::Undefined);
  CHECK(at(C, X, "<K c> ~p_a") == Truth3::Undefined);
  CHECK(at(C, X, "~<K c> ~p_a") == Truth3::Undefined);
}

TEST_CASE("worked example: knowledge of a live agent about a dead one") {
  const auto& C = fixture("C");
  Face X = face_of(C, {"0_a", "1_b"});
  CHECK(at(C, X, "<K a> p_c") == Truth3::True);
  CHECK(at(C, X, "[K a] p_c") == Truth3::True);
  CHECK(at(C, X, "[K a] p_c -> p_c") == Truth3::Undefined);
}

TEST_CASE("worked example: individual and distributed knowledge") {
  const auto& C = fixture("C");
  Face X = face_of(C, {"0_a", "1_b"});
  Face Y = face_of(C, {"0_a", "0_b", "1_c"});
  CHECK(at(C, X, "p_b & ~p_a") == Truth3::True);
  CHECK(at(C, Y, "<K a> p_b") == Truth3::True);
  CHECK(at(C, Y, "[D{a,b}] ~p_b") == Truth3::True);
  CHECK(at(C, X, "[K a] ~@c") == Truth3::False);
  CHECK(at(C, X, "[K a] ~@c", SemanticsMode::Facet) == Truth3::False);
  CHECK(at(C, X, "[D{a,b}] ~@c") == Truth3::True);
}

TEST_CASE("worked example: global atoms add expressivity") {
  const auto& Cp = fixture("Cprime");
  const auto& Cs = fixture("Csecond");
  Face Yp = *Cp.facet_by_name("Y'");
  Face Ys = *Cs.facet_by_name("Y''");
  CHECK(at(Cp, Yp, "<K a> ~@c") == Truth3::True);
  CHECK(at(Cs, Ys, "<K a> ~@c") == Truth3::False);
}

TEST_CASE("evaluation point errors") {
  const auto& C = fixture("C");
  Face X = face_of(C, {"0_a", "1_b"});
  Face no_face = face_of(C, {"1_b", "1_c"});
  Evaluator3 face_eval(C, SemanticsMode::Face);
  Evaluator3 facet_eval(C, SemanticsMode::Facet);
  Formula pa = parse("p_a", C.universe());

  CHECK_THROWS_AS(face_eval.eval(no_face, pa), Error);
  try {
    facet_eval.eval(face_of(C, {"0_a"}), pa);
    FAIL("expected FacetRequired");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FacetRequired);
  }
  CHECK(facet_eval.eval(X, pa) == Truth3::False);
}

TEST_CASE("evaluator agrees with the naive clause-by-clause oracle") {
  // every (model, face, formula) triple: exhaustive 2-agent family,
  // exhaustive formulas of height <= 1 in face mode, plus spot checks in
  // facet mode (the acceptance suite does the full depth-2 facet sweep)
  auto family = enumerate_models(FamilySpec{2, 1, 2});
  REQUIRE(family.size() == 28);
  Universe u = family.front().universe();
  auto formulas = oracle::enumerate_formulas(u, 1);
  REQUIRE(formulas.size() == 36);

  for (const auto& m : family) {
    Evaluator3 plain(m, SemanticsMode::Face);
    Evaluator3 cached(m, SemanticsMode::Face, EvalOptions{.cache = true});
    for (const auto& f : formulas) {
      for (const auto& x : m.faces()) {
        auto ids = oracle::id_set(m, x);
        EvalPair expected{oracle::def3(m, ids, f), oracle::sat3(m, ids, f)};
        EvalPair got = plain.eval_pair(x, f);
        REQUIRE(got.defined == expected.defined);
        REQUIRE(got.satisfied == expected.satisfied);
        EvalPair via_cache = cached.eval_pair(x, f);
        REQUIRE(via_cache.defined == expected.defined);
        REQUIRE(via_cache.satisfied == expected.satisfied);
      }
    }
  }
}

TEST_CASE("facet mode matches the naive facet oracle on the fixtures") {
  for (const auto& [name, m] : fixtures()) {
    Universe u = m.universe();
    Evaluator3 ev(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (std::uint64_t i = 0; i < 150; ++i) {
      Formula f = random_formula(mix64(0xFACE7, i), 3, u);
      for (const auto& x : m.facets()) {
        auto ids = oracle::id_set(m, x);
        REQUIRE(ev.eval_pair(x, f).defined == oracle::def3F(m, ids, f));
        REQUIRE(ev.eval_pair(x, f).satisfied == oracle::sat3F(m, ids, f));
      }
    }
  }
}

TEST_CASE("truth implies definability across an enumerated family") {
  auto family = enumerate_models(FamilySpec{2, 1, 2});
  Universe u = family.front().universe();
  auto formulas = oracle::enumerate_formulas(u, 1);
  for (const auto& m : family) {
    Evaluator3 ev(m, SemanticsMode::Face, EvalOptions{.cache = true});
    for (const auto& f : formulas) {
      for (const auto& x : m.faces()) {
        EvalPair p = ev.eval_pair(x, f);
        if (p.satisfied) REQUIRE(p.defined);
      }
    }
  }
}

TEST_CASE("negation symmetry") {
  const auto& C = fixture("C");
  Universe u = C.universe();
  Evaluator3 ev(C, SemanticsMode::Face, EvalOptions{.cache = true});
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = random_formula(mix64(0x9e9, i), 3, u);
    Formula nf = Formula::negation(f);
    for (const auto& x : C.faces()) {
      Truth3 v = ev.eval(x, f);
      Truth3 nv = ev.eval(x, nf);
      REQUIRE((v == Truth3::Undefined) == (nv == Truth3::Undefined));
      REQUIRE((v == Truth3::False) == (nv == Truth3::True));
    }
  }
}

TEST_CASE("derived box agrees with the desugared dual everywhere") {
  const auto& C = fixture("C");
  Universe u = C.universe();
  Evaluator3 ev(C, SemanticsMode::Face);
  auto groups = oracle::nonempty_groups(u);

  // exhaustive bodies of height <= 1, all groups, all 9 faces
  for (const auto& body : oracle::enumerate_formulas(u, 1)) {
    for (const auto& group : groups) {
      Formula desugared = Formula::box_d(group, body);
      for (const auto& x : C.faces()) {
        REQUIRE(to_truth3(ev.eval_box_pair(x, group, body)) ==
                ev.eval(x, desugared));
      }
    }
  }

  SUBCASE("box is true on the distributed-omniscience edge") {
    Face Y = face_of(C, {"0_a", "0_b", "1_c"});
    CHECK(eval3_derived_box(C, Y, {"a", "b"},
                            parse("~p_b", u), SemanticsMode::Face) ==
          Truth3::True);
  }
  SUBCASE("box with an undefined body at every witness is undefined") {
    Face X = face_of(C, {"0_a", "1_b"});
    CHECK(eval3_derived_box(C, X, {"a", "b"}, parse("p_c", u),
                            SemanticsMode::Face) == Truth3::Undefined);
  }
}

TEST_CASE("monotonicity along face inclusion (sampled)") {
  auto family = enumerate_models(FamilySpec{2, 1, 2});
  Universe u = family.front().universe();
  auto formulas = oracle::enumerate_formulas(u, 1);
  for (const auto& m : family) {
    Evaluator3 ev(m, SemanticsMode::Face, EvalOptions{.cache = true});
    const auto& faces = m.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (!std::includes(faces[j].vertices.begin(), faces[j].vertices.end(),
                           faces[i].vertices.begin(),
                           faces[i].vertices.end())) {
          continue;
        }
        for (const auto& f : formulas) {
          EvalPair px = ev.eval_pair(faces[i], f);
          EvalPair py = ev.eval_pair(faces[j], f);
          REQUIRE((!px.defined || py.defined));
          REQUIRE((!px.satisfied || py.satisfied));
          REQUIRE((!(py.satisfied && px.defined) || px.satisfied));
        }
      }
    }
  }
}

TEST_CASE("bounded validity") {
  ModelFamily family = ModelFamily::random(FamilySpec{3, 1, 3}, 42, 60);
  Universe u = family.universe();

  SUBCASE("knowledge is veridical wherever defined") {
    CheckReport r = check_validity3(parse("[K a] p_c -> p_c", u), family,
                                    SemanticsMode::Face);
    CHECK(r.pass);
    CHECK(r.note == "no counterexample in family");
  }
  SUBCASE("duality instance") {
    CheckReport r = check_validity3(
        parse("[D{a,b}] p_a <-> ~<D{a,b}> ~p_a", u), family,
        SemanticsMode::Face);
    CHECK(r.pass);
  }
  SUBCASE("an atom is not valid and yields a replayable counterexample") {
    CheckReport r =
        check_validity3(parse("p_a", u), family, SemanticsMode::Face);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->check == "eval3-face");
    // the recorded point evaluates to false, i.e. defined but not true
    SimplicialModel m = model_from_json(r.counterexample->model);
    Face x = m.face_from_ids(r.counterexample->face);
    CHECK(eval3(m, x, parse("p_a", m.universe()), SemanticsMode::Face) ==
          Truth3::False);
  }
  SUBCASE("counterexample is the canonical-order first one") {
    ModelFamily two = ModelFamily::exhaustive(FamilySpec{2, 1, 1});
    CheckReport r =
        check_validity3(parse("p_a", Universe({"a", "b"}, {{"a", {"p_a"}}}),
                              TopPolicy::Glocal),
                        two, SemanticsMode::Face);
    REQUIRE_FALSE(r.pass);
    // first model in canonical order is the lone vertex {0_a}, where p_a is
    // defined and false
    CHECK(r.counterexample->face == std::vector<std::string>{"0_a"});
  }
}

TEST_CASE("cache transparency on a random family") {
  ModelFamily family = ModelFamily::random(FamilySpec{3, 1, 3}, 7, 30);
  Universe u = family.universe();
  for (const auto& m : family.models()) {
    Evaluator3 cached(m, SemanticsMode::Face, EvalOptions{.cache = true});
    Evaluator3 plain(m, SemanticsMode::Face);
    for (std::uint64_t i = 0; i < 40; ++i) {
      Formula f = random_formula(mix64(0xCAC4E, i), 3, u);
      if (!f.vocabulary_in(m.universe())) continue;
      for (const auto& x : m.faces()) {
        EvalPair a = cached.eval_pair(x, f);
        EvalPair b = plain.eval_pair(x, f);
        REQUIRE(a.defined == b.defined);
        REQUIRE(a.satisfied == b.satisfied);
      }
    }
  }
}
