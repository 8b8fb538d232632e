#include "doctest.h"

#include "simplicheck/rng.hpp"

#include "simplicheck/fixtures.hpp"
#include "simplicheck/formula_gen.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/semantics2.hpp"
#include "support/naive_semantics.hpp"

using namespace simplicheck;

namespace {

Formula two_valued(const char* text, const Universe& u) {
  return parse(text, u, TopPolicy::TwoValuedLocal);
}

}  // namespace

TEST_CASE("two-valued facet clauses") {
  const auto& C = fixture("C");
  Universe u = C.universe();
  Face X = *C.facet_by_name("X");
  Face Y = *C.facet_by_name("Y");

  // an absent agent's atom is false, not undefined
  CHECK(eval2_facet(C, X, two_valued("~p_c", u)));
  CHECK_FALSE(eval2_facet(C, X, two_valued("@c", u)));
  CHECK(eval2_facet(C, Y, two_valued("@c", u)));
  CHECK(eval2_facet(C, Y, two_valued("p_c", u)));
}

TEST_CASE("two-valued facet evaluator matches the naive oracle") {
  for (const auto& [name, m] : fixtures()) {
    Universe u = m.universe();
    Evaluator2 ev(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (std::uint64_t i = 0; i < 150; ++i) {
      Formula f = random_formula(mix64(0x2FA, i), 3, u);
      for (const auto& x : m.facets()) {
        REQUIRE(ev.eval(x, f) == oracle::sat2F(m, oracle::id_set(m, x), f));
      }
    }
  }
}

TEST_CASE("two-valued face evaluator matches the naive oracle") {
  for (const auto& [name, m] : fixtures()) {
    Universe u = m.universe();
    Evaluator2 ev(m, SemanticsMode::Face, EvalOptions{.cache = true});
    for (std::uint64_t i = 0; i < 100; ++i) {
      Formula f = random_formula(mix64(0x2FB, i), 3, u);
      for (const auto& x : m.faces()) {
        REQUIRE(ev.eval(x, f) == oracle::sat2(m, oracle::id_set(m, x), f));
      }
    }
  }
}

TEST_CASE("the validity gap formula") {
  const auto& Cm = fixture("Cminus");
  Universe u = Cm.universe();
  Formula gap = two_valued("<K a> T -> <K a> ~p_b", u);
  Face X = *Cm.facet_by_name("X");

  SUBCASE("fails at the single-edge facet") {
    CHECK_FALSE(eval2_facet(Cm, X, gap));
  }
  SUBCASE("face-mode bounded validity finds no counterexample") {
    ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
    family.extend(ModelFamily::random(FamilySpec{3, 1, 3}, 42, 50));
    Formula gap3 = two_valued("<K a> T -> <K a> ~p_b", family.universe());
    CheckReport face = check_validity2(gap3, family, SemanticsMode::Face);
    CHECK(face.pass);
    CheckReport facet = check_validity2(gap3, family, SemanticsMode::Facet);
    CHECK_FALSE(facet.pass);
  }
  SUBCASE("the asymmetric variant is not even face-valid") {
    ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
    Formula variant = two_valued("<K a> T -> <K a> p_b", family.universe());
    CHECK_FALSE(check_validity2(variant, family, SemanticsMode::Face).pass);
  }
}

TEST_CASE("two-valued face semantics is not monotone (required failure)") {
  // the edge below the triangle satisfies ~p_c, the triangle satisfies p_c
  auto flip = [](const SimplicialModel& m, const Face& edge,
                 const Face& triangle) {
    Universe u = m.universe();
    Formula not_pc = two_valued("~p_c", u);
    REQUIRE(std::includes(triangle.vertices.begin(), triangle.vertices.end(),
                          edge.vertices.begin(), edge.vertices.end()));
    CHECK(eval2_face(m, edge, not_pc));
    CHECK_FALSE(eval2_face(m, triangle, not_pc));
  };
  const auto& Cs = fixture("Csecond");
  flip(Cs, Cs.face_from_ids(std::vector<std::string>{"0_a", "0_b"}),
       *Cs.facet_by_name("Y''"));
  const auto& Cp = fixture("Cprime");
  flip(Cp, Cp.face_from_ids(std::vector<std::string>{"0_a", "0_b2"}),
       *Cp.facet_by_name("Y'"));
}

TEST_CASE("alive agents and <K a> T coincide at facets") {
  for (const auto& [name, m] : fixtures()) {
    Universe u = m.universe();
    Formula top = two_valued("T", u);
    for (const auto& agent : u.agents()) {
      Formula lhs = Formula::global_atom(agent);
      Formula rhs = Formula::k_hat(agent, top);
      for (const auto& x : m.facets()) {
        REQUIRE(eval2_facet(m, x, lhs) == eval2_facet(m, x, rhs));
      }
    }
  }
}

TEST_CASE("classical completeness: exactly one of f and ~f holds") {
  const auto& m = fixture("Fig1ix");
  Universe u = m.universe();
  for (std::uint64_t i = 0; i < 200; ++i) {
    Formula f = random_formula(mix64(0xB00L, i), 3, u);
    for (const auto& x : m.facets()) {
      REQUIRE(eval2_facet(m, x, f) !=
              eval2_facet(m, x, Formula::negation(f)));
    }
  }
}

TEST_CASE("facet-mode two-valued equals three-valued on a pure model") {
  const auto& m = fixture("Csecond");
  Universe u = m.universe();
  Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
  Evaluator3 three(m, SemanticsMode::Facet, EvalOptions{.cache = true});
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = random_formula(mix64(0x4C0, i), 3, u);
    for (const auto& x : m.facets()) {
      EvalPair p = three.eval_pair(x, f);
      REQUIRE(p.defined);
      REQUIRE(p.satisfied == two.eval(x, f));
    }
  }
}

TEST_CASE("tautologies are facet-valid") {
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  Universe u = family.universe();
  CHECK(check_validity2(two_valued("p_a | ~p_a", u), family,
                        SemanticsMode::Facet)
            .pass);
  CHECK(check_validity2(two_valued("@a <-> <K a> T", u), family,
                        SemanticsMode::Facet)
            .pass);
}
