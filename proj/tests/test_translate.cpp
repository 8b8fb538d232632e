#include "doctest.h"

#include "simplicheck/rng.hpp"

#include "simplicheck/fixtures.hpp"
#include "simplicheck/formula_gen.hpp"
#include "simplicheck/modelgen.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/semantics2.hpp"
#include "simplicheck/translate.hpp"
#include "support/formula_enum.hpp"
#include "support/naive_semantics.hpp"

using namespace simplicheck;

namespace {

Universe abc() {
  return Universe({"a", "b", "c"},
                  {{"a", {"p_a"}}, {"b", {"p_b"}}, {"c", {"p_c"}}});
}

}  // namespace

TEST_CASE("definability translation clauses") {
  Universe u = abc();
  Formula top = local_top(u);

  CHECK(translate_def(parse("@a", u), u) == top);
  CHECK(translate_def(parse("p_a", u), u) == Formula::k_hat("a", top));
  CHECK(translate_def(parse("[K a] p_b", u), u) ==
        Formula::k_hat("a", Formula::k_hat("b", top)));
  // negation is transparent for definability
  CHECK(translate_def(parse("~~~p_c", u), u) == Formula::k_hat("c", top));
}

TEST_CASE("truth translation clauses") {
  Universe u = abc();
  Formula top = local_top(u);
  Formula pa = Formula::local_atom("p_a", "a");
  Formula pb = Formula::local_atom("p_b", "b");

  CHECK(translate_sharp(parse("~p_a", u), u) ==
        Formula::conjunction(Formula::k_hat("a", top),
                             Formula::negation(pa)));
  CHECK(translate_sharp(parse("~@a", u), u) ==
        Formula::conjunction(top,
                             Formula::negation(Formula::k_hat("a", top))));
  CHECK(translate_sharp(parse("@a", u), u) == Formula::k_hat("a", top));
  CHECK(translate_sharp(parse("p_a", u), u) == pa);
  // the worked K_a p_b example, literally
  Formula expected = Formula::conjunction(
      Formula::k_hat("a", Formula::k_hat("b", top)),
      Formula::negation(Formula::k_hat(
          "a", Formula::conjunction(Formula::k_hat("b", top),
                                    Formula::negation(pb)))));
  CHECK(translate_sharp(parse("[K a] p_b", u), u) == expected);
}

TEST_CASE("validity translation composes def and sharp") {
  Universe u = abc();
  Formula pa = Formula::local_atom("p_a", "a");
  Formula top = local_top(u);
  CHECK(translate_validity(parse("p_a", u), u) ==
        Formula::implication(Formula::k_hat("a", top), pa));
  CHECK(translate_validity(parse("@a", u), u) ==
        Formula::implication(top, Formula::k_hat("a", top)));
}

TEST_CASE("translations land in the local language") {
  Universe u = abc();
  for (std::uint64_t i = 0; i < 500; ++i) {
    Formula f = random_formula(mix64(0x7A, i), 3, u);
    CHECK(classify(translate_def(f, u)).atoms == AtomKind::Local);
    CHECK(classify(translate_sharp(f, u)).atoms == AtomKind::Local);
  }
}

TEST_CASE("translations reflect definability and truth at facets") {
  // enumerated 2-agent models x exhaustive height-1 formulas
  auto models = enumerate_models(FamilySpec{2, 1, 2});
  Universe u = models.front().universe();
  auto formulas = oracle::enumerate_formulas(u, 1);
  for (const auto& m : models) {
    Evaluator3 three(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& f : formulas) {
      Formula fd = translate_def(f, u);
      Formula fs = translate_sharp(f, u);
      for (const auto& x : m.facets()) {
        EvalPair p = three.eval_pair(x, f);
        REQUIRE(p.defined == two.eval(x, fd));
        REQUIRE((p.defined && p.satisfied) == two.eval(x, fs));
      }
    }
  }
}

TEST_CASE("sharp implies def and double negation collapses") {
  ModelFamily family = ModelFamily::random(FamilySpec{3, 1, 3}, 11, 40);
  Universe u = family.universe();
  for (const auto& m : family.models()) {
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (std::uint64_t i = 0; i < 60; ++i) {
      Formula f = random_formula(mix64(0x47, i), 3, u);
      Formula fd = translate_def(f, u);
      Formula fs = translate_sharp(f, u);
      Formula fnn = translate_sharp(
          Formula::negation(Formula::negation(f)), u);
      if (!fd.vocabulary_in(m.universe())) continue;
      for (const auto& x : m.facets()) {
        bool d = two.eval(x, fd);
        bool s = two.eval(x, fs);
        REQUIRE((!s || d));
        REQUIRE(two.eval(x, fnn) == s);
      }
    }
  }
}

TEST_CASE("validity translation tracks three-valued validity") {
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  family.extend(ModelFamily::random(FamilySpec{3, 1, 3}, 42, 40));
  Universe u = family.universe();

  Formula veridical = parse("[K a] p_c -> p_c", u);
  CHECK(check_validity3(veridical, family, SemanticsMode::Face).pass);
  CHECK(check_validity2(translate_validity(veridical, u), family,
                        SemanticsMode::Facet)
            .pass);

  Formula invalid = parse("p_a", u);
  CHECK_FALSE(check_validity3(invalid, family, SemanticsMode::Face).pass);
  CHECK_FALSE(check_validity2(translate_validity(invalid, u), family,
                              SemanticsMode::Facet)
                  .pass);
}

TEST_CASE("purity witnesses") {
  SUBCASE("C is impure with the dead-agent atom witness") {
    PurityReport r = purity_report(fixture("C"));
    REQUIRE_FALSE(r.pure);
    REQUIRE(r.witnesses.size() == 1);
    const auto& w = r.witnesses.front();
    CHECK(w.missing_agent == "c");
    CHECK(print(w.formula) == "~p_c");
    CHECK(w.three_valued == Truth3::Undefined);
    CHECK(w.two_valued == true);
  }
  SUBCASE("pure fixtures have no witnesses") {
    CHECK(purity_report(fixture("Csecond")).pure);
    CHECK(purity_report(fixture("Fig1i")).witnesses.empty());
  }
  SUBCASE("Fig1ix yields witnesses for both missing agents") {
    PurityReport r = purity_report(fixture("Fig1ix"));
    REQUIRE_FALSE(r.pure);
    REQUIRE(r.witnesses.size() == 2);
    std::set<std::string> agents;
    for (const auto& w : r.witnesses) {
      agents.insert(w.missing_agent);
      CHECK(w.three_valued == Truth3::Undefined);
    }
    CHECK(agents == std::set<std::string>{"b", "c"});
  }
  SUBCASE("atomless agents fall back to a knowledge witness") {
    RawModel raw;
    raw.agents = {"a", "b"};
    raw.vertices = {{"v_a", "a", {}}};
    raw.facets = {{"v_a"}};
    PurityReport r = purity_report(validate_model(raw));
    REQUIRE_FALSE(r.pure);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(print(r.witnesses.front().formula) == "<D{b}> @b");
    CHECK(r.witnesses.front().three_valued == Truth3::Undefined);
  }
}
