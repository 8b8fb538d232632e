#include <benchmark/benchmark.h>

#include "simplicheck/checker.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/formula_gen.hpp"
#include "simplicheck/modelgen.hpp"
#include "simplicheck/rng.hpp"
#include "simplicheck/semantics2.hpp"
#include "simplicheck/semantics3.hpp"
#include "simplicheck/translate.hpp"

namespace {

using namespace simplicheck;

void BM_eval3_face(benchmark::State& state) {
  const auto& m = fixture("C");
  Universe u = m.universe();
  std::vector<Formula> formulas;
  for (std::uint64_t i = 0; i < 64; ++i) {
    formulas.push_back(random_formula(i, static_cast<int>(state.range(0)), u));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    Evaluator3 ev(m, SemanticsMode::Face, EvalOptions{.cache = true});
    for (const auto& x : m.faces()) {
      benchmark::DoNotOptimize(ev.eval(x, formulas[i & 63]));
    }
    ++i;
  }
}
BENCHMARK(BM_eval3_face)->Arg(3)->Arg(5);

void BM_eval2_facet(benchmark::State& state) {
  const auto& m = fixture("Fig1viii");
  Universe u = m.universe();
  Formula f = random_formula(7, 5, u);
  for (auto _ : state) {
    Evaluator2 ev(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& x : m.facets()) {
      benchmark::DoNotOptimize(ev.eval(x, f));
    }
  }
}
BENCHMARK(BM_eval2_facet);

void BM_translate_sharp(benchmark::State& state) {
  Universe u({"a", "b", "c"},
             {{"a", {"p_a"}}, {"b", {"p_b"}}, {"c", {"p_c"}}});
  Formula f = random_formula(11, static_cast<int>(state.range(0)), u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(translate_sharp(f, u));
  }
}
BENCHMARK(BM_translate_sharp)->Arg(4)->Arg(8);

void BM_enumerate_two_agent(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_models(FamilySpec{2, 1, 3}));
  }
}
BENCHMARK(BM_enumerate_two_agent);

void BM_random_model(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_model(mix64(42, i++), FamilySpec{3, 1, 3}));
  }
}
BENCHMARK(BM_random_model);

void BM_theorem_translation(benchmark::State& state) {
  ModelFamily family = ModelFamily::exhaustive(FamilySpec{2, 1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_theorem("T4.2-sat", family, FormulaBudget{42, 50, 3}));
  }
}
BENCHMARK(BM_theorem_translation);

}  // namespace
