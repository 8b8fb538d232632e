#include "simplicheck/checker.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "simplicheck/error.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/formula_gen.hpp"
#include "simplicheck/model_json.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/rng.hpp"
#include "simplicheck/semantics2.hpp"
#include "simplicheck/semantics3.hpp"
#include "simplicheck/translate.hpp"

namespace simplicheck {

namespace {

using nlohmann::json;

std::string str(Truth3 v) { return std::string(to_string(v)); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(EvalPair p) {
  return std::string("defined=") + str(p.defined) +
         " satisfied=" + str(p.satisfied);
}

// Formulas from the worked examples; parsed against each family's universe,
// entries outside its vocabulary are dropped.
const std::vector<std::string>& curated_texts() {
  static const std::vector<std::string> texts = {
      "p_a",
      "p_c",
      "~p_c",
      "@a",
      "~@c",
      "<K a> p_c",
      "[K a] p_c",
      "[K a] p_c -> p_c",
      "p_b & ~p_a",
      "<K a> p_b",
      "[K a] p_b",
      "<K a> ~p_b",
      "<K c> ~p_a",
      "[D{a,b}] ~p_b",
      "<D{a,b}> ~p_b",
      "[K a] ~@c",
      "<K a> ~@c",
      "[D{a,b}] ~@c",
      "@a & ~p_a",
      "p_a | ~p_a",
      "p_a -> p_a",
  };
  return texts;
}

struct Pool {
  std::vector<Formula> formulas;
  std::vector<std::vector<AgentId>> groups;  // per formula, for duality
};

Pool make_pool(const std::string& theorem_id, const ModelFamily& family,
               const FormulaBudget& budget) {
  Pool pool;
  const Universe& u = family.universe();
  for (const auto& text : curated_texts()) {
    try {
      pool.formulas.push_back(parse(text, u, TopPolicy::Glocal));
    } catch (const Error&) {
      // curated formula outside this family's vocabulary
    }
  }
  std::uint64_t base = mix64(budget.seed, fnv1a(theorem_id));
  for (int i = 0; i < budget.count; ++i) {
    pool.formulas.push_back(random_formula(
        mix64(base, static_cast<std::uint64_t>(i)), budget.depth, u));
  }
  Rng group_rng(mix64(base, 0x9700ULL));
  const auto& agents = u.agents();
  for (std::size_t i = 0; i < pool.formulas.size(); ++i) {
    std::uint64_t mask = 1 + group_rng.below((1ULL << agents.size()) - 1);
    std::vector<AgentId> group;
    for (std::size_t a = 0; a < agents.size(); ++a) {
      if (mask & (1ULL << a)) group.push_back(agents[a]);
    }
    pool.groups.push_back(std::move(group));
  }
  return pool;
}

Counterexample point_cex(const SimplicialModel& m, const Face& x,
                         const std::string& formula, std::string check,
                         std::string expected, std::string actual) {
  Counterexample cex;
  cex.model = model_to_json(m);
  cex.face = m.face_ids(x);
  cex.formula = formula;
  cex.expected = std::move(expected);
  cex.actual = std::move(actual);
  cex.check = std::move(check);
  return cex;
}

using TheoremFn = std::function<void(const ModelFamily&, const FormulaBudget&,
                                     CheckReport&)>;

// ---- L2.4 items 1-3: derived connectives match their direct clauses -------

void thm_connectives(const ModelFamily& family, const FormulaBudget& budget,
                     CheckReport& report) {
  Pool pool = make_pool("L2.4-connectives", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    for (SemanticsMode mode : {SemanticsMode::Face, SemanticsMode::Facet}) {
      Evaluator3 ev(m, mode, EvalOptions{.cache = true});
      const auto& points =
          mode == SemanticsMode::Face ? m.faces() : m.facets();
      for (std::size_t i = 0; i < pool.formulas.size(); ++i) {
        const Formula& lhs = pool.formulas[i];
        const Formula& rhs = pool.formulas[(i + 1) % pool.formulas.size()];
        if (!lhs.vocabulary_in(m.universe()) ||
            !rhs.vocabulary_in(m.universe())) {
          continue;
        }
        struct Connective {
          const char* name;
          Formula derived;
          std::function<bool(EvalPair, EvalPair)> direct_sat;
        };
        const Connective connectives[] = {
            {"or", Formula::disjunction(lhs, rhs),
             [](EvalPair l, EvalPair r) { return l.satisfied || r.satisfied; }},
            {"imp", Formula::implication(lhs, rhs),
             [](EvalPair l, EvalPair r) { return !l.satisfied || r.satisfied; }},
            {"iff", Formula::equivalence(lhs, rhs),
             [](EvalPair l, EvalPair r) { return l.satisfied == r.satisfied; }},
        };
        for (const auto& x : points) {
          report.stats.points += 1;
          EvalPair pl = ev.eval_pair(x, lhs);
          EvalPair pr = ev.eval_pair(x, rhs);
          for (const auto& conn : connectives) {
            bool direct_defined = pl.defined && pr.defined;
            Truth3 direct =
                direct_defined
                    ? (conn.direct_sat(pl, pr) ? Truth3::True : Truth3::False)
                    : Truth3::Undefined;
            Truth3 via_sugar = ev.eval(x, conn.derived);
            if (direct != via_sugar) {
              auto cex = point_cex(m, x, print(conn.derived),
                                   "derived-connective", str(direct),
                                   str(via_sugar));
              cex.extra = {{"lhs", print(lhs)},
                           {"rhs", print(rhs)},
                           {"op", conn.name},
                           {"mode", std::string(to_string(mode))}};
              report.counterexample = std::move(cex);
              report.pass = false;
              return;
            }
          }
        }
      }
    }
  }
  report.pass = true;
}

// ---- L2.4 item 5: box modality = desugared dual ----------------------------

void thm_duality(const ModelFamily& family, const FormulaBudget& budget,
                 CheckReport& report) {
  Pool pool = make_pool("L2.4-duality", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    for (SemanticsMode mode : {SemanticsMode::Face, SemanticsMode::Facet}) {
      Evaluator3 ev(m, mode, EvalOptions{.cache = true});
      const auto& points =
          mode == SemanticsMode::Face ? m.faces() : m.facets();
      for (std::size_t i = 0; i < pool.formulas.size(); ++i) {
        const Formula& body = pool.formulas[i];
        const auto& group = pool.groups[i];
        Formula desugared = Formula::box_d(group, body);
        if (!desugared.vocabulary_in(m.universe())) continue;
        for (const auto& x : points) {
          report.stats.points += 1;
          Truth3 direct = to_truth3(ev.eval_box_pair(x, group, body));
          Truth3 via_sugar = ev.eval(x, desugared);
          if (direct != via_sugar) {
            auto cex = point_cex(m, x, print(body), "duality",
                                 str(via_sugar), str(direct));
            cex.extra = {{"group", group},
                         {"mode", std::string(to_string(mode))}};
            report.counterexample = std::move(cex);
            report.pass = false;
            return;
          }
        }
      }
    }
  }
  report.pass = true;
}

// ---- L2.6: monotonicity along face inclusion -------------------------------

void thm_monotonicity(const ModelFamily& family, const FormulaBudget& budget,
                      CheckReport& report) {
  Pool pool = make_pool("L2.6-monotonicity", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    const auto& faces = m.faces();
    std::vector<std::pair<std::size_t, std::size_t>> inclusions;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (i != j &&
            std::includes(faces[j].vertices.begin(), faces[j].vertices.end(),
                          faces[i].vertices.begin(), faces[i].vertices.end())) {
          inclusions.emplace_back(i, j);
        }
      }
    }
    Evaluator3 ev(m, SemanticsMode::Face, EvalOptions{.cache = true});
    for (const auto& f : pool.formulas) {
      if (!f.vocabulary_in(m.universe())) continue;
      for (auto [xi, yi] : inclusions) {
        report.stats.points += 1;
        EvalPair px = ev.eval_pair(faces[xi], f);
        EvalPair py = ev.eval_pair(faces[yi], f);
        const char* broken = nullptr;
        if (px.defined && !py.defined) broken = "definability-up";
        if (px.satisfied && !py.satisfied) broken = "truth-up";
        if (py.satisfied && px.defined && !px.satisfied) broken = "truth-down";
        if (broken != nullptr) {
          auto cex = point_cex(m, faces[xi], print(f), "monotonicity",
                               broken, "X: " + str(px) + "; Y: " + str(py));
          cex.extra = {{"face2", m.face_ids(faces[yi])},
                       {"property", broken}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

// ---- L3.1 / L3.2: face- and facet-semantics agree on facets ---------------

void thm_face_facet_agreement(const ModelFamily& family,
                              const FormulaBudget& budget, CheckReport& report,
                              bool satisfaction_bit) {
  Pool pool = make_pool(report.theorem, family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Evaluator3 by_face(m, SemanticsMode::Face, EvalOptions{.cache = true});
    Evaluator3 by_facet(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& f : pool.formulas) {
      if (!f.vocabulary_in(m.universe())) continue;
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        EvalPair pf = by_face.eval_pair(x, f);
        EvalPair pF = by_facet.eval_pair(x, f);
        bool left = satisfaction_bit ? pf.satisfied : pf.defined;
        bool right = satisfaction_bit ? pF.satisfied : pF.defined;
        if (left != right) {
          auto cex = point_cex(m, x, print(f), "face-facet-agreement",
                               "face mode: " + str(left),
                               "facet mode: " + str(right));
          cex.extra = {{"bit", satisfaction_bit ? "satisfied" : "defined"}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

// ---- T3.4: bounded validity agrees between face and facet semantics -------

void thm_validity_transfer(const ModelFamily& family,
                           const FormulaBudget& budget, CheckReport& report) {
  Pool pool = make_pool("T3.4-validity-transfer", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& f : pool.formulas) {
    CheckReport face = check_validity3(f, family, SemanticsMode::Face);
    CheckReport facet = check_validity3(f, family, SemanticsMode::Facet);
    report.stats.models += face.stats.models + facet.stats.models;
    report.stats.points += face.stats.points + facet.stats.points;
    if (face.pass != facet.pass) {
      Counterexample cex = face.pass ? *facet.counterexample
                                     : *face.counterexample;
      cex.extra["context"] = "validity-transfer";
      cex.extra["face_valid"] = face.pass;
      cex.extra["facet_valid"] = facet.pass;
      report.counterexample = std::move(cex);
      report.pass = false;
      return;
    }
  }
  report.pass = true;
}

// ---- P3.6: the two-valued face/facet validity gap ---------------------------

void thm_two_valued_gap(const ModelFamily& family, const FormulaBudget&,
                        CheckReport& report) {
  const Universe& u = family.universe();
  if (u.agents().size() < 2) {
    throw Error(ErrorCode::InvalidFamilySpec,
                "the validity gap needs two distinct agents");
  }
  const AgentId& a = u.agents()[0];
  const AgentId& b = u.agents()[1];
  if (u.atoms_of(b).empty()) {
    throw Error(ErrorCode::NoAtomsDeclared,
                "the validity gap formula needs an atom of agent '" + b + "'");
  }
  Formula top = local_top(u);
  Formula gap = Formula::implication(
      Formula::k_hat(a, top),
      Formula::k_hat(a, Formula::negation(
                            Formula::local_atom(u.atoms_of(b).front(), b))));
  report.stats.formulas = 1;

  CheckReport face = check_validity2(gap, family, SemanticsMode::Face);
  CheckReport facet = check_validity2(gap, family, SemanticsMode::Facet);
  report.stats.models += face.stats.models + facet.stats.models;
  report.stats.points += face.stats.points + facet.stats.points;

  if (!face.pass) {
    report.counterexample = *face.counterexample;
    report.counterexample->extra["context"] =
        "gap formula unexpectedly fails face-mode validity";
    report.pass = false;
    return;
  }
  if (facet.pass) {
    report.pass = false;
    report.note = "gap formula unexpectedly facet-valid over the family";
    return;
  }
  // The witness should be the minimal single-edge model.
  SimplicialModel witness = model_from_json(facet.counterexample->model);
  std::string found = witness.canonical_signature();
  std::string wanted = fixture("Cminus").canonical_signature();
  if (found != wanted) {
    report.counterexample = *facet.counterexample;
    report.counterexample->extra["context"] =
        "facet-mode witness is not the single-edge model";
    report.pass = false;
    return;
  }
  report.counterexample = *facet.counterexample;
  report.counterexample->extra["context"] =
      "expected witness: this face-valid formula fails at this facet";
  report.pass = true;
  report.note =
      "gap reproduced: face-valid but facet-invalid, witness recorded";
}

// ---- L3.7: a facet knows its own colors (two-valued) -----------------------

void thm_alive(const ModelFamily& family, const FormulaBudget&,
               CheckReport& report) {
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Formula top = m.universe().first_atom()
                      ? local_top(m.universe())
                      : Formula::disjunction(
                            Formula::global_atom(m.universe().agents().front()),
                            Formula::negation(Formula::global_atom(
                                m.universe().agents().front())));
    Evaluator2 ev(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& agent : m.universe().agents()) {
      Formula lhs = Formula::global_atom(agent);
      Formula rhs = Formula::k_hat(agent, top);
      report.stats.formulas += 1;
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        bool left = ev.eval(x, lhs);
        bool right = ev.eval(x, rhs);
        if (left != right) {
          auto cex = point_cex(m, x, print(lhs), "alive-iff-khat-top",
                               "@" + agent + " = " + str(left),
                               print(rhs) + " = " + str(right));
          cex.extra = {{"agent", agent}, {"rhs", print(rhs)}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

// ---- T4.2: the translations are faithful ------------------------------------

void thm_translation(const ModelFamily& family, const FormulaBudget& budget,
                     CheckReport& report, bool truth_bit) {
  if (!family.universe().first_atom()) {
    report.pass = true;
    report.note = "no atoms declared: translations are inexpressible, "
                  "vacuously passing";
    return;
  }
  Pool pool = make_pool(report.theorem, family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  std::vector<Formula> translated;
  translated.reserve(pool.formulas.size());
  for (const auto& f : pool.formulas) {
    translated.push_back(truth_bit ? translate_sharp(f, family.universe())
                                   : translate_def(f, family.universe()));
  }
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Evaluator3 three(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (std::size_t i = 0; i < pool.formulas.size(); ++i) {
      if (!pool.formulas[i].vocabulary_in(m.universe()) ||
          !translated[i].vocabulary_in(m.universe())) {
        continue;
      }
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        EvalPair p3 = three.eval_pair(x, pool.formulas[i]);
        bool left = truth_bit ? (p3.defined && p3.satisfied) : p3.defined;
        bool right = two.eval(x, translated[i]);
        if (left != right) {
          auto cex = point_cex(
              m, x, print(pool.formulas[i]),
              truth_bit ? "translate-sat" : "translate-def",
              std::string("three-valued ") +
                  (truth_bit ? "truth" : "definability") + " = " + str(left),
              "translated two-valued = " + str(right));
          cex.extra = {{"translated", print(translated[i])}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

// ---- C4.3: validity embedding ----------------------------------------------

void thm_validity_embed(const ModelFamily& family, const FormulaBudget& budget,
                        CheckReport& report) {
  if (!family.universe().first_atom()) {
    report.pass = true;
    report.note = "no atoms declared: translations are inexpressible, "
                  "vacuously passing";
    return;
  }
  Pool pool = make_pool("C4.3-validity-embed", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& f : pool.formulas) {
    Formula embedded = translate_validity(f, family.universe());
    CheckReport face3 = check_validity3(f, family, SemanticsMode::Face);
    CheckReport facet3 = check_validity3(f, family, SemanticsMode::Facet);
    CheckReport facet2 = check_validity2(embedded, family, SemanticsMode::Facet);
    report.stats.models +=
        face3.stats.models + facet3.stats.models + facet2.stats.models;
    report.stats.points +=
        face3.stats.points + facet3.stats.points + facet2.stats.points;
    if (face3.pass != facet3.pass || facet3.pass != facet2.pass) {
      Counterexample cex;
      if (!face3.pass) {
        cex = *face3.counterexample;
      } else if (!facet3.pass) {
        cex = *facet3.counterexample;
      } else {
        cex = *facet2.counterexample;
      }
      cex.extra["context"] = "validity-embed";
      cex.extra["validity3_face"] = face3.pass;
      cex.extra["validity3_facet"] = facet3.pass;
      cex.extra["validity2_translated"] = facet2.pass;
      cex.extra["translated"] = print(embedded);
      report.counterexample = std::move(cex);
      report.pass = false;
      return;
    }
  }
  report.pass = true;
}

// ---- C4.4: semantics coincide on pure models -------------------------------

void thm_pure_coincide(const ModelFamily& family, const FormulaBudget& budget,
                       CheckReport& report) {
  Pool pool = make_pool("C4.4-pure-coincide", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    if (!m.is_pure()) continue;
    report.stats.models += 1;
    Evaluator3 three(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& f : pool.formulas) {
      if (!f.vocabulary_in(m.universe())) continue;
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        EvalPair p3 = three.eval_pair(x, f);
        bool b2 = two.eval(x, f);
        if (!p3.defined || p3.satisfied != b2) {
          auto cex =
              point_cex(m, x, print(f), "pure-coincide",
                        "defined with verdict " + str(b2), str(p3));
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

// ---- T4.5: purity is exactly semantic coincidence ---------------------------

void thm_purity_iff(const ModelFamily& family, const FormulaBudget& budget,
                    CheckReport& report) {
  Pool pool = make_pool("T4.5-purity-iff", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Evaluator3 three(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});

    if (m.is_pure()) {
      // coincidence must hold on every sample
      for (const auto& f : pool.formulas) {
        if (!f.vocabulary_in(m.universe())) continue;
        for (const auto& x : m.facets()) {
          report.stats.points += 1;
          EvalPair p3 = three.eval_pair(x, f);
          bool b2 = two.eval(x, f);
          if (!p3.defined || p3.satisfied != b2) {
            auto cex = point_cex(m, x, print(f), "pure-coincide",
                                 "pure model: defined with verdict " + str(b2),
                                 str(p3));
            cex.extra["context"] = "purity-iff";
            report.counterexample = std::move(cex);
            report.pass = false;
            return;
          }
        }
      }
      continue;
    }

    // impure: every missing agent yields a concrete disagreement witness
    PurityReport purity = purity_report(m);
    if (purity.witnesses.empty()) {
      report.pass = false;
      report.note = "impure model produced no purity witnesses";
      return;
    }
    for (const auto& w : purity.witnesses) {
      report.stats.points += 1;
      bool disagrees =
          w.three_valued == Truth3::Undefined ||
          (w.three_valued == Truth3::True) != w.two_valued;
      if (!disagrees) {
        auto cex = point_cex(m, w.facet, print(w.formula), "purity-iff",
                             "semantic disagreement on impure model",
                             "three-valued " + str(w.three_valued) +
                                 ", two-valued " + str(w.two_valued));
        cex.extra = {{"agent", w.missing_agent}};
        report.counterexample = std::move(cex);
        report.pass = false;
        return;
      }
    }
  }
  report.pass = true;
}

// ---- P4.7 / P4.8: properties of the truth translation ----------------------

void thm_sharp_implies_def(const ModelFamily& family,
                           const FormulaBudget& budget, CheckReport& report) {
  if (!family.universe().first_atom()) {
    report.pass = true;
    report.note = "no atoms declared: translations are inexpressible, "
                  "vacuously passing";
    return;
  }
  Pool pool = make_pool("P4.7-sharp-implies-def", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& f : pool.formulas) {
      Formula def = translate_def(f, family.universe());
      Formula sharp = translate_sharp(f, family.universe());
      if (!def.vocabulary_in(m.universe()) ||
          !sharp.vocabulary_in(m.universe())) {
        continue;
      }
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        bool s = two.eval(x, sharp);
        bool d = two.eval(x, def);
        if (s && !d) {
          auto cex = point_cex(m, x, print(f), "sharp-implies-def",
                               "f# -> f* holds",
                               "f# = true but f* = false");
          cex.extra = {{"def", print(def)}, {"sharp", print(sharp)}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

void thm_double_negation(const ModelFamily& family,
                         const FormulaBudget& budget, CheckReport& report) {
  if (!family.universe().first_atom()) {
    report.pass = true;
    report.note = "no atoms declared: translations are inexpressible, "
                  "vacuously passing";
    return;
  }
  Pool pool = make_pool("P4.8-double-neg", family, budget);
  report.stats.formulas = static_cast<std::int64_t>(pool.formulas.size());
  for (const auto& m : family.models()) {
    report.stats.models += 1;
    Evaluator2 two(m, SemanticsMode::Facet, EvalOptions{.cache = true});
    for (const auto& f : pool.formulas) {
      Formula lhs = translate_sharp(
          Formula::negation(Formula::negation(f)), family.universe());
      Formula rhs = translate_sharp(f, family.universe());
      if (!lhs.vocabulary_in(m.universe()) ||
          !rhs.vocabulary_in(m.universe())) {
        continue;
      }
      for (const auto& x : m.facets()) {
        report.stats.points += 1;
        bool l = two.eval(x, lhs);
        bool r = two.eval(x, rhs);
        if (l != r) {
          auto cex = point_cex(m, x, print(f), "double-neg",
                               "(~~f)# = f# at every facet",
                               "(~~f)# = " + str(l) + ", f# = " + str(r));
          cex.extra = {{"lhs", print(lhs)}, {"rhs", print(rhs)}};
          report.counterexample = std::move(cex);
          report.pass = false;
          return;
        }
      }
    }
  }
  report.pass = true;
}

struct TheoremEntry {
  const char* id;
  TheoremFn fn;
};

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = {
      {"L2.4-connectives", thm_connectives},
      {"L2.4-duality", thm_duality},
      {"L2.6-monotonicity", thm_monotonicity},
      {"L3.1-def-agree",
       [](const ModelFamily& f, const FormulaBudget& b, CheckReport& r) {
         thm_face_facet_agreement(f, b, r, false);
       }},
      {"L3.2-sat-agree",
       [](const ModelFamily& f, const FormulaBudget& b, CheckReport& r) {
         thm_face_facet_agreement(f, b, r, true);
       }},
      {"T3.4-validity-transfer", thm_validity_transfer},
      {"P3.6-gap", thm_two_valued_gap},
      {"L3.7-alive", thm_alive},
      {"T4.2-def",
       [](const ModelFamily& f, const FormulaBudget& b, CheckReport& r) {
         thm_translation(f, b, r, false);
       }},
      {"T4.2-sat",
       [](const ModelFamily& f, const FormulaBudget& b, CheckReport& r) {
         thm_translation(f, b, r, true);
       }},
      {"C4.3-validity-embed", thm_validity_embed},
      {"C4.4-pure-coincide", thm_pure_coincide},
      {"T4.5-purity-iff", thm_purity_iff},
      {"P4.7-sharp-implies-def", thm_sharp_implies_def},
      {"P4.8-double-neg", thm_double_negation},
  };
  return entries;
}

}  // namespace

std::vector<std::string> registered_theorems() {
  std::vector<std::string> ids;
  for (const auto& entry : registry()) ids.emplace_back(entry.id);
  return ids;
}

CheckReport run_theorem(const std::string& id, const ModelFamily& family,
                        const FormulaBudget& budget) {
  for (const auto& entry : registry()) {
    if (id == entry.id) {
      auto start = std::chrono::steady_clock::now();
      CheckReport report;
      report.theorem = id;
      report.family = family.describe();
      entry.fn(family, budget, report);
      if (report.pass && report.note.empty()) {
        report.note = "no counterexample in family";
      }
      report.stats.elapsed_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
      return report;
    }
  }
  throw Error(ErrorCode::UnknownTheorem, "'" + id + "'");
}

std::vector<CheckReport> run_all(const ModelFamily& family,
                                 const FormulaBudget& budget) {
  std::vector<CheckReport> reports;
  reports.reserve(registry().size());
  for (const auto& entry : registry()) {
    reports.push_back(run_theorem(entry.id, family, budget));
  }
  return reports;
}

namespace {

std::string recompute_actual(const SimplicialModel& m, const Counterexample& cex) {
  const Universe& u = m.universe();
  Face x = m.face_from_ids(cex.face);
  auto get = [&](const char* key) {
    return cex.extra.at(key).get<std::string>();
  };
  auto mode_of = [&]() {
    return cex.extra.contains("mode") && get("mode") == "face"
               ? SemanticsMode::Face
               : SemanticsMode::Facet;
  };

  if (cex.check == "eval3-face" || cex.check == "eval3-facet") {
    SemanticsMode mode = cex.check == "eval3-face" ? SemanticsMode::Face
                                                   : SemanticsMode::Facet;
    return str(eval3(m, x, parse(cex.formula, u), mode));
  }
  if (cex.check == "eval2-face" || cex.check == "eval2-facet") {
    SemanticsMode mode = cex.check == "eval2-face" ? SemanticsMode::Face
                                                   : SemanticsMode::Facet;
    Formula f = parse(cex.formula, u);
    return str(mode == SemanticsMode::Face ? eval2_face(m, x, f)
                                           : eval2_facet(m, x, f));
  }
  if (cex.check == "derived-connective") {
    Formula lhs = parse(get("lhs"), u);
    Formula rhs = parse(get("rhs"), u);
    std::string op = get("op");
    Formula derived = op == "or"    ? Formula::disjunction(lhs, rhs)
                      : op == "imp" ? Formula::implication(lhs, rhs)
                                    : Formula::equivalence(lhs, rhs);
    return str(eval3(m, x, derived, mode_of()));
  }
  if (cex.check == "duality") {
    auto group = cex.extra.at("group").get<std::vector<AgentId>>();
    Formula body = parse(cex.formula, u);
    Evaluator3 ev(m, mode_of());
    return str(to_truth3(ev.eval_box_pair(x, group, body)));
  }
  if (cex.check == "monotonicity") {
    Formula f = parse(cex.formula, u);
    Face y = m.face_from_ids(cex.extra.at("face2").get<std::vector<std::string>>());
    Evaluator3 ev(m, SemanticsMode::Face);
    return "X: " + str(ev.eval_pair(x, f)) + "; Y: " + str(ev.eval_pair(y, f));
  }
  if (cex.check == "face-facet-agreement") {
    Formula f = parse(cex.formula, u);
    EvalPair pF = eval3_pair(m, x, f, SemanticsMode::Facet);
    bool bit = get("bit") == "satisfied" ? pF.satisfied : pF.defined;
    return "facet mode: " + str(bit);
  }
  if (cex.check == "alive-iff-khat-top") {
    Formula rhs = parse(get("rhs"), u);
    return get("rhs") + " = " + str(eval2_facet(m, x, rhs));
  }
  if (cex.check == "translate-def" || cex.check == "translate-sat") {
    Formula translated = parse(get("translated"), u);
    return "translated two-valued = " + str(eval2_facet(m, x, translated));
  }
  if (cex.check == "pure-coincide") {
    Formula f = parse(cex.formula, u);
    return str(eval3_pair(m, x, f, SemanticsMode::Facet));
  }
  if (cex.check == "purity-iff") {
    Formula f = parse(cex.formula, u);
    return "three-valued " + str(eval3(m, x, f, SemanticsMode::Facet)) +
           ", two-valued " + str(eval2_facet(m, x, f));
  }
  if (cex.check == "sharp-implies-def") {
    bool s = eval2_facet(m, x, parse(get("sharp"), u));
    bool d = eval2_facet(m, x, parse(get("def"), u));
    return s && !d ? "f# = true but f* = false" : "f# -> f* holds";
  }
  if (cex.check == "double-neg") {
    bool l = eval2_facet(m, x, parse(get("lhs"), u));
    bool r = eval2_facet(m, x, parse(get("rhs"), u));
    return "(~~f)# = " + str(l) + ", f# = " + str(r);
  }
  throw Error(ErrorCode::UnknownTheorem,
              "cannot replay check kind '" + cex.check + "'");
}

}  // namespace

bool replay_counterexample(const Counterexample& cex) {
  SimplicialModel m = model_from_json(cex.model);
  return recompute_actual(m, cex) == cex.actual;
}

Counterexample minimize_counterexample(const Counterexample& cex) {
  Counterexample best = cex;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    json facets = best.model.at("facets");
    if (facets.size() <= 1) break;
    for (std::size_t drop = 0; drop < facets.size(); ++drop) {
      json candidate = best.model;
      json kept = json::array();
      for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i != drop) kept.push_back(facets[i]);
      }
      candidate["facets"] = kept;
      // prune vertices no longer used by any facet
      std::vector<std::string> used;
      for (const auto& entry : kept) {
        const json& ids = entry.is_array() ? entry : entry.at("vertices");
        for (const auto& id : ids) used.push_back(id.get<std::string>());
      }
      json vertices = json::array();
      for (const auto& v : candidate.at("vertices")) {
        if (std::find(used.begin(), used.end(),
                      v.at("id").get<std::string>()) != used.end()) {
          vertices.push_back(v);
        }
      }
      candidate["vertices"] = vertices;

      Counterexample attempt = best;
      attempt.model = candidate;
      try {
        if (replay_counterexample(attempt)) {
          best = std::move(attempt);
          shrunk = true;
          break;
        }
      } catch (const Error&) {
        // dropped a facet the witness needs; try the next one
      }
    }
  }
  return best;
}

}  // namespace simplicheck
