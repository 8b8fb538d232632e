#include "simplicheck/translate.hpp"

#include "simplicheck/error.hpp"
#include "simplicheck/semantics2.hpp"

namespace simplicheck {

Formula local_top(const Universe& universe) {
  auto first = universe.first_atom();
  if (!first) {
    throw Error(ErrorCode::NoAtomsDeclared,
                "translation needs at least one local atom to encode T");
  }
  Formula p = Formula::local_atom(first->second, first->first);
  return Formula::disjunction(p, Formula::negation(p));
}

namespace {

Formula def_rec(const Formula& f, const Formula& top);
Formula sharp_rec(const Formula& f, const Formula& top);

Formula def_rec(const Formula& f, const Formula& top) {
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom:
      return top;
    case Formula::Kind::LocalAtom:
      return Formula::k_hat(f.atom_owner(), top);
    case Formula::Kind::Not:
      return def_rec(f.child(), top);
    case Formula::Kind::And:
      return Formula::conjunction(def_rec(f.left(), top),
                                  def_rec(f.right(), top));
    case Formula::Kind::DiamondD:
      return Formula::diamond_d(f.group(), def_rec(f.child(), top));
  }
  return top;
}

Formula sharp_rec(const Formula& f, const Formula& top) {
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom:
      return Formula::k_hat(f.agent(), top);
    case Formula::Kind::LocalAtom:
      return Formula(f);
    case Formula::Kind::Not:
      return Formula::conjunction(
          def_rec(f, top), Formula::negation(sharp_rec(f.child(), top)));
    case Formula::Kind::And:
      return Formula::conjunction(sharp_rec(f.left(), top),
                                  sharp_rec(f.right(), top));
    case Formula::Kind::DiamondD:
      return Formula::diamond_d(f.group(), sharp_rec(f.child(), top));
  }
  return top;
}

}  // namespace

Formula translate_def(const Formula& f, const Universe& universe) {
  return def_rec(f, local_top(universe));
}

Formula translate_sharp(const Formula& f, const Universe& universe) {
  return sharp_rec(f, local_top(universe));
}

Formula translate_validity(const Formula& f, const Universe& universe) {
  Formula top = local_top(universe);
  return Formula::implication(def_rec(f, top), sharp_rec(f, top));
}

PurityReport purity_report(const SimplicialModel& m) {
  PurityReport report;
  report.pure = m.is_pure();
  if (report.pure) return report;

  Evaluator3 three(m, SemanticsMode::Facet);
  Evaluator2 two(m, SemanticsMode::Facet);
  for (const auto& facet : m.facets()) {
    auto table = m.color_vertex_table(facet);
    for (std::size_t a = 0; a < table.size(); ++a) {
      if (table[a] >= 0) continue;
      const AgentId& agent = m.universe().agents()[a];
      const auto& atoms = m.universe().atoms_of(agent);
      Formula witness =
          atoms.empty()
              ? Formula::k_hat(agent, Formula::global_atom(agent))
              : Formula::negation(Formula::local_atom(atoms.front(), agent));
      PurityWitness w{facet, agent, witness, three.eval(facet, witness),
                      two.eval(facet, witness)};
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

}  // namespace simplicheck
