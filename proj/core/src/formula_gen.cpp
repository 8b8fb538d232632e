#include "simplicheck/formula_gen.hpp"

#include "simplicheck/error.hpp"
#include "simplicheck/rng.hpp"

namespace simplicheck {

namespace {

enum Production { PGlobal, PLocal, PNot, PAnd, PDiamond };

Formula gen(Rng& rng, int depth, const Universe& u, const LanguageClass& cls) {
  std::vector<Production> menu;
  if (cls.atoms == AtomKind::Glocal) menu.push_back(PGlobal);
  if (!u.atoms().empty()) menu.push_back(PLocal);
  if (depth > 0) {
    menu.push_back(PNot);
    menu.push_back(PAnd);
    menu.push_back(PDiamond);
  }
  if (menu.empty()) {
    throw Error(ErrorCode::NoAtomsDeclared,
                "cannot generate a local-language formula without atoms");
  }
  switch (menu[rng.below(menu.size())]) {
    case PGlobal: {
      const auto& agents = u.agents();
      return Formula::global_atom(agents[rng.below(agents.size())]);
    }
    case PLocal: {
      const auto& atoms = u.atoms();
      const auto& atom = atoms[rng.below(atoms.size())];
      return Formula::local_atom(atom, *u.owner_of(atom));
    }
    case PNot:
      return Formula::negation(gen(rng, depth - 1, u, cls));
    case PAnd: {
      Formula lhs = gen(rng, depth - 1, u, cls);
      return Formula::conjunction(std::move(lhs), gen(rng, depth - 1, u, cls));
    }
    case PDiamond: {
      const auto& agents = u.agents();
      std::vector<AgentId> group;
      if (cls.knowledge == KnowledgeKind::Individual) {
        group.push_back(agents[rng.below(agents.size())]);
      } else {
        // uniform nonempty subset
        std::uint64_t mask = 1 + rng.below((1ULL << agents.size()) - 1);
        for (std::size_t i = 0; i < agents.size(); ++i) {
          if (mask & (1ULL << i)) group.push_back(agents[i]);
        }
      }
      return Formula::diamond_d(std::move(group), gen(rng, depth - 1, u, cls));
    }
  }
  throw Error(ErrorCode::SyntaxError, "unreachable");
}

}  // namespace

Formula random_formula(std::uint64_t seed, int max_depth, const Universe& u,
                       LanguageClass cls) {
  Rng rng(seed);
  return gen(rng, max_depth, u, cls);
}

}  // namespace simplicheck
