#pragma once

#include "simplicheck/formula.hpp"
#include "simplicheck/semantics3.hpp"

namespace simplicheck {

/// T as used inside translation outputs: p | ~p over the universe's first
/// declared atom, a classical tautology of the local language. Throws
/// NoAtomsDeclared when the universe has no atoms at all.
Formula local_top(const Universe& universe);

/// Definability translation f* : two-valued formula that holds at a facet
/// exactly when f is defined there under the three-valued facet semantics.
///
///   @a        -> T
///   p (of a)  -> <K a> T
///   ~g        -> g*
///   g & h     -> g* & h*
///   <D{B}> g  -> <D{B}> g*
///
/// The output mentions no global atom.
Formula translate_def(const Formula& f, const Universe& universe);

/// Truth translation f# : two-valued formula that holds at a facet exactly
/// when f is defined and true there.
///
///   @a        -> <K a> T
///   p         -> p
///   ~g        -> (~g)* & ~g#
///   g & h     -> g# & h#
///   <D{B}> g  -> <D{B}> g#
Formula translate_sharp(const Formula& f, const Universe& universe);

/// f* -> f# : two-valued rendering of "f is true wherever defined", i.e.
/// three-valued validity of f corresponds to two-valued facet validity of
/// this formula.
Formula translate_validity(const Formula& f, const Universe& universe);

/// Purity probe. A model is pure iff the three-valued facet verdict is
/// defined and agrees with the two-valued one for every formula at every
/// facet; each facet missing an agent yields a concrete witness formula on
/// which the semantics disagree (~p_a when agent a owns an atom, <K a> @a
/// otherwise).
struct PurityWitness {
  Face facet;
  AgentId missing_agent;
  Formula formula;
  Truth3 three_valued;
  bool two_valued;
};

struct PurityReport {
  bool pure = false;
  std::vector<PurityWitness> witnesses;  // empty iff pure
};

PurityReport purity_report(const SimplicialModel& m);

}  // namespace simplicheck
