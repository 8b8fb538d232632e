#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplicheck/modelgen.hpp"
#include "simplicheck/report.hpp"

namespace simplicheck {

/// Sampling budget for the quantified properties: `count` random formulas of
/// height <= depth over the family's universe, on top of a fixed curated
/// list. Identical inputs give identical reports (elapsed times aside).
struct FormulaBudget {
  std::uint64_t seed = 42;
  int count = 200;
  int depth = 3;
};

/// Registered bounded checks, in execution order:
///
///   L2.4-connectives        derived |, ->, <-> match their direct clauses
///   L2.4-duality            box distributed knowledge agrees with ~<D>~
///   L2.6-monotonicity       definability/truth monotone along face inclusion
///   L3.1-def-agree          facet-mode definability = face-mode on facets
///   L3.2-sat-agree          facet-mode truth = face-mode on facets
///   T3.4-validity-transfer  bounded face validity = bounded facet validity
///   P3.6-gap                the two-valued face/facet validity gap, with its
///                           minimal witness model recorded
///   L3.7-alive              @a and <K a> T agree at facets (two-valued)
///   T4.2-def                definability translation is faithful
///   T4.2-sat                truth translation is faithful
///   C4.3-validity-embed     three-valued validity = two-valued validity of
///                           the translated implication
///   C4.4-pure-coincide      both semantics coincide on pure models
///   T4.5-purity-iff         purity = semantic coincidence, with witnesses
///   P4.7-sharp-implies-def  f# implies f* (two-valued facet validity)
///   P4.8-double-neg         (~~f)# equivalent to f#
std::vector<std::string> registered_theorems();

/// Runs one registered check over the family. Throws UnknownTheorem for
/// unregistered ids.
CheckReport run_theorem(const std::string& id, const ModelFamily& family,
                        const FormulaBudget& budget = {});

/// Runs every registered check. All are proven statements, so any
/// counterexample (except the expected witness inside P3.6-gap) indicates an
/// implementation bug.
std::vector<CheckReport> run_all(const ModelFamily& family,
                                 const FormulaBudget& budget = {});

/// Re-runs the single comparison a counterexample records, from its own
/// serialized model. True when the discrepancy reproduces.
bool replay_counterexample(const Counterexample& cex);

/// Greedy shrink: repeatedly drops facets (and then unused vertices) from the
/// counterexample's model while the recorded check still reproduces.
Counterexample minimize_counterexample(const Counterexample& cex);

}  // namespace simplicheck
