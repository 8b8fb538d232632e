#pragma once

#include <cstdint>

#include "simplicheck/formula.hpp"
#include "simplicheck/universe.hpp"

namespace simplicheck {

/// Deterministic random formula of height <= max_depth, drawn from the given
/// language class over the universe. At each node the production is chosen
/// uniformly among those available at the remaining depth.
Formula random_formula(std::uint64_t seed, int max_depth,
                       const Universe& universe,
                       LanguageClass cls = {KnowledgeKind::Distributed,
                                            AtomKind::Glocal});

}  // namespace simplicheck
