#pragma once

#include <map>
#include <string>

#include "simplicheck/model.hpp"

namespace simplicheck {

/// The named example models used throughout the test suites and the docs,
/// with stable vertex ids and named facets:
///
///   C       agents a,b,c; facets X = {0_a,1_b} and Y = {0_a,0_b,1_c}
///   Cprime  like C but the b-vertex on the edge has value 0
///           (facets X' = {0_a,0_b1} and Y' = {0_a,0_b2,1_c})
///   Csecond the single triangle Y'' = {0_a,0_b,1_c}
///   Cminus  two agents, single edge facet X = {0_a,1_b}
///   Fig1i   two triangles sharing only the a-vertex (pure)
///   Fig1viii two triangles sharing the a-vertex, c-values 0 and 1 (pure)
///   Fig1ix  two edges {1_b,0_a} and {0_a,1_c} (impure)
std::map<std::string, SimplicialModel> fixtures();

/// Lookup with a helpful error listing the known names.
const SimplicialModel& fixture(const std::string& name);

}  // namespace simplicheck
