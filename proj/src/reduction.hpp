#pragma once

#include "arrangement.hpp"
#include "graph.hpp"

namespace hudg {

// Gadget graph of a simple combinatorial description: cliques on
// A = {a_1..a_n}, B = {b_1..b_n} and C = {c_1..c_m} (one c per cell,
// cells indexed in lexicographic order), with a_i -- c_j exactly when
// cell j has sign - at position i and b_i -- c_j when it has sign +.
LabeledGraph build_gd(const CombinatorialDescription& d);

}  // namespace hudg
