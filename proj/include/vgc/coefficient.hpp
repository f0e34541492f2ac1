#pragma once

// Finite-support coefficient functionals on connected pattern graphs with no
// external vertices.  mu is supported on the two-aerial-vertices-one-edge
// graph; c0 on the dashed terrestrial pair and the terrestrial-aerial full
// edge (for m = 1: the edgeless terrestrial pair instead of the dashed one).
// Values on non-canonical graphs pick up the canonicalization sign.

#include <map>
#include <set>
#include <string>

#include "vgc/graph.hpp"

namespace vgc {

class CoefficientFunctional {
 public:
  // canonical pattern encode -> value
  std::map<std::string, std::pair<ColoredGraph, Rational>> support;
  std::set<std::pair<int, int>> vertex_shapes;  // (int_t, int_a) of patterns
  std::set<int> edge_counts;

  void add_pattern(const ColoredGraph& pattern, const Rational& value);
  Rational eval(const ColoredGraph& pattern) const;
  bool empty() const { return support.empty(); }
};

CoefficientFunctional mu_functional(Params p);
CoefficientFunctional c0_functional(Params p);

}  // namespace vgc
