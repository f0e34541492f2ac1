#pragma once

// Cooperadic cocomposition by subgraph extraction: the chosen subgraph
// becomes the right tensor factor, the quotient (with the collapsed
// external star vertex) the left one.  Internal vertices distribute over
// both sides; an edge may go right only when both endpoints do, and an
// inside edge kept on the left becomes a tadpole at the star.

#include "vgc/complexes.hpp"
#include "vgc/profile.hpp"

namespace vgc {

struct TensorPairSum {
  std::map<std::pair<std::string, std::string>,
           std::tuple<ColoredGraph, ColoredGraph, Rational>>
      terms;
  void add(const ColoredGraph& l, const ColoredGraph& r, const Rational& c);
  bool zero() const { return terms.empty(); }
};

// circ_T: subgraphs over the external aerial subset T (indices into the
// aerial label list); the right factor is aerial-only, the star is a new
// external aerial vertex labeled "*" appended to the quotient's labels.
TensorPairSum cocompose_graphs_aerial(const ColoredGraph& g, const std::vector<int>& T,
                                      const ConstraintProfile* left_profile = nullptr,
                                      const ConstraintProfile* right_profile = nullptr);

// circ_{W,T}: subgraphs over external terrestrial W and aerial T; the star
// is a new external terrestrial vertex "*".
TensorPairSum cocompose_graphs_mixed(const ColoredGraph& g, const std::vector<int>& W,
                                     const std::vector<int>& T,
                                     const ConstraintProfile* left_profile = nullptr,
                                     const ConstraintProfile* right_profile = nullptr);

}  // namespace vgc
