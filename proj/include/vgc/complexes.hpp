#pragma once

// Twisted differentials.  One engine serves every complex: contraction
// terms (collapse of a two-sided pattern subgraph weighted by a finite
// support functional, mu for the aerial part, c0 or a user functional for
// the terrestrial part) and deletion terms (forgetting the complement of a
// kept subgraph, weighted by the functional on the collapsed quotient,
// with a global minus).  Uncolored complexes use mu for both parts.

#include "vgc/coefficient.hpp"
#include "vgc/enumerate.hpp"
#include "vgc/profile.hpp"

namespace vgc {

enum class ComplexTag { GraphsN, VGraphs0, GCn, VGCc0, HGC, TwAerial, TwColored };

struct ComplexKind {
  ComplexTag tag = ComplexTag::VGraphs0;
  Params params;
  ConstraintProfile profile;
  CoefficientFunctional coef;  // terrestrial twist (colored kinds)
  bool colored = true;

  static ComplexKind make(ComplexTag tag, Params p, int max_internal,
                          std::optional<int> loop = std::nullopt);
  // vgraphs with a user-supplied finite-support functional in place of c0
  static ComplexKind with_functional(Params p, int max_internal,
                                     const CoefficientFunctional& f);
};

// The full twisted differential of one basis graph, reduced through the
// kind's monomial quotient and canonicalized.  Exact degree +1.
GraphSum differential(const ColoredGraph& g, const ComplexKind& kind);

GraphSum differential(const GraphSum& x, const ComplexKind& kind);

// Surgery primitives (exposed for tests).
struct CollapseTerm {
  ColoredGraph graph;
  int sign;
};

// Contract the subgraph (S, removed_edges) to one vertex of the collapse
// color; several results only for the m = 1 position sum.
std::vector<CollapseTerm> collapse_subgraph(const ColoredGraph& g,
                                            const std::vector<VertexId>& S,
                                            const std::vector<int>& removed_edges,
                                            bool to_terrestrial);

// Pattern seen by the coefficient functional for (S, removed_edges).
ColoredGraph extract_pattern(const ColoredGraph& g, const std::vector<VertexId>& S,
                             const std::vector<int>& removed_edges);

// Explicit homotopy on the one-external-vertex signatures: internalize the
// external vertex, add a fresh external of the same color joined to it
// (full edge for aerial, dashed for terrestrial when m >= 2; order-adjacent
// for m = 1).
GraphSum homotopy_k_plus_one(const ColoredGraph& g, const ComplexKind& kind);

enum class SplitLemma { TerrestrialGrowth, IdealAcyclic, AerialGrowth };
enum class SplitBucket { U, V, Vp, W, Wp };

struct SplitResult {
  SplitBucket bucket;
  int attach = -1;  // external index for U buckets
};

SplitResult split_membership(const ColoredGraph& g, SplitLemma lemma);

}  // namespace vgc
