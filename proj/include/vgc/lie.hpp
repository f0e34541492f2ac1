#pragma once

// PBW bridge between the two m = 1 bases: Lie-decorated graphs (commutative
// products of left-normed Lie words, internal terrestrial vertices odd) and
// linear-order graphs.  The forward map expands words into commutators and
// multiplies them with graded shuffles; the inverse solves the resulting
// square system slice by slice.

#include "vgc/graph.hpp"

namespace vgc {

// sequences of graded letters with rational coefficients
using SeqTerm = std::pair<std::vector<VertexId>, Rational>;

// [[..[w0,w1],..],wr] expanded in the word algebra
std::vector<SeqTerm> lie_word_to_sequences(const LieWord& w);

// graded shuffle product (internal terrestrial letters are odd)
std::vector<SeqTerm> graded_shuffle(const std::vector<SeqTerm>& a,
                                    const std::vector<SeqTerm>& b);

// decorated graph -> sum of canonical linear-order graphs
GraphSum pbw_expand(const ColoredGraph& decorated);

// inverse transform: expresses a sum of canonical order graphs (all sharing
// one underlying edge structure) in the labeled decorated basis; throws if
// the sum is not in the decorated span (it always is, by PBW)
std::vector<std::pair<ColoredGraph, Rational>> pbw_inverse(const GraphSum& orders);

}  // namespace vgc
