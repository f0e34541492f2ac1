#pragma once

// Complete canonical bases of graph spaces for a signature, degree window,
// truncation level and constraint profile, by backtracking over edge
// multisets with canonical-form rejection.

#include <optional>
#include <vector>

#include "vgc/profile.hpp"

namespace vgc {

struct Signature {
  Params params;
  std::vector<std::string> ext_t;
  std::vector<std::string> ext_a;
};

Signature make_signature(Params p, int k, int l);

enum class BasisFlavor { Plain, Decorated };

// All canonical graphs of the signature with total internal vertices
// <= profile.max_internal_total, degree inside [window.first,
// window.second], satisfying the profile, in deterministic encode() order.
// For m = 1, Plain enumerates linear-order basis graphs; Decorated
// enumerates labeled Lie-decorated graphs (minimal-first left-normed words).
std::vector<ColoredGraph> enumerate_basis(const Signature& sig,
                                          std::pair<int, int> window,
                                          const ConstraintProfile& profile,
                                          BasisFlavor flavor = BasisFlavor::Plain);

// Widest degree window reachable at the profile's truncation (requires a
// profile under which the edge count is bounded, i.e. no unbounded
// multiplicities).
std::pair<int, int> natural_window(const Signature& sig, const ConstraintProfile& p);

// Lie word basis on a fixed letter set: left-normed minimal-first sequences.
std::vector<LieWord> lie_word_basis(const std::vector<VertexId>& letters);

// All forests (set partitions into basis words) over the letter set.
std::vector<std::vector<LieWord>> lie_forests(const std::vector<VertexId>& letters);

}  // namespace vgc
