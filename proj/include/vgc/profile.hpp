#pragma once

// Constraint profiles: which graphs span a given complex, and the monomial
// part of its defining quotient (reduce).  Named presets mirror the standard
// complexes: gra/tw (unreduced), graphs (reduced Kontsevich cooperad),
// vgraphs/vgraphs0 (reduced colored cooperad), gc / gc3 (graph complex,
// connected, no external vertices), hgc (hairy).

#include <optional>
#include <string>

#include "vgc/graph.hpp"

namespace vgc {

enum class Connectivity { Any, Connected, LieConnected, InternallyConnected };

struct ConstraintProfile {
  bool allow_tadpoles = true;
  bool allow_double_edges = true;
  int min_valence_internal_aerial = 0;
  bool forbid_univalent_terr_to_terr = false;
  bool forbid_bivalent_terr_two_dashed = false;
  bool forbid_full_terr_terr = false;  // full edges between terrestrial vertices
  Connectivity connectivity = Connectivity::Any;
  bool forbid_internal_components = false;
  bool external_vertices_exactly_univalent = false;  // hairy complexes
  bool no_external_vertices = false;                 // gc-type complexes
  bool aerial_only = false;                          // uncolored complexes
  int max_internal_total = 0;
  std::optional<int> loop_order;

  static ConstraintProfile preset(const std::string& name);
};

// Monomial reduction: true iff g survives the profile's quotient.  Lie
// connectivity conditions are only decidable on decorated graphs and are
// checked there; order-basis graphs pass them here (the Lie quotient is
// handled as a subspace span in the homology layer).
bool passes_profile(const ColoredGraph& g, const ConstraintProfile& p);

// reduce: canonicalize and kill graphs with forbidden features
std::optional<std::pair<ColoredGraph, int>> reduce(const ColoredGraph& g,
                                                   const ConstraintProfile& p);

// Lie components per Def-style closure: full-edge adjacency plus same-word
// co-membership, extended transitively.  Requires a Lie decoration.
std::vector<int> lie_components(const ColoredGraph& g, int* count);
bool has_pure_aerial_internal_component(const ColoredGraph& g);
bool is_lie_connected(const ColoredGraph& g);
bool has_internal_lie_component(const ColoredGraph& g);

}  // namespace vgc
