#pragma once

// Chain-level slices (bases per degree plus boundary matrices), exact Betti
// tables with the m = 1 Lie-span quotient, stabilization ladders over the
// truncation level, loop-class certification and vanishing reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgc/complexes.hpp"
#include "vgc/linalg.hpp"

namespace vgc {

struct DegreeComponent {
  std::vector<ColoredGraph> basis;
  std::map<std::string, int> index;
};

struct ComplexSlice {
  ComplexKind kind;
  Signature sig;
  int deg_lo = 0, deg_hi = 0;  // reporting window; bases cover [lo-1, hi+1]
  std::map<int, DegreeComponent> bases;
  std::map<int, SparseRationalMatrix> d;      // degree j -> j+1
  std::map<int, SparseRationalMatrix> bspan;  // m = 1 quotient generators
  bool has_quotient = false;

  int dim(int j) const {
    auto it = bases.find(j);
    return it == bases.end() ? 0 : (int)it->second.basis.size();
  }
};

ComplexSlice build_slice(const ComplexKind& kind, const Signature& sig,
                         std::pair<int, int> window);

struct BettiTable {
  std::map<int, long> beta;
  std::string kind;
  int truncation = 0;
  std::pair<int, int> window{0, 0};
  bool dual = false;
};

BettiTable betti_table(const ComplexSlice& slice, bool dual = false);

// persistent Betti numbers: the rank of H^j(C_N) -> H^j(C_{N+1}) induced by
// the truncation inclusion.  Truncation cut-off classes die here, so these
// are the numbers that stabilize for the infinite-type degree pieces.
BettiTable persistent_betti(const ComplexSlice& at_n, const ComplexSlice& at_n1);

struct LadderEntry {
  int truncation;
  BettiTable table;       // raw truncated table
  BettiTable persistent;  // rank of H(C_N) -> H(C_{N+1}); empty for the top N
};

struct Ladder {
  std::vector<LadderEntry> entries;
  // degrees where the top two persistent tables agree
  std::map<int, bool> stable;
  std::map<int, long> stable_values() const;
};

Ladder stabilization_ladder(ComplexTag tag, Params p, const Signature& sig,
                            std::pair<int, int> window, int n_lo, int n_hi,
                            bool connected_part = false, int threads = 1);

enum class LoopClassStatus { Nontrivial, TrivialZero, Exact };
LoopClassStatus check_loop_class(int n, int l);

// canonical loop graph on l internal aerial vertices; second value is the
// canonicalization sign (0 when the loop dies by symmetry)
std::pair<ColoredGraph, int> loop_graph(int n, int l);

struct VanishingReport {
  // (dual degree, dimension) of every nonzero cohomology group found
  std::map<int, long> classes;
  int threshold = 0;  // report is clean iff no classes strictly above this
  bool clean() const {
    for (auto& [d, b] : classes)
      if (d > threshold && b > 0) return false;
    return true;
  }
};

VanishingReport check_vanishing_gc_trivalent(int n, int loop);
VanishingReport check_vanishing_hgc(Params p, int loop, int hairs);

struct ChainMapReport {
  bool pi_d_zero = true;
  long graphs_checked = 0;
  bool surjective = true;
  long monomials_checked = 0;
  std::vector<std::string> failures;
};

ChainMapReport verify_chain_map(Params p, int k, int l, int truncation);

struct RecurrenceReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// beta^j(k+1, 0) = k * beta^{j-m+1}(k, 0) on connected parts, or the aerial
// counterpart beta^j(0, l+1) = l * beta^{j-n+1}(0, l)
RecurrenceReport verify_recurrence(Params p, bool terrestrial, int arity,
                                   std::pair<int, int> window, int n_hi);

}  // namespace vgc
