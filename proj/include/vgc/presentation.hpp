#pragma once

// The presented cohomology side: normal-form monomials in the generators
// wt (dashed, degree m-1, over U; a linear order for m = 1), w (full,
// degree n-1, over V) and eta (degree n-m-1, over V), with the symmetry,
// square-zero, Arnold and eta-slide rewriting; Poincare polynomials;
// cocomposition; and the projection pi from graphs.

#include <map>
#include <string>
#include <vector>

#include "vgc/enumerate.hpp"
#include "vgc/graph.hpp"

namespace vgc {

struct PresGen {
  enum class Type : uint8_t { WT = 0, W = 1, Eta = 2 };
  Type type = Type::W;
  int i = 0, j = 0;  // label indices; Eta uses i only

  static PresGen wt(int i, int j) { return {Type::WT, i, j}; }
  static PresGen w(int i, int j) { return {Type::W, i, j}; }
  static PresGen eta(int i) { return {Type::Eta, i, -1}; }
};

struct PresMonomial {
  std::vector<std::pair<int, int>> wt;  // i < j, sorted, distinct right indices
  std::vector<int> order;               // m = 1: full order on U (label indices)
  std::vector<std::pair<int, int>> w;   // i < j, sorted, distinct right indices
  std::vector<int> eta;                 // sorted label indices

  std::string key() const;
  int degree(const Params& p) const;
  bool operator==(const PresMonomial&) const = default;
};

class PresentationElement {
 public:
  Signature sig;
  std::map<std::string, std::pair<PresMonomial, Rational>> terms;

  explicit PresentationElement(Signature s = {}) : sig(std::move(s)) {}
  void add(const PresMonomial& m, const Rational& c);
  void add_elem(const PresentationElement& other, const Rational& scale = 1);
  bool zero() const { return terms.empty(); }
  bool operator==(const PresentationElement& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [k, tc] : terms) {
      auto it = o.terms.find(k);
      if (it == o.terms.end() || it->second.second != tc.second) return false;
    }
    return true;
  }
};

// Fully reduced image of a raw generator word (applied in the given order).
// For m = 1 the order part must be supplied when U is nonempty.
PresentationElement normal_form(const Signature& sig, const std::vector<PresGen>& word,
                                const Rational& coef = 1,
                                const std::vector<int>& order = {});

PresentationElement pres_product(const PresentationElement& x, const PresentationElement& y);

// coefficient of t^d -> count
std::map<int, long> poincare_polynomial(int k, int l, Params p);

// all normal-form monomials of the signature (basis), optionally degree-filtered
std::vector<PresMonomial> monomial_basis(const Signature& sig);

struct PresTensorSum {
  Signature left_sig, right_sig;
  // key pair -> (left monomial, right monomial, coefficient)
  std::map<std::pair<std::string, std::string>, std::tuple<PresMonomial, PresMonomial, Rational>>
      terms;
  void add(const PresMonomial& l, const PresMonomial& r, const Rational& c);
};

// circ_T: vsc(U,V) -> vsc(U, V/T) (x) e_n(T); subset T by V-label indices.
PresTensorSum cocompose_aerial(const PresentationElement& x, const std::vector<int>& T);

// circ_{W,T}: vsc(U, V') -> vsc(U/W, V'\T) (x) vsc(W, T); the aerial labels
// of the right factor are T, the left keeps the rest.
PresTensorSum cocompose_mixed(const PresentationElement& x, const std::vector<int>& W,
                              const std::vector<int>& T);

// quotient label convention: remaining labels in order, then "*"
std::vector<std::string> quotient_labels(const std::vector<std::string>& labels,
                                         const std::vector<int>& removed);

// The projection pi: generators (single full edge between external aerials,
// single dashed edge, the univalent-internal-terrestrial eta graph, the
// empty graph) extended multiplicatively; everything else to zero.
PresentationElement pi_project(const ColoredGraph& g);

}  // namespace vgc
