#include "vgc/homology.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "vgc/lie.hpp"
#include "vgc/presentation.hpp"

namespace vgc {

namespace {

std::string tag_name(ComplexTag t) {
  switch (t) {
    case ComplexTag::GraphsN: return "graphs_n";
    case ComplexTag::VGraphs0: return "vgraphs0";
    case ComplexTag::GCn: return "gc_n";
    case ComplexTag::VGCc0: return "vgc_c0";
    case ComplexTag::HGC: return "hgc";
    case ComplexTag::TwAerial: return "tw_aerial";
    case ComplexTag::TwColored: return "tw_colored";
  }
  return "?";
}

bool needs_lie_quotient(const ComplexKind& kind) {
  if (kind.params.m != 1 || !kind.colored) return false;
  return kind.profile.forbid_internal_components ||
         kind.profile.connectivity == Connectivity::LieConnected;
}

}  // namespace

ComplexSlice build_slice(const ComplexKind& kind, const Signature& sig,
                         std::pair<int, int> window) {
  ComplexSlice s;
  s.kind = kind;
  s.sig = sig;
  s.deg_lo = window.first;
  s.deg_hi = window.second;
  std::pair<int, int> wide{window.first - 1, window.second + 1};

  auto basis = enumerate_basis(sig, wide, kind.profile, BasisFlavor::Plain);
  for (auto& g : basis) {
    int dg = degree(g);
    auto& comp = s.bases[dg];
    comp.index[g.encode()] = (int)comp.basis.size();
    comp.basis.push_back(g);
  }

  for (int j = wide.first; j < wide.second; j++) {
    int dj = s.dim(j), dj1 = s.dim(j + 1);
    if (dj == 0) continue;
    SparseRationalMatrix M(dj1, dj);
    const auto& src = s.bases[j];
    for (int c = 0; c < dj; c++) {
      GraphSum dg = differential(src.basis[c], kind);
      for (const auto& [k, tc] : dg.terms) {
        (void)k;
        int tdeg = degree(tc.first);
        if (tdeg != j + 1)
          throw std::logic_error("differential is not homogeneous of degree 1");
        auto itc = s.bases.find(tdeg);
        if (itc == s.bases.end())
          throw std::logic_error("differential left the enumerated basis");
        auto iti = itc->second.index.find(tc.first.encode());
        if (iti == itc->second.index.end())
          throw std::logic_error("differential hit a graph missing from the basis: " +
                                 tc.first.encode());
        M.add(iti->second, c, tc.second);
      }
    }
    s.d[j] = std::move(M);
  }

  if (needs_lie_quotient(kind)) {
    s.has_quotient = true;
    // the quotient span: expansions of decorated graphs with an internal
    // Lie component (cooperad kinds) or Lie-disconnected ones (connected
    // complexes), over the same edge-structural profile
    ConstraintProfile decp = kind.profile;
    decp.forbid_internal_components = false;
    decp.connectivity = Connectivity::Any;
    auto decorated = enumerate_basis(sig, wide, decp, BasisFlavor::Decorated);
    std::map<int, std::vector<GraphSum>> gens;
    for (const auto& dgf : decorated) {
      // classes with a purely aerial internal component are already zero in
      // the monomial basis
      if (has_pure_aerial_internal_component(dgf)) continue;
      bool bad = false;
      if (kind.profile.connectivity == Connectivity::LieConnected)
        bad = !is_lie_connected(dgf);
      else
        bad = has_internal_lie_component(dgf);
      if (!bad) continue;
      GraphSum e = pbw_expand(dgf);
      if (!e.zero()) gens[degree(dgf)].push_back(std::move(e));
    }
    for (int j = wide.first; j <= wide.second; j++) {
      auto it = gens.find(j);
      int dj = s.dim(j);
      SparseRationalMatrix B(dj, it == gens.end() ? 0 : (int)it->second.size());
      if (it != gens.end()) {
        for (int c = 0; c < (int)it->second.size(); c++) {
          for (const auto& [k, tc] : it->second[c].terms) {
            (void)k;
            auto itc = s.bases.find(degree(tc.first));
            if (itc == s.bases.end()) continue;
            auto iti = itc->second.index.find(tc.first.encode());
            if (iti == itc->second.index.end())
              throw std::logic_error("quotient generator outside the basis");
            B.add(iti->second, c, tc.second);
          }
        }
      }
      s.bspan[j] = std::move(B);
    }
    // the cooperadic ideal is closed under the differential; saturate the
    // generating span with the images of the lower pieces
    for (int j = wide.first; j < wide.second; j++) {
      auto itd = s.d.find(j);
      if (itd == s.d.end()) continue;
      const auto& B = s.bspan.at(j);
      if (B.cols == 0) continue;
      const auto& D = itd->second;
      SparseRationalMatrix dB(D.rows, B.cols);
      for (const auto& [rcD, vD] : D.entries)
        for (int c = 0; c < B.cols; c++) {
          Rational b = B.get(rcD.second, c);
          if (b != 0) dB.add(rcD.first, c, vD * b);
        }
      s.bspan[j + 1] = hstack(s.bspan.at(j + 1), dB);
    }
  }
  return s;
}

namespace {

// rank of the induced map V_j/B_j -> V_{j+1}/B_{j+1}
long induced_rank(const ComplexSlice& s, int j, std::map<int, long>& bruin_cache) {
  auto itd = s.d.find(j);
  if (itd == s.d.end() || s.dim(j) == 0) return 0;
  const SparseRationalMatrix& D = itd->second;
  if (!s.has_quotient) return rank(D);
  const SparseRationalMatrix& B1 = s.bspan.at(j + 1);
  // columns of B1 followed by columns of D
  SparseRationalMatrix M(D.rows, B1.cols + D.cols);
  for (const auto& [rc, v] : B1.entries) M.entries[{rc.first, rc.second}] = v;
  for (const auto& [rc, v] : D.entries) M.entries[{rc.first, rc.second + B1.cols}] = v;
  long rb;
  auto itb = bruin_cache.find(j + 1);
  if (itb != bruin_cache.end())
    rb = itb->second;
  else
    bruin_cache[j + 1] = rb = rank(B1);
  return rank(M) - rb;
}

}  // namespace

BettiTable betti_table(const ComplexSlice& s, bool dual) {
  BettiTable t;
  t.kind = tag_name(s.kind.tag);
  t.truncation = s.kind.profile.max_internal_total;
  t.window = {s.deg_lo, s.deg_hi};
  t.dual = dual;
  std::map<int, long> bcache;
  std::map<int, long> ranks;
  for (int j = s.deg_lo - 1; j <= s.deg_hi; j++) ranks[j] = induced_rank(s, j, bcache);
  for (int j = s.deg_lo; j <= s.deg_hi; j++) {
    long dim = s.dim(j);
    if (s.has_quotient) {
      auto itb = bcache.find(j);
      long rb = itb != bcache.end() ? itb->second : (bcache[j] = rank(s.bspan.at(j)));
      dim -= rb;
    }
    long beta = dim - ranks[j] - ranks[j - 1];
    if (beta < 0) throw std::logic_error("negative Betti number: broken complex");
    if (beta) t.beta[dual ? -j : j] = beta;
  }
  return t;
}

BettiTable persistent_betti(const ComplexSlice& sN, const ComplexSlice& sN1) {
  BettiTable t;
  t.kind = tag_name(sN.kind.tag);
  t.truncation = sN.kind.profile.max_internal_total;
  t.window = {sN.deg_lo, sN.deg_hi};
  for (int j = sN.deg_lo; j <= sN.deg_hi; j++) {
    // kernel of the (quotient) differential on the N-slice
    int dimN = sN.dim(j);
    SparseRationalMatrix dN =
        sN.d.count(j) ? sN.d.at(j) : SparseRationalMatrix(sN.dim(j + 1), dimN);
    SparseRationalMatrix sys = dN;
    if (sN.has_quotient) sys = hstack(dN, sN.bspan.at(j + 1));
    SparseRationalMatrix K0 = nullspace(sys);
    // project kernel vectors to the x-part and embed into the (N+1)-slice
    SparseRationalMatrix K(sN1.dim(j), K0.cols);
    if (dimN > 0 && K0.cols > 0) {
      const auto& bN = sN.bases.at(j).basis;
      const auto& idx1 = sN1.bases.at(j).index;
      for (const auto& [rc, v] : K0.entries) {
        if (rc.first >= dimN) continue;
        K.add(idx1.at(bN[rc.first].encode()), rc.second, v);
      }
    }
    // zero classes of the larger quotient complex
    SparseRationalMatrix Z =
        sN1.d.count(j - 1) ? sN1.d.at(j - 1) : SparseRationalMatrix(sN1.dim(j), 0);
    if (sN1.has_quotient) Z = hstack(Z, sN1.bspan.at(j));
    long pb = rank(hstack(Z, K)) - rank(Z);
    if (pb < 0) throw std::logic_error("persistent_betti: negative rank difference");
    if (pb) t.beta[j] = pb;
  }
  return t;
}

std::map<int, long> Ladder::stable_values() const {
  std::map<int, long> out;
  if (entries.size() < 2) return out;
  const auto& b = entries[entries.size() - 2].persistent.beta;
  auto get = [](const std::map<int, long>& m, int j) {
    auto it = m.find(j);
    return it == m.end() ? 0l : it->second;
  };
  for (auto& [j, st] : stable)
    if (st) out[j] = get(b, j);
  return out;
}

Ladder stabilization_ladder(ComplexTag tag, Params p, const Signature& sig,
                            std::pair<int, int> window, int n_lo, int n_hi,
                            bool connected_part, int threads) {
  Ladder lad;
  auto make_slice = [&](int N) {
    ComplexKind kind = ComplexKind::make(tag, p, N);
    if (connected_part) {
      if (p.m == 1 && kind.colored)
        kind.profile.connectivity = Connectivity::LieConnected;
      else
        kind.profile.connectivity = Connectivity::Connected;
    }
    return build_slice(kind, sig, window);
  };
  std::vector<ComplexSlice> slices;
  if (threads > 1) {
    std::vector<std::future<ComplexSlice>> futs;
    for (int N = n_lo; N <= n_hi; N++)
      futs.push_back(std::async(std::launch::async, make_slice, N));
    for (auto& f : futs) slices.push_back(f.get());  // deterministic order
  } else {
    for (int N = n_lo; N <= n_hi; N++) slices.push_back(make_slice(N));
  }
  for (size_t i = 0; i < slices.size(); i++) {
    LadderEntry e;
    e.truncation = n_lo + (int)i;
    e.table = betti_table(slices[i], false);
    if (i + 1 < slices.size()) e.persistent = persistent_betti(slices[i], slices[i + 1]);
    lad.entries.push_back(std::move(e));
  }
  if (lad.entries.size() >= 3) {
    const auto& a = lad.entries[lad.entries.size() - 3].persistent.beta;
    const auto& b = lad.entries[lad.entries.size() - 2].persistent.beta;
    auto get = [](const std::map<int, long>& m, int j) {
      auto it = m.find(j);
      return it == m.end() ? 0l : it->second;
    };
    for (int j = window.first; j <= window.second; j++)
      lad.stable[j] = get(a, j) == get(b, j);
  }
  return lad;
}

std::pair<ColoredGraph, int> loop_graph(int n, int l) {
  ColoredGraph g;
  g.params = {1, n};
  g.int_a = l;
  for (int i = 0; i < l; i++)
    g.edges.push_back({int_a_vertex(i), int_a_vertex((i + 1) % l), EKind::Full});
  g.carriers = canonical_carriers(g);
  g.order.type = OrderDatum::Type::Order;
  return canonicalize(g);
}

LoopClassStatus check_loop_class(int n, int l) {
  if (l < 3) throw std::invalid_argument("check_loop_class: l >= 3");
  auto [loop, sgn] = loop_graph(n, l);
  if (sgn == 0) return LoopClassStatus::TrivialZero;

  ComplexKind kind = ComplexKind::make(ComplexTag::GCn, {1, n}, l + 1, 1);
  Signature sig{{1, n}, {}, {}};
  // loop-order-1 connected graphs have E = V, so degree = -V
  ComplexSlice s = build_slice(kind, sig, {-(l + 1), -(l - 1)});

  const auto& comp = s.bases.at(-l);
  auto iti = comp.index.find(loop.encode());
  if (iti == comp.index.end()) throw std::logic_error("loop graph missing from basis");
  int li = iti->second;

  // cocycle in the dual complex: no contraction from l+1 vertices hits it
  bool cocycle = true;
  auto itd = s.d.find(-(l + 1));
  if (itd != s.d.end()) {
    for (const auto& [rc, v] : itd->second.entries)
      if (rc.first == li && v != 0) cocycle = false;
  }
  if (!cocycle) return LoopClassStatus::TrivialZero;  // not even a cocycle

  // coboundary: the loop's dual vector lies in the row space of d_{-l}
  auto itd2 = s.d.find(-l);
  SparseRationalMatrix M = itd2 != s.d.end()
                               ? itd2->second
                               : SparseRationalMatrix(0, (int)comp.basis.size());
  SparseRationalMatrix row(1, (int)comp.basis.size());
  row.set(0, li, 1);
  long r0 = rank(M);
  long r1 = rank(M.vstack(row));
  return r1 == r0 ? LoopClassStatus::Exact : LoopClassStatus::Nontrivial;
}

VanishingReport check_vanishing_gc_trivalent(int n, int loop) {
  VanishingReport rep;
  rep.threshold = -n;
  if (loop < 2) return rep;  // no trivalent graphs below loop order 2
  // 2E >= 3V and E = V + g - 1 give V <= 2g - 2
  int vmax = 2 * loop - 2;
  ComplexKind kind = ComplexKind::make(ComplexTag::GCn, {1, n}, vmax + 1, loop);
  kind.profile.min_valence_internal_aerial = 3;
  Signature sig{{1, n}, {}, {}};
  // degree = (n-1)E - nV = (n-1)(loop-1) - V
  int dlo = (n - 1) * (loop - 1) - vmax;
  int dhi = (n - 1) * (loop - 1) - 1;
  ComplexSlice s = build_slice(kind, sig, {dlo, dhi});
  BettiTable t = betti_table(s, false);
  for (auto [j, b] : t.beta) {
    int dual_degree = -(j + n);  // fGC degree is j + n
    rep.classes[dual_degree] += b;
  }
  return rep;
}

VanishingReport check_vanishing_hgc(Params p, int loop, int hairs) {
  VanishingReport rep;
  rep.threshold = -1;
  if (hairs < 1) return rep;  // hairy graphs need at least one hair
  // internal valence >= 3: V <= hairs + 2 loop - 2
  int vmax = hairs + 2 * loop - 2;
  if (vmax < 1) return rep;
  ComplexKind kind = ComplexKind::make(ComplexTag::HGC, p, vmax, loop);
  Signature sig{p, {}, {}};
  for (int h = 1; h <= hairs; h++) sig.ext_a.push_back(std::to_string(h));
  sig.ext_a.resize(hairs);
  // degree = (n-1)E - nV, E = V + hairs + loop - 1
  int dlo = (p.n - 1) * (hairs + loop - 1) - vmax;
  int dhi = (p.n - 1) * (hairs + loop - 1) + (p.n - 1) * vmax;
  ComplexSlice s = build_slice(kind, sig, {dlo, dhi});
  BettiTable t = betti_table(s, false);
  for (auto [j, b] : t.beta) {
    int dual_degree = -j - p.m * hairs + p.m;
    rep.classes[dual_degree] += b;
  }
  return rep;
}

ChainMapReport verify_chain_map(Params p, int k, int l, int truncation) {
  ChainMapReport rep;
  Signature sig = make_signature(p, k, l);
  ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, p, truncation);
  auto window = natural_window(sig, kind.profile);
  auto basis = enumerate_basis(sig, window, kind.profile, BasisFlavor::Plain);

  for (const auto& g : basis) {
    GraphSum dg = differential(g, kind);
    PresentationElement img(sig);
    for (const auto& [key, tc] : dg.terms) {
      (void)key;
      img.add_elem(pi_project(tc.first), tc.second);
    }
    rep.graphs_checked++;
    if (!img.zero()) {
      rep.pi_d_zero = false;
      rep.failures.push_back("pi d != 0 on " + g.encode());
    }
  }

  // surjectivity: each normal-form monomial has an explicit preimage graph
  for (const auto& mon : monomial_basis(sig)) {
    rep.monomials_checked++;
    ColoredGraph g;
    g.params = p;
    g.ext_t_labels = sig.ext_t;
    g.ext_a_labels = sig.ext_a;
    for (auto [i, j] : mon.wt) g.edges.push_back({ext_t(i), ext_t(j), EKind::Dashed});
    for (auto [i, j] : mon.w) g.edges.push_back({ext_a(i), ext_a(j), EKind::Full});
    for (int v : mon.eta) {
      int t = g.int_t++;
      g.edges.push_back({ext_a(v), int_t_vertex(t), EKind::Full});
    }
    g.carriers = canonical_carriers(g);
    if (p.m == 1) {
      g.order.type = OrderDatum::Type::Order;
      for (int u : mon.order) g.order.seq.push_back(ext_t(u));
      for (int t = 0; t < g.int_t; t++) g.order.seq.push_back(int_t_vertex(t));
    }
    PresentationElement img = pi_project(g);
    PresentationElement want(sig);
    want.add(mon, 1);
    bool hit = false;
    if (img.terms.size() == 1) {
      const auto& [m2, c2] = img.terms.begin()->second;
      hit = m2 == mon && (c2 == 1 || c2 == -1);
    }
    if (!hit) {
      rep.surjective = false;
      rep.failures.push_back("no preimage for " + mon.key());
    }
  }
  return rep;
}

RecurrenceReport verify_recurrence(Params p, bool terrestrial, int arity,
                                   std::pair<int, int> window, int n_hi) {
  RecurrenceReport rep;
  int shift = terrestrial ? p.m - 1 : p.n - 1;
  int factor = arity;  // beta^j(next) = arity * beta^{j-shift}(arity-signature)
  Signature lo_sig = terrestrial ? make_signature(p, arity, 0) : make_signature(p, 0, arity);
  Signature hi_sig =
      terrestrial ? make_signature(p, arity + 1, 0) : make_signature(p, 0, arity + 1);

  std::pair<int, int> lo_window{window.first - shift, window.second};
  Ladder lo = stabilization_ladder(ComplexTag::VGraphs0, p, lo_sig, lo_window, 0, n_hi, true);
  Ladder hi = stabilization_ladder(ComplexTag::VGraphs0, p, hi_sig, window, 0, n_hi, true);

  auto lo_stable = lo.stable_values();
  auto hi_stable = hi.stable_values();
  auto get = [](const std::map<int, long>& m, int j) {
    auto it = m.find(j);
    return it == m.end() ? 0l : it->second;
  };
  for (int j = window.first; j <= window.second; j++) {
    bool both = hi.stable.count(j) && hi.stable.at(j) && lo.stable.count(j - shift) &&
                lo.stable.at(j - shift);
    std::ostringstream line;
    if (!both) {
      line << "degree " << j << ": unstable, excluded";
      rep.lines.push_back(line.str());
      continue;
    }
    long lhs = get(hi_stable, j);
    long rhs = factor * get(lo_stable, j - shift);
    line << "degree " << j << ": " << lhs << " vs " << factor << " * "
         << get(lo_stable, j - shift) << " = " << rhs;
    if (lhs != rhs) {
      rep.ok = false;
      line << "  MISMATCH";
    }
    rep.lines.push_back(line.str());
  }
  return rep;
}

}  // namespace vgc
