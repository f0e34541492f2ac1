#include "vgc/complexes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace vgc {

ComplexKind ComplexKind::make(ComplexTag tag, Params p, int max_internal,
                              std::optional<int> loop) {
  ComplexKind k;
  k.tag = tag;
  k.params = p;
  switch (tag) {
    case ComplexTag::GraphsN:
      k.profile = ConstraintProfile::preset("graphs");
      k.colored = false;
      break;
    case ComplexTag::VGraphs0:
      k.profile = ConstraintProfile::preset("vgraphs0");
      k.colored = true;
      k.coef = c0_functional(p);
      break;
    case ComplexTag::GCn:
      k.profile = ConstraintProfile::preset("gc");
      k.colored = false;
      break;
    case ComplexTag::VGCc0:
      k.profile = ConstraintProfile::preset("vgc");
      k.colored = true;
      k.coef = c0_functional(p);
      break;
    case ComplexTag::HGC:
      k.profile = ConstraintProfile::preset("hgc");
      k.colored = false;
      break;
    case ComplexTag::TwAerial:
      k.profile = ConstraintProfile::preset("tw");
      k.profile.aerial_only = true;
      k.colored = false;
      break;
    case ComplexTag::TwColored:
      k.profile = ConstraintProfile::preset("tw");
      k.colored = true;
      k.coef = c0_functional(p);
      break;
  }
  k.profile.max_internal_total = max_internal;
  k.profile.loop_order = loop;
  return k;
}

ComplexKind ComplexKind::with_functional(Params p, int max_internal,
                                         const CoefficientFunctional& f) {
  ComplexKind k = make(ComplexTag::VGraphs0, p, max_internal);
  k.coef = f;
  return k;
}

namespace {

struct Rebuilder {
  const ColoredGraph& g;
  // removal plan
  std::vector<bool> edge_removed;
  std::vector<VertexId> verts_removed;
  // optional merge: absorbed -> target
  std::vector<std::pair<VertexId, VertexId>> merge_to;

  explicit Rebuilder(const ColoredGraph& g_) : g(g_), edge_removed(g_.edges.size(), false) {}

  bool is_removed_vertex(VertexId v) const {
    return std::find(verts_removed.begin(), verts_removed.end(), v) != verts_removed.end();
  }

  VertexId mapped(VertexId v, const std::vector<int>& tmap, const std::vector<int>& amap) const {
    for (const auto& [from, to] : merge_to)
      if (v == from) v = to;
    if (v.kind == VKind::IntT) return int_t_vertex(tmap[v.idx]);
    if (v.kind == VKind::IntA) return int_a_vertex(amap[v.idx]);
    return v;
  }

  // compaction maps for internal indices after removals; fresh slots appended
  void index_maps(std::vector<int>& tmap, std::vector<int>& amap, int& nt, int& na) const {
    tmap.assign(g.int_t, -1);
    amap.assign(g.int_a, -1);
    nt = 0;
    na = 0;
    for (int i = 0; i < g.int_t; i++)
      if (!is_removed_vertex(int_t_vertex(i))) tmap[i] = nt++;
    for (int i = 0; i < g.int_a; i++)
      if (!is_removed_vertex(int_a_vertex(i))) amap[i] = na++;
  }

  // builds the surviving graph; fresh_vertex, when set, is appended as a new
  // internal vertex of the given color and replaces removed endpoints
  ColoredGraph build(std::optional<VKind> fresh_kind, VertexId* fresh_out) const {
    std::vector<int> tmap, amap;
    int nt, na;
    index_maps(tmap, amap, nt, na);
    VertexId fresh{};
    bool have_fresh = fresh_kind.has_value();
    if (have_fresh) {
      fresh = *fresh_kind == VKind::IntT ? int_t_vertex(nt++) : int_a_vertex(na++);
      if (fresh_out) *fresh_out = fresh;
    }

    ColoredGraph h;
    h.params = g.params;
    h.ext_t_labels = g.ext_t_labels;
    h.ext_a_labels = g.ext_a_labels;
    h.int_t = nt;
    h.int_a = na;

    auto map_endpoint = [&](VertexId v) -> VertexId {
      for (const auto& [from, to] : merge_to)
        if (v == from) v = to;
      if (is_removed_vertex(v)) return fresh;  // only valid when have_fresh
      if (v.kind == VKind::IntT) return int_t_vertex(tmap[v.idx]);
      if (v.kind == VKind::IntA) return int_a_vertex(amap[v.idx]);
      return v;
    };

    std::vector<int> edge_newpos(g.edges.size(), -1);
    for (int i = 0; i < (int)g.edges.size(); i++) {
      if (edge_removed[i]) continue;
      Edge e = g.edges[i];
      e.a = map_endpoint(e.a);
      e.b = map_endpoint(e.b);
      edge_newpos[i] = (int)h.edges.size();
      h.edges.push_back(e);
    }

    for (const auto& c : g.carriers) {
      if (c.is_edge) {
        if (edge_removed[c.edge]) continue;
        h.carriers.push_back(Carrier::of_edge(edge_newpos[c.edge]));
      } else {
        if (is_removed_vertex(c.v)) continue;
        VertexId v = c.v;
        for (const auto& [from, to] : merge_to)
          if (v == from) v = to;
        if (v.kind == VKind::IntT)
          h.carriers.push_back(Carrier::of_vertex(int_t_vertex(tmap[v.idx])));
        else
          h.carriers.push_back(Carrier::of_vertex(int_a_vertex(amap[v.idx])));
      }
    }
    if (have_fresh) {
      bool carrier = fresh.kind == VKind::IntT ? g.params.terr_vertices_ordered()
                                               : g.params.aerial_vertices_ordered();
      if (carrier) h.carriers.push_back(Carrier::of_vertex(fresh));
    }
    return h;
  }
};


// positions of the given terrestrial vertices inside the order; empty if not
// an order graph
std::vector<int> order_positions(const ColoredGraph& g, const std::vector<VertexId>& vs) {
  std::vector<int> pos;
  for (int p = 0; p < (int)g.order.seq.size(); p++)
    if (std::find(vs.begin(), vs.end(), g.order.seq[p]) != vs.end()) pos.push_back(p);
  return pos;
}

bool consecutive(const std::vector<int>& pos) {
  for (size_t i = 1; i < pos.size(); i++)
    if (pos[i] != pos[i - 1] + 1) return false;
  return true;
}

}  // namespace

ColoredGraph extract_pattern(const ColoredGraph& g, const std::vector<VertexId>& S,
                             const std::vector<int>& removed_edges) {
  ColoredGraph pat;
  pat.params = g.params;

  std::vector<VertexId> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  std::map<VertexId, VertexId> vmap;
  int nt = 0, na = 0;
  for (auto v : sorted)
    vmap[v] = v.terrestrial() ? int_t_vertex(nt++) : int_a_vertex(na++);
  pat.int_t = nt;
  pat.int_a = na;

  std::vector<int> sorted_edges = removed_edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  std::map<int, int> emap;
  for (int ei : sorted_edges) {
    Edge e = g.edges[ei];
    auto ita = vmap.find(e.a);
    auto itb = vmap.find(e.b);
    if (ita == vmap.end() || itb == vmap.end())
      throw std::logic_error("extract_pattern: edge leaves the subgraph");
    emap[ei] = (int)pat.edges.size();
    pat.edges.push_back({ita->second, itb->second, e.kind});
  }

  // inherited carriers in the ambient word order, then carriers of formerly
  // external vertices appended
  for (const auto& c : g.carriers) {
    if (c.is_edge) {
      auto it = emap.find(c.edge);
      if (it != emap.end() && edge_ordered(pat.params, pat.edges[it->second].kind))
        pat.carriers.push_back(Carrier::of_edge(it->second));
    } else {
      auto it = vmap.find(c.v);
      if (it != vmap.end()) pat.carriers.push_back(Carrier::of_vertex(it->second));
    }
  }
  {
    // internalized external vertices lead the pattern word (they carry the
    // distinguished inputs of the twisting functional)
    std::vector<Carrier> extc;
    for (auto v : sorted) {
      if (!v.external()) continue;
      VertexId pv = vmap[v];
      bool carrier = pv.kind == VKind::IntT ? pat.params.terr_vertices_ordered()
                                            : pat.params.aerial_vertices_ordered();
      if (carrier) extc.push_back(Carrier::of_vertex(pv));
    }
    pat.carriers.insert(pat.carriers.begin(), extc.begin(), extc.end());
  }

  if (g.params.m == 1) {
    pat.order.type = OrderDatum::Type::Order;
    for (auto v : g.order.seq) {
      auto it = vmap.find(v);
      if (it != vmap.end()) pat.order.seq.push_back(it->second);
    }
    // formerly external terrestrial members keep their order slot via the
    // ambient order, which lists only terrestrial vertices of any kind
  }
  return pat;
}

std::vector<CollapseTerm> collapse_subgraph(const ColoredGraph& g,
                                            const std::vector<VertexId>& S,
                                            const std::vector<int>& removed_edges,
                                            bool to_terrestrial) {
  std::vector<CollapseTerm> out;

  // survivor: minimal vertex of the collapse color inside S; for m = 1
  // terrestrial collapses, the earliest order position wins instead (the
  // external one is automatically earliest-eligible, being even)
  std::optional<VertexId> survivor;
  std::vector<VertexId> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  for (auto v : sorted) {
    bool color_ok = to_terrestrial ? v.terrestrial() : v.aerial();
    if (color_ok) {
      survivor = v;
      break;
    }
  }
  if (to_terrestrial && g.params.m == 1 && survivor && survivor->internal() &&
      g.order.type == OrderDatum::Type::Order) {
    for (auto v : g.order.seq)
      if (std::find(S.begin(), S.end(), v) != S.end()) {
        survivor = v;
        break;
      }
  }

  std::vector<VertexId> absorbed;
  for (auto v : sorted)
    if (!survivor || !(v == *survivor)) absorbed.push_back(v);

  int usign = unshuffle_back_sign(g, removed_edges, absorbed);

  Rebuilder rb(g);
  for (int e : removed_edges) rb.edge_removed[e] = true;
  rb.verts_removed = absorbed;
  if (survivor)
    for (auto v : absorbed) rb.merge_to.push_back({v, *survivor});

  // m = 1 order handling
  if (g.params.m == 1 && g.order.type == OrderDatum::Type::Order) {
    std::vector<VertexId> terr_S;
    for (auto v : sorted)
      if (v.terrestrial()) terr_S.push_back(v);
    auto pos = order_positions(g, terr_S);
    if (!terr_S.empty() && !consecutive(pos)) return out;

    if (survivor || !to_terrestrial) {
      VertexId fresh_unused{};
      ColoredGraph h = rb.build(std::nullopt, &fresh_unused);
      h.order.type = OrderDatum::Type::Order;
      std::vector<int> tmap, amap;
      int nt, na;
      rb.index_maps(tmap, amap, nt, na);
      for (auto v : g.order.seq) {
        if (rb.is_removed_vertex(v)) continue;
        h.order.seq.push_back(v.kind == VKind::IntT ? int_t_vertex(tmap[v.idx]) : v);
      }
      auto [cg, s] = canonicalize(h);
      if (s != 0) out.push_back({cg, s * usign});
      return out;
    }

    // fresh terrestrial vertex: position sum with a Koszul sign per odd
    // terrestrial vertex jumped over
    VertexId fresh{};
    ColoredGraph h0 = rb.build(VKind::IntT, &fresh);
    std::vector<int> tmap, amap;
    int nt, na;
    rb.index_maps(tmap, amap, nt, na);
    std::vector<VertexId> base_seq;
    for (auto v : g.order.seq) {
      if (rb.is_removed_vertex(v)) continue;
      base_seq.push_back(v.kind == VKind::IntT ? int_t_vertex(tmap[v.idx]) : v);
    }
    int npos = (int)base_seq.size() + 1;
    for (int p = 0; p < npos; p++) {
      int psign = 1;
      for (int q = 0; q < p; q++)
        if (base_seq[q].kind == VKind::IntT) psign = -psign;
      ColoredGraph h = h0;
      h.order.type = OrderDatum::Type::Order;
      h.order.seq = base_seq;
      h.order.seq.insert(h.order.seq.begin() + p, fresh);
      auto [cg, s] = canonicalize(h);
      if (s != 0) out.push_back({cg, s * usign * psign});
    }
    return out;
  }

  // m >= 2 (or Lie-decorated input is not supported here)
  if (g.order.type == OrderDatum::Type::Lie)
    throw std::invalid_argument("collapse_subgraph: expand Lie decorations first");

  VertexId fresh{};
  ColoredGraph h = survivor ? rb.build(std::nullopt, nullptr)
                            : rb.build(to_terrestrial ? VKind::IntT : VKind::IntA, &fresh);
  auto [cg, s] = canonicalize(h);
  if (s != 0) out.push_back({cg, s * usign});
  return out;
}

namespace {

void all_color_subsets(const ColoredGraph& g, int want_t, int want_a, bool allow_ext_t,
                       bool allow_ext_a, std::vector<std::vector<VertexId>>& out) {
  // choose want_t terrestrial and want_a aerial vertices with at most one
  // external among them (of the permitted color)
  std::vector<VertexId> terr, aer;
  for (int i = 0; i < g.n_ext_t(); i++) terr.push_back(ext_t(i));
  for (int i = 0; i < g.int_t; i++) terr.push_back(int_t_vertex(i));
  for (int i = 0; i < g.n_ext_a(); i++) aer.push_back(ext_a(i));
  for (int i = 0; i < g.int_a; i++) aer.push_back(int_a_vertex(i));

  std::vector<VertexId> pick;
  std::function<void(size_t, int, int, int)> rec = [&](size_t start_t, int nt, int na,
                                                       int next_a) {
    if (nt < want_t) {
      for (size_t i = start_t; i < terr.size(); i++) {
        VertexId v = terr[i];
        if (v.external() && !allow_ext_t) continue;
        pick.push_back(v);
        rec(i + 1, nt + 1, na, next_a);
        pick.pop_back();
      }
      return;
    }
    if (na < want_a) {
      for (size_t i = next_a; i < aer.size(); i++) {
        VertexId v = aer[i];
        if (v.external() && !allow_ext_a) continue;
        pick.push_back(v);
        rec(start_t, nt, na + 1, (int)i + 1);
        pick.pop_back();
      }
      return;
    }
    int n_ext = 0;
    for (auto v : pick) n_ext += v.external();
    if (n_ext <= 1) out.push_back(pick);
  };
  rec(0, 0, 0, 0);
}

void contraction_terms(const ColoredGraph& g, const CoefficientFunctional& f,
                       bool to_terrestrial, GraphSum& out) {
  for (auto [pt, pa] : f.vertex_shapes) {
    std::vector<std::vector<VertexId>> subsets;
    all_color_subsets(g, pt, pa, /*allow_ext_t=*/to_terrestrial,
                      /*allow_ext_a=*/!to_terrestrial, subsets);
    for (const auto& S : subsets) {
      std::vector<int> within;
      for (int ei = 0; ei < (int)g.edges.size(); ei++) {
        const Edge& e = g.edges[ei];
        bool a_in = std::find(S.begin(), S.end(), e.a) != S.end();
        bool b_in = std::find(S.begin(), S.end(), e.b) != S.end();
        if (a_in && b_in) within.push_back(ei);
      }
      int nw = (int)within.size();
      if (nw > 20) throw std::logic_error("contraction_terms: too many internal edges");
      for (int mask = 0; mask < (1 << nw); mask++) {
        if (!f.edge_counts.count(__builtin_popcount(mask))) continue;
        std::vector<int> eprime;
        for (int b = 0; b < nw; b++)
          if (mask >> b & 1) eprime.push_back(within[b]);
        ColoredGraph pat = extract_pattern(g, S, eprime);
        Rational v = f.eval(pat);
        if (v == 0) continue;
        for (const auto& term : collapse_subgraph(g, S, eprime, to_terrestrial))
          out.add(term.graph, v * term.sign);
      }
    }
  }
}

void deletion_terms(const ColoredGraph& g, const CoefficientFunctional& f,
                    bool to_terrestrial, GraphSum& out) {
  for (auto [pt, pa] : f.vertex_shapes) {
    int zt = pt - (to_terrestrial ? 1 : 0);
    int za = pa - (to_terrestrial ? 0 : 1);
    if (zt < 0 || za < 0) continue;
    if (zt + za == 0) continue;  // the collapse must forget something
    if (zt + za >= g.int_t + g.int_a + 1) continue;
    std::vector<std::vector<VertexId>> zsets;
    {
      // internal-only complements
      std::vector<VertexId> terr, aer;
      for (int i = 0; i < g.int_t; i++) terr.push_back(int_t_vertex(i));
      for (int i = 0; i < g.int_a; i++) aer.push_back(int_a_vertex(i));
      std::vector<VertexId> pick;
      std::function<void(size_t, size_t, int, int)> rec = [&](size_t it, size_t ia, int nt,
                                                              int na) {
        if (nt == zt && na == za) {
          zsets.push_back(pick);
          return;
        }
        if (nt < zt) {
          for (size_t i = it; i < terr.size(); i++) {
            pick.push_back(terr[i]);
            rec(i + 1, ia, nt + 1, na);
            pick.pop_back();
          }
          return;
        }
        for (size_t i = ia; i < aer.size(); i++) {
          pick.push_back(aer[i]);
          rec(it, i + 1, nt, na + 1);
          pick.pop_back();
        }
      };
      rec(0, 0, 0, 0);
    }
    for (const auto& Z : zsets) {
      // kept part must be nonempty
      if ((int)Z.size() == g.n_vertices()) continue;
      std::vector<int> removed_edges;
      for (int ei = 0; ei < (int)g.edges.size(); ei++) {
        const Edge& e = g.edges[ei];
        bool a_in = std::find(Z.begin(), Z.end(), e.a) != Z.end();
        bool b_in = std::find(Z.begin(), Z.end(), e.b) != Z.end();
        if (a_in || b_in) removed_edges.push_back(ei);
      }
      if (!f.edge_counts.count((int)removed_edges.size())) continue;

      // pattern: fresh collapse vertex w plus Z, removed edges reattached
      ColoredGraph pat;
      pat.params = g.params;
      std::map<VertexId, VertexId> vmap;
      int nt = to_terrestrial ? 1 : 0, na = to_terrestrial ? 0 : 1;
      VertexId w = to_terrestrial ? int_t_vertex(0) : int_a_vertex(0);
      std::vector<VertexId> zsorted = Z;
      std::sort(zsorted.begin(), zsorted.end());
      for (auto v : zsorted)
        vmap[v] = v.terrestrial() ? int_t_vertex(nt++) : int_a_vertex(na++);
      pat.int_t = nt;
      pat.int_a = na;
      bool dead = false;
      for (int ei : removed_edges) {
        Edge e = g.edges[ei];
        auto map_pat = [&](VertexId v) {
          auto it = vmap.find(v);
          return it == vmap.end() ? w : it->second;
        };
        Edge pe{map_pat(e.a), map_pat(e.b), e.kind};
        if (pe.kind == EKind::Dashed && (!pe.a.terrestrial() || !pe.b.terrestrial())) {
          dead = true;  // dashed edge cannot reattach to an aerial collapse
          break;
        }
        pat.edges.push_back(pe);
      }
      if (dead) continue;
      // inherited carrier order for the Z part, w appended
      for (const auto& c : g.carriers) {
        if (c.is_edge) {
          auto it = std::find(removed_edges.begin(), removed_edges.end(), c.edge);
          if (it == removed_edges.end()) continue;
          int pi = (int)(it - removed_edges.begin());
          if (edge_ordered(pat.params, pat.edges[pi].kind))
            pat.carriers.push_back(Carrier::of_edge(pi));
        } else {
          auto it = vmap.find(c.v);
          if (it != vmap.end()) pat.carriers.push_back(Carrier::of_vertex(it->second));
        }
      }
      {
        // the collapse vertex leads the pattern word, like an internalized
        // external one
        bool carrier = to_terrestrial ? pat.params.terr_vertices_ordered()
                                      : pat.params.aerial_vertices_ordered();
        if (carrier) pat.carriers.insert(pat.carriers.begin(), Carrier::of_vertex(w));
      }

      // m = 1: kept terrestrials must be consecutive; the pattern's order
      // places w at the kept block relative to Z.  When the kept part has
      // no terrestrial vertices the quotient is the plain sum over all
      // placements of w (the identification signs come out of eval).
      Rational v = 0;
      if (g.params.m == 1 && g.order.type == OrderDatum::Type::Order) {
        std::vector<int> kept_pos;
        std::vector<VertexId> z_order;
        int block_at = -1;
        for (int p = 0; p < (int)g.order.seq.size(); p++) {
          VertexId vv = g.order.seq[p];
          auto it = vmap.find(vv);
          if (it == vmap.end()) {
            kept_pos.push_back(p);
            if (block_at < 0) block_at = (int)z_order.size();
          } else {
            z_order.push_back(it->second);
          }
        }
        if (!consecutive(kept_pos)) continue;
        if (!to_terrestrial) {
          pat.order.type = OrderDatum::Type::Order;
          pat.order.seq = z_order;
          v = f.eval(pat);
        } else if (!kept_pos.empty()) {
          pat.order.type = OrderDatum::Type::Order;
          pat.order.seq = z_order;
          pat.order.seq.insert(pat.order.seq.begin() + block_at, w);
          v = f.eval(pat);
        } else {
          for (int p = 0; p <= (int)z_order.size(); p++) {
            ColoredGraph pp = pat;
            pp.order.type = OrderDatum::Type::Order;
            pp.order.seq = z_order;
            pp.order.seq.insert(pp.order.seq.begin() + p, w);
            v += f.eval(pp);
          }
        }
      } else {
        v = f.eval(pat);
      }
      if (v == 0) continue;

      int usign = unshuffle_back_sign(g, removed_edges, Z);
      Rebuilder rb(g);
      for (int e : removed_edges) rb.edge_removed[e] = true;
      rb.verts_removed = Z;
      ColoredGraph kept = rb.build(std::nullopt, nullptr);
      if (g.params.m == 1 && g.order.type == OrderDatum::Type::Order) {
        std::vector<int> tmap, amap;
        int knt, kna;
        rb.index_maps(tmap, amap, knt, kna);
        kept.order.type = OrderDatum::Type::Order;
        kept.order.seq.clear();
        for (auto vv : g.order.seq) {
          if (rb.is_removed_vertex(vv)) continue;
          kept.order.seq.push_back(vv.kind == VKind::IntT ? int_t_vertex(tmap[vv.idx]) : vv);
        }
      }
      auto [cg, s] = canonicalize(kept);
      if (s == 0) continue;
      out.add(cg, v * s * usign * -1);
    }
  }
}

}  // namespace

GraphSum differential(const ColoredGraph& g, const ComplexKind& kind) {
  if (g.order.type == OrderDatum::Type::Lie) {
    throw std::invalid_argument("differential acts on order-basis graphs; expand first");
  }
  GraphSum raw;
  CoefficientFunctional mu = mu_functional(kind.params);
  contraction_terms(g, mu, /*to_terrestrial=*/false, raw);
  if (kind.colored) {
    contraction_terms(g, kind.coef, /*to_terrestrial=*/true, raw);
    deletion_terms(g, kind.coef, /*to_terrestrial=*/true, raw);
  } else {
    deletion_terms(g, mu, /*to_terrestrial=*/false, raw);
  }
  GraphSum out;
  for (const auto& [k, tc] : raw.terms) {
    (void)k;
    if (passes_profile(tc.first, kind.profile)) out.add(tc.first, tc.second);
  }
  return out;
}

GraphSum differential(const GraphSum& x, const ComplexKind& kind) {
  GraphSum out;
  for (const auto& [k, tc] : x.terms) {
    (void)k;
    out.add_sum(differential(tc.first, kind), tc.second);
  }
  return out;
}

GraphSum homotopy_k_plus_one(const ColoredGraph& g0, const ComplexKind& kind) {
  auto [g, sgn] = canonicalize(g0);
  GraphSum out;
  if (sgn == 0) return out;
  bool aerial_case = g.n_ext_a() == 1 && g.n_ext_t() == 0;
  bool terr_case = g.n_ext_t() == 1 && g.n_ext_a() == 0;
  if (!aerial_case && !terr_case)
    throw std::invalid_argument("homotopy needs a single-external-vertex signature");

  ColoredGraph h = g;
  if (aerial_case) {
    VertexId old = ext_a(0);
    VertexId internalized = int_a_vertex(h.int_a);
    h.int_a++;
    for (auto& e : h.edges) {
      if (e.a == old) e.a = internalized;
      if (e.b == old) e.b = internalized;
    }
    if (h.params.aerial_vertices_ordered())
      h.carriers.push_back(Carrier::of_vertex(internalized));
    int newe = (int)h.edges.size();
    h.edges.push_back({old, internalized, EKind::Full});
    if (h.params.full_edges_ordered()) h.carriers.push_back(Carrier::of_edge(newe));
  } else if (g.params.m >= 2) {
    VertexId old = ext_t(0);
    VertexId internalized = int_t_vertex(h.int_t);
    h.int_t++;
    for (auto& e : h.edges) {
      if (e.a == old) e.a = internalized;
      if (e.b == old) e.b = internalized;
    }
    if (h.params.terr_vertices_ordered())
      h.carriers.push_back(Carrier::of_vertex(internalized));
    int newe = (int)h.edges.size();
    h.edges.push_back({old, internalized, EKind::Dashed});
    if (h.params.dashed_edges_ordered()) h.carriers.push_back(Carrier::of_edge(newe));
  } else {
    // m = 1: the fresh external sits immediately before the internalized one
    VertexId old = ext_t(0);
    VertexId internalized = int_t_vertex(h.int_t);
    h.int_t++;
    for (auto& e : h.edges) {
      if (e.a == old) e.a = internalized;
      if (e.b == old) e.b = internalized;
    }
    h.carriers.push_back(Carrier::of_vertex(internalized));
    for (auto& v : h.order.seq)
      if (v == old) v = internalized;
    auto it = std::find(h.order.seq.begin(), h.order.seq.end(), internalized);
    h.order.seq.insert(it, old);
  }
  GraphSum raw;
  raw.add_canonicalized(h, sgn);
  for (const auto& [k, tc] : raw.terms) {
    (void)k;
    if (passes_profile(tc.first, kind.profile)) out.add(tc.first, tc.second);
  }
  return out;
}

SplitResult split_membership(const ColoredGraph& g0, SplitLemma lemma) {
  auto [g, s] = canonicalize(g0);
  (void)s;
  if (lemma == SplitLemma::AerialGrowth) {
    if (g.n_ext_a() == 0) throw std::invalid_argument("split: no external aerial vertex");
    VertexId last = ext_a(g.n_ext_a() - 1);
    auto inc = g.incident_edges(last);
    if (inc.size() >= 2) return {SplitBucket::V, -1};
    if (inc.size() != 1) return {SplitBucket::Wp, -1};
    VertexId o = g.edges[inc[0]].other(last);
    if (o.external()) return {SplitBucket::U, o.kind == VKind::ExtA ? o.idx : -1};
    if (o.kind == VKind::IntA) return {SplitBucket::Vp, -1};
    // internal terrestrial neighbor
    if (g.params.m >= 2) {
      auto oinc = g.incident_edges(o);
      if (oinc.size() == 2) {
        int other_edge = oinc[0] == inc[0] ? oinc[1] : oinc[0];
        if (g.edges[other_edge].kind == EKind::Dashed) return {SplitBucket::W, -1};
      }
      return {SplitBucket::Wp, -1};
    }
    if (g.valence(o) == 1) return {SplitBucket::W, -1};
    return {SplitBucket::Wp, -1};
  }

  // terrestrial growth and the ideal use the same splitting
  if (g.n_ext_t() == 0) throw std::invalid_argument("split: no external terrestrial vertex");
  VertexId last = ext_t(g.n_ext_t() - 1);
  if (g.params.m >= 2) {
    auto inc = g.incident_edges(last);
    if (inc.size() == 1 && g.edges[inc[0]].kind == EKind::Dashed) {
      VertexId o = g.edges[inc[0]].other(last);
      if (o.external()) return {SplitBucket::U, o.kind == VKind::ExtT ? o.idx : -1};
      return {SplitBucket::V, -1};
    }
    return {SplitBucket::W, -1};
  }
  // m = 1: isolated and (not) order-adjacent to an internal terrestrial
  if (g.valence(last) == 0) {
    auto& seq = g.order.seq;
    int p = -1;
    for (int i = 0; i < (int)seq.size(); i++)
      if (seq[i] == last) p = i;
    bool adj_int = (p > 0 && seq[p - 1].kind == VKind::IntT) ||
                   (p + 1 < (int)seq.size() && seq[p + 1].kind == VKind::IntT);
    if (!adj_int) {
      int attach = -1;
      if (p > 0 && seq[p - 1].kind == VKind::ExtT) attach = seq[p - 1].idx;
      return {SplitBucket::U, attach};
    }
    return {SplitBucket::V, -1};
  }
  return {SplitBucket::W, -1};
}

}  // namespace vgc
