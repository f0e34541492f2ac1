#include "vgc/cooperad.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vgc {

void TensorPairSum::add(const ColoredGraph& l, const ColoredGraph& r, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(l.encode(), r.encode());
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, std::make_tuple(l, r, c));
  } else {
    std::get<2>(it->second) += c;
    if (std::get<2>(it->second) == 0) terms.erase(it);
  }
}

namespace {

std::vector<std::string> star_labels(const std::vector<std::string>& labels,
                                     const std::vector<int>& removed) {
  std::vector<std::string> out;
  for (int i = 0; i < (int)labels.size(); i++)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      out.push_back(labels[i]);
  out.push_back("*");
  return out;
}

struct CocompCtx {
  const ColoredGraph& g;
  bool mixed;  // star terrestrial (mixed) vs aerial
  std::vector<int> W, T;

  std::vector<VertexId> sub_ext;   // external vertices moving right
  std::vector<VertexId> int_pool;  // internal vertices allowed to move right

  TensorPairSum out;
  const ConstraintProfile* lprof;
  const ConstraintProfile* rprof;

  void emit(const std::vector<VertexId>& sub_int, const std::vector<int>& in_sub_edges) {
    // subgraph vertex set
    std::vector<VertexId> S = sub_ext;
    S.insert(S.end(), sub_int.begin(), sub_int.end());
    std::sort(S.begin(), S.end());
    auto in_S = [&](VertexId v) {
      return std::binary_search(S.begin(), S.end(), v);
    };

    int usign = unshuffle_back_sign(g, in_sub_edges, sub_int);

    // ---- right factor ----
    ColoredGraph r;
    r.params = g.params;
    std::map<VertexId, VertexId> rmap;
    for (int u : W) {
      rmap[ext_t(u)] = ext_t((int)r.ext_t_labels.size());
      r.ext_t_labels.push_back(g.ext_t_labels[u]);
    }
    for (int t : T) {
      rmap[ext_a(t)] = ext_a((int)r.ext_a_labels.size());
      r.ext_a_labels.push_back(g.ext_a_labels[t]);
    }
    for (auto v : sub_int) {
      if (v.kind == VKind::IntT)
        rmap[v] = int_t_vertex(r.int_t++);
      else
        rmap[v] = int_a_vertex(r.int_a++);
    }
    std::map<int, int> redge;
    for (int ei : in_sub_edges) {
      const Edge& e = g.edges[ei];
      redge[ei] = (int)r.edges.size();
      r.edges.push_back({rmap[e.a], rmap[e.b], e.kind});
    }
    for (const auto& c : g.carriers) {
      if (c.is_edge) {
        auto it = redge.find(c.edge);
        if (it != redge.end()) r.carriers.push_back(Carrier::of_edge(it->second));
      } else {
        auto it = rmap.find(c.v);
        if (it != rmap.end() && it->second.internal())
          r.carriers.push_back(Carrier::of_vertex(it->second));
      }
    }

    // ---- left factor (quotient) ----
    ColoredGraph l;
    l.params = g.params;
    l.ext_t_labels = mixed ? star_labels(g.ext_t_labels, W) : g.ext_t_labels;
    if (!mixed) {
      l.ext_a_labels = star_labels(g.ext_a_labels, T);
    } else {
      for (int i = 0; i < (int)g.ext_a_labels.size(); i++)
        if (std::find(T.begin(), T.end(), i) == T.end())
          l.ext_a_labels.push_back(g.ext_a_labels[i]);
    }
    VertexId star = mixed ? ext_t((int)l.ext_t_labels.size() - 1)
                          : ext_a((int)l.ext_a_labels.size() - 1);

    std::map<VertexId, VertexId> lmap;
    {
      int c = 0;
      for (int i = 0; i < g.n_ext_t(); i++) {
        if (mixed && std::find(W.begin(), W.end(), i) != W.end()) continue;
        lmap[ext_t(i)] = ext_t(c++);
      }
      c = 0;
      for (int i = 0; i < g.n_ext_a(); i++) {
        if (std::find(T.begin(), T.end(), i) != T.end()) continue;
        lmap[ext_a(i)] = ext_a(c++);
      }
      int nt = 0, na = 0;
      for (int i = 0; i < g.int_t; i++)
        if (!in_S(int_t_vertex(i))) lmap[int_t_vertex(i)] = int_t_vertex(nt++);
      for (int i = 0; i < g.int_a; i++)
        if (!in_S(int_a_vertex(i))) lmap[int_a_vertex(i)] = int_a_vertex(na++);
      l.int_t = nt;
      l.int_a = na;
    }
    auto lend = [&](VertexId v) -> VertexId {
      if (in_S(v)) return star;
      return lmap[v];
    };
    std::map<int, int> ledge;
    std::vector<int> in_sub_sorted = in_sub_edges;
    std::sort(in_sub_sorted.begin(), in_sub_sorted.end());
    for (int ei = 0; ei < (int)g.edges.size(); ei++) {
      if (std::binary_search(in_sub_sorted.begin(), in_sub_sorted.end(), ei)) continue;
      const Edge& e = g.edges[ei];
      if (mixed) {
        // generator table: a crossing edge whose subgraph-side endpoint is
        // aerial contributes zero to the terrestrial collapse
        bool a_in = in_S(e.a), b_in = in_S(e.b);
        if (a_in != b_in) {
          VertexId inside = a_in ? e.a : e.b;
          if (inside.aerial()) return;
        }
      }
      Edge le{lend(e.a), lend(e.b), e.kind};
      if (le.kind == EKind::Dashed && (!le.a.terrestrial() || !le.b.terrestrial()))
        return;  // dashed edge cannot land on an aerial star
      ledge[ei] = (int)l.edges.size();
      l.edges.push_back(le);
    }
    for (const auto& c : g.carriers) {
      if (c.is_edge) {
        auto it = ledge.find(c.edge);
        if (it != ledge.end()) l.carriers.push_back(Carrier::of_edge(it->second));
      } else {
        if (in_S(c.v)) continue;
        l.carriers.push_back(Carrier::of_vertex(lmap[c.v]));
      }
    }

    // ---- m = 1 orders ----
    std::vector<std::pair<ColoredGraph, int>> lefts;
    if (g.params.m == 1 && g.order.type == OrderDatum::Type::Order) {
      // right factor: induced order
      r.order.type = OrderDatum::Type::Order;
      std::vector<int> pos;
      for (int p = 0; p < (int)g.order.seq.size(); p++) {
        VertexId v = g.order.seq[p];
        if (in_S(v)) {
          pos.push_back(p);
          r.order.seq.push_back(rmap[v]);
        }
      }
      for (size_t q = 1; q < pos.size(); q++)
        if (pos[q] != pos[q - 1] + 1) return;  // non-consecutive block

      l.order.type = OrderDatum::Type::Order;
      if (mixed) {
        if (!pos.empty()) {
          bool placed = false;
          for (int p = 0; p < (int)g.order.seq.size(); p++) {
            VertexId v = g.order.seq[p];
            if (in_S(v)) {
              if (!placed) {
                l.order.seq.push_back(star);
                placed = true;
              }
            } else {
              l.order.seq.push_back(lmap[v]);
            }
          }
          lefts.push_back({l, 1});
        } else {
          // empty terrestrial block: star in every position, Koszul sign per
          // odd terrestrial vertex jumped over
          std::vector<VertexId> base;
          for (auto v : g.order.seq) base.push_back(lmap[v]);
          for (int p = 0; p <= (int)base.size(); p++) {
            int psign = 1;
            for (int q = 0; q < p; q++)
              if (base[q].kind == VKind::IntT) psign = -psign;
            ColoredGraph lc = l;
            lc.order.seq = base;
            lc.order.seq.insert(lc.order.seq.begin() + p, star);
            lefts.push_back({lc, psign});
          }
        }
      } else {
        // aerial star: terrestrial order untouched
        for (auto v : g.order.seq) l.order.seq.push_back(lmap[v]);
        lefts.push_back({l, 1});
      }
    } else {
      lefts.push_back({l, 1});
    }

    auto [rc, rs] = canonicalize(r);
    if (rs == 0) return;
    if (rprof && !passes_profile(rc, *rprof)) return;
    for (auto& [lg, psign] : lefts) {
      auto [lcan, ls] = canonicalize(lg);
      if (ls == 0) continue;
      if (lprof && !passes_profile(lcan, *lprof)) continue;
      out.add(lcan, rc, Rational(usign) * rs * ls * psign);
    }
  }

  void run() {
    // distribute internal vertices
    int np = (int)int_pool.size();
    if (np > 20) throw std::logic_error("cocompose: too many internal vertices");
    for (int vmask = 0; vmask < (1 << np); vmask++) {
      std::vector<VertexId> sub_int;
      for (int b = 0; b < np; b++)
        if (vmask >> b & 1) sub_int.push_back(int_pool[b]);

      std::vector<VertexId> S = sub_ext;
      S.insert(S.end(), sub_int.begin(), sub_int.end());
      std::sort(S.begin(), S.end());
      auto in_S = [&](VertexId v) { return std::binary_search(S.begin(), S.end(), v); };

      std::vector<int> inside;
      for (int ei = 0; ei < (int)g.edges.size(); ei++)
        if (in_S(g.edges[ei].a) && in_S(g.edges[ei].b)) inside.push_back(ei);
      int ni = (int)inside.size();
      if (ni > 20) throw std::logic_error("cocompose: too many inside edges");
      for (int emask = 0; emask < (1 << ni); emask++) {
        std::vector<int> in_sub;
        for (int b = 0; b < ni; b++)
          if (emask >> b & 1) in_sub.push_back(inside[b]);
        emit(sub_int, in_sub);
      }
    }
  }
};

}  // namespace

TensorPairSum cocompose_graphs_aerial(const ColoredGraph& g0, const std::vector<int>& T,
                                      const ConstraintProfile* lp,
                                      const ConstraintProfile* rp) {
  auto [g, s] = canonicalize(g0);
  TensorPairSum empty;
  if (s == 0) return empty;
  for (int t : T)
    if (t < 0 || t >= g.n_ext_a())
      throw std::invalid_argument("cocompose_graphs_aerial: invalid subset");

  CocompCtx ctx{g, /*mixed=*/false, {}, T, {}, {}, {}, lp, rp};
  for (int t : T) ctx.sub_ext.push_back(ext_a(t));
  for (int i = 0; i < g.int_a; i++) ctx.int_pool.push_back(int_a_vertex(i));
  // the aerial right factor cannot hold terrestrial internal vertices
  ctx.run();
  if (s < 0) {
    TensorPairSum flipped;
    for (auto& [k, t3] : ctx.out.terms)
      flipped.add(std::get<0>(t3), std::get<1>(t3), -std::get<2>(t3));
    return flipped;
  }
  return ctx.out;
}

TensorPairSum cocompose_graphs_mixed(const ColoredGraph& g0, const std::vector<int>& W,
                                     const std::vector<int>& T,
                                     const ConstraintProfile* lp,
                                     const ConstraintProfile* rp) {
  auto [g, s] = canonicalize(g0);
  TensorPairSum empty;
  if (s == 0) return empty;
  for (int u : W)
    if (u < 0 || u >= g.n_ext_t())
      throw std::invalid_argument("cocompose_graphs_mixed: invalid W");
  for (int t : T)
    if (t < 0 || t >= g.n_ext_a())
      throw std::invalid_argument("cocompose_graphs_mixed: invalid T");

  CocompCtx ctx{g, /*mixed=*/true, W, T, {}, {}, {}, lp, rp};
  for (int u : W) ctx.sub_ext.push_back(ext_t(u));
  for (int t : T) ctx.sub_ext.push_back(ext_a(t));
  for (int i = 0; i < g.int_t; i++) ctx.int_pool.push_back(int_t_vertex(i));
  for (int i = 0; i < g.int_a; i++) ctx.int_pool.push_back(int_a_vertex(i));
  ctx.run();
  if (s < 0) {
    TensorPairSum flipped;
    for (auto& [k, t3] : ctx.out.terms)
      flipped.add(std::get<0>(t3), std::get<1>(t3), -std::get<2>(t3));
    return flipped;
  }
  return ctx.out;
}

}  // namespace vgc
