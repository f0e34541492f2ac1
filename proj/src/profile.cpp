#include "vgc/profile.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace vgc {

ConstraintProfile ConstraintProfile::preset(const std::string& name) {
  ConstraintProfile p;
  if (name == "gra" || name == "tw") {
    return p;
  }
  if (name == "graphs") {
    p.aerial_only = true;
    p.allow_tadpoles = false;
    p.allow_double_edges = false;
    p.min_valence_internal_aerial = 3;
    p.forbid_internal_components = true;
    return p;
  }
  if (name == "vgraphs" || name == "vgraphs0") {
    p.allow_tadpoles = false;
    p.allow_double_edges = false;
    p.min_valence_internal_aerial = 2;  // univalent aerial internal killed
    p.forbid_univalent_terr_to_terr = true;
    p.forbid_bivalent_terr_two_dashed = true;
    p.forbid_full_terr_terr = true;
    p.forbid_internal_components = true;
    return p;
  }
  if (name == "gc") {
    p.aerial_only = true;
    p.allow_tadpoles = false;
    p.connectivity = Connectivity::Connected;
    p.no_external_vertices = true;
    return p;
  }
  if (name == "gc3") {
    p.aerial_only = true;
    p.allow_tadpoles = false;
    p.min_valence_internal_aerial = 3;
    p.connectivity = Connectivity::Connected;
    p.no_external_vertices = true;
    return p;
  }
  if (name == "vgc") {
    p.allow_tadpoles = false;
    p.allow_double_edges = false;
    p.min_valence_internal_aerial = 2;
    p.forbid_univalent_terr_to_terr = true;
    p.forbid_bivalent_terr_two_dashed = true;
    p.forbid_full_terr_terr = true;
    p.connectivity = Connectivity::Connected;
    p.no_external_vertices = true;
    return p;
  }
  if (name == "hgc") {
    p.aerial_only = true;
    p.allow_tadpoles = false;
    p.min_valence_internal_aerial = 3;
    p.connectivity = Connectivity::Connected;
    p.external_vertices_exactly_univalent = true;
    return p;
  }
  throw std::invalid_argument("unknown profile preset: " + name);
}

bool passes_profile(const ColoredGraph& g, const ConstraintProfile& p) {
  if (p.no_external_vertices && (g.n_ext_t() > 0 || g.n_ext_a() > 0)) return false;
  if (p.aerial_only && (g.n_ext_t() > 0 || g.int_t > 0 || g.n_dashed() > 0)) return false;

  if (!p.allow_tadpoles)
    for (const auto& e : g.edges)
      if (e.tadpole()) return false;

  if (p.forbid_full_terr_terr)
    for (const auto& e : g.edges)
      if (e.kind == EKind::Full && e.a.terrestrial() && e.b.terrestrial()) return false;

  if (!p.allow_double_edges)
    for (size_t i = 0; i + 1 < g.edges.size(); i++)
      if (g.edges[i] == g.edges[i + 1]) return false;  // edges sorted

  if (p.min_valence_internal_aerial > 0)
    for (int i = 0; i < g.int_a; i++)
      if (g.valence(int_a_vertex(i)) < p.min_valence_internal_aerial) return false;

  if (p.forbid_univalent_terr_to_terr) {
    for (int i = 0; i < g.int_t; i++) {
      VertexId v = int_t_vertex(i);
      auto inc = g.incident_edges(v);
      if (inc.size() == 1 && !g.edges[inc[0]].tadpole() &&
          g.edges[inc[0]].other(v).terrestrial())
        return false;
    }
  }

  if (p.forbid_bivalent_terr_two_dashed) {
    for (int i = 0; i < g.int_t; i++) {
      VertexId v = int_t_vertex(i);
      auto inc = g.incident_edges(v);
      if (inc.size() == 2 && g.edges[inc[0]].kind == EKind::Dashed &&
          g.edges[inc[1]].kind == EKind::Dashed && !g.edges[inc[0]].tadpole() &&
          !g.edges[inc[1]].tadpole())
        return false;
    }
  }

  if (p.external_vertices_exactly_univalent) {
    for (int i = 0; i < g.n_ext_t(); i++)
      if (g.valence(ext_t(i)) != 1) return false;
    for (int i = 0; i < g.n_ext_a(); i++)
      if (g.valence(ext_a(i)) != 1) return false;
  }

  if (p.connectivity == Connectivity::Connected && !is_connected(g)) return false;
  if (p.connectivity == Connectivity::LieConnected &&
      g.order.type == OrderDatum::Type::Lie && !is_lie_connected(g))
    return false;
  if (p.connectivity == Connectivity::InternallyConnected) {
    // generator shape of the free algebra: with no internal vertices, a
    // single edge; otherwise one internal-edge component covering every
    // internal vertex and no external-external edges
    if (g.int_t + g.int_a == 0) {
      if (g.edges.size() != 1) return false;
    } else {
      for (const auto& e : g.edges)
        if (e.a.external() && e.b.external()) return false;
      // connectivity of the internal-induced subgraph
      std::vector<int> parent(g.int_t + g.int_a);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      auto flat = [&](VertexId v) {
        return v.kind == VKind::IntT ? v.idx : g.int_t + v.idx;
      };
      for (const auto& e : g.edges)
        if (e.a.internal() && e.b.internal()) parent[find(flat(e.a))] = find(flat(e.b));
      int root = find(0);
      for (int i = 1; i < g.int_t + g.int_a; i++)
        if (find(i) != root) return false;
    }
  }

  if (p.forbid_internal_components) {
    if (g.order.type == OrderDatum::Type::Lie) {
      if (has_internal_lie_component(g)) return false;
    } else if (g.params.m != 1) {
      if (has_internal_edge_component(g)) return false;
    } else {
      // m = 1 order basis: components touching terrestrial vertices may be
      // joined through Lie words, so that part of the quotient lives at the
      // homology layer; purely aerial internal components die here
      if (has_pure_aerial_internal_component(g)) return false;
    }
  }

  if (p.loop_order && loop_order(g) != *p.loop_order) return false;
  return true;
}

std::optional<std::pair<ColoredGraph, int>> reduce(const ColoredGraph& g,
                                                   const ConstraintProfile& p) {
  auto [cg, s] = canonicalize(g);
  if (s == 0) return std::nullopt;
  if (!passes_profile(cg, p)) return std::nullopt;
  return std::make_pair(cg, s);
}

std::vector<int> lie_components(const ColoredGraph& g, int* count) {
  if (g.order.type != OrderDatum::Type::Lie)
    throw std::invalid_argument("lie_components requires a Lie decoration");
  int nv = g.n_vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  auto flat = [&](VertexId v) {
    int base = 0;
    switch (v.kind) {
      case VKind::ExtT: return v.idx;
      case VKind::ExtA: return g.n_ext_t() + v.idx;
      case VKind::IntT: return g.n_ext_t() + g.n_ext_a() + v.idx;
      case VKind::IntA: return g.n_ext_t() + g.n_ext_a() + g.int_t + v.idx;
    }
    return base;
  };

  for (const auto& e : g.edges)
    if (e.kind == EKind::Full) unite(flat(e.a), flat(e.b));
  for (const auto& w : g.order.words)
    for (size_t i = 1; i < w.letters.size(); i++)
      unite(flat(w.letters[0]), flat(w.letters[i]));

  std::vector<int> comp(nv, -1);
  int c = 0;
  for (int i = 0; i < nv; i++) {
    int r = find(i);
    if (comp[r] < 0) comp[r] = c++;
    comp[i] = comp[r];
  }
  if (count) *count = c;
  return comp;
}

bool is_lie_connected(const ColoredGraph& g) {
  if (g.n_vertices() == 0) return false;
  int c = 0;
  lie_components(g, &c);
  return c == 1;
}

bool has_pure_aerial_internal_component(const ColoredGraph& g) {
  int c = 0;
  auto comp = edge_components(g, &c);
  auto vs = g.all_vertices();
  std::vector<bool> ext_or_terr(c, false);
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].external() || vs[i].terrestrial()) ext_or_terr[comp[i]] = true;
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].internal() && !ext_or_terr[comp[i]]) return true;
  return false;
}

bool has_internal_lie_component(const ColoredGraph& g) {
  int c = 0;
  auto comp = lie_components(g, &c);
  std::vector<bool> has_ext(c, false);
  auto vs = g.all_vertices();
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].external()) has_ext[comp[i]] = true;
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].internal() && !has_ext[comp[i]]) return true;
  return false;
}

}  // namespace vgc
