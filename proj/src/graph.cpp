#include "vgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vgc {

bool edge_ordered(const Params& p, EKind k) {
  return k == EKind::Full ? p.full_edges_ordered() : p.dashed_edges_ordered();
}

bool edge_directed(const Params& p, EKind k) {
  return k == EKind::Full ? p.full_edges_directed() : p.dashed_edges_directed();
}

int ColoredGraph::n_full() const {
  int c = 0;
  for (const auto& e : edges) c += e.kind == EKind::Full;
  return c;
}

int ColoredGraph::n_dashed() const {
  int c = 0;
  for (const auto& e : edges) c += e.kind == EKind::Dashed;
  return c;
}

bool ColoredGraph::vertex_exists(VertexId v) const {
  switch (v.kind) {
    case VKind::ExtT: return v.idx >= 0 && v.idx < n_ext_t();
    case VKind::ExtA: return v.idx >= 0 && v.idx < n_ext_a();
    case VKind::IntT: return v.idx >= 0 && v.idx < int_t;
    case VKind::IntA: return v.idx >= 0 && v.idx < int_a;
  }
  return false;
}

std::vector<VertexId> ColoredGraph::all_vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(n_vertices());
  for (int i = 0; i < n_ext_t(); i++) vs.push_back(ext_t(i));
  for (int i = 0; i < n_ext_a(); i++) vs.push_back(ext_a(i));
  for (int i = 0; i < int_t; i++) vs.push_back(int_t_vertex(i));
  for (int i = 0; i < int_a; i++) vs.push_back(int_a_vertex(i));
  return vs;
}

std::vector<VertexId> ColoredGraph::terrestrial_vertices() const {
  std::vector<VertexId> vs;
  for (int i = 0; i < n_ext_t(); i++) vs.push_back(ext_t(i));
  for (int i = 0; i < int_t; i++) vs.push_back(int_t_vertex(i));
  return vs;
}

int ColoredGraph::valence(VertexId v) const {
  int c = 0;
  for (const auto& e : edges) {
    if (e.a == v) c++;
    if (e.b == v) c++;
  }
  return c;
}

std::vector<int> ColoredGraph::incident_edges(VertexId v) const {
  std::vector<int> out;
  for (int i = 0; i < (int)edges.size(); i++)
    if (edges[i].touches(v)) out.push_back(i);
  return out;
}

bool ColoredGraph::same_signature(const ColoredGraph& o) const {
  return params == o.params && ext_t_labels == o.ext_t_labels &&
         ext_a_labels == o.ext_a_labels;
}

namespace {

void encode_vertex(std::string& s, VertexId v) {
  static const char kc[4] = {'u', 'v', 'x', 'y'};
  s += kc[(int)v.kind];
  s += std::to_string(v.idx);
}

}  // namespace

std::string ColoredGraph::encode() const {
  std::string s;
  s.reserve(64 + 8 * edges.size());
  s += 'P';
  s += std::to_string(params.m);
  s += ',';
  s += std::to_string(params.n);
  s += "|T";
  for (const auto& l : ext_t_labels) { s += l; s += ','; }
  s += "|A";
  for (const auto& l : ext_a_labels) { s += l; s += ','; }
  s += '|';
  s += std::to_string(int_t);
  s += ',';
  s += std::to_string(int_a);
  s += "|E";
  for (const auto& e : edges) {
    encode_vertex(s, e.a);
    s += e.kind == EKind::Full ? '-' : '~';
    encode_vertex(s, e.b);
    s += ';';
  }
  s += "|C";
  for (const auto& c : carriers) {
    if (c.is_edge) {
      s += 'e';
      s += std::to_string(c.edge);
    } else {
      encode_vertex(s, c.v);
    }
    s += ';';
  }
  if (order.type == OrderDatum::Type::Order) {
    s += "|O";
    for (auto v : order.seq) { encode_vertex(s, v); s += ';'; }
  } else if (order.type == OrderDatum::Type::Lie) {
    s += "|L";
    for (const auto& w : order.words) {
      s += '(';
      for (auto v : w.letters) { encode_vertex(s, v); s += ';'; }
      s += ')';
    }
  }
  return s;
}

ColoredGraph empty_graph(Params p, const std::vector<std::string>& ut,
                         const std::vector<std::string>& va) {
  ColoredGraph g;
  g.params = p;
  g.ext_t_labels = ut;
  g.ext_a_labels = va;
  if (p.m == 1) {
    g.order.type = OrderDatum::Type::Order;
    for (int i = 0; i < (int)ut.size(); i++) g.order.seq.push_back(ext_t(i));
  }
  return g;
}

std::vector<Carrier> canonical_carriers(const ColoredGraph& g) {
  std::vector<Carrier> cs;
  for (int i = 0; i < (int)g.edges.size(); i++)
    if (edge_ordered(g.params, g.edges[i].kind)) cs.push_back(Carrier::of_edge(i));
  if (g.params.terr_vertices_ordered()) {
    if (g.params.m == 1 && g.order.type == OrderDatum::Type::Order) {
      // the linear order orders the odd terrestrial vertices
      for (auto v : g.order.seq)
        if (v.kind == VKind::IntT) cs.push_back(Carrier::of_vertex(v));
    } else {
      for (int i = 0; i < g.int_t; i++) cs.push_back(Carrier::of_vertex(int_t_vertex(i)));
    }
  }
  if (g.params.aerial_vertices_ordered())
    for (int i = 0; i < g.int_a; i++) cs.push_back(Carrier::of_vertex(int_a_vertex(i)));
  return cs;
}

void validate(const ColoredGraph& g) {
  if (g.params.m < 1 || g.params.n < 2)
    throw std::invalid_argument("bad params");
  if (g.int_t < 0 || g.int_a < 0) throw std::invalid_argument("negative internal count");
  for (const auto& e : g.edges) {
    if (!g.vertex_exists(e.a) || !g.vertex_exists(e.b))
      throw std::invalid_argument("edge endpoint out of range");
    if (e.kind == EKind::Dashed) {
      if (g.params.m == 1) throw std::invalid_argument("dashed edge with m = 1");
      if (!e.a.terrestrial() || !e.b.terrestrial())
        throw std::invalid_argument("dashed edge must join terrestrial vertices");
    }
  }
  if (g.params.m == 1) {
    if (g.order.type == OrderDatum::Type::None)
      throw std::invalid_argument("m = 1 graph needs an order or Lie decoration");
    std::set<VertexId> seen;
    auto touch = [&](VertexId v) {
      if (!v.terrestrial() || !g.vertex_exists(v))
        throw std::invalid_argument("order datum references a bad vertex");
      if (!seen.insert(v).second)
        throw std::invalid_argument("order datum repeats a vertex");
    };
    if (g.order.type == OrderDatum::Type::Order) {
      for (auto v : g.order.seq) touch(v);
    } else {
      for (const auto& w : g.order.words) {
        if (w.letters.empty()) throw std::invalid_argument("empty Lie word");
        for (auto v : w.letters) touch(v);
        if (*std::min_element(w.letters.begin(), w.letters.end()) != w.letters[0])
          throw std::invalid_argument("Lie word not in minimal-first normal form");
      }
    }
    if ((int)seen.size() != g.n_ext_t() + g.int_t)
      throw std::invalid_argument("order datum must cover all terrestrial vertices");
  } else {
    if (g.order.type != OrderDatum::Type::None)
      throw std::invalid_argument("order datum only allowed for m = 1");
  }
}

namespace {

// parity of the permutation mapping position i -> pos[i]
int perm_sign(const std::vector<int>& pos) {
  int n = (int)pos.size();
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; i++) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = pos[j];
      len++;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string carrier_key(const Carrier& c) {
  std::string s = c.is_edge ? "e" + std::to_string(c.edge) : "";
  if (!c.is_edge) encode_vertex(s, c.v);
  return s;
}

}  // namespace

int normalize(ColoredGraph& g) {
  validate(g);
  int sign = 1;

  for (auto& e : g.edges) {
    bool dir = edge_directed(g.params, e.kind);
    if (e.tadpole()) {
      if (dir) return 0;
      continue;
    }
    if (e.b < e.a) {
      std::swap(e.a, e.b);
      if (dir) sign = -sign;
    }
  }

  // sort edges, remembering where each old index went
  int ne = (int)g.edges.size();
  std::vector<int> idx(ne);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return g.edges[i] < g.edges[j]; });
  std::vector<int> newpos(ne);
  for (int p = 0; p < ne; p++) newpos[idx[p]] = p;
  std::vector<Edge> sorted(ne);
  for (int p = 0; p < ne; p++) sorted[p] = g.edges[idx[p]];
  g.edges = std::move(sorted);
  for (auto& c : g.carriers)
    if (c.is_edge) c.edge = newpos[c.edge];

  // a repeated odd edge carrier kills the graph
  for (int i = 0; i + 1 < ne; i++)
    if (g.edges[i] == g.edges[i + 1] && edge_ordered(g.params, g.edges[i].kind))
      return 0;

  // carrier word -> canonical order
  auto canon = canonical_carriers(g);
  if (canon.size() != g.carriers.size())
    throw std::invalid_argument("orientation word has wrong carrier set");
  std::map<std::string, int> where;
  for (int i = 0; i < (int)canon.size(); i++) where[carrier_key(canon[i])] = i;
  std::vector<int> pos(g.carriers.size());
  for (int i = 0; i < (int)g.carriers.size(); i++) {
    auto it = where.find(carrier_key(g.carriers[i]));
    if (it == where.end())
      throw std::invalid_argument("orientation word has wrong carrier set");
    pos[i] = it->second;
    it->second = -1;
    where.erase(it);
  }
  sign *= perm_sign(pos);
  g.carriers = std::move(canon);

  if (g.order.type == OrderDatum::Type::Lie) {
    std::sort(g.order.words.begin(), g.order.words.end(),
              [](const LieWord& a, const LieWord& b) { return a.letters[0] < b.letters[0]; });
  }
  return sign;
}

namespace {

ColoredGraph relabeled(const ColoredGraph& g, const std::vector<int>& st,
                       const std::vector<int>& sa) {
  auto map_v = [&](VertexId v) -> VertexId {
    if (v.kind == VKind::IntT) return int_t_vertex(st[v.idx]);
    if (v.kind == VKind::IntA) return int_a_vertex(sa[v.idx]);
    return v;
  };
  ColoredGraph h = g;
  for (auto& e : h.edges) {
    e.a = map_v(e.a);
    e.b = map_v(e.b);
  }
  for (auto& c : h.carriers)
    if (!c.is_edge) c.v = map_v(c.v);
  if (h.order.type == OrderDatum::Type::Order)
    for (auto& v : h.order.seq) v = map_v(v);
  return h;
}

}  // namespace

std::pair<ColoredGraph, int> canonicalize(const ColoredGraph& g0) {
  ColoredGraph g = g0;
  int s0 = normalize(g);
  if (s0 == 0) return {g, 0};

  // Lie-decorated graphs are labeled objects; relabelings act non-monomially
  // through Jacobi, so no minimization is attempted here.
  if (g.order.type == OrderDatum::Type::Lie) return {g, s0};

  if (g.int_t <= 1 && g.int_a <= 1) return {g, s0};

  std::vector<int> st(g.int_t), sa(g.int_a);
  std::iota(st.begin(), st.end(), 0);
  std::iota(sa.begin(), sa.end(), 0);

  std::optional<std::string> best_key;
  ColoredGraph best;
  int best_sign = 0;
  bool killed = false;

  std::vector<int> st0 = st;
  do {
    std::vector<int> sa0 = sa;
    do {
      ColoredGraph h = relabeled(g, st0, sa0);
      int s = normalize(h);
      // local zero-detection is label-independent
      std::string key = h.encode();
      if (!best_key || key < *best_key) {
        best_key = key;
        best = h;
        best_sign = s;
      } else if (key == *best_key && s != best_sign) {
        killed = true;
      }
    } while (std::next_permutation(sa0.begin(), sa0.end()));
  } while (std::next_permutation(st0.begin(), st0.end()));

  if (killed) return {best, 0};
  return {best, s0 * best_sign};
}

int degree(const ColoredGraph& g) {
  return (g.params.n - 1) * g.n_full() + (g.params.m - 1) * g.n_dashed() -
         g.params.n * g.int_a - g.params.m * g.int_t;
}

int degree(const ColoredGraph& g, DegreeShift shift) {
  int d = degree(g);
  if (shift == DegreeShift::GC) d += g.params.n;
  if (shift == DegreeShift::VGC) d += g.params.m;
  return d;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int vertex_flat_index(const ColoredGraph& g, VertexId v) {
  switch (v.kind) {
    case VKind::ExtT: return v.idx;
    case VKind::ExtA: return g.n_ext_t() + v.idx;
    case VKind::IntT: return g.n_ext_t() + g.n_ext_a() + v.idx;
    case VKind::IntA: return g.n_ext_t() + g.n_ext_a() + g.int_t + v.idx;
  }
  return -1;
}

}  // namespace

std::vector<int> edge_components(const ColoredGraph& g, int* count) {
  int nv = g.n_vertices();
  UnionFind uf(nv);
  for (const auto& e : g.edges)
    uf.unite(vertex_flat_index(g, e.a), vertex_flat_index(g, e.b));
  std::vector<int> comp(nv, -1);
  int c = 0;
  for (int i = 0; i < nv; i++) {
    int r = uf.find(i);
    if (comp[r] < 0) comp[r] = c++;
    comp[i] = comp[r];
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const ColoredGraph& g) {
  if (g.n_vertices() == 0) return false;
  int c = 0;
  edge_components(g, &c);
  return c == 1;
}

bool has_internal_edge_component(const ColoredGraph& g) {
  int c = 0;
  auto comp = edge_components(g, &c);
  std::vector<bool> has_ext(c, false);
  auto vs = g.all_vertices();
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].external()) has_ext[comp[i]] = true;
  for (int i = 0; i < (int)vs.size(); i++)
    if (vs[i].internal() && !has_ext[comp[i]]) return true;
  return false;
}

int loop_order(const ColoredGraph& g) {
  int c = 0;
  edge_components(g, &c);
  return (int)g.edges.size() - g.n_vertices() + c;
}

void GraphSum::add(const ColoredGraph& g, const Rational& c) {
  if (c == 0) return;
  std::string key = g.encode();
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), std::make_pair(g, c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) terms.erase(it);
  }
}

void GraphSum::add_canonicalized(const ColoredGraph& g, const Rational& c) {
  auto [cg, s] = canonicalize(g);
  if (s == 0) return;
  add(cg, c * s);
}

void GraphSum::add_sum(const GraphSum& other, const Rational& scale) {
  for (const auto& [k, tc] : other.terms) add(tc.first, tc.second * scale);
}

int unshuffle_back_sign(const ColoredGraph& g, const std::vector<int>& removed_edges,
                        const std::vector<VertexId>& removed_vertices) {
  auto is_removed = [&](const Carrier& c) {
    if (c.is_edge)
      return std::find(removed_edges.begin(), removed_edges.end(), c.edge) !=
             removed_edges.end();
    return std::find(removed_vertices.begin(), removed_vertices.end(), c.v) !=
           removed_vertices.end();
  };
  // parity of moving all removed carriers past the kept ones to their right
  int sign = 1;
  int kept_after = 0;
  for (int i = (int)g.carriers.size() - 1; i >= 0; i--) {
    if (is_removed(g.carriers[i])) {
      if (kept_after % 2) sign = -sign;
    } else {
      kept_after++;
    }
  }
  return sign;
}

namespace {

// all interleavings of two sequences sharing their external entries; the
// shared subsequence must agree, internal entries of either side are merged
// in all compatible ways
void merge_orders(const std::vector<VertexId>& a, size_t ia, const std::vector<VertexId>& b,
                  size_t ib, std::vector<VertexId>& acc,
                  std::vector<std::vector<VertexId>>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(acc);
    return;
  }
  bool a_ext = ia < a.size() && a[ia].external();
  bool b_ext = ib < b.size() && b[ib].external();
  if (ia < a.size() && !a_ext) {
    acc.push_back(a[ia]);
    merge_orders(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size() && !b_ext) {
    acc.push_back(b[ib]);
    merge_orders(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
  if (a_ext && b_ext && a[ia] == b[ib]) {
    acc.push_back(a[ia]);
    merge_orders(a, ia + 1, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

GraphSum hopf_product(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (!g1.same_signature(g2))
    throw std::invalid_argument("hopf_product: signature mismatch");
  if (g1.params.m == 1 && g1.order.type != g2.order.type)
    throw std::invalid_argument("hopf_product: mixed order data");

  auto shift_v = [&](VertexId v) -> VertexId {
    if (v.kind == VKind::IntT) return int_t_vertex(v.idx + g1.int_t);
    if (v.kind == VKind::IntA) return int_a_vertex(v.idx + g1.int_a);
    return v;
  };

  ColoredGraph base = g1;
  base.int_t += g2.int_t;
  base.int_a += g2.int_a;
  int e1 = (int)g1.edges.size();
  for (const auto& e : g2.edges)
    base.edges.push_back({shift_v(e.a), shift_v(e.b), e.kind});
  for (const auto& c : g2.carriers) {
    Carrier cc = c;
    if (cc.is_edge)
      cc.edge += e1;
    else
      cc.v = shift_v(cc.v);
    base.carriers.push_back(cc);
  }

  GraphSum out;
  if (g1.params.m != 1) {
    base.order.type = OrderDatum::Type::None;
    out.add_canonicalized(base, 1);
    return out;
  }

  if (g1.order.type == OrderDatum::Type::Lie) {
    base.order.type = OrderDatum::Type::Lie;
    base.order.words = g1.order.words;
    for (const auto& w : g2.order.words) {
      LieWord sw;
      for (auto v : w.letters) sw.letters.push_back(shift_v(v));
      base.order.words.push_back(sw);
    }
    out.add_canonicalized(base, 1);
    return out;
  }

  std::vector<VertexId> o2;
  for (auto v : g2.order.seq) o2.push_back(shift_v(v));
  std::vector<std::vector<VertexId>> merged;
  std::vector<VertexId> acc;
  merge_orders(g1.order.seq, 0, o2, 0, acc, merged);
  for (auto& seq : merged) {
    base.order.type = OrderDatum::Type::Order;
    base.order.seq = seq;
    out.add_canonicalized(base, 1);
  }
  return out;
}

}  // namespace vgc
