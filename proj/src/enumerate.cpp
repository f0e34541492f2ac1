#include "vgc/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vgc {

Signature make_signature(Params p, int k, int l) {
  Signature s;
  s.params = p;
  for (int i = 1; i <= k; i++) s.ext_t.push_back(std::to_string(i));
  for (int i = 1; i <= l; i++) s.ext_a.push_back(std::to_string(i));
  return s;
}

std::vector<LieWord> lie_word_basis(const std::vector<VertexId>& letters) {
  std::vector<LieWord> out;
  if (letters.empty()) return out;
  auto sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> rest(sorted.begin() + 1, sorted.end());
  do {
    LieWord w;
    w.letters.push_back(sorted[0]);
    for (auto v : rest) w.letters.push_back(v);
    out.push_back(w);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

namespace {

void forests_rec(const std::vector<VertexId>& remaining, std::vector<LieWord>& acc,
                 std::vector<std::vector<LieWord>>& out) {
  if (remaining.empty()) {
    out.push_back(acc);
    return;
  }
  VertexId anchor = remaining[0];
  std::vector<VertexId> others(remaining.begin() + 1, remaining.end());
  int no = (int)others.size();
  for (int mask = 0; mask < (1 << no); mask++) {
    std::vector<VertexId> block{anchor}, rest;
    for (int i = 0; i < no; i++)
      (mask >> i & 1 ? block : rest).push_back(others[i]);
    for (const auto& w : lie_word_basis(block)) {
      acc.push_back(w);
      forests_rec(rest, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<LieWord>> lie_forests(const std::vector<VertexId>& letters) {
  std::vector<std::vector<LieWord>> out;
  std::vector<LieWord> acc;
  auto sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  forests_rec(sorted, acc, out);
  return out;
}

namespace {

struct Slot {
  VertexId a, b;
  EKind kind;
  int cap;
  int deg;
};

struct Enumerator {
  Signature sig;
  std::pair<int, int> window;
  ConstraintProfile profile;
  BasisFlavor flavor;
  int nt, na;  // internal counts

  std::vector<Slot> slots;
  std::vector<int> mult;
  std::vector<std::vector<VertexId>> finished_after;
  std::set<std::string>* seen = nullptr;
  std::vector<ColoredGraph>* out = nullptr;

  ColoredGraph proto() const {
    ColoredGraph g;
    g.params = sig.params;
    g.ext_t_labels = sig.ext_t;
    g.ext_a_labels = sig.ext_a;
    g.int_t = nt;
    g.int_a = na;
    return g;
  }

  void build_slots() {
    ColoredGraph g = proto();
    auto vs = g.all_vertices();
    int base = -sig.params.n * na - sig.params.m * nt;
    for (size_t i = 0; i < vs.size(); i++) {
      for (size_t j = i; j < vs.size(); j++) {
        bool tad = i == j;
        if (tad && !profile.allow_tadpoles) continue;
        bool dead_full = profile.forbid_full_terr_terr && vs[i].terrestrial() &&
                         vs[j].terrestrial();
        if (profile.aerial_only && (vs[i].terrestrial() || vs[j].terrestrial()))
          dead_full = true;
        if (!dead_full && !(tad && sig.params.full_edges_directed())) {
          int cap = 1;
          if (profile.allow_double_edges && !tad &&
              !edge_ordered(sig.params, EKind::Full))
            cap = std::max(0, (window.second - base) / (sig.params.n - 1));
          slots.push_back({vs[i], vs[j], EKind::Full, cap, sig.params.n - 1});
        }
        if (sig.params.m >= 2 && vs[i].terrestrial() && vs[j].terrestrial() &&
            !(tad && sig.params.dashed_edges_directed())) {
          int cap = 1;
          if (profile.allow_double_edges && !tad &&
              !edge_ordered(sig.params, EKind::Dashed))
            cap = std::max(0, (window.second - base) / (sig.params.m - 1));
          slots.push_back({vs[i], vs[j], EKind::Dashed, cap, sig.params.m - 1});
        }
      }
    }
    finished_after.assign(slots.size() + 1, {});
    for (auto v : vs) {
      if (!v.internal()) continue;
      int last = -1;
      for (int s = 0; s < (int)slots.size(); s++)
        if (slots[s].a == v || slots[s].b == v) last = s;
      finished_after[last + 1].push_back(v);
    }
  }

  int valence_so_far(VertexId v, int upto) const {
    int c = 0;
    for (int s = 0; s < upto; s++) {
      if (!mult[s]) continue;
      if (slots[s].a == v) c += mult[s];
      if (slots[s].b == v) c += mult[s];
    }
    return c;
  }

  bool vertex_ok_final(VertexId v, int upto) const {
    int val = valence_so_far(v, upto);
    if (v.kind == VKind::IntA && val < profile.min_valence_internal_aerial) return false;
    if (v.internal() && val == 0 &&
        (profile.forbid_internal_components &&
         (sig.params.m >= 2 || v.kind == VKind::IntA)))
      return false;
    if (v.internal() && val == 0 && profile.connectivity == Connectivity::Connected &&
        proto().n_vertices() > 1)
      return false;
    return true;
  }

  void finish(ColoredGraph& h) {
    {
      ColoredGraph pre = h;
      std::sort(pre.edges.begin(), pre.edges.end());
      pre.carriers = canonical_carriers(pre);
      if (!passes_profile(pre, profile)) return;
    }
    auto [cg, sgn] = canonicalize(h);
    if (sgn == 0) return;
    int d = degree(cg);
    if (d < window.first || d > window.second) return;
    if (seen->insert(cg.encode()).second) out->push_back(cg);
  }

  void emit() {
    ColoredGraph g = proto();
    for (int s = 0; s < (int)slots.size(); s++)
      for (int c = 0; c < mult[s]; c++)
        g.edges.push_back({slots[s].a, slots[s].b, slots[s].kind});
    g.carriers = canonical_carriers(g);

    if (sig.params.m != 1) {
      finish(g);
      return;
    }
    auto terr = g.terrestrial_vertices();
    if (flavor == BasisFlavor::Plain) {
      std::sort(terr.begin(), terr.end());
      if (terr.empty()) {
        ColoredGraph h = g;
        h.order.type = OrderDatum::Type::Order;
        finish(h);
        return;
      }
      do {
        ColoredGraph h = g;
        h.order.type = OrderDatum::Type::Order;
        h.order.seq = terr;
        finish(h);
      } while (std::next_permutation(terr.begin(), terr.end()));
    } else {
      for (const auto& f : lie_forests(terr)) {
        ColoredGraph h = g;
        h.order.type = OrderDatum::Type::Lie;
        h.order.words = f;
        finish(h);
      }
      if (terr.empty()) {
        ColoredGraph h = g;
        h.order.type = OrderDatum::Type::Lie;
        finish(h);
      }
    }
  }

  // internal vertices are interchangeable: only keep labelings where the
  // first use of index q precedes the first use of q+1 (sound, since every
  // isomorphism class has such a labeling and leaves are canonicalized)
  bool first_use_ok(int s) const {
    for (VertexId v : {slots[s].a, slots[s].b}) {
      if (!v.internal() || v.idx == 0) continue;
      VertexId prev =
          v.kind == VKind::IntT ? int_t_vertex(v.idx - 1) : int_a_vertex(v.idx - 1);
      if (valence_so_far(v, s) > 0) continue;  // not a first use
      bool prev_used = valence_so_far(prev, s) > 0 || slots[s].a == prev ||
                       slots[s].b == prev;
      if (!prev_used) return false;
    }
    return true;
  }

  void rec(int s, int deg) {
    if (deg > window.second) return;
    for (auto v : finished_after[s])
      if (!vertex_ok_final(v, s)) return;
    if (s == (int)slots.size()) {
      emit();
      return;
    }
    for (int c = 0; c <= slots[s].cap; c++) {
      if (deg + c * slots[s].deg > window.second) break;
      if (c > 0 && !first_use_ok(s)) break;
      mult[s] = c;
      rec(s + 1, deg + c * slots[s].deg);
    }
    mult[s] = 0;
  }

  void run(std::set<std::string>& seen_, std::vector<ColoredGraph>& out_) {
    seen = &seen_;
    out = &out_;
    build_slots();
    mult.assign(slots.size(), 0);
    rec(0, -sig.params.n * na - sig.params.m * nt);
  }
};

}  // namespace

std::pair<int, int> natural_window(const Signature& sig, const ConstraintProfile& p) {
  if (p.allow_double_edges &&
      (!edge_ordered(sig.params, EKind::Full) ||
       (sig.params.m >= 2 && !edge_ordered(sig.params, EKind::Dashed))))
    throw std::invalid_argument("natural_window: unbounded multiplicities, pass a window");
  int N = p.max_internal_total;
  int lo = -(sig.params.n + sig.params.m) * N;
  int nv = (int)sig.ext_t.size() + (int)sig.ext_a.size() + N;
  long pairs = (long)nv * (nv + 1) / 2;
  long hi = pairs * (sig.params.n - 1);
  if (sig.params.m >= 2) hi += pairs * (sig.params.m - 1);
  return {lo, (int)std::min<long>(hi, 1 << 16)};
}

std::vector<ColoredGraph> enumerate_basis(const Signature& sig,
                                          std::pair<int, int> window,
                                          const ConstraintProfile& profile,
                                          BasisFlavor flavor) {
  if (window.first > window.second)
    throw std::invalid_argument("enumerate_basis: empty window");
  int N = profile.max_internal_total;
  if (N < 0) throw std::invalid_argument("enumerate_basis: truncation must be finite");
  if (profile.no_external_vertices && !(sig.ext_t.empty() && sig.ext_a.empty()))
    throw std::invalid_argument("enumerate_basis: profile forbids external vertices");

  std::set<std::string> seen;
  std::vector<ColoredGraph> out;
  for (int i = 0; i <= N; i++) {
    if (i > 0 && profile.aerial_only) continue;
    for (int j = 0; i + j <= N; j++) {
      Enumerator e;
      e.sig = sig;
      e.window = window;
      e.profile = profile;
      e.flavor = flavor;
      e.nt = i;
      e.na = j;
      e.run(seen, out);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ColoredGraph& a, const ColoredGraph& b) { return a.encode() < b.encode(); });
  return out;
}

}  // namespace vgc
