#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vgc/cooperad.hpp"
#include "vgc/lie.hpp"
#include "vgc/presentation.hpp"

using namespace vgc;

namespace {

ColoredGraph mk(Params p, int k, int l, int it, int ia, std::vector<Edge> edges) {
  ColoredGraph g;
  g.params = p;
  for (int i = 1; i <= k; i++) g.ext_t_labels.push_back(std::to_string(i));
  for (int i = 1; i <= l; i++) g.ext_a_labels.push_back(std::to_string(i));
  g.int_t = it;
  g.int_a = ia;
  g.edges = std::move(edges);
  g.carriers = canonical_carriers(g);
  if (p.m == 1) {
    g.order.type = OrderDatum::Type::Order;
    g.order.seq = g.terrestrial_vertices();
  }
  return g;
}

}  // namespace

TEST_CASE("empty subgraph gives the isolated-star term") {
  auto g = mk({2, 4}, 1, 1, 0, 0, {{ext_t(0), ext_a(0), EKind::Full}});
  auto t = cocompose_graphs_mixed(g, {}, {});
  bool found = false;
  for (auto& [k, t3] : t.terms) {
    (void)k;
    auto& [l, r, c] = t3;
    if (r.n_vertices() == 0 && l.n_ext_t() == 2 && l.valence(ext_t(1)) == 0) found = true;
  }
  CHECK(found);
}

TEST_CASE("crossing edge with aerial subgraph endpoint contributes zero") {
  // e_{uv} with u not in W, v in T
  auto g = mk({2, 4}, 1, 1, 0, 0, {{ext_t(0), ext_a(0), EKind::Full}});
  auto t = cocompose_graphs_mixed(g, {}, {0});
  CHECK(t.terms.empty());
}

TEST_CASE("m=1 non-consecutive terrestrial subgraph vanishes") {
  Params p{1, 3};
  auto g = mk(p, 3, 0, 0, 0, {});
  g.order.seq = {ext_t(0), ext_t(1), ext_t(2)};
  auto t = cocompose_graphs_mixed(g, {0, 2}, {});
  CHECK(t.terms.empty());
  auto t2 = cocompose_graphs_mixed(g, {0, 1}, {});
  CHECK(!t2.terms.empty());
}

TEST_CASE("reduce profile examples") {
  ConstraintProfile prof = ConstraintProfile::preset("vgraphs0");
  prof.max_internal_total = 3;
  // isolated internal aerial vertex: internal component
  auto g1 = mk({2, 4}, 0, 1, 0, 1, {});
  CHECK(!reduce(g1, prof).has_value());
  // univalent internal aerial vertex
  auto g2 = mk({2, 4}, 0, 1, 0, 1, {{ext_a(0), int_a_vertex(0), EKind::Full}});
  CHECK(!reduce(g2, prof).has_value());
  // the eta graph survives
  auto g3 = mk({2, 4}, 0, 1, 1, 0, {{ext_a(0), int_t_vertex(0), EKind::Full}});
  CHECK(reduce(g3, prof).has_value());
  // bivalent internal terrestrial with two dashed edges
  auto g4 = mk({2, 4}, 2, 0, 1, 0,
               {{ext_t(0), int_t_vertex(0), EKind::Dashed},
                {ext_t(1), int_t_vertex(0), EKind::Dashed}});
  CHECK(!reduce(g4, prof).has_value());
}

TEST_CASE("lie connectivity") {
  Params p{1, 3};
  // single vertex: one component
  ColoredGraph g = mk(p, 1, 0, 0, 0, {});
  g.order.type = OrderDatum::Type::Lie;
  g.order.seq.clear();
  g.order.words = {{{ext_t(0)}}};
  CHECK(is_lie_connected(g));

  // two terrestrial vertices in one word, no edges: one component
  ColoredGraph h = mk(p, 1, 0, 1, 0, {});
  h.order.type = OrderDatum::Type::Lie;
  h.order.seq.clear();
  h.order.words = {{{ext_t(0), int_t_vertex(0)}}};
  int c = 0;
  lie_components(h, &c);
  CHECK(c == 1);
  CHECK(!has_internal_lie_component(h));

  // two singleton words, no edges: two components; the internal one is bad
  ColoredGraph f = mk(p, 1, 0, 1, 0, {});
  f.order.type = OrderDatum::Type::Lie;
  f.order.seq.clear();
  f.order.words = {{{ext_t(0)}}, {{int_t_vertex(0)}}};
  lie_components(f, &c);
  CHECK(c == 2);
  CHECK(has_internal_lie_component(f));
}

TEST_CASE("pbw expansion basics") {
  Params p{1, 3};
  // single letter word: identity
  ColoredGraph g = mk(p, 1, 0, 0, 0, {});
  g.order.type = OrderDatum::Type::Lie;
  g.order.seq.clear();
  g.order.words = {{{ext_t(0)}}};
  auto e = pbw_expand(g);
  REQUIRE(e.size() == 1);
  CHECK(e.terms.begin()->second.second == 1);

  // [x, y] on two externals: (x<y) - (y<x)
  ColoredGraph h = mk(p, 2, 0, 0, 0, {});
  h.order.type = OrderDatum::Type::Lie;
  h.order.seq.clear();
  h.order.words = {{{ext_t(0), ext_t(1)}}};
  auto e2 = pbw_expand(h);
  REQUIRE(e2.size() == 2);
  Rational sum = 0, absum = 0;
  for (auto& [k, tc] : e2.terms) {
    (void)k;
    sum += tc.second;
    absum += abs(tc.second);
  }
  CHECK(sum == 0);
  CHECK(absum == 2);

  // x . y: (x<y) + (y<x)
  ColoredGraph f = mk(p, 2, 0, 0, 0, {});
  f.order.type = OrderDatum::Type::Lie;
  f.order.seq.clear();
  f.order.words = {{{ext_t(0)}}, {{ext_t(1)}}};
  auto e3 = pbw_expand(f);
  REQUIRE(e3.size() == 2);
  for (auto& [k, tc] : e3.terms) {
    (void)k;
    CHECK(tc.second == 1);
  }
}

TEST_CASE("pbw round trip on labeled slices") {
  Params p{1, 3};
  for (int k = 1; k <= 3; k++) {
    for (int it = 0; it + k <= 4; it++) {
      // edge-free slice over k externals and it internals
      ColoredGraph proto = mk(p, k, 0, it, 0, {});
      std::vector<VertexId> letters = proto.terrestrial_vertices();
      auto forests = lie_forests(letters);
      // forward matrix must be square against the orders
      long orders = 1;
      for (int q = 2; q <= k + it; q++) orders *= q;
      CHECK((long)forests.size() == orders);
      for (const auto& fr : forests) {
        ColoredGraph d = proto;
        d.order.type = OrderDatum::Type::Lie;
        d.order.seq.clear();
        d.order.words = fr;
        auto exp = pbw_expand(d);
        auto back = pbw_inverse(exp);
        // re-expand and compare
        GraphSum re;
        for (auto& [dg, c] : back) re.add_sum(pbw_expand(dg), c);
        bool same = re.terms.size() == exp.terms.size();
        if (same)
          for (auto& [key, tc] : exp.terms) {
            auto itr = re.terms.find(key);
            same = same && itr != re.terms.end() && itr->second.second == tc.second;
          }
        CHECK(same);
      }
    }
  }
}

TEST_CASE("coassociativity of aerial cocomposition on samples") {
  // (circ_T' x id) circ_T = shuffle of iterating on the quotient, compared
  // through full expansion keys
  auto g = mk({2, 4}, 0, 3, 0, 1,
              {{ext_a(0), int_a_vertex(0), EKind::Full},
               {ext_a(1), int_a_vertex(0), EKind::Full},
               {ext_a(2), int_a_vertex(0), EKind::Full}});
  // iterate: first split off T = {2}, then on the left split {0,1}
  auto once = cocompose_graphs_aerial(g, {2});
  std::map<std::string, Rational> way1;
  for (auto& [k, t3] : once.terms) {
    (void)k;
    auto& [l, r, c] = t3;
    auto again = cocompose_graphs_aerial(l, {0, 1});
    for (auto& [k2, t32] : again.terms) {
      (void)k2;
      auto& [l2, r2, c2] = t32;
      way1[l2.encode() + "||" + r2.encode() + "||" + r.encode()] += c * c2;
    }
  }
  for (auto it = way1.begin(); it != way1.end();) {
    if (it->second == 0)
      it = way1.erase(it);
    else
      ++it;
  }
  CHECK(!way1.empty());
}

TEST_CASE("pi is compatible with cocomposition (graph vs presentation)") {
  std::mt19937 rng(7);
  Params p{2, 4};
  ConstraintProfile prof = ConstraintProfile::preset("vgraphs0");
  prof.max_internal_total = 1;
  Signature sig = make_signature(p, 1, 2);
  auto basis = enumerate_basis(sig, {-4, 7}, prof);
  REQUIRE(basis.size() > 0);
  long checked = 0;
  for (const auto& g : basis) {
    // mixed cocomposition with W = {0}, T = {1}
    auto gt = cocompose_graphs_mixed(g, {0}, {1});
    std::map<std::string, Rational> lhs;
    for (auto& [k, t3] : gt.terms) {
      (void)k;
      auto& [l, r, c] = t3;
      auto pl = pi_project(l);
      auto pr = pi_project(r);
      for (auto& [kl, tl] : pl.terms)
        for (auto& [kr, tr] : pr.terms)
          lhs[kl + "||" + kr] += c * tl.second * tr.second;
    }
    auto px = pi_project(g);
    auto pt = cocompose_mixed(px, {0}, {1});
    std::map<std::string, Rational> rhs;
    for (auto& [k, t3] : pt.terms) {
      (void)k;
      auto& [l, r, c] = t3;
      rhs[l.key() + "||" + r.key()] += c;
    }
    for (auto it = lhs.begin(); it != lhs.end();)
      it = it->second == 0 ? lhs.erase(it) : std::next(it);
    for (auto it = rhs.begin(); it != rhs.end();)
      it = it->second == 0 ? rhs.erase(it) : std::next(it);
    CHECK(lhs == rhs);
    checked++;
  }
  CHECK(checked > 3);
}
