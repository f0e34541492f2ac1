#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vgc/complexes.hpp"

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

long d_squared_failures(const ComplexKind& kind, const Signature& sig,
                        std::pair<int, int> window) {
  auto basis = enumerate_basis(sig, window, kind.profile);
  long bad = 0;
  for (const auto& g : basis) {
    GraphSum dd = differential(differential(g, kind), kind);
    if (!dd.zero()) {
      bad++;
      MESSAGE("d^2 != 0 on ", g.encode());
      for (auto& [k2, tc] : dd.terms)
        MESSAGE("  term ", tc.second.get_str(), " * ", k2);
    }
  }
  REQUIRE(basis.size() > 0);
  return bad;
}

}  // namespace

TEST_CASE("single full edge between externals is closed") {
  ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, {2, 4}, 3);
  auto g = mk({2, 4}, 0, 2, 0, 0, {{ext_a(0), ext_a(1), EKind::Full}});
  CHECK(differential(g, kind).zero());
}

TEST_CASE("eta graph is closed in vgraphs0") {
  for (Params p : {Params{2, 4}, Params{1, 3}}) {
    ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, p, 3);
    auto g = mk(p, 0, 1, 1, 0, {{ext_a(0), int_t_vertex(0), EKind::Full}});
    CHECK(differential(g, kind).zero());
  }
}

TEST_CASE("tripod differential is the three two-edge graphs") {
  ComplexKind kind = ComplexKind::make(ComplexTag::GraphsN, {1, 4}, 3);
  auto g = mk({1, 4}, 0, 3, 0, 1,
              {{ext_a(0), int_a_vertex(0), EKind::Full},
               {ext_a(1), int_a_vertex(0), EKind::Full},
               {ext_a(2), int_a_vertex(0), EKind::Full}});
  GraphSum dg = differential(g, kind);
  CHECK(dg.size() == 3);
  for (auto& [k, tc] : dg.terms) {
    (void)k;
    CHECK(tc.first.edges.size() == 2);
    CHECK((tc.second == 1 || tc.second == -1));
  }
}

TEST_CASE("univalent cancellation witnesses") {
  // u--z--w chain: contracting the univalent end cancels against the
  // deletion term; the external-side merge survives
  ComplexKind kind = ComplexKind::make(ComplexTag::TwColored, {2, 4}, 3);
  auto g = mk({2, 4}, 1, 0, 0, 2,
              {{ext_t(0), int_a_vertex(0), EKind::Full},
               {int_a_vertex(0), int_a_vertex(1), EKind::Full}});
  GraphSum dg = differential(g, kind);
  REQUIRE(dg.size() == 1);
  const auto& t = dg.terms.begin()->second.first;
  CHECK(t.int_a == 1);
  CHECK(t.edges.size() == 1);

  // isolated mu component contracts with a net minus in the uncolored tw
  ComplexKind gc = ComplexKind::make(ComplexTag::TwAerial, {1, 4}, 3);
  auto comp = mk({1, 4}, 0, 1, 0, 2,
                 {{int_a_vertex(0), int_a_vertex(1), EKind::Full}});
  GraphSum dc = differential(comp, gc);
  REQUIRE(dc.size() == 1);
  CHECK(dc.terms.begin()->second.second == -1);
  CHECK(dc.terms.begin()->second.first.int_a == 1);
}

TEST_CASE("d^2 = 0 on graphs_n") {
  for (int n : {2, 3, 4}) {
    for (int k : {1, 2, 3}) {
      ComplexKind kind = ComplexKind::make(ComplexTag::GraphsN, {1, n}, 3);
      Signature sig = make_signature({1, n}, 0, k);
      auto window = natural_window(sig, kind.profile);
      INFO("graphs_", n, "(", k, ")");
      CHECK(d_squared_failures(kind, sig, window) == 0);
    }
  }
}

TEST_CASE("d^2 = 0 on vgraphs0 (2,4)") {
  Params p{2, 4};
  for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}}) {
    ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, p, 2);
    Signature sig = make_signature(p, k, l);
    auto window = natural_window(sig, kind.profile);
    INFO("vgraphs0_24(", k, ",", l, ")");
    CHECK(d_squared_failures(kind, sig, window) == 0);
  }
}

TEST_CASE("d^2 = 0 on vgraphs0 (1,3)") {
  Params p{1, 3};
  for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}}) {
    ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, p, 2);
    Signature sig = make_signature(p, k, l);
    INFO("vgraphs0_13(", k, ",", l, ")");
    CHECK(d_squared_failures(kind, sig, {-8, 8}) == 0);
  }
}

TEST_CASE("d preserves loop order on connected graphs") {
  ComplexKind kind = ComplexKind::make(ComplexTag::GCn, {1, 2}, 6, 1);
  Signature sig{{1, 2}, {}, {}};
  auto basis = enumerate_basis(sig, {-6, -3}, kind.profile);
  REQUIRE(basis.size() > 0);
  for (const auto& g : basis) {
    GraphSum dg = differential(g, kind);
    for (auto& [k, tc] : dg.terms) {
      (void)k;
      CHECK(loop_order(tc.first) == 1);
    }
  }
}

TEST_CASE("splitting buckets for the aerial growth lemma") {
  Params p{2, 4};
  // last external aerial univalent, joined to external vertex 0 -> U with i=0
  auto g1 = mk(p, 0, 2, 0, 0, {{ext_a(0), ext_a(1), EKind::Full}});
  auto r1 = split_membership(g1, SplitLemma::AerialGrowth);
  CHECK(r1.bucket == SplitBucket::U);
  CHECK(r1.attach == 0);

  // last external aerial bivalent -> V
  auto g2 = mk(p, 0, 2, 0, 1,
               {{ext_a(0), ext_a(1), EKind::Full},
                {ext_a(1), int_a_vertex(0), EKind::Full},
                {ext_a(0), int_a_vertex(0), EKind::Full}});
  CHECK(split_membership(g2, SplitLemma::AerialGrowth).bucket == SplitBucket::V);

  // last external aerial univalent to an internal aerial vertex -> V'
  auto g3 = mk(p, 0, 2, 0, 1,
               {{ext_a(1), int_a_vertex(0), EKind::Full},
                {ext_a(0), int_a_vertex(0), EKind::Full}});
  CHECK(split_membership(g3, SplitLemma::AerialGrowth).bucket == SplitBucket::Vp);
}

TEST_CASE("terrestrial homotopy construction for m >= 2") {
  ComplexKind kind = ComplexKind::make(ComplexTag::VGraphs0, {2, 4}, 3);
  auto g = mk({2, 4}, 1, 0, 1, 1,
              {{ext_t(0), int_a_vertex(0), EKind::Full},
               {int_t_vertex(0), int_a_vertex(0), EKind::Full}});
  GraphSum h = homotopy_k_plus_one(g, kind);
  REQUIRE(h.size() == 1);
  const auto& hg = h.terms.begin()->second.first;
  CHECK(hg.int_t == g.int_t + 1);
  CHECK(hg.n_dashed() == 1);  // the fresh external hangs on a dashed edge
}

TEST_CASE("user-supplied coefficient functional drives the twist") {
  // a custom finite-support functional in place of the standard one; its
  // terms must be well-formed and homogeneous of degree +1 even when the
  // functional is not Maurer-Cartan
  Params p{2, 4};
  CoefficientFunctional f;
  ColoredGraph pat;
  pat.params = p;
  pat.int_a = 2;
  pat.edges = {{int_a_vertex(0), int_a_vertex(1), EKind::Full}};
  pat.carriers = canonical_carriers(pat);
  f.add_pattern(pat, Rational(3));
  ComplexKind kind = ComplexKind::with_functional(p, 2, f);
  auto g = mk(p, 1, 1, 0, 2,
              {{ext_a(0), int_a_vertex(0), EKind::Full},
               {int_a_vertex(0), int_a_vertex(1), EKind::Full},
               {ext_t(0), int_a_vertex(1), EKind::Full}});
  GraphSum dg = differential(g, kind);
  for (auto& [k, tc] : dg.terms) {
    (void)k;
    CHECK(degree(tc.first) == degree(g) + 1);
    auto [cg, s] = canonicalize(tc.first);
    CHECK(s == 1);
    CHECK(cg.encode() == tc.first.encode());
  }
}
