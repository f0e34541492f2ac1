#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "vgc/linalg.hpp"
#include "vgc/presentation.hpp"

#include "oracle_quotient.hpp"

using namespace vgc;

namespace {

using namespace vgc_oracle;

std::map<int, long> basis_dims(const Signature& sig) {
  std::map<int, long> out;
  for (const auto& m : monomial_basis(sig)) out[m.degree(sig.params)]++;
  return out;
}

}  // namespace

TEST_CASE("symmetry, Arnold and eta-slide rewriting") {
  Signature sig = make_signature({2, 4}, 0, 3);
  auto x = normal_form(sig, {PresGen::w(1, 0)});
  REQUIRE(x.terms.size() == 1);
  auto& [m, c] = x.terms.begin()->second;
  CHECK(m.w == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(c == 1);  // n = 4 even

  PresentationElement sum(sig);
  sum.add_elem(normal_form(sig, {PresGen::w(0, 1), PresGen::w(1, 2)}));
  sum.add_elem(normal_form(sig, {PresGen::w(1, 2), PresGen::w(2, 0)}));
  sum.add_elem(normal_form(sig, {PresGen::w(2, 0), PresGen::w(0, 1)}));
  CHECK(sum.zero());

  auto y = normal_form(sig, {PresGen::eta(1), PresGen::w(0, 1)});
  REQUIRE(y.terms.size() == 1);
  CHECK(y.terms.begin()->second.first.eta == std::vector<int>{0});

  CHECK(normal_form(sig, {PresGen::w(0, 1), PresGen::w(0, 1)}).zero());
  CHECK(normal_form(sig, {PresGen::eta(0), PresGen::eta(0)}).zero());
}

TEST_CASE("odd n Arnold also reduces to zero") {
  Signature sig = make_signature({2, 5}, 0, 3);
  PresentationElement sum(sig);
  sum.add_elem(normal_form(sig, {PresGen::w(0, 1), PresGen::w(1, 2)}));
  sum.add_elem(normal_form(sig, {PresGen::w(1, 2), PresGen::w(2, 0)}));
  sum.add_elem(normal_form(sig, {PresGen::w(2, 0), PresGen::w(0, 1)}));
  CHECK(sum.zero());
}

TEST_CASE("Poincare polynomial examples") {
  auto p1 = poincare_polynomial(0, 1, {2, 4});
  CHECK(p1 == (std::map<int, long>{{0, 1}, {1, 1}}));
  auto p2 = poincare_polynomial(0, 2, {1, 3});
  CHECK(p2 == (std::map<int, long>{{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  auto p3 = poincare_polynomial(3, 0, {2, 4});
  CHECK(p3 == (std::map<int, long>{{0, 1}, {1, 3}, {2, 2}}));
}

TEST_CASE("normal-form basis matches Poincare polynomial for k+l <= 4") {
  for (Params p : {Params{1, 3}, Params{2, 4}, Params{2, 5}}) {
    for (int k = 0; k <= 4; k++) {
      for (int l = 0; k + l <= 4; l++) {
        Signature sig = make_signature(p, k, l);
        auto dims = basis_dims(sig);
        auto poly = poincare_polynomial(k, l, p);
        INFO("m=", p.m, " n=", p.n, " k=", k, " l=", l);
        CHECK(dims == poly);
      }
    }
  }
}

TEST_CASE("brute-force quotient oracle confirms dimensions for k+l <= 3") {
  for (Params p : {Params{1, 3}, Params{2, 4}, Params{2, 5}}) {
    for (int k = 0; k <= 3; k++) {
      for (int l = 0; k + l <= 3; l++) {
        Signature sig = make_signature(p, k, l);
        auto dims = basis_dims(sig);
        int dmax = 0;
        for (auto [d, c] : dims) dmax = std::max(dmax, d);
        auto [alg, rels] = vsc_oracle(p, k, l);
        auto odims = oracle_dims(alg, rels, dmax);
        long kfact = 1;
        if (p.m == 1)
          for (int i = 2; i <= k; i++) kfact *= i;
        for (int d = 0; d <= dmax; d++) {
          long expect = (p.m == 1 ? kfact : 1) * odims[d];
          long got = dims.count(d) ? dims[d] : 0;
          INFO("m=", p.m, " n=", p.n, " k=", k, " l=", l, " deg=", d);
          CHECK(got == expect);
        }
      }
    }
  }
}

TEST_CASE("cocomposition generator table") {
  Signature sig = make_signature({2, 4}, 0, 2);
  auto x = normal_form(sig, {PresGen::eta(1)});
  auto t = cocompose_aerial(x, {1});
  REQUIRE(t.terms.size() == 1);
  auto& [lm, rm, c] = t.terms.begin()->second;
  CHECK(lm.eta == std::vector<int>{1});  // the star has index 1 in V/T
  CHECK(rm.w.empty());
  CHECK(c == 1);

  Signature sig2 = make_signature({2, 4}, 1, 2);
  auto y = normal_form(sig2, {PresGen::w(0, 1)});
  auto t2 = cocompose_mixed(y, {}, {1});
  CHECK(t2.terms.empty());
}

TEST_CASE("m=1 dual block composition") {
  Params p{1, 3};
  Signature sig{p, {"b", "x", "y", "c"}, {}};
  PresentationElement el(sig);
  PresMonomial mon;
  mon.order = {0, 1, 2, 3};
  el.add(mon, 1);
  auto t = cocompose_mixed(el, {1, 2}, {});
  REQUIRE(t.terms.size() == 1);
  auto& [lm, rm, c] = t.terms.begin()->second;
  CHECK(lm.order == (std::vector<int>{0, 2, 1}));  // labels (b, c, *)
  CHECK(rm.order == (std::vector<int>{0, 1}));
  CHECK(c == 1);

  auto t2 = cocompose_mixed(el, {0, 2}, {});
  CHECK(t2.terms.empty());
}

TEST_CASE("pi on generators") {
  Params p{2, 4};
  ColoredGraph g;
  g.params = p;
  g.ext_a_labels = {"1", "2"};
  g.edges = {{ext_a(0), ext_a(1), EKind::Full}};
  g.carriers = canonical_carriers(g);
  auto img = pi_project(g);
  REQUIRE(img.terms.size() == 1);
  CHECK(img.terms.begin()->second.first.w == (std::vector<std::pair<int, int>>{{0, 1}}));

  ColoredGraph h;
  h.params = p;
  h.ext_a_labels = {"1"};
  h.int_t = 1;
  h.edges = {{ext_a(0), int_t_vertex(0), EKind::Full}};
  h.carriers = canonical_carriers(h);
  auto img2 = pi_project(h);
  REQUIRE(img2.terms.size() == 1);
  CHECK(img2.terms.begin()->second.first.eta == (std::vector<int>{0}));
  CHECK(degree(h) == img2.terms.begin()->second.first.degree(p));

  ColoredGraph t;
  t.params = p;
  t.ext_a_labels = {"1", "2", "3"};
  t.int_a = 1;
  t.edges = {{ext_a(0), int_a_vertex(0), EKind::Full},
             {ext_a(1), int_a_vertex(0), EKind::Full},
             {ext_a(2), int_a_vertex(0), EKind::Full}};
  t.carriers = canonical_carriers(t);
  CHECK(pi_project(t).zero());
}
