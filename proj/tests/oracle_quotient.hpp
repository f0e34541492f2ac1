#pragma once

// Test-only oracle: dimensions of the presented algebras computed by
// spanning the relation ideal inside a free graded-commutative algebra and
// taking exact ranks.  Independent of the normal-form rewriting it checks.

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "vgc/linalg.hpp"
#include "vgc/presentation.hpp"

#ifndef REQUIRE
#define VGC_ORACLE_LOCAL_REQUIRE
#define REQUIRE(x) \
  do { \
    if (!(x)) throw std::logic_error("oracle invariant violated"); \
  } while (0)
#endif

namespace vgc_oracle {
using namespace vgc;

// ---- independent oracle: dimensions of the presented algebra computed by
// ---- spanning the relation ideal inside a free graded-commutative algebra

struct FreeGen {
  int id;
  int deg;
};

struct FreeAlg {
  std::vector<FreeGen> gens;

  bool odd(int id) const { return gens[id].deg % 2 != 0; }

  using Mon = std::vector<int>;  // sorted gen ids, repeats allowed when even

  int mon_deg(const Mon& m) const {
    int d = 0;
    for (int id : m) d += gens[id].deg;
    return d;
  }

  std::pair<Mon, int> mul(const Mon& a, const Mon& b) const {
    Mon out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    int odd_left_in_a = 0;
    for (int id : a) odd_left_in_a += odd(id);
    while (i < a.size() || j < b.size()) {
      bool take_a = j == b.size() || (i < a.size() && a[i] <= b[j]);
      if (take_a) {
        odd_left_in_a -= odd(a[i]);
        out.push_back(a[i++]);
      } else {
        if (odd(b[j]) && (odd_left_in_a % 2)) sign = -sign;
        out.push_back(b[j++]);
      }
    }
    for (size_t q = 0; q + 1 < out.size(); q++)
      if (out[q] == out[q + 1] && odd(out[q])) return {out, 0};
    return {out, sign};
  }

  void rec(int next, int rem, Mon& acc, std::vector<Mon>& out) const {
    if (rem == 0) {
      out.push_back(acc);
      return;
    }
    for (int id = next; id < (int)gens.size(); id++) {
      if (gens[id].deg > rem || gens[id].deg == 0) continue;
      acc.push_back(id);
      rec(odd(id) ? id + 1 : id, rem - gens[id].deg, acc, out);
      acc.pop_back();
    }
  }
  std::vector<Mon> mons_of_degree(int d) const {
    std::vector<Mon> out;
    Mon acc;
    rec(0, d, acc, out);
    return out;
  }
};

using Rel = std::vector<std::pair<FreeAlg::Mon, Rational>>;

std::map<int, long> oracle_dims(const FreeAlg& alg, const std::vector<Rel>& rels, int dmax) {
  std::map<int, long> out;
  for (int d = 0; d <= dmax; d++) {
    auto mons = alg.mons_of_degree(d);
    std::map<FreeAlg::Mon, int> index;
    for (auto& m : mons) index.emplace(m, (int)index.size());
    std::vector<std::map<int, Rational>> rows;
    for (const auto& rel : rels) {
      if (rel.empty()) continue;
      int rdeg = alg.mon_deg(rel[0].first);
      if (rdeg > d) continue;
      for (const auto& c : alg.mons_of_degree(d - rdeg)) {
        std::map<int, Rational> row;
        for (const auto& [m, coef] : rel) {
          auto [prod, sign] = alg.mul(c, m);
          if (sign == 0) continue;
          auto it = index.find(prod);
          REQUIRE(it != index.end());
          row[it->second] += coef * sign;
        }
        bool nz = false;
        for (auto& [k, v] : row) nz |= v != 0;
        if (nz) rows.push_back(std::move(row));
      }
    }
    SparseRationalMatrix M((int)rows.size(), (int)mons.size());
    for (int r = 0; r < (int)rows.size(); r++)
      for (auto& [c, v] : rows[r]) M.add(r, c, v);
    out[d] = (long)mons.size() - rank(M);
  }
  return out;
}

std::pair<FreeAlg, std::vector<Rel>> vsc_oracle(Params p, int k, int l) {
  FreeAlg alg;
  std::map<std::tuple<int, int, int>, int> gid;
  auto add_gen = [&](int cls, int i, int j, int deg) {
    gid[{cls, i, j}] = (int)alg.gens.size();
    alg.gens.push_back({(int)alg.gens.size(), deg});
  };
  if (p.m >= 2)
    for (int i = 0; i < k; i++)
      for (int j = i + 1; j < k; j++) add_gen(0, i, j, p.m - 1);
  for (int i = 0; i < l; i++)
    for (int j = i + 1; j < l; j++) add_gen(1, i, j, p.n - 1);
  for (int i = 0; i < l; i++) add_gen(2, i, -1, p.n - p.m - 1);

  std::vector<Rel> rels;
  auto w = [&](int cls, int i, int j) {
    return gid[{cls, std::min(i, j), std::max(i, j)}];
  };
  auto eta = [&](int i) { return gid[{2, i, -1}]; };

  auto omega_relations = [&](int cls, int nl, int gdeg) {
    if (gdeg % 2 == 0)
      for (int i = 0; i < nl; i++)
        for (int j = i + 1; j < nl; j++)
          rels.push_back({{{w(cls, i, j), w(cls, i, j)}, 1}});
    for (int i = 0; i < nl; i++)
      for (int j = i + 1; j < nl; j++)
        for (int q = j + 1; q < nl; q++) {
          Rel r;
          r.push_back({{w(cls, i, j), w(cls, j, q)}, 1});
          r.push_back({{w(cls, i, q), w(cls, j, q)}, -1});
          r.push_back({{w(cls, i, j), w(cls, i, q)}, -1});
          for (auto& [m, c] : r) std::sort(m.begin(), m.end());
          rels.push_back(r);
        }
  };
  if (p.m >= 2) omega_relations(0, k, p.m - 1);
  omega_relations(1, l, p.n - 1);

  for (int i = 0; i < l; i++) {
    if ((p.n - p.m - 1) % 2 == 0) rels.push_back({{{eta(i), eta(i)}, 1}});
    for (int j = i + 1; j < l; j++) {
      Rel r;
      FreeAlg::Mon m1{eta(i), w(1, i, j)}, m2{eta(j), w(1, i, j)};
      std::sort(m1.begin(), m1.end());
      std::sort(m2.begin(), m2.end());
      r.push_back({m1, 1});
      r.push_back({m2, -1});
      rels.push_back(r);
    }
  }
  return {alg, rels};
}


}  // namespace vgc_oracle

#ifdef VGC_ORACLE_LOCAL_REQUIRE
#undef REQUIRE
#undef VGC_ORACLE_LOCAL_REQUIRE
#endif
