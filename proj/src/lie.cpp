#include "vgc/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vgc/enumerate.hpp"

namespace vgc {

namespace {

int letter_parity(VertexId v) { return v.kind == VKind::IntT ? 1 : 0; }

int seq_parity(const std::vector<VertexId>& s) {
  int p = 0;
  for (auto v : s) p ^= letter_parity(v);
  return p;
}

int count_odd(const std::vector<VertexId>& s) {
  int c = 0;
  for (auto v : s) c += letter_parity(v);
  return c;
}

void combine(std::map<std::vector<VertexId>, Rational>& acc,
             const std::vector<VertexId>& s, const Rational& c) {
  auto it = acc.find(s);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

std::vector<SeqTerm> to_terms(const std::map<std::vector<VertexId>, Rational>& m) {
  std::vector<SeqTerm> out;
  for (const auto& [s, c] : m) out.emplace_back(s, c);
  return out;
}

void shuffle_rec(const std::vector<VertexId>& a, size_t ia, const std::vector<VertexId>& b,
                 size_t ib, int odd_left_in_a, std::vector<VertexId>& acc, int sign,
                 const Rational& coef, std::map<std::vector<VertexId>, Rational>& out) {
  if (ia == a.size() && ib == b.size()) {
    combine(out, acc, coef * sign);
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffle_rec(a, ia + 1, b, ib, odd_left_in_a - letter_parity(a[ia]), acc, sign, coef, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    int s = sign;
    if (letter_parity(b[ib]) && (odd_left_in_a % 2)) s = -s;
    acc.push_back(b[ib]);
    shuffle_rec(a, ia, b, ib + 1, odd_left_in_a, acc, s, coef, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SeqTerm> lie_word_to_sequences(const LieWord& w) {
  if (w.letters.empty()) return {};
  std::vector<SeqTerm> cur{{{w.letters[0]}, Rational(1)}};
  for (size_t s = 1; s < w.letters.size(); s++) {
    VertexId x = w.letters[s];
    std::map<std::vector<VertexId>, Rational> next;
    for (const auto& [seq, c] : cur) {
      auto left = seq;
      left.push_back(x);
      combine(next, left, c);
      std::vector<VertexId> right{x};
      right.insert(right.end(), seq.begin(), seq.end());
      int koszul = (seq_parity(seq) && letter_parity(x)) ? -1 : 1;
      combine(next, right, -c * koszul);
    }
    cur = to_terms(next);
  }
  return cur;
}

std::vector<SeqTerm> graded_shuffle(const std::vector<SeqTerm>& a,
                                    const std::vector<SeqTerm>& b) {
  std::map<std::vector<VertexId>, Rational> out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      std::vector<VertexId> acc;
      shuffle_rec(sa, 0, sb, 0, count_odd(sa), acc, 1, ca * cb, out);
    }
  }
  return to_terms(out);
}

GraphSum pbw_expand(const ColoredGraph& decorated) {
  if (decorated.order.type != OrderDatum::Type::Lie)
    throw std::invalid_argument("pbw_expand needs a Lie decoration");
  std::vector<SeqTerm> prod{{{}, Rational(1)}};
  for (const auto& w : decorated.order.words)
    prod = graded_shuffle(prod, lie_word_to_sequences(w));
  GraphSum out;
  for (const auto& [seq, c] : prod) {
    ColoredGraph g = decorated;
    g.order.type = OrderDatum::Type::Order;
    g.order.words.clear();
    g.order.seq = seq;
    out.add_canonicalized(g, c);
  }
  return out;
}

std::vector<std::pair<ColoredGraph, Rational>> pbw_inverse(const GraphSum& orders) {
  std::vector<std::pair<ColoredGraph, Rational>> result;
  if (orders.zero()) return result;

  // group by underlying structure (everything but the order datum)
  auto shape_key = [](const ColoredGraph& g) {
    ColoredGraph h = g;
    h.order.type = OrderDatum::Type::None;
    h.order.seq.clear();
    return h.encode();
  };
  std::map<std::string, GraphSum> groups;
  for (const auto& [k, tc] : orders.terms) {
    (void)k;
    groups[shape_key(tc.first)].add(tc.first, tc.second);
  }

  for (auto& [sk, grp] : groups) {
    (void)sk;
    const ColoredGraph& proto = grp.terms.begin()->second.first;
    auto letters = proto.terrestrial_vertices();

    // decorated candidates over the labeled letter set
    std::vector<ColoredGraph> dec;
    for (const auto& f : lie_forests(letters)) {
      ColoredGraph d = proto;
      d.order.type = OrderDatum::Type::Lie;
      d.order.seq.clear();
      d.order.words = f;
      int s = normalize(d);
      if (s == 0) continue;
      if (s < 0) throw std::logic_error("pbw_inverse: unexpected normalize sign");
      dec.push_back(d);
    }

    // expansions in canonical order-graph coordinates
    std::map<std::string, int> coord;
    std::vector<std::vector<Rational>> cols;
    std::vector<const ColoredGraph*> coord_graph;
    auto coord_of = [&](const ColoredGraph& g) {
      auto it = coord.find(g.encode());
      if (it != coord.end()) return it->second;
      int id = (int)coord.size();
      coord.emplace(g.encode(), id);
      return id;
    };
    std::vector<GraphSum> expansions;
    for (const auto& d : dec) expansions.push_back(pbw_expand(d));
    for (const auto& e : expansions)
      for (const auto& [k, tc] : e.terms) {
        (void)k;
        coord_of(tc.first);
      }
    for (const auto& [k, tc] : grp.terms) {
      (void)k;
      coord_of(tc.first);
    }

    int nrow = (int)coord.size(), ncol = (int)dec.size();
    std::vector<std::vector<Rational>> M(nrow, std::vector<Rational>(ncol + 1, 0));
    for (int c = 0; c < ncol; c++)
      for (const auto& [k, tc] : expansions[c].terms) {
        (void)k;
        M[coord[tc.first.encode()]][c] = tc.second;
      }
    for (const auto& [k, tc] : grp.terms) {
      (void)k;
      M[coord[tc.first.encode()]][ncol] = tc.second;
    }

    // exact Gaussian elimination, free variables set to zero
    std::vector<int> pivot_col_of_row(nrow, -1);
    int row = 0;
    for (int col = 0; col < ncol && row < nrow; col++) {
      int pr = -1;
      for (int r = row; r < nrow; r++)
        if (M[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(M[row], M[pr]);
      for (int r = 0; r < nrow; r++) {
        if (r == row || M[r][col] == 0) continue;
        Rational f = M[r][col] / M[row][col];
        for (int c2 = col; c2 <= ncol; c2++) M[r][c2] -= f * M[row][c2];
      }
      pivot_col_of_row[row] = col;
      row++;
    }
    for (int r = row; r < nrow; r++)
      if (M[r][ncol] != 0) throw std::logic_error("pbw_inverse: vector outside decorated span");
    std::vector<Rational> x(ncol, 0);
    for (int r = 0; r < row; r++) {
      int c = pivot_col_of_row[r];
      x[c] = M[r][ncol] / M[r][c];
    }
    for (int c = 0; c < ncol; c++)
      if (x[c] != 0) result.emplace_back(dec[c], x[c]);
  }
  return result;
}

}  // namespace vgc
