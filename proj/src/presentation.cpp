#include "vgc/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vgc/lie.hpp"

namespace vgc {

namespace {

int gen_parity(const Params& p, PresGen::Type t) {
  switch (t) {
    case PresGen::Type::WT: return (p.m - 1) & 1;
    case PresGen::Type::W: return (p.n - 1) & 1;
    case PresGen::Type::Eta: return (p.n - p.m - 1) & 1;
  }
  return 0;
}

bool gen_less(const PresGen& a, const PresGen& b) {
  if (a.type != b.type) return a.type < b.type;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

bool gen_equal(const PresGen& a, const PresGen& b) {
  return a.type == b.type && a.i == b.i && a.j == b.j;
}

}  // namespace

std::string PresMonomial::key() const {
  std::string s = "t";
  for (auto [i, j] : wt) s += std::to_string(i) + "." + std::to_string(j) + ";";
  s += "|o";
  for (int i : order) s += std::to_string(i) + ";";
  s += "|w";
  for (auto [i, j] : w) s += std::to_string(i) + "." + std::to_string(j) + ";";
  s += "|e";
  for (int i : eta) s += std::to_string(i) + ";";
  return s;
}

int PresMonomial::degree(const Params& p) const {
  return (p.m - 1) * (int)wt.size() + (p.n - 1) * (int)w.size() +
         (p.n - p.m - 1) * (int)eta.size();
}

void PresentationElement::add(const PresMonomial& m, const Rational& c) {
  if (c == 0) return;
  std::string k = m.key();
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(std::move(k), std::make_pair(m, c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) terms.erase(it);
  }
}

void PresentationElement::add_elem(const PresentationElement& other, const Rational& scale) {
  for (const auto& [k, tc] : other.terms) {
    (void)k;
    add(tc.first, tc.second * scale);
  }
}

namespace {

struct Reducer {
  const Signature& sig;
  PresentationElement* out;
  std::vector<int> order;

  // one term in flight: class-separated factor lists plus coefficient
  void add_word(std::vector<PresGen> word, Rational coef) {
    if (coef == 0) return;
    const Params& P = sig.params;

    // per-factor index normalization
    for (auto& f : word) {
      if (f.type == PresGen::Type::Eta) continue;
      if (f.i == f.j) {
        return;  // omega_ii is zero (tadpole class vanishes)
      }
      if (f.i > f.j) {
        std::swap(f.i, f.j);
        int n_like = f.type == PresGen::Type::W ? P.n : P.m;
        if (n_like & 1) coef = -coef;
      }
    }

    // insertion sort with Koszul signs
    for (size_t i = 1; i < word.size(); i++) {
      PresGen f = word[i];
      int pf = gen_parity(P, f.type);
      size_t j = i;
      while (j > 0 && gen_less(f, word[j - 1])) {
        if (pf && gen_parity(P, word[j - 1].type)) coef = -coef;
        word[j] = word[j - 1];
        j--;
      }
      word[j] = f;
    }

    // squares vanish (omega relations; eta_i^2 = 0)
    for (size_t i = 0; i + 1 < word.size(); i++)
      if (gen_equal(word[i], word[i + 1])) return;

    // Arnold rewriting: two w-class factors sharing a right index
    // omega_ik omega_jk -> omega_ij omega_jk - omega_ij omega_ik  (i<j<k)
    // (same rule for the wt class with its own labels)
    for (auto cls : {PresGen::Type::WT, PresGen::Type::W}) {
      int pcls = gen_parity(P, cls);
      std::vector<size_t> pos;
      for (size_t i = 0; i < word.size(); i++)
        if (word[i].type == cls) pos.push_back(i);
      for (size_t a = 0; a < pos.size(); a++) {
        for (size_t b = a + 1; b < pos.size(); b++) {
          if (word[pos[a]].j != word[pos[b]].j) continue;
          int i = word[pos[a]].i, jj = word[pos[b]].i, k = word[pos[a]].j;
          // extraction of the pair to the front of its class block
          int crossings = (int)(a + b - 1);
          Rational c2 = coef;
          if (pcls && (crossings & 1)) c2 = -c2;
          std::vector<PresGen> rest;
          for (size_t q = 0; q < word.size(); q++)
            if (q != pos[a] && q != pos[b]) rest.push_back(word[q]);
          auto build = [&](PresGen f1, PresGen f2) {
            std::vector<PresGen> nw{f1, f2};
            nw.insert(nw.end(), rest.begin(), rest.end());
            return nw;
          };
          PresGen gij{cls, i, jj}, gjk{cls, jj, k}, gik{cls, i, k};
          add_word(build(gij, gjk), c2);
          add_word(build(gij, gik), -c2);
          return;
        }
      }
    }

    // eta slide to the minimum of its w-component
    {
      // union-find over V labels along w factors
      int nv = (int)sig.ext_a.size();
      std::vector<int> parent(nv);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (const auto& f : word)
        if (f.type == PresGen::Type::W) {
          int ra = find(f.i), rb = find(f.j);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      bool changed = false;
      for (auto& f : word)
        if (f.type == PresGen::Type::Eta) {
          int mn = find(f.i);
          if (mn != f.i) {
            f.i = mn;
            changed = true;
          }
        }
      if (changed) {
        add_word(word, coef);
        return;
      }
      // duplicate etas after sliding vanish; re-sort eta block first
      std::vector<int> etas;
      for (const auto& f : word)
        if (f.type == PresGen::Type::Eta) etas.push_back(f.i);
      for (size_t i = 0; i + 1 < etas.size(); i++) {
        // sorted already by the insertion sort only if slide did not reorder;
        // resort defensively through add_word
        if (etas[i] >= etas[i + 1]) {
          add_word(word, coef);
          return;
        }
      }
      std::vector<int> se = etas;
      std::sort(se.begin(), se.end());
      for (size_t i = 0; i + 1 < se.size(); i++)
        if (se[i] == se[i + 1]) return;
    }

    PresMonomial m;
    m.order = order;
    for (const auto& f : word) {
      if (f.type == PresGen::Type::WT) m.wt.emplace_back(f.i, f.j);
      if (f.type == PresGen::Type::W) m.w.emplace_back(f.i, f.j);
      if (f.type == PresGen::Type::Eta) m.eta.push_back(f.i);
    }
    out->add(m, coef);
  }
};

}  // namespace

PresentationElement normal_form(const Signature& sig, const std::vector<PresGen>& word,
                                const Rational& coef, const std::vector<int>& order) {
  for (const auto& f : word) {
    int hi = f.type == PresGen::Type::WT ? (int)sig.ext_t.size() : (int)sig.ext_a.size();
    if (f.i < 0 || f.i >= hi || (f.type != PresGen::Type::Eta && (f.j < 0 || f.j >= hi)))
      throw std::invalid_argument("normal_form: unknown label");
    if (f.type == PresGen::Type::WT && sig.params.m == 1)
      throw std::invalid_argument("normal_form: wt generators need m >= 2");
  }
  std::vector<int> ord = order;
  if (sig.params.m == 1) {
    if (ord.empty()) {
      ord.resize(sig.ext_t.size());
      std::iota(ord.begin(), ord.end(), 0);
    }
    if ((int)ord.size() != (int)sig.ext_t.size())
      throw std::invalid_argument("normal_form: order must cover U");
  } else if (!order.empty()) {
    throw std::invalid_argument("normal_form: order part needs m = 1");
  }
  PresentationElement out(sig);
  Reducer r{sig, &out, ord};
  r.add_word(word, coef);
  return out;
}

PresentationElement pres_product(const PresentationElement& x, const PresentationElement& y) {
  if (!(x.sig.params == y.sig.params) || x.sig.ext_t != y.sig.ext_t ||
      x.sig.ext_a != y.sig.ext_a)
    throw std::invalid_argument("pres_product: signature mismatch");
  PresentationElement out(x.sig);
  for (const auto& [kx, tx] : x.terms) {
    (void)kx;
    for (const auto& [ky, ty] : y.terms) {
      (void)ky;
      const PresMonomial& a = tx.first;
      const PresMonomial& b = ty.first;
      if (x.sig.params.m == 1 && a.order != b.order) continue;  // pointwise product
      std::vector<PresGen> word;
      for (auto [i, j] : a.wt) word.push_back(PresGen::wt(i, j));
      for (auto [i, j] : a.w) word.push_back(PresGen::w(i, j));
      for (int i : a.eta) word.push_back(PresGen::eta(i));
      for (auto [i, j] : b.wt) word.push_back(PresGen::wt(i, j));
      for (auto [i, j] : b.w) word.push_back(PresGen::w(i, j));
      for (int i : b.eta) word.push_back(PresGen::eta(i));
      PresentationElement nf =
          normal_form(x.sig, word, tx.second * ty.second, a.order);
      out.add_elem(nf);
    }
  }
  return out;
}

namespace {

std::map<int, long> poly_mul(const std::map<int, long>& a, const std::map<int, long>& b) {
  std::map<int, long> out;
  for (auto [da, ca] : a)
    for (auto [db, cb] : b) out[da + db] += ca * cb;
  return out;
}

}  // namespace

std::map<int, long> poincare_polynomial(int k, int l, Params p) {
  if (k < 0 || l < 0) throw std::invalid_argument("poincare_polynomial: negative arity");
  std::map<int, long> out{{0, 1}};
  if (p.m == 1) {
    long f = 1;
    for (int i = 2; i <= k; i++) f *= i;
    out[0] = f;
  } else {
    for (int i = 0; i < k; i++) {
      std::map<int, long> factor{{0, 1}};
      factor[p.m - 1] += i;
      out = poly_mul(out, factor);
    }
  }
  for (int i = 0; i < l; i++) {
    std::map<int, long> factor{{0, 1}};
    factor[p.n - p.m - 1] += 1;
    factor[p.n - 1] += i;
    out = poly_mul(out, factor);
  }
  std::map<int, long> clean;
  for (auto [d, c] : out)
    if (c) clean[d] = c;
  return clean;
}

namespace {

// admissible monomials in omega-type generators over nl labels: i < j per
// factor, right indices pairwise distinct
void admissible_rec(int nl, int next_right, std::vector<std::pair<int, int>>& acc,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back(acc);
  for (int j = next_right; j < nl; j++)
    for (int i = 0; i < j; i++) {
      acc.emplace_back(i, j);
      admissible_rec(nl, j + 1, acc, out);
      acc.pop_back();
    }
}

std::vector<std::vector<std::pair<int, int>>> admissible_monomials(int nl) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> acc;
  admissible_rec(nl, 1, acc, out);
  // canonical storage is sorted
  for (auto& m : out) std::sort(m.begin(), m.end());
  return out;
}

}  // namespace

std::vector<PresMonomial> monomial_basis(const Signature& sig) {
  int k = (int)sig.ext_t.size(), l = (int)sig.ext_a.size();
  std::vector<PresMonomial> out;

  std::vector<std::vector<std::pair<int, int>>> wt_part;
  std::vector<std::vector<int>> orders;
  if (sig.params.m == 1) {
    wt_part = {{}};
    std::vector<int> ord(k);
    std::iota(ord.begin(), ord.end(), 0);
    if (k == 0)
      orders.push_back({});
    else
      do {
        orders.push_back(ord);
      } while (std::next_permutation(ord.begin(), ord.end()));
  } else {
    wt_part = admissible_monomials(k);
    orders = {{}};
  }

  auto w_part = admissible_monomials(l);
  for (const auto& wt : wt_part) {
    for (const auto& ord : orders) {
      for (const auto& w : w_part) {
        // omega components over V
        std::vector<int> parent(l);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
          return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (auto [i, j] : w) {
          int ra = find(i), rb = find(j);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
        std::vector<int> mins;
        for (int v = 0; v < l; v++)
          if (find(v) == v) mins.push_back(v);
        int nc = (int)mins.size();
        for (int mask = 0; mask < (1 << nc); mask++) {
          PresMonomial m;
          m.wt = wt;
          m.order = ord;
          m.w = w;
          for (int c = 0; c < nc; c++)
            if (mask >> c & 1) m.eta.push_back(mins[c]);
          std::sort(m.eta.begin(), m.eta.end());
          out.push_back(m);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PresMonomial& a, const PresMonomial& b) { return a.key() < b.key(); });
  return out;
}

void PresTensorSum::add(const PresMonomial& l, const PresMonomial& r, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(l.key(), r.key());
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, std::make_tuple(l, r, c));
  } else {
    std::get<2>(it->second) += c;
    if (std::get<2>(it->second) == 0) terms.erase(it);
  }
}

std::vector<std::string> quotient_labels(const std::vector<std::string>& labels,
                                         const std::vector<int>& removed) {
  std::vector<std::string> out;
  for (int i = 0; i < (int)labels.size(); i++)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      out.push_back(labels[i]);
  out.push_back("*");
  return out;
}

namespace {

struct GenImage {
  bool zero = false;
  bool left = true;  // a (x) 1 vs 1 (x) b
  PresGen gen;
};

// shared cocomposition driver: `image` maps a generator to its (pure tensor)
// image in the quotient/right labels
PresTensorSum cocompose_impl(
    const PresentationElement& x, const Signature& lsig, const Signature& rsig,
    const std::function<GenImage(const PresGen&)>& image,
    const std::function<bool(const PresMonomial&, std::vector<int>&, std::vector<int>&)>&
        split_order) {
  PresTensorSum out;
  out.left_sig = lsig;
  out.right_sig = rsig;
  const Params& P = x.sig.params;
  for (const auto& [k, tc] : x.terms) {
    (void)k;
    const PresMonomial& mon = tc.first;
    std::vector<PresGen> word;
    for (auto [i, j] : mon.wt) word.push_back(PresGen::wt(i, j));
    for (auto [i, j] : mon.w) word.push_back(PresGen::w(i, j));
    for (int i : mon.eta) word.push_back(PresGen::eta(i));

    std::vector<int> lorder, rorder;
    if (!split_order(mon, lorder, rorder)) continue;

    std::vector<PresGen> lword, rword;
    int right_parity = 0;
    int sign = 1;
    bool dead = false;
    for (const auto& f : word) {
      GenImage gi = image(f);
      if (gi.zero) {
        dead = true;
        break;
      }
      int pf = gen_parity(P, f.type);
      if (gi.left) {
        if (pf && (right_parity & 1)) sign = -sign;
        lword.push_back(gi.gen);
      } else {
        right_parity += pf;
        rword.push_back(gi.gen);
      }
    }
    if (dead) continue;

    PresentationElement lnf = normal_form(lsig, lword, tc.second * sign, lorder);
    PresentationElement rnf = normal_form(rsig, rword, 1, rorder);
    for (const auto& [lk, lt] : lnf.terms) {
      (void)lk;
      for (const auto& [rk, rt] : rnf.terms) {
        (void)rk;
        out.add(lt.first, rt.first, lt.second * rt.second);
      }
    }
  }
  return out;
}

}  // namespace

PresTensorSum cocompose_aerial(const PresentationElement& x, const std::vector<int>& T) {
  const Signature& s = x.sig;
  for (int t : T)
    if (t < 0 || t >= (int)s.ext_a.size())
      throw std::invalid_argument("cocompose_aerial: invalid subset");
  Signature lsig{s.params, s.ext_t, quotient_labels(s.ext_a, T)};
  Signature rsig{s.params, {}, {}};
  for (int t : T) rsig.ext_a.push_back(s.ext_a[t]);
  int star = (int)lsig.ext_a.size() - 1;
  auto in_T = [&](int v) { return std::find(T.begin(), T.end(), v) != T.end(); };
  // quotient index of an aerial label
  std::vector<int> lidx(s.ext_a.size(), -1);
  {
    int c = 0;
    for (int i = 0; i < (int)s.ext_a.size(); i++)
      if (!in_T(i)) lidx[i] = c++;
  }
  std::vector<int> ridx(s.ext_a.size(), -1);
  for (int c = 0; c < (int)T.size(); c++) ridx[T[c]] = c;

  auto image = [&](const PresGen& f) -> GenImage {
    switch (f.type) {
      case PresGen::Type::WT:
        return {false, true, f};
      case PresGen::Type::W: {
        bool it = in_T(f.i), jt = in_T(f.j);
        if (it && jt) return {false, false, PresGen::w(ridx[f.i], ridx[f.j])};
        int a = it ? star : lidx[f.i];
        int b = jt ? star : lidx[f.j];
        if (a == b) return {true, true, {}};  // omega_** vanishes
        return {false, true, PresGen::w(a, b)};
      }
      case PresGen::Type::Eta: {
        int a = in_T(f.i) ? star : lidx[f.i];
        return {false, true, PresGen::eta(a)};
      }
    }
    return {true, true, {}};
  };
  auto split_order = [&](const PresMonomial& m, std::vector<int>& lo,
                         std::vector<int>& ro) -> bool {
    lo = m.order;  // identity on the U part
    ro.clear();
    return true;
  };
  return cocompose_impl(x, lsig, rsig, image, split_order);
}

PresTensorSum cocompose_mixed(const PresentationElement& x, const std::vector<int>& W,
                              const std::vector<int>& T) {
  const Signature& s = x.sig;
  for (int u : W)
    if (u < 0 || u >= (int)s.ext_t.size())
      throw std::invalid_argument("cocompose_mixed: invalid W");
  for (int t : T)
    if (t < 0 || t >= (int)s.ext_a.size())
      throw std::invalid_argument("cocompose_mixed: invalid T");

  Signature lsig{s.params, quotient_labels(s.ext_t, W), {}};
  Signature rsig{s.params, {}, {}};
  for (int i = 0; i < (int)s.ext_a.size(); i++)
    if (std::find(T.begin(), T.end(), i) == T.end()) lsig.ext_a.push_back(s.ext_a[i]);
  for (int u : W) rsig.ext_t.push_back(s.ext_t[u]);
  for (int t : T) rsig.ext_a.push_back(s.ext_a[t]);

  int star_t = (int)lsig.ext_t.size() - 1;
  auto in_W = [&](int u) { return std::find(W.begin(), W.end(), u) != W.end(); };
  auto in_T = [&](int v) { return std::find(T.begin(), T.end(), v) != T.end(); };
  std::vector<int> lt_idx(s.ext_t.size(), -1), la_idx(s.ext_a.size(), -1);
  std::vector<int> rt_idx(s.ext_t.size(), -1), ra_idx(s.ext_a.size(), -1);
  {
    int c = 0;
    for (int i = 0; i < (int)s.ext_t.size(); i++)
      if (!in_W(i)) lt_idx[i] = c++;
    c = 0;
    for (int i = 0; i < (int)s.ext_a.size(); i++)
      if (!in_T(i)) la_idx[i] = c++;
    for (int c2 = 0; c2 < (int)W.size(); c2++) rt_idx[W[c2]] = c2;
    for (int c2 = 0; c2 < (int)T.size(); c2++) ra_idx[T[c2]] = c2;
  }

  auto image = [&](const PresGen& f) -> GenImage {
    switch (f.type) {
      case PresGen::Type::WT: {
        bool iw = in_W(f.i), jw = in_W(f.j);
        if (iw && jw) return {false, false, PresGen::wt(rt_idx[f.i], rt_idx[f.j])};
        int a = iw ? star_t : lt_idx[f.i];
        int b = jw ? star_t : lt_idx[f.j];
        if (a == b) return {true, true, {}};
        return {false, true, PresGen::wt(a, b)};
      }
      case PresGen::Type::W: {
        bool it = in_T(f.i), jt = in_T(f.j);
        if (it && jt) return {false, false, PresGen::w(ra_idx[f.i], ra_idx[f.j])};
        if (!it && !jt) return {false, true, PresGen::w(la_idx[f.i], la_idx[f.j])};
        return {true, true, {}};  // mixed: zero
      }
      case PresGen::Type::Eta: {
        if (in_T(f.i)) return {false, false, PresGen::eta(ra_idx[f.i])};
        return {false, true, PresGen::eta(la_idx[f.i])};
      }
    }
    return {true, true, {}};
  };

  auto split_order = [&](const PresMonomial& m, std::vector<int>& lo,
                         std::vector<int>& ro) -> bool {
    lo.clear();
    ro.clear();
    if (s.params.m != 1) return true;
    // dual block composition: W must be consecutive in the order
    std::vector<int> posW;
    for (int p = 0; p < (int)m.order.size(); p++)
      if (in_W(m.order[p])) posW.push_back(p);
    if (!posW.empty()) {
      for (size_t q = 1; q < posW.size(); q++)
        if (posW[q] != posW[q - 1] + 1) return false;
    }
    // quotient order: block collapses to *, placed at the block position;
    // with an empty W the new * goes to the end (dual of composing with the
    // empty block at the last slot)
    int block_at = posW.empty() ? (int)m.order.size() : posW[0];
    bool star_done = false;
    for (int p = 0; p < (int)m.order.size(); p++) {
      if (in_W(m.order[p])) {
        if (!star_done) {
          lo.push_back(star_t);
          star_done = true;
        }
        ro.push_back(rt_idx[m.order[p]]);
      } else {
        lo.push_back(lt_idx[m.order[p]]);
      }
    }
    if (!star_done) lo.push_back(star_t);
    (void)block_at;
    return true;
  };
  return cocompose_impl(x, lsig, rsig, image, split_order);
}

PresentationElement pi_project(const ColoredGraph& g0) {
  auto [g, sgn] = canonicalize(g0);
  Signature sig{g.params, g.ext_t_labels, g.ext_a_labels};
  PresentationElement out(sig);
  if (sgn == 0) return out;

  if (g.order.type == OrderDatum::Type::Lie) {
    // expand to the order basis and project linearly
    GraphSum orders = pbw_expand(g);
    for (const auto& [k, tc] : orders.terms) {
      (void)k;
      out.add_elem(pi_project(tc.first), tc.second * sgn);
    }
    return out;
  }

  // generator classification: every edge must be an omega edge, a wt edge or
  // an eta edge; every internal vertex must be the terrestrial end of an eta
  // edge; otherwise pi vanishes
  if (g.int_a > 0) return out;
  std::vector<PresGen> word;
  std::vector<int> eta_of_int_t(g.int_t, -1);
  for (const auto& e : g.edges) {
    if (e.kind == EKind::Dashed) {
      if (e.a.kind == VKind::ExtT && e.b.kind == VKind::ExtT && !e.tadpole()) {
        word.push_back(PresGen::wt(e.a.idx, e.b.idx));
        continue;
      }
      return out;
    }
    if (e.a.kind == VKind::ExtA && e.b.kind == VKind::ExtA && !e.tadpole()) {
      word.push_back(PresGen::w(e.a.idx, e.b.idx));
      continue;
    }
    // eta edge: external aerial -- internal terrestrial, terrestrial end univalent
    VertexId t, v;
    if (e.a.kind == VKind::IntT && e.b.kind == VKind::ExtA) {
      t = e.a;
      v = e.b;
    } else if (e.b.kind == VKind::IntT && e.a.kind == VKind::ExtA) {
      t = e.b;
      v = e.a;
    } else {
      return out;
    }
    if (g.valence(t) != 1) return out;
    if (eta_of_int_t[t.idx] >= 0) return out;
    eta_of_int_t[t.idx] = v.idx;
    word.push_back(PresGen::eta(v.idx));
  }
  for (int i = 0; i < g.int_t; i++)
    if (eta_of_int_t[i] < 0) return out;  // stray internal terrestrial vertex

  std::vector<int> ord;
  int eta_sign = 1;
  if (g.params.m == 1) {
    // dropping the odd eta-carriers from the order costs the parity of
    // their arrangement relative to the index order
    std::vector<int> eta_positions;
    for (auto v : g.order.seq) {
      if (v.kind == VKind::ExtT) ord.push_back(v.idx);
      if (v.kind == VKind::IntT) eta_positions.push_back(v.idx);
    }
    for (size_t a = 0; a < eta_positions.size(); a++)
      for (size_t b = a + 1; b < eta_positions.size(); b++)
        if (eta_positions[a] > eta_positions[b]) eta_sign = -eta_sign;
  }
  out = normal_form(sig, word, sgn * eta_sign, ord);
  return out;
}

}  // namespace vgc
