#include "vgc/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace vgc {

void SparseRationalMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("SparseRationalMatrix::set");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void SparseRationalMatrix::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("SparseRationalMatrix::add");
  auto it = entries.find({r, c});
  if (it == entries.end()) {
    if (v != 0) entries.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

Rational SparseRationalMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseRationalMatrix SparseRationalMatrix::transposed() const {
  SparseRationalMatrix t(cols, rows);
  for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

SparseRationalMatrix SparseRationalMatrix::vstack(const SparseRationalMatrix& b) const {
  if (cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
  SparseRationalMatrix s(rows + b.rows, cols);
  s.entries = entries;
  for (const auto& [rc, v] : b.entries) s.entries[{rc.first + rows, rc.second}] = v;
  return s;
}

namespace {

// sparse rows of integers; fraction-free updates keep entries integral
struct EliminationState {
  int ncols = 0;
  std::vector<std::vector<std::pair<int, mpz_class>>> rowdata;  // sorted by col
  std::vector<bool> row_alive;
  std::vector<int> col_count;  // live nnz per column

  explicit EliminationState(const SparseRationalMatrix& A) {
    ncols = A.cols;
    rowdata.assign(A.rows, {});
    for (const auto& [rc, v] : A.entries) rowdata[rc.first].emplace_back(rc.second, 0);
    // scale each row to integers (content removed); row scaling preserves rank
    std::vector<mpz_class> den(A.rows, 1);
    for (const auto& [rc, v] : A.entries)
      den[rc.first] = lcm(den[rc.first], v.get_den());
    std::vector<size_t> fill(A.rows, 0);
    for (const auto& [rc, v] : A.entries) {
      mpz_class num = v.get_num() * (den[rc.first] / v.get_den());
      rowdata[rc.first][fill[rc.first]++] = {rc.second, num};
    }
    for (auto& row : rowdata) {
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      mpz_class g = 0;
      for (auto& [c, x] : row) g = gcd(g, x);
      if (g > 1)
        for (auto& [c, x] : row) x /= g;
    }
    row_alive.assign(A.rows, true);
    col_count.assign(ncols, 0);
    for (int r = 0; r < A.rows; r++)
      for (auto& [c, x] : rowdata[r]) col_count[c]++;
  }

  void retire_row(int r) {
    row_alive[r] = false;
    for (auto& [c, x] : rowdata[r]) col_count[c]--;
    rowdata[r].clear();
  }

  const mpz_class* coeff(int r, int c) const {
    for (auto& [cc, x] : rowdata[r])
      if (cc == c) return &x;
    return nullptr;
  }

  // row_r := piv * row_r - f * row_p, then content removed; entries stay
  // integral throughout (fraction-free cross-multiplication)
  void combine(int r, int p, const mpz_class& piv, const mpz_class& f) {
    const auto& rp = rowdata[p];
    const auto& rr = rowdata[r];
    std::vector<std::pair<int, mpz_class>> out;
    out.reserve(rr.size() + rp.size());
    size_t i = 0, j = 0;
    mpz_class g = 0;
    while (i < rr.size() || j < rp.size()) {
      int cr = i < rr.size() ? rr[i].first : 1 << 30;
      int cp = j < rp.size() ? rp[j].first : 1 << 30;
      int c = std::min(cr, cp);
      mpz_class val = 0;
      if (cr == c) val += piv * rr[i++].second;
      if (cp == c) val -= f * rp[j++].second;
      if (val != 0) {
        g = gcd(g, val);
        out.emplace_back(c, val);
      }
    }
    if (g > 1)
      for (auto& [c, x] : out) x /= g;
    for (auto& [c, x] : rowdata[r]) col_count[c]--;
    for (auto& [c, x] : out) col_count[c]++;
    rowdata[r] = std::move(out);
  }
};

}  // namespace

long rank(const SparseRationalMatrix& A) {
  EliminationState st(A);
  long rk = 0;
  std::vector<int> row_count(A.rows, 0);
  for (int r = 0; r < A.rows; r++) row_count[r] = (int)st.rowdata[r].size();

  while (true) {
    // Markowitz pivot: minimize (nnz_row - 1) * (nnz_col - 1); singletons win
    int best_r = -1, best_c = -1;
    long best_score = -1;
    for (int r = 0; r < A.rows; r++) {
      if (!st.row_alive[r] || st.rowdata[r].empty()) continue;
      for (auto& [c, x] : st.rowdata[r]) {
        long score = (long)(st.rowdata[r].size() - 1) * (st.col_count[c] - 1);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best_r = r;
          best_c = c;
          if (score == 0) break;
        }
      }
      if (best_score == 0) break;
    }
    if (best_r < 0) break;

    rk++;
    mpz_class piv = *st.coeff(best_r, best_c);
    for (int r = 0; r < A.rows; r++) {
      if (r == best_r || !st.row_alive[r]) continue;
      const mpz_class* f = st.coeff(r, best_c);
      if (!f) continue;
      st.combine(r, best_r, piv, *f);
    }
    st.retire_row(best_r);
  }
  return rk;
}

SparseRationalMatrix hstack(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
  SparseRationalMatrix s(a.rows, a.cols + b.cols);
  s.entries = a.entries;
  for (const auto& [rc, v] : b.entries) s.entries[{rc.first, rc.second + a.cols}] = v;
  return s;
}

SparseRationalMatrix nullspace(const SparseRationalMatrix& A) {
  // row-echelon reduction over Q with column pivots, then back-substitution
  // for one kernel vector per free column
  std::vector<std::map<int, Rational>> rows;
  rows.reserve(A.rows);
  {
    std::map<int, std::map<int, Rational>> byrow;
    for (const auto& [rc, v] : A.entries) byrow[rc.first][rc.second] = v;
    for (auto& [r, row] : byrow) rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t lead = 0;
  for (int col = 0; col < A.cols && lead < rows.size(); col++) {
    size_t pr = lead;
    while (pr < rows.size()) {
      auto it = rows[pr].find(col);
      if (it != rows[pr].end() && it->second != 0) break;
      pr++;
    }
    if (pr == rows.size()) continue;
    std::swap(rows[lead], rows[pr]);
    Rational piv = rows[lead][col];
    for (size_t r = 0; r < rows.size(); r++) {
      if (r == lead) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second == 0) continue;
      Rational f = it->second / piv;
      for (const auto& [c2, v2] : rows[lead]) {
        auto jt = rows[r].find(c2);
        if (jt == rows[r].end()) {
          Rational nv = -f * v2;
          if (nv != 0) rows[r][c2] = nv;
        } else {
          jt->second -= f * v2;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
    }
    pivot_col.push_back(col);
    lead++;
  }
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; c++)
    if (!is_pivot[c]) free_cols.push_back(c);

  SparseRationalMatrix K(A.cols, (int)free_cols.size());
  for (int fc = 0; fc < (int)free_cols.size(); fc++) {
    int c = free_cols[fc];
    K.set(c, fc, 1);
    for (size_t r = 0; r < pivot_col.size(); r++) {
      auto it = rows[r].find(c);
      if (it == rows[r].end() || it->second == 0) continue;
      K.set(pivot_col[r], fc, -it->second / rows[r][pivot_col[r]]);
    }
  }
  return K;
}

void write_sms(std::ostream& os, const SparseRationalMatrix& A) {
  os << A.rows << " " << A.cols << " M\n";
  for (const auto& [rc, v] : A.entries)
    os << rc.first + 1 << " " << rc.second + 1 << " " << v.get_str() << "\n";
  os << "0 0 0\n";
}

SparseRationalMatrix read_sms(std::istream& is) {
  int r, c;
  std::string tag;
  if (!(is >> r >> c >> tag) || tag != "M")
    throw std::invalid_argument("read_sms: bad header");
  SparseRationalMatrix A(r, c);
  while (true) {
    long i, j;
    std::string val;
    if (!(is >> i >> j >> val)) throw std::invalid_argument("read_sms: truncated");
    if (i == 0 && j == 0 && val == "0") break;
    A.set((int)i - 1, (int)j - 1, Rational(val));
  }
  return A;
}

}  // namespace vgc
