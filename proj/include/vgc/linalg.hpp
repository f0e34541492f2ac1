#pragma once

// Exact sparse linear algebra over arbitrary-precision rationals: the rank
// workhorse is fraction-free (Bareiss) elimination on integer-scaled rows
// with Markowitz pivoting and singleton pre-elimination.  SMS text I/O.

#include <iosfwd>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace vgc {

using Rational = mpq_class;

class SparseRationalMatrix {
 public:
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Rational> entries;  // no stored zeros

  SparseRationalMatrix() = default;
  SparseRationalMatrix(int r, int c) : rows(r), cols(c) {}

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  size_t nnz() const { return entries.size(); }

  SparseRationalMatrix transposed() const;

  // stack the rows of b below this matrix (column counts must agree)
  SparseRationalMatrix vstack(const SparseRationalMatrix& b) const;
};

// exact rank by fraction-free elimination with Markowitz-style pivoting
long rank(const SparseRationalMatrix& A);

// exact kernel basis (columns x with Ax = 0), as a matrix of column vectors
SparseRationalMatrix nullspace(const SparseRationalMatrix& A);

// columns of a stacked side by side
SparseRationalMatrix hstack(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

// SMS sparse matrix exchange format:
//   "<rows> <cols> M" header, "<i> <j> <value>" one-based entries,
//   "0 0 0" terminator
void write_sms(std::ostream& os, const SparseRationalMatrix& A);
SparseRationalMatrix read_sms(std::istream& is);

}  // namespace vgc
