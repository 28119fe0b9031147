#include "satk/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace satk {

bool Coweight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

Int Coweight::sup_norm() const noexcept {
  Int m = 0;
  for (Int x : coords_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

Coweight& Coweight::operator+=(const Coweight& other) {
  if (other.size() != size()) throw std::invalid_argument("coweight length mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& other) {
  if (other.size() != size()) throw std::invalid_argument("coweight length mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Coweight operator-(Coweight a) {
  for (Int& x : a.coords_) x = -x;
  return a;
}

std::string Coweight::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Coweight& c) {
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os << ')';
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

// Fraction-free elimination; returns (rank, signed determinant when square).
std::pair<std::size_t, Int> bareiss(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  Int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  Int det = 0;
  if (rows == cols && r == rows) det = sign * a(rows - 1, cols - 1);
  return {r, det};
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss(m).second;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).first; }

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const Int cof = ((i + j) % 2 ? -1 : 1) * determinant(minor);
      adj(j, i) = cof;
    }
  return adj;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(left(i, c), left(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(right(r, i), right(r, j));
  };
  // row_i -= q * row_j
  auto row_axpy = [&](std::size_t i, std::size_t j, Int q) {
    for (std::size_t c = 0; c < cols; ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < rows; ++c) left(i, c) -= q * left(j, c);
  };
  auto col_axpy = [&](std::size_t i, std::size_t j, Int q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, i) -= q * a(r, j);
    for (std::size_t r = 0; r < cols; ++r) right(r, i) -= q * right(r, j);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_axpy(i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_axpy(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out{std::move(left), std::move(right), IntVector(diag)};
  for (std::size_t t = 0; t < diag; ++t) out.invariants[t] = a(t, t);
  return out;
}

}  // namespace satk
