#include "satk/poly_matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "satk/error.hpp"

namespace satk {

namespace {

void trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

FqPoly FqPolyRing::monomial(FiniteField::Elem c, std::size_t k) const {
  if (c == 0) return {};
  FqPoly out(k + 1, 0);
  out[k] = c;
  return out;
}

FqPoly FqPolyRing::add(const FqPoly& a, const FqPoly& b) const {
  FqPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

FqPoly FqPolyRing::sub(const FqPoly& a, const FqPoly& b) const {
  FqPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

FqPoly FqPolyRing::mul(const FqPoly& a, const FqPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FqPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Int FqPolyRing::valuation(const FqPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return static_cast<Int>(i);
  return kInfinity;
}

PolyMatrix diagonal_powers(const FqPolyRing& ring, const IntVector& exponents) {
  PolyMatrix m(exponents.size());
  const Int low = exponents.empty() ? 0 : std::min<Int>(0, *std::min_element(exponents.begin(), exponents.end()));
  m.denominator = -low;
  for (std::size_t i = 0; i < m.n; ++i) m.at(i, i) = ring.monomial(1, static_cast<std::size_t>(exponents[i] - low));
  return m;
}

PolyMatrix multiply(const FqPolyRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("poly matrix size mismatch");
  PolyMatrix c(a.n);
  c.denominator = a.denominator + b.denominator;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) {
      FqPoly s;
      for (std::size_t k = 0; k < a.n; ++k) s = ring.add(s, ring.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = std::move(s);
    }
  return c;
}

namespace {

// Determinant of the submatrix on the given rows and columns (Laplace along
// the first row; sizes here are at most 4).
FqPoly minor_det(const FqPolyRing& ring, const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return ring.monomial(1, 0);
  if (k == 1) return m.at(rows[0], cols[0]);
  if (k == 2)
    return ring.sub(ring.mul(m.at(rows[0], cols[0]), m.at(rows[1], cols[1])),
                    ring.mul(m.at(rows[0], cols[1]), m.at(rows[1], cols[0])));
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  FqPoly det;
  for (std::size_t j = 0; j < k; ++j) {
    const FqPoly& head = m.at(rows[0], cols[j]);
    if (head.empty()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const FqPoly term = ring.mul(head, minor_det(ring, m, sub_rows, sub_cols));
    det = j % 2 ? ring.sub(det, term) : ring.add(det, term);
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

FqPoly determinant(const FqPolyRing& ring, const PolyMatrix& m) {
  const auto idx = all_indices(m.n);
  return minor_det(ring, m, idx, idx);
}

PolyMatrix adjugate(const FqPolyRing& ring, const PolyMatrix& m) {
  PolyMatrix adj(m.n);
  if (m.n == 1) {
    adj.at(0, 0) = ring.monomial(1, 0);
    return adj;
  }
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < m.n; ++r)
        if (r != i) rows.push_back(r);
      for (std::size_t c = 0; c < m.n; ++c)
        if (c != j) cols.push_back(c);
      FqPoly cof = minor_det(ring, m, rows, cols);
      if ((i + j) % 2) cof = ring.sub({}, cof);
      adj.at(j, i) = std::move(cof);
    }
  return adj;
}

IntVector smith_invariants(const FqPolyRing& ring, const PolyMatrix& m) {
  const std::size_t n = m.n;
  IntVector out;
  out.reserve(n);
  Int previous = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Int best = FqPolyRing::kInfinity;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      if (best == 0) return;
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (best == 0) return;
        best = std::min(best, FqPolyRing::valuation(minor_det(ring, m, rows, cols)));
      });
    });
    if (best == FqPolyRing::kInfinity) throw DomainError("singular-matrix", "matrix over F_q[t] is singular");
    out.push_back(best - previous - m.denominator);
    previous = best;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace satk
