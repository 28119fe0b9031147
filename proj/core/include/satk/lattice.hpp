#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace satk {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// An element of the cocharacter lattice X_*(T), in the coordinates of the
/// ambient root datum. Ordered lexicographically.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVector coords) : coords_(std::move(coords)) {}
  Coweight(std::initializer_list<Int> coords) : coords_(coords) {}

  static Coweight zero(std::size_t rank) { return Coweight(IntVector(rank, 0)); }

  std::size_t size() const noexcept { return coords_.size(); }
  const IntVector& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept;
  /// max_i |coords_i|
  Int sup_norm() const noexcept;

  Coweight& operator+=(const Coweight& other);
  Coweight& operator-=(const Coweight& other);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a);

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string to_string() const;

 private:
  IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const Coweight& c);

Int dot(std::span<const Int> a, std::span<const Int> b);

/// Dense row-major integer matrix; only what the root datum code needs.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const IntVector& data() const noexcept { return data_; }

  IntVector apply(std::span<const Int> v) const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

/// Adjugate matrix: adjugate(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Smith normal form data: `left * m * right = diag(invariants)` with
/// `left`, `right` unimodular and invariants nonnegative, each dividing the
/// next. Zero invariants (rank deficiency) come last.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntVector invariants;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace satk
