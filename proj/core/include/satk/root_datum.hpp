#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satk/lattice.hpp"

namespace satk {

/// An element of the finite Weyl group, acting on X_*(T).
///
/// `matrix` is the product s_{word[0]} * s_{word[1]} * ... of simple
/// reflection matrices, so the rightmost letter acts first.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  std::size_t length() const noexcept { return word.size(); }
};

/// Default bound on the Weyl group order, overridable with SATK_WEYL_CAP.
std::size_t default_weyl_cap();

/// Based root datum of a split reductive group.
///
/// X^*(T) and X_*(T) are both Z^rank with dual bases, so the pairing is the
/// dot product. Positive (co)roots, the Weyl group, and w_0 are computed
/// at construction; the object is immutable afterwards.
class RootDatum {
 public:
  RootDatum(std::size_t rank, std::vector<IntVector> simple_roots,
            std::vector<IntVector> simple_coroots, std::string label,
            std::size_t weyl_cap = default_weyl_cap());

  std::size_t rank() const noexcept { return rank_; }
  std::size_t semisimple_rank() const noexcept { return simple_roots_.size(); }
  const std::string& label() const noexcept { return label_; }
  const std::vector<IntVector>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const noexcept { return simple_coroots_; }
  /// cartan()(i, j) = <alpha_i, alpha_j^vee>
  const IntMatrix& cartan() const noexcept { return cartan_; }

  const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }
  const std::vector<IntVector>& positive_coroots() const noexcept { return positive_coroots_; }
  const std::vector<WeylElement>& weyl_group() const noexcept { return weyl_; }
  const WeylElement& longest_element() const noexcept { return weyl_[longest_]; }

  bool is_torus() const noexcept { return simple_roots_.empty(); }

  /// <weight, coweight>
  Int pairing(std::span<const Int> weight, const Coweight& coweight) const;

  /// Throws std::invalid_argument unless `c` has length rank().
  void check_length(const Coweight& c) const;

  /// s_i on X_*: y - <alpha_i, y> alpha_i^vee.
  Coweight reflect(std::size_t i, const Coweight& c) const;
  /// s_i on X^*: x - <x, alpha_i^vee> alpha_i.
  IntVector reflect_weight(std::size_t i, std::span<const Int> x) const;

  Coweight act(const WeylElement& w, const Coweight& c) const;
  IntVector act_on_weight(const WeylElement& w, std::span<const Int> x) const;
  /// w_0(c)
  Coweight w0(const Coweight& c) const { return act(longest_element(), c); }

  bool is_dominant(const Coweight& c) const;
  bool is_antidominant(const Coweight& c) const;

  /// The dominant Weyl conjugate of `c` and an element w with w(c) equal to it.
  std::pair<Coweight, WeylElement> dominate(const Coweight& c) const;

  /// 2<rho, c> = sum over positive roots of <alpha, c>. Integral always.
  Int two_rho(const Coweight& c) const;

  /// Coefficients of `v` in the simple coroot basis when v is an integral
  /// combination of simple coroots; nullopt otherwise.
  std::optional<IntVector> coroot_coefficients(const Coweight& v) const;

  /// lambda <= mu  iff  mu - lambda is a nonnegative integral sum of simple coroots.
  bool dominance_leq(const Coweight& lambda, const Coweight& mu) const;

  /// All dominant lambda <= mu; mu itself first, then in order of discovery.
  /// Throws DomainError if mu is not dominant.
  std::vector<Coweight> strata_below(const Coweight& mu) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.simple_roots_ == b.simple_roots_ &&
           a.simple_coroots_ == b.simple_coroots_;
  }

 private:
  void validate() const;
  void close_roots();
  void generate_weyl(std::size_t cap);

  std::size_t rank_;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::string label_;

  IntMatrix cartan_;
  IntMatrix cartan_adj_;  // adjugate(cartan^T)
  Int cartan_det_ = 1;
  std::vector<IntVector> positive_roots_;
  std::vector<IntVector> positive_coroots_;
  std::vector<WeylElement> weyl_;
  std::size_t longest_ = 0;
};

/// Bourbaki Cartan matrix a_ij = <alpha_i^vee, alpha_j> of a finite type
/// (A..G) and rank.
IntMatrix cartan_matrix(char type, std::size_t n);

/// Builders for the named families: "GL", "SL", "PGL", "Sp" (n = 4),
/// "T" (torus of rank n), "SC:<type>" and "AD:<type>" (type like "G" with
/// n its rank).
RootDatum build_root_datum(std::string_view family, std::size_t n,
                           std::size_t weyl_cap = default_weyl_cap());

/// Parses labels like "GL2", "SL3", "PGL3", "Sp4", "T1", "SC:G2", "AD:B3".
RootDatum parse_group(std::string_view spec, std::size_t weyl_cap = default_weyl_cap());

}  // namespace satk
