#pragma once

#include <vector>

#include "satk/lattice.hpp"
#include "satk/root_datum.hpp"

namespace satk {

/// dim Gr_mu = 2<rho, mu>. Throws DomainError for non-dominant mu.
Int dim_orbit(const RootDatum& d, const Coweight& mu);

struct Stratum {
  Coweight lambda;
  Int dim = 0;
  Int codim = 0;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Stratification of Gr_{<=mu}.
struct StratumReport {
  Coweight mu;
  Int dim = 0;
  std::vector<Stratum> strata;  // by decreasing dim, then lexicographic
  IntVector component;
};

StratumReport closure_report(const RootDatum& d, const Coweight& mu);

/// Every proper stratum of Gr_{<=mu} has codimension >= 2.
bool codim_at_least_two(const RootDatum& d, const Coweight& mu);

/// Canonical residues of coweights modulo the coroot lattice, read off a
/// Smith basis: coordinates (y_i mod d_i) for the torsion-free part of the
/// span and y_i verbatim beyond it. Two coweights lie in the same connected
/// component of Gr iff their classes agree.
class ComponentClassifier {
 public:
  explicit ComponentClassifier(const RootDatum& d);
  IntVector operator()(const Coweight& mu) const;

 private:
  IntMatrix left_;
  IntVector invariants_;
};

IntVector component_class(const RootDatum& d, const Coweight& mu);

/// Dominant coweights with sup-norm <= box and 2<rho, mu> <= dim_bound, in
/// lexicographic order. The box is needed because central directions
/// contribute nothing to the dimension.
std::vector<Coweight> dominant_coweights(const RootDatum& d, Int dim_bound, Int box);

/// Checks that dimensions of strata have constant parity on each connected
/// component, over dominant_coweights(d, bound, box). `box` defaults to `bound`.
bool parity_constant_on_component(const RootDatum& d, Int bound, Int box = -1);

enum class Ext1Verdict {
  kVanishesGreater,       // mu > lambda
  kVanishesEqual,         // mu == lambda
  kVanishesIncomparable,  // neither mu <= lambda nor lambda <= mu
  kNotGuaranteed,         // mu < lambda
};

const char* to_string(Ext1Verdict v);

Ext1Verdict ext1_verdict(const RootDatum& d, const Coweight& mu, const Coweight& lambda);

/// Whether Ext^1(IC_mu, IC_lambda) is known to vanish.
bool ext1_vanishing_guaranteed(const RootDatum& d, const Coweight& mu, const Coweight& lambda);

struct ConvolutionDim {
  Int dim = 0;
  Coweight image;
};

/// Dimension of the convolution Grassmannian over mu_1, ..., mu_k, and the
/// stratum sum(mu_i) it resolves. An empty list gives dim 0 and image 0.
ConvolutionDim convolution_dim(const RootDatum& d, const std::vector<Coweight>& mus);

}  // namespace satk
