#include "satk/schubert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "satk/error.hpp"

namespace satk {

namespace {

void require_dominant(const RootDatum& d, const Coweight& mu) {
  if (!d.is_dominant(mu))
    throw DomainError("not-dominant", "coweight " + mu.to_string() + " is not dominant");
}

}  // namespace

Int dim_orbit(const RootDatum& d, const Coweight& mu) {
  require_dominant(d, mu);
  return d.two_rho(mu);
}

StratumReport closure_report(const RootDatum& d, const Coweight& mu) {
  StratumReport report;
  report.mu = mu;
  report.dim = dim_orbit(d, mu);
  for (const auto& lambda : d.strata_below(mu)) {
    const Int dl = d.two_rho(lambda);
    if (dl > report.dim || (dl == report.dim && lambda != mu))
      throw std::logic_error("closure_report: stratum " + lambda.to_string() + " too large");
    report.strata.push_back({lambda, dl, report.dim - dl});
  }
  std::sort(report.strata.begin(), report.strata.end(), [](const Stratum& a, const Stratum& b) {
    return a.dim != b.dim ? a.dim > b.dim : a.lambda < b.lambda;
  });
  report.component = component_class(d, mu);
  return report;
}

bool codim_at_least_two(const RootDatum& d, const Coweight& mu) {
  const Int top = dim_orbit(d, mu);
  for (const auto& lambda : d.strata_below(mu))
    if (lambda != mu && top - d.two_rho(lambda) < 2) return false;
  return true;
}

ComponentClassifier::ComponentClassifier(const RootDatum& d) {
  if (d.semisimple_rank() == 0) {
    left_ = IntMatrix::identity(d.rank());
    return;
  }
  SmithForm snf = smith_normal_form(IntMatrix::from_columns(d.rank(), d.simple_coroots()));
  left_ = std::move(snf.left);
  invariants_ = std::move(snf.invariants);
}

IntVector ComponentClassifier::operator()(const Coweight& mu) const {
  IntVector y = left_.apply(mu.coords());
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    const Int m = invariants_[i];
    if (m == 0) continue;
    y[i] = ((y[i] % m) + m) % m;
  }
  return y;
}

IntVector component_class(const RootDatum& d, const Coweight& mu) {
  d.check_length(mu);
  return ComponentClassifier(d)(mu);
}

std::vector<Coweight> dominant_coweights(const RootDatum& d, Int dim_bound, Int box) {
  std::vector<Coweight> out;
  const std::size_t n = d.rank();
  Coweight cur(IntVector(n, -box));
  for (;;) {
    if (d.is_dominant(cur) && d.two_rho(cur) <= dim_bound) out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < box) {
        ++cur[k];
        break;
      }
      cur[k] = -box;
      if (k == 0) return out;
    }
  }
}

bool parity_constant_on_component(const RootDatum& d, Int bound, Int box) {
  if (box < 0) box = bound;
  const ComponentClassifier classify(d);
  std::map<IntVector, Int> parity;
  for (const auto& mu : dominant_coweights(d, bound, box)) {
    const Int p = d.two_rho(mu) % 2;
    auto [it, inserted] = parity.emplace(classify(mu), p);
    if (!inserted && it->second != p) return false;
  }
  return true;
}

const char* to_string(Ext1Verdict v) {
  switch (v) {
    case Ext1Verdict::kVanishesGreater: return "greater";
    case Ext1Verdict::kVanishesEqual: return "equal";
    case Ext1Verdict::kVanishesIncomparable: return "incomparable";
    case Ext1Verdict::kNotGuaranteed: return "not-guaranteed";
  }
  return "unknown";
}

Ext1Verdict ext1_verdict(const RootDatum& d, const Coweight& mu, const Coweight& lambda) {
  require_dominant(d, mu);
  require_dominant(d, lambda);
  if (mu == lambda) return Ext1Verdict::kVanishesEqual;
  if (d.dominance_leq(lambda, mu)) return Ext1Verdict::kVanishesGreater;
  if (d.dominance_leq(mu, lambda)) return Ext1Verdict::kNotGuaranteed;
  return Ext1Verdict::kVanishesIncomparable;
}

bool ext1_vanishing_guaranteed(const RootDatum& d, const Coweight& mu, const Coweight& lambda) {
  return ext1_verdict(d, mu, lambda) != Ext1Verdict::kNotGuaranteed;
}

ConvolutionDim convolution_dim(const RootDatum& d, const std::vector<Coweight>& mus) {
  ConvolutionDim out{0, Coweight::zero(d.rank())};
  for (const auto& mu : mus) {
    out.dim += dim_orbit(d, mu);
    out.image += mu;
  }
  // The convolution morphism onto Gr_{<=sum mu_i} is birational.
  if (d.two_rho(out.image) != out.dim)
    throw std::logic_error("convolution_dim: image dimension mismatch");
  return out;
}

}  // namespace satk
