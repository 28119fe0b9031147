#include "satk/root_datum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "satk/error.hpp"

namespace satk {

namespace {

constexpr std::size_t kRootClosureCap = 100000;

Int height(const IntVector& simple_coeffs) {
  Int h = 0;
  for (Int c : simple_coeffs) h += c;
  return h;
}

// Closes the simple roots (as unit vectors in simple-root coordinates) under
// the reflections r_i(c) = c - <c, i> e_i, where `pair(c, i)` is the pairing
// of the combination c with the i-th simple coroot (or root).
template <class Pair>
std::vector<IntVector> positive_closure(std::size_t s, Pair pair) {
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector e(s, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector c = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < s; ++i) {
      IntVector r = c;
      r[i] -= pair(c, i);
      if (seen.insert(r).second) {
        if (seen.size() > kRootClosureCap)
          throw DomainError("invalid-datum", "root closure exceeds size cap");
        queue.push_back(std::move(r));
      }
    }
  }
  std::vector<IntVector> positive;
  for (const auto& c : seen) {
    const bool nonneg = std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](Int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw DomainError("invalid-datum", "root of mixed sign");
    if (nonneg) positive.push_back(c);
  }
  std::sort(positive.begin(), positive.end(), [](const IntVector& a, const IntVector& b) {
    const Int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  return positive;
}

IntVector combine(const std::vector<IntVector>& basis, const IntVector& coeffs, std::size_t rank) {
  IntVector out(rank, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < rank; ++k) out[k] += coeffs[i] * basis[i][k];
  return out;
}

}  // namespace

std::size_t default_weyl_cap() {
  if (const char* env = std::getenv("SATK_WEYL_CAP")) {
    std::size_t value = 0;
    const std::string_view sv(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec == std::errc() && ptr == sv.data() + sv.size() && value > 0) return value;
  }
  return 1'000'000;
}

RootDatum::RootDatum(std::size_t rank, std::vector<IntVector> simple_roots,
                     std::vector<IntVector> simple_coroots, std::string label,
                     std::size_t weyl_cap)
    : rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      label_(std::move(label)) {
  validate();
  const std::size_t s = semisimple_rank();
  cartan_ = IntMatrix(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) cartan_(i, j) = dot(simple_roots_[i], simple_coroots_[j]);

  // Finite type: diagonal 2, off-diagonal <= 0 with symmetric zero pattern,
  // positive leading principal minors.
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j && cartan_(i, j) != 2)
        throw DomainError("invalid-datum", "Cartan matrix diagonal must be 2");
      if (i != j && (cartan_(i, j) > 0 || ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))))
        throw DomainError("invalid-datum", "Cartan matrix off-diagonal entries invalid");
    }
  for (std::size_t k = 1; k <= s; ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = cartan_(i, j);
    if (determinant(lead) <= 0)
      throw DomainError("invalid-datum", "Cartan matrix is not of finite type");
  }
  cartan_det_ = s == 0 ? 1 : determinant(cartan_);
  cartan_adj_ = s == 0 ? IntMatrix() : adjugate(cartan_);

  close_roots();
  generate_weyl(weyl_cap);
}

void RootDatum::validate() const {
  if (rank_ == 0) throw DomainError("invalid-datum", "rank must be positive");
  if (simple_roots_.size() != simple_coroots_.size())
    throw DomainError("invalid-datum", "simple roots and coroots differ in number");
  if (simple_roots_.size() > rank_)
    throw DomainError("invalid-datum", "semisimple rank exceeds rank");
  for (const auto& v : simple_roots_)
    if (v.size() != rank_) throw DomainError("invalid-datum", "simple root has wrong length");
  for (const auto& v : simple_coroots_)
    if (v.size() != rank_) throw DomainError("invalid-datum", "simple coroot has wrong length");
  if (!simple_roots_.empty()) {
    if (satk::rank(IntMatrix::from_columns(rank_, simple_roots_)) != simple_roots_.size())
      throw DomainError("invalid-datum", "simple roots are linearly dependent");
    if (satk::rank(IntMatrix::from_columns(rank_, simple_coroots_)) != simple_coroots_.size())
      throw DomainError("invalid-datum", "simple coroots are linearly dependent");
  }
}

void RootDatum::close_roots() {
  const std::size_t s = semisimple_rank();
  // In simple-root coordinates c, <sum c_j alpha_j, alpha_i^vee> = sum_j c_j C(j, i).
  auto root_pair = [&](const IntVector& c, std::size_t i) {
    Int v = 0;
    for (std::size_t j = 0; j < s; ++j) v += c[j] * cartan_(j, i);
    return v;
  };
  auto coroot_pair = [&](const IntVector& c, std::size_t i) {
    Int v = 0;
    for (std::size_t j = 0; j < s; ++j) v += cartan_(i, j) * c[j];
    return v;
  };
  for (const auto& c : positive_closure(s, root_pair))
    positive_roots_.push_back(combine(simple_roots_, c, rank_));
  for (const auto& c : positive_closure(s, coroot_pair))
    positive_coroots_.push_back(combine(simple_coroots_, c, rank_));
  if (positive_roots_.size() != positive_coroots_.size())
    throw DomainError("invalid-datum", "root and coroot systems differ in size");
}

void RootDatum::generate_weyl(std::size_t cap) {
  const std::size_t s = semisimple_rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < s; ++i) {
    IntMatrix m = IntMatrix::identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) m(r, c) -= simple_coroots_[i][r] * simple_roots_[i][c];
    gens.push_back(std::move(m));
  }

  std::map<IntVector, std::size_t> index;
  weyl_.push_back({IntMatrix::identity(rank_), {}});
  index.emplace(weyl_.front().matrix.data(), 0);
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (std::size_t i = 0; i < s; ++i) {
      IntMatrix m = gens[i] * weyl_[head].matrix;
      if (index.contains(m.data())) continue;
      if (weyl_.size() >= cap)
        throw DomainError("weyl-cap", "Weyl group generation exceeds cap of " + std::to_string(cap));
      std::vector<int> word;
      word.reserve(weyl_[head].word.size() + 1);
      word.push_back(static_cast<int>(i));
      word.insert(word.end(), weyl_[head].word.begin(), weyl_[head].word.end());
      index.emplace(m.data(), weyl_.size());
      weyl_.push_back({std::move(m), std::move(word)});
    }
  }

  // Breadth-first order: the last element has maximal length, and the
  // longest element is unique.
  longest_ = weyl_.size() - 1;
  if (weyl_.size() > 1 && weyl_[longest_ - 1].length() == weyl_[longest_].length())
    throw DomainError("invalid-datum", "longest Weyl element is not unique");

  Coweight two_rho_vee = Coweight::zero(rank_);
  for (const auto& b : positive_coroots_) two_rho_vee += Coweight(b);
  for (const auto& a : positive_roots_) {
    const IntVector image = act_on_weight(weyl_[longest_], a);
    if (dot(image, two_rho_vee.coords()) >= 0)
      throw DomainError("invalid-datum", "w_0 does not negate the positive roots");
  }
}

Int RootDatum::pairing(std::span<const Int> weight, const Coweight& coweight) const {
  if (weight.size() != rank_ || coweight.size() != rank_)
    throw std::invalid_argument("pairing: length does not match rank");
  return dot(weight, coweight.coords());
}

void RootDatum::check_length(const Coweight& c) const {
  if (c.size() != rank_)
    throw std::invalid_argument("coweight " + c.to_string() + " has length " +
                                std::to_string(c.size()) + ", expected " + std::to_string(rank_));
}

Coweight RootDatum::reflect(std::size_t i, const Coweight& c) const {
  const Int k = dot(simple_roots_[i], c.coords());
  Coweight out = c;
  for (std::size_t r = 0; r < rank_; ++r) out[r] -= k * simple_coroots_[i][r];
  return out;
}

IntVector RootDatum::reflect_weight(std::size_t i, std::span<const Int> x) const {
  const Int k = dot(x, simple_coroots_[i]);
  IntVector out(x.begin(), x.end());
  for (std::size_t r = 0; r < rank_; ++r) out[r] -= k * simple_roots_[i][r];
  return out;
}

Coweight RootDatum::act(const WeylElement& w, const Coweight& c) const {
  check_length(c);
  return Coweight(w.matrix.apply(c.coords()));
}

IntVector RootDatum::act_on_weight(const WeylElement& w, std::span<const Int> x) const {
  IntVector out(x.begin(), x.end());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = reflect_weight(static_cast<std::size_t>(*it), out);
  return out;
}

bool RootDatum::is_dominant(const Coweight& c) const {
  check_length(c);
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const IntVector& a) { return dot(a, c.coords()) >= 0; });
}

bool RootDatum::is_antidominant(const Coweight& c) const {
  check_length(c);
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const IntVector& a) { return dot(a, c.coords()) <= 0; });
}

std::pair<Coweight, WeylElement> RootDatum::dominate(const Coweight& c) const {
  check_length(c);
  Coweight cur = c;
  std::vector<int> applied;
  for (;;) {
    std::size_t i = 0;
    while (i < simple_roots_.size() && dot(simple_roots_[i], cur.coords()) >= 0) ++i;
    if (i == simple_roots_.size()) break;
    cur = reflect(i, cur);
    applied.push_back(static_cast<int>(i));
  }
  WeylElement w{IntMatrix::identity(rank_), {applied.rbegin(), applied.rend()}};
  for (int i : w.word) {
    IntMatrix m = IntMatrix::identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t k = 0; k < rank_; ++k) m(r, k) -= simple_coroots_[i][r] * simple_roots_[i][k];
    w.matrix = w.matrix * m;
  }
  return {std::move(cur), std::move(w)};
}

Int RootDatum::two_rho(const Coweight& c) const {
  check_length(c);
  Int s = 0;
  for (const auto& a : positive_roots_) s += dot(a, c.coords());
  return s;
}

std::optional<IntVector> RootDatum::coroot_coefficients(const Coweight& v) const {
  check_length(v);
  const std::size_t s = semisimple_rank();
  // Solve C c = b with b_j = <alpha_j, v>; then confirm sum c_i alpha_i^vee == v.
  IntVector b(s);
  for (std::size_t j = 0; j < s; ++j) b[j] = dot(simple_roots_[j], v.coords());
  IntVector c(s, 0);
  if (s > 0) {
    const IntVector num = cartan_adj_.apply(b);
    for (std::size_t i = 0; i < s; ++i) {
      if (num[i] % cartan_det_ != 0) return std::nullopt;
      c[i] = num[i] / cartan_det_;
    }
  }
  if (combine(simple_coroots_, c, rank_) != v.coords()) return std::nullopt;
  return c;
}

bool RootDatum::dominance_leq(const Coweight& lambda, const Coweight& mu) const {
  const auto c = coroot_coefficients(mu - lambda);
  return c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
}

std::vector<Coweight> RootDatum::strata_below(const Coweight& mu) const {
  if (!is_dominant(mu))
    throw DomainError("not-dominant", "coweight " + mu.to_string() + " is not dominant");
  // Dominant lambda < kappa are connected to kappa by a chain of dominant
  // coweights, each step subtracting one positive coroot.
  std::vector<Coweight> out{mu};
  std::set<Coweight> seen{mu};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Coweight kappa = out[head];
    const Int h = two_rho(kappa);
    for (const auto& beta : positive_coroots_) {
      Coweight next = kappa - Coweight(beta);
      if (!is_dominant(next) || seen.contains(next)) continue;
      if (two_rho(next) >= h) throw std::logic_error("strata_below: height failed to decrease");
      seen.insert(next);
      out.push_back(std::move(next));
    }
  }
  return out;
}

IntMatrix cartan_matrix(char type, std::size_t n) {
  auto bad = [&] {
    return DomainError("invalid-datum", std::string("invalid Cartan type ") + type + std::to_string(n));
  };
  IntMatrix a(n, n);
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based simple bond
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      if (n < 2) throw bad();
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a(2, 1) = -2;
      break;
    case 'G':
      if (n != 2) throw bad();
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return a;
}

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

IntVector diff_unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  e[i + 1] = -1;
  return e;
}

}  // namespace

RootDatum build_root_datum(std::string_view family, std::size_t n, std::size_t weyl_cap) {
  std::vector<IntVector> roots, coroots;
  if (family == "GL") {
    if (n < 1) throw DomainError("invalid-datum", "GL_n needs n >= 1");
    for (std::size_t i = 0; i + 1 < n; ++i) {
      roots.push_back(diff_unit(n, i));
      coroots.push_back(diff_unit(n, i));
    }
    return RootDatum(n, roots, coroots, "GL" + std::to_string(n), weyl_cap);
  }
  if (family == "T") {
    if (n < 1) throw DomainError("invalid-datum", "torus needs rank >= 1");
    return RootDatum(n, {}, {}, "T" + std::to_string(n), weyl_cap);
  }
  if (family == "Sp") {
    if (n < 2 || n % 2 != 0) throw DomainError("invalid-datum", "Sp_n needs even n >= 2");
    const std::size_t m = n / 2;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      roots.push_back(diff_unit(m, i));
      coroots.push_back(diff_unit(m, i));
    }
    IntVector last_root(m, 0), last_coroot(m, 0);
    last_root[m - 1] = 2;
    last_coroot[m - 1] = 1;
    roots.push_back(last_root);
    coroots.push_back(last_coroot);
    return RootDatum(m, roots, coroots, "Sp" + std::to_string(n), weyl_cap);
  }

  char type = 0;
  std::size_t type_rank = n;
  bool simply_connected = true;
  std::string label;
  if (family == "SL" || family == "PGL") {
    if (n < 2) throw DomainError("invalid-datum", std::string(family) + "_n needs n >= 2");
    type = 'A';
    type_rank = n - 1;
    simply_connected = family == "SL";
    label = std::string(family) + std::to_string(n);
  } else if ((family.starts_with("SC:") || family.starts_with("AD:")) && family.size() == 4) {
    type = family[3];
    simply_connected = family.starts_with("SC");
    label = std::string(family) + std::to_string(n);
  } else {
    throw DomainError("unknown-family", "unknown group family '" + std::string(family) + "'");
  }

  const IntMatrix a = cartan_matrix(type, type_rank);
  // C(i, j) = <alpha_i, alpha_j^vee> = a(j, i)
  for (std::size_t i = 0; i < type_rank; ++i) {
    IntVector row(type_rank), col(type_rank);
    for (std::size_t j = 0; j < type_rank; ++j) {
      row[j] = a(j, i);  // <alpha_i, alpha_j^vee>
      col[j] = a(i, j);  // <alpha_j, alpha_i^vee>
    }
    if (simply_connected) {
      roots.push_back(row);
      coroots.push_back(unit(type_rank, i));
    } else {
      roots.push_back(unit(type_rank, i));
      coroots.push_back(col);
    }
  }
  return RootDatum(type_rank, roots, coroots, label, weyl_cap);
}

RootDatum parse_group(std::string_view spec, std::size_t weyl_cap) {
  std::string_view family = spec;
  std::string_view digits;
  const auto pos = spec.find_first_of("0123456789");
  if (pos != std::string_view::npos) {
    family = spec.substr(0, pos);
    digits = spec.substr(pos);
  }
  // Accept "SC(G2)" as well as "SC:G2".
  std::string fam(family);
  if (fam.size() == 4 && (fam.starts_with("SC(") || fam.starts_with("AD("))) fam[2] = ':';
  if (!digits.empty() && digits.back() == ')') digits.remove_suffix(1);

  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw DomainError("unknown-family", "cannot parse group '" + std::string(spec) + "'");
  return build_root_datum(fam, n, weyl_cap);
}

}  // namespace satk
