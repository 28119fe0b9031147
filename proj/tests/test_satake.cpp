#include <gtest/gtest.h>

#include <atomic>
#include <functional>
#include <memory>
#include <set>
#include <thread>

#include "satk/error.hpp"
#include "satk/monoid.hpp"
#include "satk/satake.hpp"
#include "satk/schubert.hpp"
#include "support/oracles.hpp"

using namespace satk;
using satk::brute::uniform;

namespace {

const char* const kData[] = {"GL2", "GL3", "SL2", "Sp4", "PGL3", "SC:G2", "T2"};
const std::uint32_t kPrimes[] = {2, 3, 5};

SatakeAlgebra algebra(const char* label) { return SatakeAlgebra(std::make_shared<RootDatum>(parse_group(label))); }

template <class Tag>
ModPSum<Tag> random_element(std::uint32_t p, int max_terms, const std::function<Coweight()>& key) {
  ModPSum<Tag> x(p);
  const Int k = uniform(0, max_terms);
  for (Int i = 0; i < k; ++i) x.add_term(key(), uniform(1, p - 1));
  return x;
}

K0Element random_k0(const RootDatum& d, std::uint32_t p, Int box = 2) {
  return random_element<K0Tag>(p, 3, [&] { return brute::random_dominant(d, box); });
}

HeckeElement random_hecke(const RootDatum& d, std::uint32_t p, Int box = 2) {
  return random_element<HeckeTag>(p, 3, [&] { return brute::random_dominant(d, box); });
}

AntiDomElement random_antidom(const RootDatum& d, std::uint32_t p, Int box = 2) {
  return random_element<AntiDomTag>(p, 3, [&] { return d.w0(brute::random_dominant(d, box)); });
}

}  // namespace

TEST(K0, Examples) {
  const auto a = algebra("GL2");
  for (std::uint32_t p : kPrimes) {
    EXPECT_EQ(k0_mul(a.ic(Coweight{1, 0}, p), a.ic(Coweight{1, 0}, p)), a.ic(Coweight{2, 0}, p));
    const K0Element x = a.ic(Coweight{1, -1}, p) + a.ic(Coweight{3, 3}, p);
    EXPECT_EQ(k0_mul(a.ic(Coweight{0, 0}, p), x), x);
    EXPECT_EQ(k0_mul(x, a.ic(Coweight{1, 0}, p)), a.ic(Coweight{2, -1}, p) + a.ic(Coweight{4, 3}, p));
  }
  EXPECT_THROW(k0_mul(a.ic(Coweight{0, 0}, 2), a.ic(Coweight{0, 0}, 3)), DomainError);
  EXPECT_THROW(a.ic(Coweight{0, 1}, 2), DomainError);
  EXPECT_THROW(a.ic(Coweight{0, 0}, 4), DomainError);
}

TEST(K0, HDim) {
  const auto a = algebra("GL2");
  EXPECT_EQ(h_dim(a.ic(Coweight{1, -1}, 3)), 1);
  EXPECT_EQ(h_dim(K0Element(5)), 0);
  EXPECT_EQ(h_dim(a.ic(Coweight{1, 0}, 5) + a.ic(Coweight{0, 0}, 5).scaled(2)), 3);
}

TEST(K0, HDimMultiplicativeBelowP) {
  const RootDatum d = parse_group("GL3");
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = 5;
    const K0Element x = random_k0(d, p), y = random_k0(d, p);
    if (h_dim(x) * h_dim(y) >= p) continue;
    EXPECT_EQ(h_dim(k0_mul(x, y)), h_dim(x) * h_dim(y));
  }
}

TEST(K0, RingAxioms) {
  for (const char* label : {"GL2", "GL3", "SL2", "Sp4"}) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (std::uint32_t p : kPrimes) {
      const K0Element one = a.ic(Coweight::zero(d.rank()), p);
      for (int trial = 0; trial < 100; ++trial) {
        const K0Element x = random_k0(d, p), y = random_k0(d, p), z = random_k0(d, p);
        EXPECT_EQ(k0_mul(x, y), k0_mul(y, x));
        EXPECT_EQ(k0_mul(k0_mul(x, y), z), k0_mul(x, k0_mul(y, z)));
        EXPECT_EQ(k0_mul(x, y + z), k0_mul(x, y) + k0_mul(x, z));
        EXPECT_EQ(k0_mul(one, x), x);
      }
    }
  }
}

TEST(K0, Comultiplication) {
  const auto a = algebra("GL2");
  const K0Tensor t = comultiplication(a.ic(Coweight{1, 0}, 3) + a.ic(Coweight{0, 0}, 3).scaled(2));
  ASSERT_EQ(t.terms.size(), 2u);
  EXPECT_EQ((t.terms.at({Coweight{1, 0}, Coweight{1, 0}})), 1u);
  EXPECT_EQ((t.terms.at({Coweight{0, 0}, Coweight{0, 0}})), 2u);
  EXPECT_TRUE(comultiplication(K0Element(3)).terms.empty());
}

TEST(TMap, Examples) {
  const auto a = algebra("GL2");
  EXPECT_EQ(a.t_map(a.ic(Coweight{1, 0}, 2)), a.tau(Coweight{1, 0}, 2));
  EXPECT_EQ(a.t_map(a.ic(Coweight{1, -1}, 2)), a.tau(Coweight{1, -1}, 2) + a.tau(Coweight{0, 0}, 2));
  EXPECT_EQ(a.t_map(a.ic(Coweight{0, 0}, 2)), a.tau(Coweight{0, 0}, 2));
  EXPECT_EQ(a.t_map_inverse(a.tau(Coweight{1, -1}, 3)), a.ic(Coweight{1, -1}, 3) - a.ic(Coweight{0, 0}, 3));
  EXPECT_EQ(a.t_map_inverse(a.tau(Coweight{0, 0}, 3)), a.ic(Coweight{0, 0}, 3));
}

TEST(TMap, MatchesBruteForceDefinition) {
  for (const char* label : {"GL2", "GL3", "Sp4", "SC:G2"}) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (const auto& mu : dominant_coweights(d, 10, 3)) {
      HeckeElement expected(7);
      Int box = 0;
      for (const auto& w : d.weyl_group()) box = std::max(box, d.act(w, mu).sup_norm());
      for (const auto& lambda : brute::box_points(d.rank(), box))
        if (brute::dominant_brute(d, lambda) && brute::in_coroot_cone_brute(d, mu - lambda, 12))
          expected.add_term(lambda, 1);
      EXPECT_EQ(a.t_map(a.ic(mu, 7)), expected) << label << mu;
    }
  }
}

TEST(Tau, NormalizesWeylConjugates) {
  const auto a = algebra("GL3");
  EXPECT_EQ(a.tau(Coweight{-1, 0, 2}, 2), a.tau(Coweight{2, 0, -1}, 2));
  EXPECT_EQ(a.tau(Coweight{0, 2, -1}, 2), a.tau(Coweight{2, 0, -1}, 2));
  EXPECT_EQ(a.tau(Coweight{0, 2, -1}, 2).terms().begin()->first, (Coweight{2, 0, -1}));
}

TEST(Alpha, Examples) {
  const auto gl2 = algebra("GL2");
  EXPECT_EQ(gl2.alpha_map(gl2.monomial(Coweight{-1, 1}, 2)), gl2.ic(Coweight{1, -1}, 2));
  EXPECT_EQ(gl2.alpha_map(gl2.monomial(Coweight{0, 0}, 2)), gl2.ic(Coweight{0, 0}, 2));
  const auto sl2 = algebra("SL2");
  EXPECT_EQ(sl2.alpha_map(sl2.monomial(Coweight{-3}, 5)), sl2.ic(Coweight{3}, 5));
  EXPECT_THROW(gl2.monomial(Coweight{1, -1}, 2), DomainError);
}

TEST(SatakeInverse, Examples) {
  const auto gl2 = algebra("GL2");
  EXPECT_EQ(gl2.satake_inverse(gl2.monomial(Coweight{-1, 1}, 2)), gl2.tau(Coweight{1, -1}, 2) + gl2.tau(Coweight{0, 0}, 2));
  EXPECT_EQ(gl2.satake_inverse(gl2.monomial(Coweight{0, 0}, 2)), gl2.tau(Coweight{0, 0}, 2));
  const auto sl2 = algebra("SL2");
  EXPECT_EQ(sl2.satake_inverse(sl2.monomial(Coweight{-2}, 2)),
            sl2.tau(Coweight{2}, 2) + sl2.tau(Coweight{1}, 2) + sl2.tau(Coweight{0}, 2));
  EXPECT_EQ(gl2.satake_transform(gl2.tau(Coweight{1, -1}, 3)),
            gl2.monomial(Coweight{-1, 1}, 3) - gl2.monomial(Coweight{0, 0}, 3));
  EXPECT_EQ(gl2.satake_transform(gl2.tau(Coweight{0, 0}, 3)), gl2.monomial(Coweight{0, 0}, 3));
}

TEST(SatakeInverse, MatchesAntiDominantBoxScan) {
  for (const char* label : {"GL2", "GL3", "SL3", "Sp4", "SC:G2"}) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (const auto& dom : dominant_coweights(d, 10, 3)) {
      const Coweight mu = d.w0(dom);
      HeckeElement expected(3);
      Int box = 0;
      for (const auto& w : d.weyl_group()) box = std::max(box, d.act(w, mu).sup_norm());
      for (const auto& lambda : brute::box_points(d.rank(), box)) {
        if (!brute::dominant_brute(d, -lambda)) continue;  // -lambda dominant iff lambda anti-dominant
        if (brute::in_coroot_cone_brute(d, lambda - mu, 12)) expected.add_term(d.w0(lambda), 1);
      }
      EXPECT_EQ(a.satake_inverse(a.monomial(mu, 3)), expected) << label << mu;
    }
  }
}

TEST(SatakeInverse, FactorsThroughK0) {
  for (const char* label : kData) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (std::uint32_t p : kPrimes)
      for (const auto& dom : dominant_coweights(d, 12, 4)) {
        const AntiDomElement m = a.monomial(d.w0(dom), p);
        EXPECT_EQ(a.satake_inverse(m), a.t_map(a.alpha_map(m))) << label << dom;
      }
  }
}

TEST(RoundTrips, RandomElements) {
  for (const char* label : kData) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (std::uint32_t p : kPrimes)
      for (int trial = 0; trial < 100; ++trial) {
        const K0Element x = random_k0(d, p);
        EXPECT_EQ(a.t_map_inverse(a.t_map(x)), x);
        const HeckeElement f = random_hecke(d, p);
        EXPECT_EQ(a.t_map(a.t_map_inverse(f)), f);
        EXPECT_EQ(a.satake_inverse(a.satake_transform(f)), f);
        const AntiDomElement m = random_antidom(d, p);
        EXPECT_EQ(a.satake_transform(a.satake_inverse(m)), m);
        EXPECT_EQ(a.alpha_inverse(a.alpha_map(m)), m);
      }
  }
}

TEST(HeckeMul, Examples) {
  const auto gl2 = algebra("GL2");
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const HeckeElement t10 = gl2.tau(Coweight{1, 0}, p);
    // Lattice counts 1 and q + 1 with q a power of p.
    EXPECT_EQ(gl2.hecke_mul(t10, t10), gl2.tau(Coweight{2, 0}, p) + gl2.tau(Coweight{1, 1}, p));
  }
  const auto sl2 = algebra("SL2");
  // T^{-1}(tau_1) = [IC_1] - [IC_0], so tau_1^2 = T([IC_2] - 2[IC_1] + [IC_0]) = tau_2 - tau_1.
  for (std::uint32_t p : kPrimes) {
    const HeckeElement t1 = sl2.tau(Coweight{1}, p);
    EXPECT_EQ(sl2.hecke_mul(t1, t1), sl2.tau(Coweight{2}, p) - sl2.tau(Coweight{1}, p));
    EXPECT_EQ(sl2.hecke_mul(t1, t1), sl2.hecke_mul_via_k0(t1, t1));
  }
  EXPECT_THROW(gl2.hecke_mul(gl2.tau(Coweight{0, 0}, 2), gl2.tau(Coweight{0, 0}, 3)), DomainError);
}

TEST(HeckeMul, TwoPathsAgreeAndAlgebraLaws) {
  for (const char* label : kData) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (std::uint32_t p : kPrimes) {
      const HeckeElement one = a.tau(Coweight::zero(d.rank()), p);
      for (int trial = 0; trial < 60; ++trial) {
        const HeckeElement f = random_hecke(d, p), g = random_hecke(d, p), h = random_hecke(d, p);
        const HeckeElement fg = a.hecke_mul(f, g);
        EXPECT_EQ(fg, a.hecke_mul_via_k0(f, g)) << label;
        EXPECT_EQ(fg, a.hecke_mul(g, f)) << label;
        EXPECT_EQ(a.hecke_mul(fg, h), a.hecke_mul(f, a.hecke_mul(g, h))) << label;
        EXPECT_EQ(a.hecke_mul(one, f), f);
        const K0Element x = random_k0(d, p), y = random_k0(d, p);
        EXPECT_EQ(a.t_map(k0_mul(x, y)), a.hecke_mul(a.t_map(x), a.t_map(y))) << label;
        const AntiDomElement m = random_antidom(d, p), n = random_antidom(d, p);
        EXPECT_EQ(a.satake_inverse(antidom_mul(m, n)), a.hecke_mul(a.satake_inverse(m), a.satake_inverse(n)));
      }
    }
  }
}

TEST(Mobius, Examples) {
  const auto gl2 = algebra("GL2");
  EXPECT_EQ(gl2.mobius(Coweight{1, -1}, Coweight{1, -1}, Cone::kDominant), 1);
  EXPECT_EQ(gl2.mobius(Coweight{0, 0}, Coweight{1, -1}, Cone::kDominant), -1);
  EXPECT_EQ(gl2.mobius(Coweight{0, 0}, Coweight{2, -2}, Cone::kDominant), 0);
  EXPECT_EQ(gl2.mobius(Coweight{-1, 1}, Coweight{0, 0}, Cone::kAntiDominant), -1);
  EXPECT_THROW(gl2.mobius(Coweight{1, -1}, Coweight{0, 0}, Cone::kDominant), DomainError);
  EXPECT_THROW(gl2.mobius(Coweight{0, 1}, Coweight{1, 0}, Cone::kDominant), DomainError);
}

TEST(Mobius, MatchesGenericPosetOracle) {
  for (const char* label : {"GL3", "Sp4", "SC:G2", "SL3"}) {
    const auto a = algebra(label);
    const RootDatum& d = a.datum();
    for (const auto& top : dominant_coweights(d, 10, 3)) {
      Int box = 0;
      for (const auto& w : d.weyl_group()) box = std::max(box, d.act(w, top).sup_norm());
      std::vector<Coweight> interval;
      for (const auto& c : brute::box_points(d.rank(), box))
        if (brute::dominant_brute(d, c) && brute::in_coroot_cone_brute(d, top - c, 12)) interval.push_back(c);
      brute::PosetMobius oracle(interval, [&](const Coweight& x, const Coweight& y) {
        return brute::in_coroot_cone_brute(d, y - x, 12);
      });
      for (const auto& low : interval) {
        EXPECT_EQ(a.mobius(low, top, Cone::kDominant), oracle(low, top)) << label << low << top;
        EXPECT_EQ(a.mobius(d.w0(top), d.w0(low), Cone::kAntiDominant), oracle(low, top));
      }
    }
  }
  const auto gl3 = algebra("GL3");
  std::vector<Coweight> interval;
  for (const auto& c : brute::box_points(3, 3))
    if (brute::dominant_brute(gl3.datum(), c) && brute::in_coroot_cone_brute(gl3.datum(), Coweight{3, 0, 0} - c, 12))
      interval.push_back(c);
  EXPECT_EQ(interval.size(), 3u);
  brute::PosetMobius oracle(interval, [&](const Coweight& x, const Coweight& y) {
    return brute::in_coroot_cone_brute(gl3.datum(), y - x, 12);
  });
  EXPECT_EQ(gl3.mobius(Coweight{1, 1, 1}, Coweight{3, 0, 0}, Cone::kDominant), oracle(Coweight{1, 1, 1}, Coweight{3, 0, 0}));
}

TEST(Mobius, ConcurrentQueriesAreConsistent) {
  const auto reference = algebra("SC:G2");
  const auto shared = algebra("SC:G2");
  const auto tops = dominant_coweights(reference.datum(), 14, 4);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = 0; i < tops.size(); ++i) {
        const auto& top = tops[(i + static_cast<std::size_t>(t) * 7) % tops.size()];
        for (const auto& low : shared.datum().strata_below(top))
          if (shared.mobius(low, top, Cone::kDominant) != reference.mobius(low, top, Cone::kDominant))
            mismatches.fetch_add(1);
      }
    });
  for (auto& w : workers) w.join();
  EXPECT_EQ(mismatches.load(), 0);
}

TEST(Torus, MapsAreIdentityLike) {
  const auto a = algebra("T2");
  const Coweight mu{3, -2};
  EXPECT_EQ(a.t_map(a.ic(mu, 5)), a.tau(mu, 5));
  EXPECT_EQ(a.satake_inverse(a.monomial(mu, 5)), a.tau(mu, 5));
  EXPECT_EQ(a.hecke_mul(a.tau(mu, 5), a.tau(-mu, 5)), a.tau(Coweight{0, 0}, 5));
  EXPECT_TRUE(monoid_is_group(a.datum()));
}
