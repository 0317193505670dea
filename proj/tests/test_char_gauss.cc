#include <gtest/gtest.h>

#include "cyclo/char_gauss.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/fin_ab.hpp"
#include "cyclo/polynomial.hpp"

using namespace cyclo;

namespace {

struct Level {
  std::uint64_t p;
  unsigned r;
};

const std::vector<Level> kLevels = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};

CycloRing ring_for(const Level& l) { return CycloRing::make(gauss_conductor(l.p, l.r), l.p); }

}  // namespace

TEST(UnitGroup, Generators) {
  EXPECT_EQ(UnitGroupStructure(3, 2).generators().front().residue, 2u);
  EXPECT_EQ(UnitGroupStructure(7, 1).generators().front().residue, 3u);
  EXPECT_EQ(UnitGroupStructure(2, 1).generators().size(), 0u);
  const auto g4 = UnitGroupStructure(2, 2).generators();
  ASSERT_EQ(g4.size(), 1u);
  EXPECT_EQ(g4[0].residue, 3u);
  const auto g16 = UnitGroupStructure(2, 4).generators();
  ASSERT_EQ(g16.size(), 2u);
  EXPECT_EQ(g16[0].residue, 15u);
  EXPECT_EQ(g16[0].order, 2u);
  EXPECT_EQ(g16[1].residue, 5u);
  EXPECT_EQ(g16[1].order, 4u);
  EXPECT_THROW(UnitGroupStructure(6, 1), UsageError);
}

TEST(UnitGroup, DiscreteLogReconstructsResidues) {
  for (const auto& l : kLevels) {
    const UnitGroupStructure s(l.p, l.r);
    EXPECT_EQ(s.order(), euler_phi(s.modulus()));
    for (std::uint64_t t = 1; t < s.modulus(); ++t) {
      if (t % l.p == 0) {
        EXPECT_THROW(s.log(t), UsageError);
        continue;
      }
      std::uint64_t x = 1;
      const auto& k = s.log(t);
      for (std::size_t j = 0; j < k.size(); ++j)
        for (std::uint64_t i = 0; i < k[j]; ++i) x = x * s.generators()[j].residue % s.modulus();
      EXPECT_EQ(x, t);
    }
  }
}

TEST(Characters, CountsAndPrimitivity) {
  for (const auto& l : kLevels) {
    const auto chars = enumerate_characters(l.p, l.r, ring_for(l));
    const std::uint64_t n = ipow(l.p, l.r);
    EXPECT_EQ(chars.size(), euler_phi(n));
    std::size_t primitive = 0;
    for (const auto& c : chars) primitive += is_primitive(c);
    const std::uint64_t expected = l.r == 1 ? euler_phi(n) - 1 : euler_phi(n) - euler_phi(n / l.p);
    EXPECT_EQ(primitive, expected) << "N = " << n;
  }
}

TEST(Characters, AreMultiplicative) {
  for (const auto& l : kLevels) {
    const auto ring = ring_for(l);
    const auto n = static_cast<std::int64_t>(ipow(l.p, l.r));
    for (const auto& chi : enumerate_characters(l.p, l.r, ring))
      for (std::int64_t a = 1; a < n; ++a)
        for (std::int64_t b = 1; b < n; ++b) {
          if (a % static_cast<std::int64_t>(l.p) == 0 || b % static_cast<std::int64_t>(l.p) == 0) continue;
          ASSERT_EQ(char_eval(chi, a * b), char_eval(chi, a) * char_eval(chi, b));
        }
  }
}

TEST(Characters, SmallConductorIsRejected) {
  EXPECT_THROW(enumerate_characters(5, 1, CycloRing::make(5, 5)), UsageError);
  EXPECT_NO_THROW(enumerate_characters(2, 3, CycloRing::make(4, 2)));
}

TEST(Characters, ReductionAgreesOnUnits) {
  for (const auto& l : kLevels) {
    if (l.r < 2) continue;
    const auto ring = ring_for(l);
    const std::uint64_t low = ipow(l.p, l.r - 1);
    for (const auto& chi : enumerate_characters(l.p, l.r, ring)) {
      if (is_primitive(chi)) {
        EXPECT_THROW(reduce_character(chi), UsageError);
        continue;
      }
      const auto bar = reduce_character(chi);
      for (std::uint64_t t = 1; t < ipow(l.p, l.r); ++t)
        if (t % l.p != 0)
          EXPECT_EQ(char_eval(chi, static_cast<std::int64_t>(t)), char_eval(bar, static_cast<std::int64_t>(t % low)));
    }
  }
}

TEST(GaussSum, QuadraticModThree) {
  const auto ring = CycloRing::make(6, 3);
  const auto chars = enumerate_characters(3, 1, ring);
  ASSERT_EQ(chars.size(), 2u);
  // zeta_3 - zeta_3^2 with zeta_3 = zeta_6^2.
  EXPECT_EQ(gauss_sum(chars[1], 1), zeta_power(ring, 2) - zeta_power(ring, 4));
  EXPECT_EQ(gauss_sum(chars[0], 1), CycloElem(ring, -1L));
  EXPECT_EQ(gauss_sum(chars[0], 0), CycloElem(ring, 2L));
}

TEST(GaussSum, PrimitiveSumsHaveAbsoluteSquareN) {
  for (const auto& l : kLevels) {
    const auto ring = ring_for(l);
    const auto n = static_cast<long>(ipow(l.p, l.r));
    for (const auto& chi : enumerate_characters(l.p, l.r, ring)) {
      if (!is_primitive(chi)) continue;
      const auto g = gauss_sum(chi, 1);
      EXPECT_EQ(g * galois_conjugate(g, -1), CycloElem(ring, n));
    }
  }
}

TEST(GaussSum, TableFormMatchesEpsilonForm) {
  const Level l{3, 2};
  const auto ring = ring_for(l);
  const auto n = ipow(3, 2);
  for (std::uint64_t u = 0; u < n; ++u) {
    std::vector<CycloElem> tau;
    for (std::uint64_t t = 0; t < n; ++t)
      tau.push_back(zeta_power(ring, static_cast<std::int64_t>(t * u % n * (ring.conductor() / n))));
    for (const auto& chi : enumerate_characters(3, 2, ring))
      EXPECT_EQ(gauss_sum(chi, std::span<const CycloElem>(tau)), gauss_sum(chi, static_cast<std::int64_t>(u)));
  }
}

TEST(GaussSum, IdentitiesHold) {
  for (const auto& l : kLevels) {
    const auto checks = check_gauss_identities(l.p, l.r, ring_for(l));
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id << " " << c.witness.dump();
  }
}

TEST(GaussSum, IdentitiesHoldInALargerRing) {
  const auto checks = check_gauss_identities(3, 2, CycloRing::make(36, 3), 2);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id;
}

TEST(GaussSum, Conductor) {
  EXPECT_EQ(gauss_conductor(2, 1), 4u);
  EXPECT_EQ(gauss_conductor(2, 3), 8u);
  EXPECT_EQ(gauss_conductor(3, 2), 18u);
  EXPECT_EQ(gauss_conductor(5, 2), 100u);
}
