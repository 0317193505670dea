#include <gtest/gtest.h>

#include <random>

#include "cyclo/errors.hpp"
#include "cyclo/char_gauss.hpp"
#include "cyclo/group_algebra.hpp"
#include "support.hpp"

using namespace cyclo;

namespace {

CycloRing ring_for(const FinAbGroup& g) { return CycloRing::make(std::max<std::uint64_t>(g.exponent(), 1), g.prime()); }

AlgElem random_alg(const FinAbGroup& g, const CycloRing& ring, std::mt19937_64& rng) {
  AlgElem x = alg_zero(g, ring);
  for (auto& c : x.coeffs) c = CycloElem(ring, static_cast<long>(rng() % 5) - 2);
  return x;
}

}  // namespace

TEST(GroupAlgebra, ConvolutionOfBasisVectorsAddsElements) {
  const auto g = FinAbGroup::parse("4+2");
  const auto ring = ring_for(g);
  const auto elems = elements(g);
  for (const auto& u : elems)
    for (const auto& v : elems)
      EXPECT_EQ(convolve(alg_basis(g, ring, u), alg_basis(g, ring, v)), alg_basis(g, ring, g.add(u, v)));
}

TEST(GroupAlgebra, FourierInversionOnBasisVectors) {
  for (std::uint64_t p : {2u, 3u}) {
    for (const auto& g : enumerate_groups(p, p == 2 ? 16 : 27)) {
      const auto ring = ring_for(g);
      for (const auto& v : elements(g)) EXPECT_EQ(psi(phi_eps(alg_basis(g, ring, v))), alg_basis(g, ring, v));
      for (const auto& l : dual_elements(g)) EXPECT_EQ(phi_eps(psi(fun_delta(g, ring, l))), fun_delta(g, ring, l));
    }
  }
}

TEST(GroupAlgebra, PhiEpsIsAnAlgebraMorphism) {
  std::mt19937_64 rng(29);
  for (const auto& g : enumerate_groups(2, 16)) {
    const auto ring = ring_for(g);
    for (int it = 0; it < 5; ++it) {
      const auto x = random_alg(g, ring, rng), y = random_alg(g, ring, rng);
      EXPECT_EQ(phi_eps(convolve(x, y)), pointwise(phi_eps(x), phi_eps(y)));
    }
  }
  const auto g = FinAbGroup::parse("9");
  const auto ring = ring_for(g);
  for (int it = 0; it < 5; ++it) {
    const auto x = random_alg(g, ring, rng), y = random_alg(g, ring, rng);
    EXPECT_EQ(phi_eps(convolve(x, y)), pointwise(phi_eps(x), phi_eps(y)));
  }
}

TEST(GroupAlgebra, PhiEpsMatrixAgreesWithPhiEps) {
  const auto g = FinAbGroup::parse("4+2");
  const auto ring = ring_for(g);
  const auto m = phi_eps_matrix(g, ring);
  const auto elems = elements(g);
  for (std::size_t v = 0; v < elems.size(); ++v) {
    const auto f = phi_eps(alg_basis(g, ring, elems[v]));
    for (std::size_t l = 0; l < elems.size(); ++l) EXPECT_EQ(m(l, v), f.values[l]);
  }
}

TEST(GroupAlgebra, EpsilonTableGivesTheSameMatrix) {
  for (const auto& g : enumerate_groups(3, 27)) {
    if (g.order() == 1) continue;
    const auto ring = CycloRing::make(27, 3);
    EXPECT_EQ(phi_eps_matrix(g, ring), phi_alpha_matrix(g, epsilon_alpha(ring, 3), ring)) << g.to_string();
  }
}

TEST(GroupAlgebra, FourierNeedsPInverted) {
  const auto g = FinAbGroup::cyclic(2, 1);
  const auto ring = CycloRing::make(2, 3);
  EXPECT_THROW(fourier_hat(fun_delta(g, ring, DualElem{{1}})), UsageError);
  EXPECT_THROW(phi_eps_matrix(FinAbGroup::cyclic(2, 2), CycloRing::make(2, 2)), UsageError);
}

TEST(GroupAlgebra, UnitTestAgreesWithConvolutionDeterminant) {
  std::mt19937_64 rng(31);
  int units = 0, total = 0;
  for (const char* name : {"2", "4", "2+2", "3", "9"}) {
    const auto g = FinAbGroup::parse(name);
    const auto ring = ring_for(g);
    for (int it = 0; it < 25; ++it) {
      AlgElem x = random_alg(g, ring, rng);
      // Bias towards units: a basis vector plus a small multiple of p-power noise.
      if (it % 3 == 0) {
        x = alg_basis(g, ring, GroupElem{g.coords_at(rng() % g.order())});
        x.coeffs[rng() % g.order()] += CycloElem(ring, static_cast<long>(g.prime()));
      }
      const bool oracle = is_unit(determinant(convolution_matrix(x)));
      EXPECT_EQ(is_unit_group_algebra(x), oracle) << name;
      units += oracle;
      ++total;
    }
  }
  EXPECT_GE(total, 100);
  EXPECT_GT(units, 10);
  EXPECT_LT(units, total);
}

TEST(GroupAlgebra, ConvolutionMatrixExamples) {
  const auto g = FinAbGroup::parse("4");
  const auto ring = ring_for(g);
  const auto one = convolution_matrix(alg_basis(g, ring, GroupElem{{0}}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(one(i, j), CycloElem(ring, i == j ? 1L : 0L));
  const auto shift = convolution_matrix(alg_basis(g, ring, GroupElem{{1}}));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(shift((j + 1) % 4, j), CycloElem(ring, 1L));
}

TEST(GroupAlgebra, SmallUnitExamples) {
  const auto g = FinAbGroup::parse("3");
  const auto ring = ring_for(g);
  AlgElem x = alg_basis(g, ring, GroupElem{{0}});
  EXPECT_TRUE(is_unit_group_algebra(x));
  x.coeffs[1] = CycloElem(ring, -1L);
  EXPECT_FALSE(is_unit_group_algebra(x));  // augmentation 0
}

TEST(MonoidAlgebra, Examples) {
  const auto ring = CycloRing::make(4, 2);
  std::vector<CycloElem> c(4, CycloElem(ring));
  c[1] = CycloElem(ring, 1L);
  EXPECT_TRUE(is_unit_monoid_algebra(2, 2, c));
  c[1] = CycloElem(ring);
  c[2] = CycloElem(ring, 1L);
  EXPECT_FALSE(is_unit_monoid_algebra(2, 2, c));
  c[1] = CycloElem(ring, 1L);
  EXPECT_TRUE(is_unit_monoid_algebra(2, 2, c));
}

TEST(MonoidAlgebra, AgreesWithMultiplicationMatrixDeterminant) {
  std::mt19937_64 rng(37);
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto n = ipow(p, r);
    const auto ring = CycloRing::make(gauss_conductor(p, r), p);
    int agree = 0;
    for (int it = 0; it < 30; ++it) {
      std::vector<CycloElem> c(n, CycloElem(ring));
      for (auto& x : c)
        if (rng() % 2) x = CycloElem(ring, static_cast<long>(rng() % 5) - 2);
      if (it % 3 == 0) {
        std::fill(c.begin(), c.end(), CycloElem(ring));
        c[1] = CycloElem(ring, 1L);
        c[rng() % n] += CycloElem(ring, static_cast<long>(p));
      }
      const bool oracle = is_unit(determinant(monoid_multiplication_matrix(p, r, c)));
      EXPECT_EQ(is_unit_monoid_algebra(p, r, c), oracle) << "N = " << n;
      agree += oracle;
    }
    EXPECT_GT(agree, 0) << "N = " << n;
  }
}
