#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclo/errors.hpp"
#include "cyclo/group_algebra.hpp"
#include "cyclo/iso_verifier.hpp"

using namespace cyclo;

namespace {

std::vector<std::string> check_ids(const std::vector<Check>& checks, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.id.rfind(prefix, 0) == 0) out.push_back(c.id.substr(prefix.size()));
  return out;
}

AlphaFunction constant_alpha(std::uint64_t p, unsigned level, const CycloRing& ring, long v) {
  return AlphaFunction::tabulate(p, level, [&](const PadicCircle&) { return CycloElem(ring, v); });
}

}  // namespace

TEST(Alpha, TpzcValues) {
  const auto r2 = CycloRing::make(1, 2), r3 = CycloRing::make(1, 3);
  EXPECT_EQ(alpha_eval(AlphaFunction::tpzc(2), PadicCircle::zero(2), r2), CycloElem(r2, 1L));
  EXPECT_EQ(alpha_eval(AlphaFunction::tpzc(2), PadicCircle::make(2, 1, 2), r2), CycloElem(r2, 2L));
  EXPECT_EQ(alpha_eval(AlphaFunction::tpzc(2), PadicCircle::make(2, 3, 2), r2), CycloElem(r2, 1L));
  EXPECT_EQ(alpha_eval(AlphaFunction::tpzc(3), PadicCircle::make(3, 2, 1), r3), CycloElem(r3, 1L));
  EXPECT_EQ(alpha_eval(AlphaFunction::tpzc(3), PadicCircle::make(3, 1, 5), r3), CycloElem(r3, 2L));
}

TEST(Alpha, TableLookupAndLevel) {
  const auto ring = CycloRing::make(4, 2);
  const auto a = epsilon_alpha(ring, 2);
  EXPECT_EQ(alpha_eval(a, PadicCircle::make(2, 1, 1), ring), CycloElem(ring, -1L));
  EXPECT_EQ(alpha_eval(a, PadicCircle::make(2, 3, 2), ring), zeta_power(ring, 3));
  EXPECT_THROW(alpha_eval(a, PadicCircle::make(2, 1, 3), ring), UsageError);
  EXPECT_THROW(AlphaFunction::table(2, 2, {CycloElem(ring, 1L)}), UsageError);
  EXPECT_EQ(alpha_eval(a, PadicCircle::make(2, 1, 2), CycloRing::make(8, 2)), zeta_power(CycloRing::make(8, 2), 2));
}

TEST(Criterion, TpzcHoldsWithAllSumsOne) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto ring = CycloRing::make(criterion_conductor(p, 3), p);
    const auto rep = criterion_check(AlphaFunction::tpzc(p), p, 3, ring);
    EXPECT_TRUE(rep.overall);
    EXPECT_EQ(rep.value1, CycloElem(ring, 1L));
    EXPECT_EQ(rep.value2, CycloElem(ring, 1L));
    EXPECT_FALSE(rep.condition3.empty());
    for (const auto& e : rep.condition3) {
      EXPECT_EQ(e.sum, CycloElem(ring, 1L));
      EXPECT_TRUE(e.unit);
    }
  }
}

TEST(Criterion, ConstantOneFailsConditionTwo) {
  const auto ring = CycloRing::make(criterion_conductor(3, 2), 3);
  const auto rep = criterion_check(constant_alpha(3, 2, ring, 1), 3, 2, ring);
  EXPECT_TRUE(rep.condition1);
  EXPECT_FALSE(rep.condition2);
  EXPECT_TRUE(rep.value2.is_zero());
  EXPECT_FALSE(rep.overall);
}

TEST(Criterion, AlphaZeroEqualToPIsAUnit) {
  const auto ring = CycloRing::make(criterion_conductor(5, 1), 5);
  auto a = AlphaFunction::tabulate(5, 1, [&](const PadicCircle& x) { return CycloElem(ring, x.is_zero() ? 5L : 2L); });
  EXPECT_TRUE(criterion_check(a, 5, 1, ring).condition1);
}

TEST(Criterion, ConductorTooSmallIsRejected) {
  EXPECT_THROW(criterion_check(AlphaFunction::tpzc(3), 3, 2, CycloRing::make(9, 3)), UsageError);
}

TEST(Criterion, ConditionThreeCountsPrimitiveCharacters) {
  const auto ring = CycloRing::make(criterion_conductor(2, 3), 2);
  const auto rep = criterion_check(AlphaFunction::tpzc(2), 2, 3, ring);
  // None mod 2, one mod 4, two mod 8.
  EXPECT_EQ(rep.condition3.size(), 3u);
}

TEST(BruteForce, SmallCases) {
  const auto ring = CycloRing::make(1, 2);
  EXPECT_TRUE(brute_force_iso(FinAbGroup::parse("1", 2), AlphaFunction::tpzc(2), ring));
  EXPECT_EQ(phi_alpha_determinant(FinAbGroup::parse("1", 2), AlphaFunction::tpzc(2), ring), CycloElem(ring, 1L));
  const auto m = phi_alpha_matrix(FinAbGroup::parse("2"), AlphaFunction::tpzc(2), ring);
  EXPECT_EQ(m(0, 0), CycloElem(ring, 1L));
  EXPECT_EQ(m(1, 1), CycloElem(ring, 2L));
  EXPECT_TRUE(brute_force_iso(FinAbGroup::parse("4"), AlphaFunction::tpzc(2), ring));
}

TEST(BruteForce, TpzcDeterminants) {
  const std::vector<std::tuple<std::uint64_t, const char*, long>> cases = {
      {2, "2", 1}, {2, "4", -2}, {2, "2+2", -2}, {2, "8", 16}, {2, "4+2", -32},
      {3, "3", 1}, {3, "9", 9},  {3, "3+3", -27}};
  for (const auto& [p, name, det] : cases) {
    const auto ring = CycloRing::make(1, p);
    EXPECT_EQ(phi_alpha_determinant(FinAbGroup::parse(name), AlphaFunction::tpzc(p), ring), CycloElem(ring, det))
        << name;
  }
}

TEST(BruteForce, ZeroAlphaIsNotAnIso) {
  const auto ring = CycloRing::make(4, 2);
  EXPECT_FALSE(brute_force_iso(FinAbGroup::parse("4"), constant_alpha(2, 2, ring, 0), ring));
  EXPECT_FALSE(criterion_check(constant_alpha(2, 2, ring, 0), 2, 2, ring).overall);
}

TEST(BruteForce, EpsilonIsAnIsoAndPassesTheCriterion) {
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto ring = CycloRing::make(criterion_conductor(p, r), p);
    const auto eps = epsilon_alpha(ring, r);
    EXPECT_TRUE(brute_force_iso(FinAbGroup::cyclic(p, r), eps, ring));
    EXPECT_TRUE(criterion_check(eps, p, r, ring).overall);
  }
}

TEST(BruteForce, DeterminantIsInvariantUnderSimultaneousPermutation) {
  std::mt19937_64 rng(41);
  for (const char* name : {"4+2", "9", "3+3"}) {
    const auto g = FinAbGroup::parse(name);
    const auto ring = CycloRing::make(1, g.prime());
    const auto m = phi_alpha_matrix(g, AlphaFunction::tpzc(g.prime()), ring);
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CycloMatrix q = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(perm[i], perm[j]);
    EXPECT_EQ(determinant(q), determinant(m)) << name;
  }
}

TEST(BruteForce, IsomorphicPresentationsAgree) {
  EXPECT_EQ(FinAbGroup(2, {1, 2}), FinAbGroup(2, {2, 1}));
  const auto ring = CycloRing::make(1, 2);
  EXPECT_EQ(phi_alpha_determinant(FinAbGroup(2, {1, 2}), AlphaFunction::tpzc(2), ring),
            phi_alpha_determinant(FinAbGroup(2, {2, 1}), AlphaFunction::tpzc(2), ring));
}

TEST(OracleCompare, SeededSamplesAgree) {
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    OracleCompareOptions o;
    o.p = p;
    o.r = r;
    o.samples = 100;
    o.extra_order_cap = p == 2 ? 16 : 9;
    const auto checks = criterion_oracle_compare(o);
    ASSERT_EQ(checks.size(), 100u);
    std::size_t positives = 0;
    for (const auto& c : checks) {
      EXPECT_TRUE(c.pass) << c.id << " " << c.witness.dump();
      positives += c.witness["criterion"].get<bool>();
    }
    EXPECT_GT(positives, 0u);
    EXPECT_LT(positives, 100u);
  }
}

TEST(OracleCompare, SameSeedSameReport) {
  OracleCompareOptions o;
  o.p = 3;
  o.r = 1;
  o.samples = 20;
  o.seed = 9;
  const auto a = criterion_oracle_compare(o);
  o.jobs = 3;
  const auto b = criterion_oracle_compare(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].witness.dump(), b[i].witness.dump());
}

TEST(TransformedSum, ConditionTwoMatchesTheTrivialCharacter) {
  const auto ring = CycloRing::make(criterion_conductor(5, 1), 5);
  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    std::vector<CycloElem> v;
    for (int k = 0; k < 5; ++k) v.push_back(CycloElem(ring, static_cast<long>(rng() % 4)));
    const auto a = AlphaFunction::table(5, 1, v);
    const auto chi = enumerate_characters(5, 1, ring).front();
    const auto rep = criterion_check(a, 5, 1, ring);
    // The transformed sum is -1/p times the condition-2 sum.
    EXPECT_EQ(transformed_character_sum(a, chi), rep.value2.scaled(LocalizedInt(5, -1, 1)));
  }
}

TEST(Naturality, IdentityZeroAndAllHomsIntoKleinFour) {
  const auto ring = CycloRing::make(1, 2);
  const auto alpha = AlphaFunction::tpzc(2);
  const auto z4 = FinAbGroup::parse("4"), v4 = FinAbGroup::parse("2+2");
  EXPECT_TRUE(naturality_check(GroupHom::identity(z4), alpha, ring));
  EXPECT_TRUE(naturality_check(GroupHom::zero(z4, v4), alpha, ring));
  const auto homs = enumerate_homs(z4, v4);
  ASSERT_EQ(homs.size(), 4u);
  for (const auto& f : homs) EXPECT_TRUE(naturality_check(f, alpha, ring));
}

TEST(Naturality, HoldsForArbitraryTables) {
  const auto ring = CycloRing::make(4, 2);
  std::vector<CycloElem> v = {CycloElem(ring, 1L), CycloElem(ring, 2L), zeta_power(ring, 1), CycloElem(ring, 4L)};
  const auto alpha = AlphaFunction::table(2, 2, v);
  for (const char* w : {"4", "2+2", "2"})
    for (const auto& f : enumerate_homs(FinAbGroup::parse("4"), FinAbGroup::parse(w)))
      EXPECT_TRUE(naturality_check(f, alpha, ring)) << w;
}

TEST(Sweep, GroupListsAndVerdicts) {
  SweepOptions o;
  o.p = 2;
  o.max_order = 4;
  o.naturality_max_order = 4;
  auto checks = sweep_theorem(o);
  EXPECT_EQ(check_ids(checks, "iso/p=2/V="), (std::vector<std::string>{"1", "2", "4", "2+2"}));
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id;
  o.max_order = 1;
  o.naturality_max_order = 1;
  checks = sweep_theorem(o);
  EXPECT_EQ(check_ids(checks, "iso/p=2/V="), (std::vector<std::string>{"1"}));
  o.p = 3;
  o.max_order = 27;
  o.naturality_max_order = 9;
  checks = sweep_theorem(o);
  EXPECT_EQ(check_ids(checks, "iso/p=3/V=").size(), 7u);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id;
}

TEST(Sweep, DumpMatrixEmbedsMatrices) {
  SweepOptions o;
  o.p = 2;
  o.max_order = 2;
  o.naturality_max_order = 1;
  o.dump_matrix = true;
  const auto checks = sweep_theorem(o);
  EXPECT_EQ(checks[1].witness["matrix"].dump(), R"([[["1/2^0"],["1/2^0"]],[["1/2^0"],["2/2^0"]]])");
}

TEST(Sweep, FourierInversion) {
  for (const auto& c : fourier_inversion_sweep(5, 25)) EXPECT_TRUE(c.pass) << c.id;
}
