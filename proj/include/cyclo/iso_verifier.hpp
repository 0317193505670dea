#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/alpha.hpp"
#include "cyclo/char_gauss.hpp"
#include "cyclo/cyclo_ring.hpp"
#include "cyclo/fin_ab.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

struct CharacterSumEntry {
  unsigned level;
  std::vector<std::uint64_t> chi_exponents;
  CycloElem sum;
  bool unit;
};

/// Outcome of the three-condition test for Phi(alpha)_V to be an
/// isomorphism on every V killed by p^i.
struct CriterionReport {
  bool condition1;
  CycloElem value1;  // alpha(0)
  bool condition2;
  CycloElem value2;  // sum_{a=1}^{p-1} (alpha(a/p) - alpha(0))
  std::vector<CharacterSumEntry> condition3;
  bool overall;
};

/// Evaluates the three conditions exactly: alpha(0) is a unit;
/// sum_{a=1}^{p-1} (alpha(a/p) - alpha(0)) is a unit; and for every level
/// 1 <= r <= i and every primitive chi mod p^r,
/// sum_{t unit} chi(t)^-1 (alpha(t/p^r) - alpha(0)) is a unit.
/// The ring must carry the characters mod p^i.
CriterionReport criterion_check(const AlphaFunction& alpha, std::uint64_t p, unsigned i, const CycloRing& ring);

/// sum_{t unit mod p^r} chi(t) alpha^(t), alpha^ being the Fourier transform
/// of a -> alpha(a/p^r) on Z/p^r. The invertibility test before it is
/// rewritten through Gauss sums.
CycloElem transformed_character_sum(const AlphaFunction& alpha, const Character& chi);

/// Smallest conductor used for criterion checks at level i.
std::uint64_t criterion_conductor(std::uint64_t p, unsigned i);

/// det of the matrix of Phi(alpha)_V.
CycloElem phi_alpha_determinant(const FinAbGroup& group, const AlphaFunction& alpha, const CycloRing& ring);
/// Phi(alpha)_V is an isomorphism iff its determinant is a unit.
bool brute_force_iso(const FinAbGroup& group, const AlphaFunction& alpha, const CycloRing& ring);

struct OracleCompareOptions {
  std::uint64_t p = 2;
  unsigned r = 1;
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  /// Extra confirmation groups (exponent p^r, not cyclic) are drawn from
  /// groups of order at most this.
  std::uint64_t extra_order_cap = 32;
  unsigned jobs = 1;
};

/// Draws random alpha tables on Z/p^r from the pool {0, 1, 2, z, z - 1, p}
/// and compares the criterion verdict with the determinant verdict on
/// Z/p^r and on two further groups of exponent p^r. One check per sample.
std::vector<Check> criterion_oracle_compare(const OracleCompareOptions& opts);

/// Precomputed tables for checking many naturality squares V -> W.
class NaturalityChecker {
 public:
  NaturalityChecker(FinAbGroup source, FinAbGroup target, const AlphaFunction& alpha, const CycloRing& ring);
  /// Phi(alpha)_W([f(v)])(l) == Phi(alpha)_V([v])(f^#(l)) for all v, l.
  bool check(const GroupHom& f) const;

 private:
  FinAbGroup src_;
  FinAbGroup dst_;
  std::vector<std::uint32_t> src_class_;  // |V| x |V|: alpha-value class of <v, l>
  std::vector<std::uint32_t> dst_class_;  // |W| x |W|
};

bool naturality_check(const GroupHom& f, const AlphaFunction& alpha, const CycloRing& ring);

struct SweepOptions {
  std::uint64_t p = 2;
  std::uint64_t max_order = 32;
  /// Naturality is checked for all homs between groups up to this order.
  std::uint64_t naturality_max_order = 16;
  std::uint64_t hom_budget = std::uint64_t{1} << 20;
  bool dump_matrix = false;
  unsigned jobs = 1;
};

/// Every naturality square for the closed-form alpha, over all homs
/// between groups of order <= max_order; one check per pair (V, W).
std::vector<Check> naturality_sweep(std::uint64_t p, std::uint64_t max_order,
                                    std::uint64_t hom_budget = std::uint64_t{1} << 20, unsigned jobs = 1);

/// With alpha the closed-form 1/p^s -> 2 function: the determinant test on
/// every group up to max_order, then every naturality square between
/// groups up to naturality_max_order.
std::vector<Check> sweep_theorem(const SweepOptions& opts);

/// Psi o Phi and Phi o Psi on every basis vector of every p-group up to
/// max_order, one check per group.
std::vector<Check> fourier_inversion_sweep(std::uint64_t p, std::uint64_t max_order, unsigned jobs = 1);

}  // namespace cyclo
