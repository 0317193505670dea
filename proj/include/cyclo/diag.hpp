#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/matrix.hpp"
#include "cyclo/mod_ring.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

/// Whether Z/m[Z/n] (or Z/m[V]) is isomorphic to a product of copies of Z/m.
struct DiagVerdict {
  bool decision = false;
  /// A root of Phi_n mod m, present iff decision is true.
  std::optional<std::uint64_t> witness;
  /// "n-not-invertible" or "no-cyclotomic-root" when decision is false.
  std::string reason;
  std::uint64_t n = 1;
  std::uint64_t modulus = 2;

  Json to_json() const;
};

/// n must be a unit mod m and Phi_n must have a root in Z/m. The witness is
/// the smallest root.
DiagVerdict decide_diag_cyclic(std::uint64_t n, std::uint64_t m);

/// V given by its cyclic orders; decided through its exponent lcm(orders).
DiagVerdict decide_diag_group(const std::vector<std::uint64_t>& orders, std::uint64_t m);

struct VandermondeCheck {
  ModMatrix matrix;         // (xi^(ij)), i, j in [0, n)
  ModElem det;
  bool det_unit;
  bool differences_unit;    // xi^i - xi^j is a unit for i != j
  bool factorization;       // X^n - 1 = prod_i (X - xi^i) mod m

  bool ok() const { return det_unit && differences_unit && factorization; }
};

/// Builds the evaluation matrix at the powers of xi and checks that it is
/// an isomorphism Z/m[Z/n] -> (Z/m)^n. n is limited to 20.
VandermondeCheck vandermonde_iso(std::uint64_t n, std::uint64_t m, std::uint64_t xi);

/// (f(xi^0), ..., f(xi^(n-1))) mod m for f given constant term first.
std::vector<std::uint64_t> evaluate_at_powers(const std::vector<std::uint64_t>& f, std::uint64_t n, std::uint64_t m,
                                              std::uint64_t xi);

/// All x in [0, m) with x^2 = x mod m, ascending.
std::vector<std::uint64_t> idempotents_mod(std::uint64_t m);

/// The nonzero atoms prod_{e in S} e * prod_{e not in S} (1 - e) over all
/// subsets S of X, ascending. Throws UsageError on a non-idempotent input
/// and InternalError if the result is not a complete set spanning X.
std::vector<std::uint64_t> complete_idempotent_set(const std::vector<std::uint64_t>& xs, std::uint64_t m);

/// Nonzero idempotents, pairwise orthogonal, summing to 1.
bool is_complete_idempotent_set(const std::vector<std::uint64_t>& atoms, std::uint64_t m);
/// x is the sum of the atoms a with a x = a.
bool is_sum_of_atoms(std::uint64_t x, const std::vector<std::uint64_t>& atoms, std::uint64_t m);

/// Number of idempotents of Z/m[Z/n] by exhaustive search. Throws
/// BudgetExceeded when m^n exceeds the budget.
std::uint64_t count_idempotents_group_algebra(std::uint64_t m, std::uint64_t n, std::uint64_t budget);

/// CYCLO_BUDGET from the environment, else 10^7.
std::uint64_t default_budget();

}  // namespace cyclo
