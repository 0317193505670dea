#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyclo/cyclo_ring.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

struct UnitGenerator {
  std::uint64_t residue;
  std::uint64_t order;
};

/// (Z/p^r)^x as a product of cyclic groups on explicit generators:
/// p odd -> the smallest primitive root; p = 2, r >= 3 -> -1 and 5;
/// p = 2, r = 2 -> 3; p = 2, r = 1 -> no generators.
class UnitGroupStructure {
 public:
  /// Builds the generators and a full discrete-log table by enumeration,
  /// checking that the generated subgroup has order phi(p^r).
  UnitGroupStructure(std::uint64_t p, unsigned r);

  std::uint64_t prime() const { return p_; }
  unsigned level() const { return r_; }
  std::uint64_t modulus() const { return n_; }
  std::uint64_t order() const { return order_; }
  const std::vector<UnitGenerator>& generators() const { return gens_; }

  /// Exponents of t on the generators; t must be coprime to p.
  const std::vector<std::uint64_t>& log(std::uint64_t t) const;

 private:
  std::uint64_t p_;
  unsigned r_;
  std::uint64_t n_;
  std::uint64_t order_;
  std::vector<UnitGenerator> gens_;
  std::vector<std::vector<std::uint64_t>> log_;  // empty for non-units
};

UnitGroupStructure unit_group_generators(std::uint64_t p, unsigned r);

/// Character chi of (Z/p^r)^x with chi(g_j) = z_M^((M / ord g_j) k_j).
struct Character {
  std::shared_ptr<const UnitGroupStructure> structure;
  std::vector<std::uint64_t> exponents;
  CycloRing ring;

  bool is_trivial() const;
};

/// All phi(p^r) characters, exponent tuples in lexicographic order.
/// Throws UsageError if some generator order does not divide M.
std::vector<Character> enumerate_characters(std::uint64_t p, unsigned r, const CycloRing& ring);

/// k with chi(t) = z_M^k, k in [0, M).
std::uint64_t char_zeta_exponent(const Character& chi, std::uint64_t t);
/// chi(t); throws UsageError when p | t.
CycloElem char_eval(const Character& chi, std::int64_t t);

/// r = 1: nontrivial. r >= 2: chi(1 + p^(r-1)) != 1, i.e. chi does not
/// factor through (Z/p^(r-1))^x.
bool is_primitive(const Character& chi);

/// The character mod p^(r-1) induced by an imprimitive chi mod p^r (r >= 2).
Character reduce_character(const Character& chi);

/// G(chi, eps_u) = sum_{t unit} chi(t) exp(2 pi i t u / p^r).
CycloElem gauss_sum(const Character& chi, std::int64_t u);
/// G(chi, tau) for tau given by its values tau(0), ..., tau(p^r - 1).
CycloElem gauss_sum(const Character& chi, std::span<const CycloElem> tau);

/// Smallest conductor holding every chi(t), eps_u(t) and their products:
/// p^r (p - 1) for odd p, max(2^r, 4) for p = 2.
std::uint64_t gauss_conductor(std::uint64_t p, unsigned r);

/// For every character and every u in [0, p^r), checks the identity that
/// applies (primitive: unit + twist relation or vanishing; imprimitive:
/// vanishing, recursion to level r-1, or the explicit r = 1 values), plus
/// the vanishing of sum_t chi(t) for nontrivial chi.
std::vector<Check> check_gauss_identities(std::uint64_t p, unsigned r, const CycloRing& ring, unsigned jobs = 1);

}  // namespace cyclo
