#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/alpha.hpp"
#include "cyclo/cyclo_ring.hpp"
#include "cyclo/fin_ab.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

/// Element of the group algebra k[V]; coeffs[i] multiplies [elements(V)[i]].
struct AlgElem {
  FinAbGroup group;
  std::vector<CycloElem> coeffs;
  friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

/// Element of k^(V^#); values[i] is the value at dual_elements(V)[i].
struct FunElem {
  FinAbGroup group;
  std::vector<CycloElem> values;
  friend bool operator==(const FunElem&, const FunElem&) = default;
};

AlgElem alg_zero(const FinAbGroup& group, const CycloRing& ring);
/// The basis vector [v].
AlgElem alg_basis(const FinAbGroup& group, const CycloRing& ring, const GroupElem& v);
FunElem fun_zero(const FinAbGroup& group, const CycloRing& ring);
/// Indicator function of the dual element l.
FunElem fun_delta(const FinAbGroup& group, const CycloRing& ring, const DualElem& l);

/// (x*y)(w) = sum_{u+v=w} x(u) y(v).
AlgElem convolve(const AlgElem& x, const AlgElem& y);
FunElem pointwise(const FunElem& f, const FunElem& g);

/// Exponent tables k(l, v) with eps(<v,l>) = z_M^k, row-major over
/// (dual index, element index). Throws UsageError unless exponent(V) | M.
std::vector<std::uint64_t> pairing_exponents(const FinAbGroup& group, std::uint64_t conductor);

/// Matrix of Phi_{V,eps}: rows are dual elements, columns group elements,
/// entry eps(<v,l>).
CycloMatrix phi_eps_matrix(const FinAbGroup& group, const CycloRing& ring);
/// Phi_{V,eps}(x) : l -> sum_v x(v) eps(<v,l>).
FunElem phi_eps(const AlgElem& x);

/// f^(v) = |V|^-1 sum_l f(l) eps(-<v,l>), indexed like elements(V).
/// Needs p = char. prime of V inverted in the ring and exponent(V) | M.
std::vector<CycloElem> fourier_hat(const FunElem& f);
/// Psi(f) = sum_v f^(v) [v], the inverse of phi_eps.
AlgElem psi(const FunElem& f);

/// Matrix of Phi(alpha)_V, entry alpha(<v,l>) in the same indexing as
/// phi_eps_matrix.
CycloMatrix phi_alpha_matrix(const FinAbGroup& group, const AlphaFunction& alpha, const CycloRing& ring);

/// Matrix of y -> x*y in the basis elements(V).
CycloMatrix convolution_matrix(const AlgElem& x);

/// x is invertible in k[V] iff every character sum sum_v x(v) eps(<v,l>)
/// is a unit.
bool is_unit_group_algebra(const AlgElem& x);

/// Unit test in k[(Z/p^r)^x] for coefficients indexed by residues t in
/// [0, p^r) (entries at non-units are ignored), via the characters of the
/// unit group.
bool is_unit_unit_group_algebra(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs);

/// Unit test in the monoid algebra k[(Z/p^r, *)], coefficients indexed by
/// t in [0, p^r): the augmentation and the restriction to the unit group
/// must both be units.
bool is_unit_monoid_algebra(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs);

/// Matrix of y -> x*y in k[(Z/p^r, *)], basis [0], ..., [p^r - 1].
CycloMatrix monoid_multiplication_matrix(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs);

}  // namespace cyclo
