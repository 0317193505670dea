#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cyclo/cyclo_ring.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/mod_ring.hpp"

namespace testsupport {

using cyclo::CycloElem;
using cyclo::CycloRing;

// Random element with small integer coefficients and an occasional p-power
// denominator.
inline CycloElem random_elem(const CycloRing& ring, std::mt19937_64& rng, int span = 3) {
  std::vector<mpz_class> c(ring.degree());
  for (auto& x : c) x = static_cast<long>(rng() % (2 * span + 1)) - span;
  return CycloElem(ring, std::move(c), static_cast<unsigned>(rng() % 2));
}

// Random product of known units: zeta powers, +-p^k and cyclotomic units
// (1 - z^a) / (1 - z) style factors 1 + z + ... + z^(a-1) with gcd(a, M) = 1.
inline CycloElem random_unit(const CycloRing& ring, std::mt19937_64& rng) {
  const auto m = ring.conductor();
  CycloElem u = cyclo::zeta_power(ring, static_cast<std::int64_t>(rng() % m));
  if (rng() % 2) u *= CycloElem(ring, cyclo::LocalizedInt(ring.prime(), rng() % 2 ? 1 : -1, 1));
  if (rng() % 2) u *= CycloElem(ring, static_cast<long>(ring.prime()));
  if (m > 2) {
    for (std::uint64_t a = 2; a < m; ++a) {
      if (std::gcd(a, m) != 1 || rng() % 3 != 0) continue;
      CycloElem f(ring);
      for (std::uint64_t k = 0; k < a; ++k) f += cyclo::zeta_power(ring, static_cast<std::int64_t>(k));
      u *= f;
      break;
    }
  }
  return u;
}

// Leibniz expansion over permutations, for matrices up to about 7 x 7.
template <class T>
T leibniz_det(const cyclo::Matrix<T>& a, const T& zero, const T& one) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    if (inversions % 2) term = zero - term;
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Matrix of y -> x y in the power basis, as rational entries in the
// conductor-1 ring over the same prime. Its determinant is the norm.
inline cyclo::CycloMatrix multiplication_matrix(const CycloElem& x) {
  const CycloRing& ring = x.ring();
  const CycloRing base = CycloRing::make(1, ring.prime());
  const std::size_t d = ring.degree();
  cyclo::CycloMatrix m(d, d, CycloElem(base));
  for (std::size_t j = 0; j < d; ++j) {
    const CycloElem col = x * cyclo::zeta_power(ring, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = CycloElem(base, col.coeff(i));
  }
  return m;
}

}  // namespace testsupport
