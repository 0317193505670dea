#include "cyclo/matrix.hpp"

#include <bit>
#include <cstdint>

namespace cyclo {

CycloElem determinant(const CycloMatrix& a) {
  if (!a.is_square()) throw UsageError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) throw UsageError("determinant: empty matrix has no ring");
  CycloMatrix m = a;
  const CycloRing& ring = a(0, 0).ring();
  bool negate = false;
  CycloElem prev(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return CycloElem(ring);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      negate = !negate;
    }
    const ExactDivisor div(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycloElem t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(t) : div.divide(t);
      }
    }
    prev = m(k, k);
  }
  CycloElem d = m(n - 1, n - 1);
  return negate ? -d : d;
}

ModElem determinant(const ModMatrix& a) {
  if (!a.is_square()) throw UsageError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) throw UsageError("determinant: empty matrix has no ring");
  if (n > 20) throw UsageError("determinant: Laplace expansion limited to 20 x 20");
  const std::uint64_t m = a(0, 0).modulus();
  // minor[S] = determinant of the last |S| rows restricted to columns S.
  std::vector<ModElem> minor(std::size_t{1} << n, ModElem(0, m));
  minor[0] = ModElem(1, m);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(s));
    ModElem acc(0, m);
    int sign_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s & (1u << c))) continue;
      ModElem term = a(row, c) * minor[s & ~(1u << c)];
      if (sign_pos % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++sign_pos;
    }
    minor[s] = acc;
  }
  return minor[(1u << n) - 1];
}

}  // namespace cyclo
