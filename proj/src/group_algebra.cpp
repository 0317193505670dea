#include "cyclo/group_algebra.hpp"

#include "cyclo/char_gauss.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

void check_conductor(const FinAbGroup& group, const CycloRing& ring) {
  if (ring.conductor() % group.exponent() != 0)
    throw UsageError("conductor " + std::to_string(ring.conductor()) + " too small for a group of exponent " +
                     std::to_string(group.exponent()));
}

const CycloRing& ring_of(const std::vector<CycloElem>& v) {
  if (v.empty()) throw UsageError("empty coefficient vector");
  return v.front().ring();
}

}  // namespace

AlgElem alg_zero(const FinAbGroup& group, const CycloRing& ring) {
  return {group, std::vector<CycloElem>(group.order(), CycloElem(ring))};
}

AlgElem alg_basis(const FinAbGroup& group, const CycloRing& ring, const GroupElem& v) {
  AlgElem x = alg_zero(group, ring);
  x.coeffs[group.index_of(v.coords)] = CycloElem(ring, 1);
  return x;
}

FunElem fun_zero(const FinAbGroup& group, const CycloRing& ring) {
  return {group, std::vector<CycloElem>(group.order(), CycloElem(ring))};
}

FunElem fun_delta(const FinAbGroup& group, const CycloRing& ring, const DualElem& l) {
  FunElem f = fun_zero(group, ring);
  f.values[group.index_of(l.coords)] = CycloElem(ring, 1);
  return f;
}

AlgElem convolve(const AlgElem& x, const AlgElem& y) {
  if (!(x.group == y.group)) throw UsageError("convolve: group mismatch");
  const auto& g = x.group;
  AlgElem r = alg_zero(g, ring_of(x.coeffs));
  const auto elems = elements(g);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (y.coeffs[j].is_zero()) continue;
      r.coeffs[g.index_of(g.add(elems[i], elems[j]).coords)] += x.coeffs[i] * y.coeffs[j];
    }
  }
  return r;
}

FunElem pointwise(const FunElem& f, const FunElem& g) {
  if (!(f.group == g.group)) throw UsageError("pointwise: group mismatch");
  FunElem r = f;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= g.values[i];
  return r;
}

std::vector<std::uint64_t> pairing_exponents(const FinAbGroup& group, std::uint64_t conductor) {
  if (conductor % group.exponent() != 0)
    throw UsageError("conductor " + std::to_string(conductor) + " too small for a group of exponent " +
                     std::to_string(group.exponent()));
  const auto elems = elements(group);
  const auto duals = dual_elements(group);
  const std::size_t n = elems.size();
  std::vector<std::uint64_t> k(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v) k[l * n + v] = pairing(group, elems[v], duals[l]).scaled_to(conductor);
  return k;
}

CycloMatrix phi_eps_matrix(const FinAbGroup& group, const CycloRing& ring) {
  check_conductor(group, ring);
  const auto k = pairing_exponents(group, ring.conductor());
  const std::size_t n = group.order();
  // Reuse one reduced element per distinct exponent.
  std::vector<std::optional<CycloElem>> powers(ring.conductor());
  CycloMatrix m(n, n, CycloElem(ring));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v) {
      auto& z = powers[k[l * n + v]];
      if (!z) z = zeta_power(ring, static_cast<std::int64_t>(k[l * n + v]));
      m(l, v) = *z;
    }
  return m;
}

FunElem phi_eps(const AlgElem& x) {
  const CycloRing& ring = ring_of(x.coeffs);
  check_conductor(x.group, ring);
  const auto k = pairing_exponents(x.group, ring.conductor());
  const std::size_t n = x.group.order();
  FunElem f = fun_zero(x.group, ring);
  ZetaAccumulator acc(ring);
  for (std::size_t l = 0; l < n; ++l) {
    acc.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (!x.coeffs[v].is_zero()) acc.add(x.coeffs[v], static_cast<std::int64_t>(k[l * n + v]));
    f.values[l] = acc.finish();
  }
  return f;
}

std::vector<CycloElem> fourier_hat(const FunElem& f) {
  const CycloRing& ring = ring_of(f.values);
  check_conductor(f.group, ring);
  if (ring.prime() != f.group.prime())
    throw UsageError("fourier_hat: |V| must be invertible, so the ring must invert p = " +
                     std::to_string(f.group.prime()));
  const auto k = pairing_exponents(f.group, ring.conductor());
  const std::size_t n = f.group.order();
  unsigned log_order = 0;
  for (auto e : f.group.exponents()) log_order += e;
  const LocalizedInt inv_order(ring.prime(), 1, log_order);
  std::vector<CycloElem> hat;
  hat.reserve(n);
  ZetaAccumulator acc(ring);
  for (std::size_t v = 0; v < n; ++v) {
    acc.clear();
    for (std::size_t l = 0; l < n; ++l)
      if (!f.values[l].is_zero()) acc.add(f.values[l], -static_cast<std::int64_t>(k[l * n + v]));
    hat.push_back(acc.finish().scaled(inv_order));
  }
  return hat;
}

AlgElem psi(const FunElem& f) { return {f.group, fourier_hat(f)}; }

CycloMatrix phi_alpha_matrix(const FinAbGroup& group, const AlphaFunction& alpha, const CycloRing& ring) {
  if (alpha.prime() != group.prime()) throw UsageError("phi_alpha_matrix: alpha lives over a different prime");
  if (auto lvl = alpha.level(); lvl && *lvl < group.exponent_level())
    throw UsageError("phi_alpha_matrix: alpha is tabulated to level " + std::to_string(*lvl) +
                     " but the group has exponent " + std::to_string(group.exponent()));
  const auto elems = elements(group);
  const auto duals = dual_elements(group);
  const std::size_t n = elems.size();
  // alpha is evaluated once per point of Z/p^level.
  std::vector<std::optional<CycloElem>> cache(group.exponent());
  CycloMatrix m(n, n, CycloElem(ring));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v) {
      const PadicCircle x = pairing(group, elems[v], duals[l]);
      auto& slot = cache[x.scaled_to(group.exponent())];
      if (!slot) slot = alpha_eval(alpha, x, ring);
      m(l, v) = *slot;
    }
  return m;
}

CycloMatrix convolution_matrix(const AlgElem& x) {
  const CycloRing& ring = ring_of(x.coeffs);
  const auto& g = x.group;
  const auto elems = elements(g);
  const std::size_t n = elems.size();
  CycloMatrix m(n, n, CycloElem(ring));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) m(g.index_of(g.add(elems[u], elems[v]).coords), v) = x.coeffs[u];
  return m;
}

bool is_unit_group_algebra(const AlgElem& x) {
  for (const auto& s : phi_eps(x).values)
    if (!is_unit(s)) return false;
  return true;
}

bool is_unit_unit_group_algebra(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs) {
  const std::uint64_t n = ipow(p, r);
  if (coeffs.size() != n) throw UsageError("unit group algebra: need p^r coefficients");
  const CycloRing& ring = ring_of(coeffs);
  const auto chars = enumerate_characters(p, r, ring);
  ZetaAccumulator acc(ring);
  for (const auto& chi : chars) {
    acc.clear();
    for (std::uint64_t t = 1; t < n; ++t)
      if (t % p != 0 && !coeffs[t].is_zero()) acc.add(coeffs[t], static_cast<std::int64_t>(char_zeta_exponent(chi, t)));
    if (!is_unit(acc.finish())) return false;
  }
  return true;
}

bool is_unit_monoid_algebra(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs) {
  const std::uint64_t n = ipow(p, r);
  if (coeffs.size() != n) throw UsageError("monoid algebra: need p^r coefficients");
  CycloElem augmentation(ring_of(coeffs));
  for (const auto& c : coeffs) augmentation += c;
  return is_unit(augmentation) && is_unit_unit_group_algebra(p, r, coeffs);
}

CycloMatrix monoid_multiplication_matrix(std::uint64_t p, unsigned r, const std::vector<CycloElem>& coeffs) {
  const std::uint64_t n = ipow(p, r);
  if (coeffs.size() != n) throw UsageError("monoid algebra: need p^r coefficients");
  CycloMatrix m(n, n, CycloElem(ring_of(coeffs)));
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t t = 0; t < n; ++t) m((t * u) % n, u) += coeffs[t];
  return m;
}

}  // namespace cyclo
