#include "cyclo/char_gauss.hpp"

#include "cyclo/errors.hpp"
#include "cyclo/fin_ab.hpp"
#include "cyclo/mod_ring.hpp"

namespace cyclo {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mult_order(std::uint64_t g, std::uint64_t n) {
  std::uint64_t x = g % n, k = 1;
  while (x != 1) {
    x = mul_mod(x, g, n);
    ++k;
  }
  return k;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) { return ModElem(a, n).inverse().value(); }

std::string exps_string(const std::vector<std::uint64_t>& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(std::uint64_t p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p) || r == 0) throw UsageError("unit group: need a prime p and r >= 1");
  n_ = ipow(p, r);
  order_ = n_ / p * (p - 1);
  if (p == 2) {
    if (r == 2) gens_ = {{3, 2}};
    if (r >= 3) gens_ = {{n_ - 1, 2}, {5, n_ / 8 * 2}};
  } else {
    for (std::uint64_t g = 2; g < n_; ++g) {
      if (g % p == 0) continue;
      if (mult_order(g, n_) == order_) {
        gens_ = {{g, order_}};
        break;
      }
    }
    if (gens_.empty()) throw InternalError("unit group: no primitive root found");
  }
  // Discrete-log table by enumerating every product of generator powers.
  log_.assign(n_, {});
  std::vector<bool> seen(n_, false);
  std::vector<std::uint64_t> k(gens_.size(), 0);
  std::uint64_t count = 0;
  const auto advance = [&] {
    for (std::size_t j = k.size(); j-- > 0;) {
      if (++k[j] < gens_[j].order) return true;
      k[j] = 0;
    }
    return false;
  };
  do {
    std::uint64_t t = 1;
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::uint64_t i = 0; i < k[j]; ++i) t = mul_mod(t, gens_[j].residue, n_);
    if (seen[t]) throw InternalError("unit group: generators do not give a direct product");
    seen[t] = true;
    log_[t] = k;
    ++count;
  } while (advance());
  if (count != order_) throw InternalError("unit group: generated subgroup has the wrong order");
}

const std::vector<std::uint64_t>& UnitGroupStructure::log(std::uint64_t t) const {
  t %= n_;
  if (t % p_ == 0) throw UsageError("discrete log: " + std::to_string(t) + " is not a unit mod " + std::to_string(n_));
  return log_[t];
}

UnitGroupStructure unit_group_generators(std::uint64_t p, unsigned r) { return UnitGroupStructure(p, r); }

bool Character::is_trivial() const {
  for (auto k : exponents)
    if (k != 0) return false;
  return true;
}

std::vector<Character> enumerate_characters(std::uint64_t p, unsigned r, const CycloRing& ring) {
  auto s = std::make_shared<const UnitGroupStructure>(p, r);
  for (const auto& g : s->generators())
    if (ring.conductor() % g.order != 0)
      throw UsageError("enumerate_characters: conductor " + std::to_string(ring.conductor()) +
                       " lacks roots of unity of order " + std::to_string(g.order));
  std::vector<Character> out;
  std::vector<std::uint64_t> k(s->generators().size(), 0);
  const auto& gens = s->generators();
  const auto advance = [&] {
    for (std::size_t j = k.size(); j-- > 0;) {
      if (++k[j] < gens[j].order) return true;
      k[j] = 0;
    }
    return false;
  };
  do {
    out.push_back(Character{s, k, ring});
  } while (advance());
  return out;
}

std::uint64_t char_zeta_exponent(const Character& chi, std::uint64_t t) {
  const auto m = chi.ring.conductor();
  const auto& lg = chi.structure->log(t);
  const auto& gens = chi.structure->generators();
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < gens.size(); ++j)
    e = (e + mul_mod((m / gens[j].order) * chi.exponents[j] % m, lg[j], m)) % m;
  return e;
}

CycloElem char_eval(const Character& chi, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(chi.structure->modulus());
  std::int64_t r = t % n;
  if (r < 0) r += n;
  return zeta_power(chi.ring, static_cast<std::int64_t>(char_zeta_exponent(chi, static_cast<std::uint64_t>(r))));
}

bool is_primitive(const Character& chi) {
  const auto& s = *chi.structure;
  if (s.level() == 1) return !chi.is_trivial();
  return char_zeta_exponent(chi, 1 + s.modulus() / s.prime()) != 0;
}

Character reduce_character(const Character& chi) {
  const auto& s = *chi.structure;
  if (s.level() < 2 || is_primitive(chi))
    throw UsageError("reduce_character: need an imprimitive character of level >= 2");
  auto sub = std::make_shared<const UnitGroupStructure>(s.prime(), s.level() - 1);
  const auto m = chi.ring.conductor();
  std::vector<std::uint64_t> k;
  for (const auto& g : sub->generators()) {
    const std::uint64_t e = char_zeta_exponent(chi, g.residue);
    const std::uint64_t step = m / g.order;
    if (e % step != 0) throw InternalError("reduce_character: value has the wrong order");
    k.push_back(e / step);
  }
  return Character{std::move(sub), std::move(k), chi.ring};
}

CycloElem gauss_sum(const Character& chi, std::int64_t u) {
  const auto n = chi.structure->modulus();
  const auto m = chi.ring.conductor();
  if (m % n != 0) throw UsageError("gauss_sum: conductor does not contain the p^r-th roots of unity");
  const auto nn = static_cast<std::int64_t>(n);
  const auto uu = static_cast<std::uint64_t>(((u % nn) + nn) % nn);
  ZetaAccumulator acc(chi.ring);
  for (std::uint64_t t = 1; t < n; ++t) {
    if (t % chi.structure->prime() == 0) continue;
    const std::uint64_t add_exp = mul_mod(t, uu, n) * (m / n);
    acc.add(1, static_cast<std::int64_t>((char_zeta_exponent(chi, t) + add_exp) % m));
  }
  return acc.finish();
}

CycloElem gauss_sum(const Character& chi, std::span<const CycloElem> tau) {
  const auto n = chi.structure->modulus();
  if (tau.size() != n) throw UsageError("gauss_sum: tau needs one value per residue");
  ZetaAccumulator acc(chi.ring);
  for (std::uint64_t t = 1; t < n; ++t) {
    if (t % chi.structure->prime() == 0) continue;
    acc.add(tau[t], static_cast<std::int64_t>(char_zeta_exponent(chi, t)));
  }
  return acc.finish();
}

std::uint64_t gauss_conductor(std::uint64_t p, unsigned r) {
  const auto n = ipow(p, r);
  if (p == 2) return std::max<std::uint64_t>(n, 4);
  return n * (p - 1);
}

std::vector<Check> check_gauss_identities(std::uint64_t p, unsigned r, const CycloRing& ring, unsigned jobs) {
  const auto chars = enumerate_characters(p, r, ring);
  const auto n = ipow(p, r);
  std::vector<std::vector<Check>> per_char(chars.size());
  parallel_for(chars.size(), jobs, [&](std::size_t ci) {
    const Character& chi = chars[ci];
    const bool primitive = is_primitive(chi);
    const std::string tag = "gauss/N=" + std::to_string(n) + "/chi=" + exps_string(chi.exponents);
    const CycloElem g1 = gauss_sum(chi, 1);
    auto& out = per_char[ci];
    for (std::uint64_t u = 0; u < n; ++u) {
      const CycloElem g = gauss_sum(chi, static_cast<std::int64_t>(u));
      Check c;
      c.id = tag + "/u=" + std::to_string(u);
      c.witness = Json{{"N", n}, {"chi", chi.exponents}, {"u", u}, {"primitive", primitive}, {"sum", to_json(g)}};
      const bool coprime = u % p != 0;
      if (primitive && coprime) {
        c.subject = "primitive: G(chi,eps_u) is a unit and equals chi(u)^-1 G(chi,eps)";
        const std::uint64_t inv_u = mod_inverse(u, n);
        const CycloElem twisted = char_eval(chi, static_cast<std::int64_t>(inv_u)) * g1;
        const bool unit = is_unit(g);
        c.pass = unit && g == twisted;
        c.witness["is_unit"] = unit;
      } else if (primitive) {
        c.subject = "primitive, u not coprime: G(chi,eps_u) = 0";
        c.pass = g.is_zero();
      } else if (r >= 2 && coprime) {
        c.subject = "imprimitive, injective tau: G(chi,tau) = 0";
        c.pass = g.is_zero();
      } else if (r >= 2) {
        c.subject = "imprimitive, non-injective tau: G_{p^r}(chi,tau) = p G_{p^(r-1)}(chi_bar,tau_bar)";
        const CycloElem lower = gauss_sum(reduce_character(chi), static_cast<std::int64_t>(u / p));
        const CycloElem rhs = lower * CycloElem(ring, static_cast<long>(p));
        c.pass = g == rhs;
        c.witness["lower"] = to_json(lower);
      } else {
        c.subject = "trivial character mod p: G = -1 if p does not divide u, p - 1 otherwise";
        c.pass = g == CycloElem(ring, coprime ? -1L : static_cast<long>(p) - 1);
      }
      out.push_back(std::move(c));
    }
    if (!chi.is_trivial()) {
      ZetaAccumulator acc(ring);
      for (std::uint64_t t = 1; t < n; ++t)
        if (t % p != 0) acc.add(1, static_cast<std::int64_t>(char_zeta_exponent(chi, t)));
      const CycloElem s = acc.finish();
      out.push_back(Check{tag + "/sum", "nontrivial character: sum_t chi(t) = 0", s.is_zero(),
                          Json{{"N", n}, {"chi", chi.exponents}, {"sum", to_json(s)}}});
    }
  });
  std::vector<Check> all;
  for (auto& v : per_char) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return all;
}

}  // namespace cyclo
