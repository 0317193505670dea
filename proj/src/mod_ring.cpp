#include "cyclo/mod_ring.hpp"

#include <numeric>
#include <utility>

#include "cyclo/errors.hpp"

namespace cyclo {

using u128 = unsigned __int128;

ModElem::ModElem(std::uint64_t value, std::uint64_t modulus) : v_(0), m_(modulus) {
  if (modulus == 0) throw UsageError("ModElem: modulus must be positive");
  v_ = value % modulus;
}

ModElem ModElem::from_signed(std::int64_t value, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return ModElem(static_cast<std::uint64_t>(r), modulus);
}

void ModElem::check(const ModElem& o) const {
  if (o.m_ != m_) throw UsageError("ModElem: mismatched moduli");
}

bool ModElem::is_unit() const { return std::gcd(v_, m_) == 1; }

ModElem ModElem::inverse() const {
  if (!is_unit()) throw NotUnitError("ModElem: " + std::to_string(v_) + " is not a unit mod " + std::to_string(m_));
  std::int64_t r0 = static_cast<std::int64_t>(m_), r1 = static_cast<std::int64_t>(v_);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return from_signed(s0, m_);
}

ModElem ModElem::pow(std::uint64_t e) const {
  ModElem base = *this, r(1, m_);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

ModElem& ModElem::operator+=(const ModElem& o) {
  check(o);
  v_ = static_cast<std::uint64_t>((static_cast<u128>(v_) + o.v_) % m_);
  return *this;
}

ModElem& ModElem::operator-=(const ModElem& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : m_ - (o.v_ - v_);
  return *this;
}

ModElem& ModElem::operator*=(const ModElem& o) {
  check(o);
  v_ = static_cast<std::uint64_t>(static_cast<u128>(v_) * o.v_ % m_);
  return *this;
}

}  // namespace cyclo
