#pragma once

#include <cstdint>
#include <string>

namespace cyclo {

/// Residue class in Z/m, m >= 2 (m = 1 is accepted for the zero ring).
class ModElem {
 public:
  ModElem(std::uint64_t value, std::uint64_t modulus);
  static ModElem from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return m_; }

  bool is_unit() const;
  ModElem inverse() const;  // throws NotUnitError
  ModElem pow(std::uint64_t e) const;

  ModElem operator-() const { return ModElem(m_ - v_, m_); }
  ModElem& operator+=(const ModElem& o);
  ModElem& operator-=(const ModElem& o);
  ModElem& operator*=(const ModElem& o);
  friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
  friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }
  friend ModElem operator*(ModElem a, const ModElem& b) { return a *= b; }
  friend bool operator==(const ModElem&, const ModElem&) = default;

 private:
  void check(const ModElem& o) const;
  std::uint64_t v_;
  std::uint64_t m_;
};

}  // namespace cyclo
