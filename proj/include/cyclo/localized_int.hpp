#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclo {

/// Element of Z[1/p], stored as numerator / p^denom_exp.
///
/// Always normalized: either denom_exp == 0 or p does not divide the
/// numerator, so structural equality coincides with equality in Q.
class LocalizedInt {
 public:
  LocalizedInt(std::uint64_t prime, mpz_class numerator = 0, unsigned denom_exp = 0);

  std::uint64_t prime() const { return prime_; }
  const mpz_class& numerator() const { return num_; }
  unsigned denom_exp() const { return exp_; }

  bool is_zero() const { return sgn(num_) == 0; }
  /// Units of Z[1/p] are exactly +-p^k, k in Z.
  bool is_unit() const;

  LocalizedInt operator-() const;
  LocalizedInt& operator+=(const LocalizedInt& o);
  LocalizedInt& operator-=(const LocalizedInt& o);
  LocalizedInt& operator*=(const LocalizedInt& o);
  friend LocalizedInt operator+(LocalizedInt a, const LocalizedInt& b) { return a += b; }
  friend LocalizedInt operator-(LocalizedInt a, const LocalizedInt& b) { return a -= b; }
  friend LocalizedInt operator*(LocalizedInt a, const LocalizedInt& b) { return a *= b; }
  friend bool operator==(const LocalizedInt& a, const LocalizedInt& b) {
    return a.prime_ == b.prime_ && a.exp_ == b.exp_ && a.num_ == b.num_;
  }

  /// Inverse of a unit; throws NotUnitError otherwise.
  LocalizedInt inverse() const;

  /// "numerator/p^e", e.g. "-3/2^1".
  std::string to_string() const;

 private:
  void normalize();
  void check_prime(const LocalizedInt& o) const;

  std::uint64_t prime_;
  mpz_class num_;
  unsigned exp_;
};

/// Largest k with p^k | n (n != 0); n is divided in place.
unsigned strip_prime(mpz_class& n, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace cyclo
