#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

/// Dense integer polynomial, constant term first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial monomial(std::size_t degree, mpz_class c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpz_class& leading() const { return c_.back(); }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Quotient by a monic divisor; throws InternalError if the remainder is nonzero.
  IntPolynomial divexact_monic(const IntPolynomial& divisor) const;

  /// Value at x modulo m (m >= 1), result in [0, m).
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t m) const;

  /// Human form, highest degree first: "X^4 - X^2 + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// The n-th cyclotomic polynomial, by exact division of X^n - 1 by the
/// product of Phi_d over the proper divisors d of n. Results are memoized.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace cyclo
