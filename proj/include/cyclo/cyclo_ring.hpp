#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/localized_int.hpp"
#include "cyclo/polynomial.hpp"

namespace cyclo {

/// The ring Z[1/p][X]/(Phi_M): a primitive M-th root of unity adjoined to
/// Z[1/p]. Cheap to copy; instances with equal (M, p) share their tables.
class CycloRing {
 public:
  static CycloRing make(std::uint64_t conductor, std::uint64_t prime);

  std::uint64_t conductor() const { return d_->conductor; }
  std::uint64_t prime() const { return d_->prime; }
  /// phi(M), the rank of the power basis.
  std::size_t degree() const { return d_->degree; }
  const IntPolynomial& modulus() const { return *d_->modulus; }
  /// Residues t in [1, M) with gcd(t, M) = 1, ascending.
  const std::vector<std::uint64_t>& galois_group() const { return d_->units; }

  /// Reduces a coefficient vector (any length) modulo Phi_M in place and
  /// truncates it to degree() entries.
  void reduce(std::vector<mpz_class>& coeffs) const;

  friend bool operator==(const CycloRing& a, const CycloRing& b) {
    return a.conductor() == b.conductor() && a.prime() == b.prime();
  }

 private:
  struct Data {
    std::uint64_t conductor;
    std::uint64_t prime;
    std::size_t degree;
    const IntPolynomial* modulus;
    // (index, coefficient) of the nonzero terms of Phi_M below the leading one.
    std::vector<std::pair<std::size_t, mpz_class>> tail;
    std::vector<std::uint64_t> units;
  };
  explicit CycloRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Element of Z[1/p][X]/(Phi_M) in the power basis 1, z, ..., z^(phi(M)-1).
///
/// Stored as integer numerators over one shared denominator p^denom_exp,
/// normalized so that the representation is unique.
class CycloElem {
 public:
  explicit CycloElem(CycloRing ring);
  CycloElem(CycloRing ring, long value);
  CycloElem(CycloRing ring, const LocalizedInt& value);
  CycloElem(CycloRing ring, std::vector<mpz_class> numerators, unsigned denom_exp);

  const CycloRing& ring() const { return ring_; }
  const std::vector<mpz_class>& numerators() const { return num_; }
  unsigned denom_exp() const { return exp_; }
  LocalizedInt coeff(std::size_t i) const;

  bool is_zero() const;
  /// True if only the constant coefficient may be nonzero.
  bool is_rational() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend bool operator==(const CycloElem& a, const CycloElem& b);

  CycloElem scaled(const LocalizedInt& c) const;

  /// Coefficients as "numerator/p^e" strings, constant term first.
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

 private:
  friend class ZetaAccumulator;
  void check_ring(const CycloElem& o) const;
  void normalize();

  CycloRing ring_;
  std::vector<mpz_class> num_;
  unsigned exp_ = 0;
};

/// Accumulates sums of terms x * z^k in Z[1/p][X]/(X^M - 1) and reduces
/// modulo Phi_M once at the end. This is the workhorse for character sums,
/// Fourier transforms and Galois conjugation.
class ZetaAccumulator {
 public:
  explicit ZetaAccumulator(CycloRing ring);

  /// += x * z^k (k taken mod M).
  void add(const CycloElem& x, std::int64_t k);
  /// += c * z^k.
  void add(long c, std::int64_t k);
  void clear();
  CycloElem finish() const;

 private:
  void align(unsigned e);
  CycloRing ring_;
  std::vector<mpz_class> acc_;
  unsigned exp_ = 0;
};

/// z^(u mod M).
CycloElem zeta_power(const CycloRing& ring, std::int64_t u);

/// Image under the embedding z_M -> z_M'^(M'/M); requires M | M'.
CycloElem lift_conductor(const CycloElem& x, std::uint64_t new_conductor);

/// The automorphism z -> z^t; requires gcd(t, M) = 1.
CycloElem galois_conjugate(const CycloElem& x, std::int64_t t);

/// Product of all Galois conjugates; always lies in Z[1/p].
LocalizedInt norm(const CycloElem& x);

/// Invertible in Z[z_M][1/p], i.e. norm(x) = +-p^k.
bool is_unit(const CycloElem& x);

std::optional<CycloElem> try_inverse(const CycloElem& x);
/// Throws NotUnitError for non-units.
CycloElem inverse(const CycloElem& x);

/// Division by a fixed nonzero element, for quotients known to be exact
/// (fraction-free elimination). The conjugate product and norm of the
/// divisor are computed once.
class ExactDivisor {
 public:
  explicit ExactDivisor(const CycloElem& divisor);
  CycloElem divide(const CycloElem& a) const;

 private:
  CycloElem cofactor_;
  mpz_class unit_free_;  // norm numerator with p stripped, sign included
  long shift_;           // norm = unit_free_ * p^shift_
};

}  // namespace cyclo
