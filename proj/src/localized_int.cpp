#include "cyclo/localized_int.hpp"

#include "cyclo/errors.hpp"

namespace cyclo {

unsigned strip_prime(mpz_class& n, std::uint64_t p) {
  if (sgn(n) == 0) return 0;
  unsigned k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  return k;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LocalizedInt::LocalizedInt(std::uint64_t prime, mpz_class numerator, unsigned denom_exp)
    : prime_(prime), num_(std::move(numerator)), exp_(denom_exp) {
  if (prime < 2) throw UsageError("LocalizedInt: prime must be >= 2");
  normalize();
}

void LocalizedInt::normalize() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && mpz_divisible_ui_p(num_.get_mpz_t(), prime_)) {
    mpz_divexact_ui(num_.get_mpz_t(), num_.get_mpz_t(), prime_);
    --exp_;
  }
}

void LocalizedInt::check_prime(const LocalizedInt& o) const {
  if (o.prime_ != prime_) throw UsageError("LocalizedInt: mismatched primes");
}

bool LocalizedInt::is_unit() const {
  if (is_zero()) return false;
  mpz_class n = abs(num_);
  strip_prime(n, prime_);
  return n == 1;
}

LocalizedInt LocalizedInt::operator-() const {
  LocalizedInt r = *this;
  r.num_ = -r.num_;
  return r;
}

static mpz_class pow_ui(std::uint64_t p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

LocalizedInt& LocalizedInt::operator+=(const LocalizedInt& o) {
  check_prime(o);
  if (o.exp_ == exp_) {
    num_ += o.num_;
  } else if (o.exp_ > exp_) {
    num_ = num_ * pow_ui(prime_, o.exp_ - exp_) + o.num_;
    exp_ = o.exp_;
  } else {
    num_ += o.num_ * pow_ui(prime_, exp_ - o.exp_);
  }
  normalize();
  return *this;
}

LocalizedInt& LocalizedInt::operator-=(const LocalizedInt& o) { return *this += -o; }

LocalizedInt& LocalizedInt::operator*=(const LocalizedInt& o) {
  check_prime(o);
  num_ *= o.num_;
  exp_ += o.exp_;
  normalize();
  return *this;
}

LocalizedInt LocalizedInt::inverse() const {
  if (!is_unit()) throw NotUnitError("LocalizedInt: " + to_string() + " is not a unit");
  // num = +-p^k, value = +-p^(k - exp)
  mpz_class n = num_;
  const unsigned k = strip_prime(n, prime_);
  const int shift = static_cast<int>(k) - static_cast<int>(exp_);
  if (shift >= 0) return LocalizedInt(prime_, n, static_cast<unsigned>(shift));
  return LocalizedInt(prime_, n * pow_ui(prime_, static_cast<unsigned>(-shift)), 0);
}

std::string LocalizedInt::to_string() const {
  return num_.get_str() + "/" + std::to_string(prime_) + "^" + std::to_string(exp_);
}

}  // namespace cyclo
