#include "cyclo/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cyclo/errors.hpp"

namespace cyclo {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, mpz_class c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divexact_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1)
    throw UsageError("divexact_monic: divisor must be monic");
  if (is_zero()) return {};
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  if (c_.size() - 1 < dd) throw InternalError("divexact_monic: nonzero remainder");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const mpz_class c = rem[k];
    q[k - dd] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(rem[k - dd + j].get_mpz_t(), c.get_mpz_t(), divisor.c_[j].get_mpz_t());
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw InternalError("divexact_monic: nonzero remainder");
  return IntPolynomial(std::move(q));
}

std::uint64_t IntPolynomial::eval_mod(std::uint64_t x, std::uint64_t m) const {
  mpz_class acc = 0;
  const mpz_class mm(static_cast<unsigned long>(m));
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * static_cast<unsigned long>(x) + c_[k];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mm.get_mpz_t());
  }
  return acc.get_ui();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool show_mag = k == 0 || mag != 1;
    if (show_mag) out += mag.get_str();
    if (k >= 1) out += "X";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw UsageError("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // X^n - 1 divided by Phi_d for proper divisors d; recursion happens unlocked.
  IntPolynomial acc = IntPolynomial::monomial(n) - IntPolynomial::monomial(0);
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) acc = acc.divexact_monic(cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::make_unique<IntPolynomial>(std::move(acc)));
  return *it->second;
}

}  // namespace cyclo
