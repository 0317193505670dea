#include "cyclo/cyclo_ring.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

mpz_class pow_ui(std::uint64_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

std::uint64_t mod_index(std::int64_t k, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = k % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

}  // namespace

// ---------------------------------------------------------------- CycloRing

CycloRing CycloRing::make(std::uint64_t conductor, std::uint64_t prime) {
  if (conductor == 0) throw UsageError("CycloRing: conductor must be >= 1");
  if (!is_prime(prime)) throw UsageError("CycloRing: inverted prime must be prime");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const Data>> cache;
  const auto key = std::make_pair(conductor, prime);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return CycloRing(it->second);
  }
  auto d = std::make_shared<Data>();
  d->conductor = conductor;
  d->prime = prime;
  d->modulus = &cyclotomic_polynomial(conductor);
  d->degree = static_cast<std::size_t>(d->modulus->degree());
  for (std::size_t i = 0; i < d->degree; ++i)
    if (sgn(d->modulus->coeffs()[i]) != 0) d->tail.emplace_back(i, d->modulus->coeffs()[i]);
  for (std::uint64_t t = 1; t <= conductor; ++t)
    if (std::gcd(t % conductor, conductor) == 1) d->units.push_back(t % conductor == 0 ? 0 : t);
  if (conductor == 1) d->units = {0};
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(d));
  return CycloRing(it->second);
}

void CycloRing::reduce(std::vector<mpz_class>& v) const {
  const std::size_t deg = degree();
  for (std::size_t k = v.size(); k-- > deg;) {
    if (sgn(v[k]) == 0) continue;
    for (const auto& [idx, c] : d_->tail)
      mpz_submul(v[k - deg + idx].get_mpz_t(), v[k].get_mpz_t(), c.get_mpz_t());
  }
  v.resize(deg);
}

// ---------------------------------------------------------------- CycloElem

CycloElem::CycloElem(CycloRing ring) : ring_(std::move(ring)), num_(ring_.degree()) {}

CycloElem::CycloElem(CycloRing ring, long value) : CycloElem(std::move(ring)) {
  num_[0] = value;
}

CycloElem::CycloElem(CycloRing ring, const LocalizedInt& value) : CycloElem(std::move(ring)) {
  if (value.prime() != ring_.prime()) throw UsageError("CycloElem: prime mismatch");
  num_[0] = value.numerator();
  exp_ = value.denom_exp();
}

CycloElem::CycloElem(CycloRing ring, std::vector<mpz_class> numerators, unsigned denom_exp)
    : ring_(std::move(ring)), num_(std::move(numerators)), exp_(denom_exp) {
  ring_.reduce(num_);
  num_.resize(ring_.degree());
  normalize();
}

void CycloElem::normalize() {
  const auto p = ring_.prime();
  if (is_zero()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0) {
    for (const auto& c : num_)
      if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) return;
    for (auto& c : num_) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    --exp_;
  }
}

void CycloElem::check_ring(const CycloElem& o) const {
  if (!(ring_ == o.ring_)) throw UsageError("CycloElem: operands live in different rings");
}

LocalizedInt CycloElem::coeff(std::size_t i) const { return LocalizedInt(ring_.prime(), num_.at(i), exp_); }

bool CycloElem::is_zero() const {
  for (const auto& c : num_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0) return false;
  return true;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_ring(o);
  const auto p = ring_.prime();
  if (o.exp_ > exp_) {
    const mpz_class f = pow_ui(p, o.exp_ - exp_);
    for (auto& c : num_) c *= f;
    exp_ = o.exp_;
  }
  if (o.exp_ < exp_) {
    const mpz_class f = pow_ui(p, exp_ - o.exp_);
    for (std::size_t i = 0; i < num_.size(); ++i)
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), f.get_mpz_t());
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  }
  normalize();
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.check_ring(b);
  const std::size_t n = a.num_.size();
  std::vector<mpz_class> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return CycloElem(a.ring_, std::move(prod), a.exp_ + b.exp_);
}

CycloElem& CycloElem::operator*=(const CycloElem& o) { return *this = *this * o; }

bool operator==(const CycloElem& a, const CycloElem& b) {
  return a.ring_ == b.ring_ && a.exp_ == b.exp_ && a.num_ == b.num_;
}

CycloElem CycloElem::scaled(const LocalizedInt& c) const { return *this * CycloElem(ring_, c); }

std::vector<std::string> CycloElem::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i).to_string());
  return out;
}

std::string CycloElem::to_string() const {
  std::string s = "[";
  for (const auto& c : coeff_strings()) s += (s.size() > 1 ? ", " : "") + c;
  return s + "]";
}

// ---------------------------------------------------------- ZetaAccumulator

ZetaAccumulator::ZetaAccumulator(CycloRing ring)
    : ring_(std::move(ring)), acc_(ring_.conductor()) {}

void ZetaAccumulator::align(unsigned e) {
  if (e <= exp_) return;
  const mpz_class f = pow_ui(ring_.prime(), e - exp_);
  for (auto& c : acc_)
    if (sgn(c) != 0) c *= f;
  exp_ = e;
}

void ZetaAccumulator::add(const CycloElem& x, std::int64_t k) {
  if (!(x.ring() == ring_)) throw UsageError("ZetaAccumulator: ring mismatch");
  align(x.exp_);
  const std::uint64_t m = ring_.conductor();
  const std::uint64_t shift = mod_index(k, m);
  if (x.exp_ == exp_) {
    for (std::size_t i = 0; i < x.num_.size(); ++i)
      if (sgn(x.num_[i]) != 0) acc_[(i + shift) % m] += x.num_[i];
  } else {
    const mpz_class f = pow_ui(ring_.prime(), exp_ - x.exp_);
    for (std::size_t i = 0; i < x.num_.size(); ++i)
      if (sgn(x.num_[i]) != 0)
        mpz_addmul(acc_[(i + shift) % m].get_mpz_t(), x.num_[i].get_mpz_t(), f.get_mpz_t());
  }
}

void ZetaAccumulator::add(long c, std::int64_t k) {
  if (c == 0) return;
  const std::uint64_t idx = mod_index(k, ring_.conductor());
  if (exp_ == 0) {
    acc_[idx] += c;
  } else {
    mpz_class t = pow_ui(ring_.prime(), exp_);
    t *= c;
    acc_[idx] += t;
  }
}

void ZetaAccumulator::clear() {
  for (auto& c : acc_) c = 0;
  exp_ = 0;
}

CycloElem ZetaAccumulator::finish() const { return CycloElem(ring_, acc_, exp_); }

// ---------------------------------------------------------------- operations

CycloElem zeta_power(const CycloRing& ring, std::int64_t u) {
  ZetaAccumulator acc(ring);
  acc.add(1, u);
  return acc.finish();
}

CycloElem lift_conductor(const CycloElem& x, std::uint64_t new_conductor) {
  const auto m = x.ring().conductor();
  if (new_conductor == 0 || new_conductor % m != 0)
    throw UsageError("lift_conductor: old conductor must divide the new one");
  const auto target = CycloRing::make(new_conductor, x.ring().prime());
  const std::uint64_t step = new_conductor / m;
  std::vector<mpz_class> v(new_conductor);
  for (std::size_t i = 0; i < x.numerators().size(); ++i) v[(i * step) % new_conductor] += x.numerators()[i];
  return CycloElem(target, std::move(v), x.denom_exp());
}

CycloElem galois_conjugate(const CycloElem& x, std::int64_t t) {
  const auto m = x.ring().conductor();
  const std::uint64_t tt = mod_index(t, m);
  if (std::gcd(tt, m) != 1 && m != 1) throw UsageError("galois_conjugate: t must be coprime to the conductor");
  std::vector<mpz_class> v(m);
  for (std::size_t i = 0; i < x.numerators().size(); ++i) v[(i * tt) % m] += x.numerators()[i];
  return CycloElem(x.ring(), std::move(v), x.denom_exp());
}

namespace {

// Index of the single nonzero coefficient, if there is exactly one.
std::optional<std::size_t> monomial_index(const CycloElem& x) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < x.numerators().size(); ++i) {
    if (sgn(x.numerators()[i]) == 0) continue;
    if (idx) return std::nullopt;
    idx = i;
  }
  return idx;
}

// prod_{t != 1} sigma_t(x)
CycloElem conjugate_product(const CycloElem& x) {
  CycloElem prod(x.ring(), 1);
  for (auto t : x.ring().galois_group())
    if (t != 1 && x.ring().conductor() != 1) prod *= galois_conjugate(x, static_cast<std::int64_t>(t));
  return prod;
}

LocalizedInt pow(const LocalizedInt& c, std::size_t e) {
  LocalizedInt r(c.prime(), 1);
  for (std::size_t i = 0; i < e; ++i) r *= c;
  return r;
}

}  // namespace

LocalizedInt norm(const CycloElem& x) {
  const auto& ring = x.ring();
  const auto p = ring.prime();
  if (x.is_zero()) return LocalizedInt(p, 0);
  // For M > 2 the conjugates of z multiply to 1, so N(c z^j) = c^phi(M).
  if (auto j = monomial_index(x)) return pow(x.coeff(*j), ring.degree());
  const CycloElem integral(ring, x.numerators(), 0);
  const CycloElem prod = integral * conjugate_product(integral);
  if (!prod.is_rational()) throw InternalError("norm: conjugate product is not rational");
  return LocalizedInt(p, prod.numerators()[0], static_cast<unsigned>(x.denom_exp() * ring.degree()));
}

bool is_unit(const CycloElem& x) {
  if (x.is_zero()) return false;
  if (auto j = monomial_index(x)) return x.coeff(*j).is_unit();
  return norm(x).is_unit();
}

std::optional<CycloElem> try_inverse(const CycloElem& x) {
  if (!is_unit(x)) return std::nullopt;
  if (x.is_rational()) return CycloElem(x.ring(), x.coeff(0).inverse());
  return conjugate_product(x).scaled(norm(x).inverse());
}

CycloElem inverse(const CycloElem& x) {
  auto r = try_inverse(x);
  if (!r) throw NotUnitError("inverse: " + x.to_string() + " is not a unit");
  return *std::move(r);
}

// -------------------------------------------------------------- ExactDivisor

ExactDivisor::ExactDivisor(const CycloElem& divisor) : cofactor_(divisor.ring(), 1) {
  if (divisor.is_zero()) throw UsageError("ExactDivisor: division by zero");
  LocalizedInt n = divisor.coeff(0);
  if (!divisor.is_rational()) {
    cofactor_ = conjugate_product(divisor);
    n = norm(divisor);
  }
  unit_free_ = n.numerator();
  const unsigned k = strip_prime(unit_free_, divisor.ring().prime());
  shift_ = static_cast<long>(k) - static_cast<long>(n.denom_exp());
}

CycloElem ExactDivisor::divide(const CycloElem& a) const {
  const CycloElem q = a * cofactor_;
  std::vector<mpz_class> num = q.numerators();
  for (auto& c : num) {
    if (!mpz_divisible_p(c.get_mpz_t(), unit_free_.get_mpz_t()))
      throw InternalError("ExactDivisor: quotient is not exact");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), unit_free_.get_mpz_t());
  }
  long e = static_cast<long>(q.denom_exp()) + shift_;
  if (e < 0) {
    const mpz_class f = pow_ui(q.ring().prime(), static_cast<unsigned long>(-e));
    for (auto& c : num) c *= f;
    e = 0;
  }
  return CycloElem(q.ring(), std::move(num), static_cast<unsigned>(e));
}

}  // namespace cyclo
