#include "cyclo/diag.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cyclo/errors.hpp"
#include "cyclo/polynomial.hpp"

namespace cyclo {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  x %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, x, m);
    x = mul_mod(x, x, m);
  }
  return r;
}

bool is_idempotent(std::uint64_t x, std::uint64_t m) { return mul_mod(x, x, m) == x % m; }

}  // namespace

Json DiagVerdict::to_json() const {
  Json j;
  j["decision"] = decision;
  if (witness) j["witness"] = *witness;
  if (!decision) j["reason"] = reason;
  j["n"] = n;
  j["modulus"] = modulus;
  return j;
}

DiagVerdict decide_diag_cyclic(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m < 2) throw UsageError("diag: need n >= 1 and m >= 2");
  DiagVerdict v;
  v.n = n;
  v.modulus = m;
  if (std::gcd(n, m) != 1) {
    v.reason = "n-not-invertible";
    return v;
  }
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  for (std::uint64_t x = 0; x < m; ++x)
    if (phi.eval_mod(x, m) == 0) {
      v.decision = true;
      v.witness = x;
      return v;
    }
  v.reason = "no-cyclotomic-root";
  return v;
}

DiagVerdict decide_diag_group(const std::vector<std::uint64_t>& orders, std::uint64_t m) {
  std::uint64_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw UsageError("diag: cyclic orders must be positive");
    n = std::lcm(n, o);
  }
  return decide_diag_cyclic(n, m);
}

VandermondeCheck vandermonde_iso(std::uint64_t n, std::uint64_t m, std::uint64_t xi) {
  if (n == 0 || n > 20 || m < 2) throw UsageError("vandermonde_iso: need 1 <= n <= 20 and m >= 2");
  std::vector<std::uint64_t> pw(n);
  for (std::uint64_t i = 0; i < n; ++i) pw[i] = pow_mod(xi, i, m);
  ModMatrix a(n, n, ModElem(0, m));
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) a(i, j) = ModElem(pow_mod(pw[i], j, m), m);
  const ModElem det = determinant(a);

  bool diffs = true;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      diffs = diffs && (ModElem(pw[i], m) - ModElem(pw[j], m)).is_unit();

  // prod_i (X - xi^i), constant term first.
  std::vector<ModElem> prod{ModElem(1, m)};
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<ModElem> next(prod.size() + 1, ModElem(0, m));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= prod[k] * ModElem(pw[i], m);
    }
    prod = std::move(next);
  }
  bool fact = true;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t want = k == 0 ? m - 1 : (k == n ? 1 : 0);
    fact = fact && prod[k].value() == want;
  }
  return {std::move(a), det, det.is_unit(), diffs, fact};
}

std::vector<std::uint64_t> evaluate_at_powers(const std::vector<std::uint64_t>& f, std::uint64_t n, std::uint64_t m,
                                              std::uint64_t xi) {
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t x = pow_mod(xi, i, m);
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = (mul_mod(acc, x, m) + f[k] % m) % m;
    out[i] = acc;
  }
  return out;
}

std::vector<std::uint64_t> idempotents_mod(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < m; ++x)
    if (is_idempotent(x, m)) out.push_back(x);
  return out;
}

bool is_complete_idempotent_set(const std::vector<std::uint64_t>& atoms, std::uint64_t m) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i] % m == 0 || !is_idempotent(atoms[i], m)) return false;
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (mul_mod(atoms[i], atoms[j], m) != 0) return false;
    sum = (sum + atoms[i]) % m;
  }
  return sum == 1 % m;
}

bool is_sum_of_atoms(std::uint64_t x, const std::vector<std::uint64_t>& atoms, std::uint64_t m) {
  std::uint64_t sum = 0;
  for (auto a : atoms)
    if (mul_mod(a, x, m) == a % m) sum = (sum + a) % m;
  return sum == x % m;
}

std::vector<std::uint64_t> complete_idempotent_set(const std::vector<std::uint64_t>& xs, std::uint64_t m) {
  if (m < 2) throw UsageError("complete_idempotent_set: need m >= 2");
  if (xs.size() > 20) throw UsageError("complete_idempotent_set: at most 20 inputs");
  for (auto x : xs)
    if (!is_idempotent(x, m)) throw UsageError("complete_idempotent_set: " + std::to_string(x) + " is not idempotent mod " + std::to_string(m));
  std::vector<std::uint64_t> atoms;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << xs.size()); ++s) {
    std::uint64_t a = 1 % m;
    for (std::size_t i = 0; i < xs.size(); ++i) a = mul_mod(a, (s >> i) & 1 ? xs[i] % m : (1 + m - xs[i] % m) % m, m);
    if (a != 0) atoms.push_back(a);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (!is_complete_idempotent_set(atoms, m)) throw InternalError("complete_idempotent_set: atoms are not a complete set");
  for (auto x : xs)
    if (!is_sum_of_atoms(x, atoms, m)) throw InternalError("complete_idempotent_set: input not spanned by atoms");
  return atoms;
}

std::uint64_t count_idempotents_group_algebra(std::uint64_t m, std::uint64_t n, std::uint64_t budget) {
  if (m < 2 || n == 0) throw UsageError("count_idempotents: need m >= 2 and n >= 1");
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > budget / m) throw BudgetExceeded("count_idempotents: m^n exceeds the budget of " + std::to_string(budget));
    total *= m;
  }
  std::vector<std::uint64_t> x(n, 0);
  std::uint64_t count = 0;
  for (std::uint64_t it = 0; it < total; ++it) {
    // Compare (x*x)_k with x_k one coefficient at a time; most x fail early.
    bool idem = true;
    for (std::uint64_t k = 0; k < n && idem; ++k) {
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < n; ++i) s = (s + mul_mod(x[i], x[(k + n - i) % n], m)) % m;
      idem = s == x[k];
    }
    if (idem) ++count;
    for (std::uint64_t i = 0; i < n && ++x[i] == m; ++i) x[i] = 0;
  }
  return count;
}

std::uint64_t default_budget() {
  if (const char* s = std::getenv("CYCLO_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

}  // namespace cyclo
