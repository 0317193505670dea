#include "cyclo/fin_ab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cyclo/errors.hpp"
#include "cyclo/localized_int.hpp"

namespace cyclo {

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) throw UsageError("ipow: overflow");
    r *= p;
  }
  return r;
}

// -------------------------------------------------------------- PadicCircle

PadicCircle PadicCircle::make(std::uint64_t p, std::int64_t numerator, unsigned level) {
  const auto q = static_cast<std::int64_t>(ipow(p, level));
  std::int64_t a = numerator % q;
  if (a < 0) a += q;
  auto ua = static_cast<std::uint64_t>(a);
  if (ua == 0) return PadicCircle(p, 0, 0);
  while (level > 0 && ua % p == 0) {
    ua /= p;
    --level;
  }
  return PadicCircle(p, ua, level);
}

std::uint64_t PadicCircle::scaled_to(std::uint64_t conductor) const {
  const std::uint64_t q = ipow(p_, s_);
  if (conductor % q != 0) throw UsageError("PadicCircle: conductor does not contain p^" + std::to_string(s_));
  return a_ * (conductor / q);
}

PadicCircle PadicCircle::operator-() const {
  return make(p_, -static_cast<std::int64_t>(a_), s_);
}

PadicCircle operator+(const PadicCircle& x, const PadicCircle& y) {
  if (x.p_ != y.p_) throw UsageError("PadicCircle: prime mismatch");
  const unsigned s = std::max(x.s_, y.s_);
  const auto a = x.a_ * ipow(x.p_, s - x.s_) + y.a_ * ipow(x.p_, s - y.s_);
  return PadicCircle::make(x.p_, static_cast<std::int64_t>(a), s);
}

std::string PadicCircle::to_string() const {
  return std::to_string(a_) + "/" + std::to_string(p_) + "^" + std::to_string(s_);
}

// --------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::uint64_t p, std::vector<unsigned> exponents) : p_(p), e_(std::move(exponents)) {
  if (!is_prime(p)) throw UsageError("FinAbGroup: p must be prime");
  for (auto e : e_)
    if (e == 0) throw UsageError("FinAbGroup: exponents must be >= 1");
  std::sort(e_.begin(), e_.end(), std::greater<>());
  unsigned total = 0;
  for (auto e : e_) total += e;
  order_ = ipow(p, total);
}

FinAbGroup FinAbGroup::parse(const std::string& notation, std::optional<std::uint64_t> p) {
  std::vector<std::uint64_t> orders;
  std::stringstream ss(notation);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("group notation: bad factor '" + tok + "'");
    orders.push_back(std::stoull(tok));
  }
  if (orders.empty()) throw UsageError("group notation: empty");
  if (orders.size() == 1 && orders[0] == 1) {
    if (!p) throw UsageError("group notation: trivial group needs an explicit prime");
    return FinAbGroup(*p, {});
  }
  std::optional<std::uint64_t> prime = p;
  std::vector<unsigned> exps;
  for (auto q : orders) {
    if (q < 2) throw UsageError("group notation: factor orders must be >= 2");
    std::uint64_t base = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        base = d;
        break;
      }
    if (prime && *prime != base) throw UsageError("group notation: factors must be powers of one prime");
    prime = base;
    unsigned e = 0;
    while (q % base == 0) {
      q /= base;
      ++e;
    }
    if (q != 1) throw UsageError("group notation: factor is not a prime power");
    exps.push_back(e);
  }
  return FinAbGroup(*prime, std::move(exps));
}

std::uint64_t FinAbGroup::index_of(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != e_.size()) throw UsageError("FinAbGroup: coordinate count mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const auto q = factor_order(i);
    if (coords[i] >= q) throw UsageError("FinAbGroup: coordinate out of range");
    idx = idx * q + coords[i];
  }
  return idx;
}

std::vector<std::uint64_t> FinAbGroup::coords_at(std::uint64_t index) const {
  std::vector<std::uint64_t> c(e_.size());
  for (std::size_t i = e_.size(); i-- > 0;) {
    const auto q = factor_order(i);
    c[i] = index % q;
    index /= q;
  }
  return c;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem r{std::vector<std::uint64_t>(e_.size())};
  for (std::size_t i = 0; i < e_.size(); ++i) r.coords[i] = (a.coords.at(i) + b.coords.at(i)) % factor_order(i);
  return r;
}

GroupElem FinAbGroup::negate(const GroupElem& a) const {
  GroupElem r{std::vector<std::uint64_t>(e_.size())};
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const auto q = factor_order(i);
    r.coords[i] = (q - a.coords.at(i) % q) % q;
  }
  return r;
}

std::string FinAbGroup::to_string() const {
  if (e_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "+" : "") + std::to_string(factor_order(i));
  return s;
}

PadicCircle pairing(const FinAbGroup& group, const GroupElem& v, const DualElem& l) {
  const std::size_t m = group.rank();
  if (v.coords.size() != m || l.coords.size() != m) throw UsageError("pairing: shape mismatch");
  const unsigned top = group.exponent_level();
  const std::uint64_t q = ipow(group.prime(), top);
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t scale = ipow(group.prime(), top - group.exponents()[i]);
    acc += static_cast<unsigned __int128>(v.coords[i] % group.factor_order(i)) * (l.coords[i] % group.factor_order(i)) % q *
           scale;
    acc %= q;
  }
  return PadicCircle::make(group.prime(), static_cast<std::int64_t>(acc), top);
}

std::vector<GroupElem> elements(const FinAbGroup& group) {
  std::vector<GroupElem> out;
  out.reserve(group.order());
  for (std::uint64_t i = 0; i < group.order(); ++i) out.push_back({group.coords_at(i)});
  return out;
}

std::vector<DualElem> dual_elements(const FinAbGroup& group) {
  std::vector<DualElem> out;
  out.reserve(group.order());
  for (std::uint64_t i = 0; i < group.order(); ++i) out.push_back({group.coords_at(i)});
  return out;
}

// ----------------------------------------------------------------- GroupHom

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<std::vector<std::uint64_t>> matrix)
    : src_(std::move(source)), dst_(std::move(target)), a_(std::move(matrix)) {
  if (src_.prime() != dst_.prime()) throw UsageError("GroupHom: groups for different primes");
  if (a_.size() != dst_.rank()) throw UsageError("GroupHom: matrix must have one row per target factor");
  const auto p = src_.prime();
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].size() != src_.rank()) throw UsageError("GroupHom: matrix must have one column per source factor");
    const unsigned ei = dst_.exponents()[i];
    for (std::size_t j = 0; j < a_[i].size(); ++j) {
      const unsigned ej = src_.exponents()[j];
      auto& x = a_[i][j];
      x %= ipow(p, ei);
      if (ei > ej && x % ipow(p, ei - ej) != 0)
        throw UsageError("GroupHom: entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not well defined");
    }
  }
}

GroupHom GroupHom::identity(const FinAbGroup& group) {
  std::vector<std::vector<std::uint64_t>> a(group.rank(), std::vector<std::uint64_t>(group.rank()));
  for (std::size_t i = 0; i < group.rank(); ++i) a[i][i] = 1;
  return GroupHom(group, group, std::move(a));
}

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
  return GroupHom(source, target,
                  std::vector<std::vector<std::uint64_t>>(target.rank(), std::vector<std::uint64_t>(source.rank())));
}

std::vector<std::uint64_t> GroupHom::apply_coords(const std::vector<std::uint64_t>& v) const {
  if (v.size() != src_.rank()) throw UsageError("GroupHom: element shape mismatch");
  std::vector<std::uint64_t> w(dst_.rank());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto q = dst_.factor_order(i);
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + static_cast<unsigned __int128>(a_[i][j]) * v[j]) % q;
    w[i] = static_cast<std::uint64_t>(acc);
  }
  return w;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw UsageError("compose: homs are not composable");
  const auto& a = g.matrix();
  const auto& b = f.matrix();
  std::vector<std::vector<std::uint64_t>> c(g.target().rank(), std::vector<std::uint64_t>(f.source().rank()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto q = g.target().factor_order(i);
    for (std::size_t k = 0; k < c[i].size(); ++k) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < b.size(); ++j) acc = (acc + static_cast<unsigned __int128>(a[i][j]) * b[j][k]) % q;
      c[i][k] = static_cast<std::uint64_t>(acc);
    }
  }
  return GroupHom(f.source(), g.target(), std::move(c));
}

GroupHom dual_hom(const GroupHom& f) {
  const auto& v = f.source();
  const auto& w = f.target();
  const auto p = v.prime();
  std::vector<std::vector<std::uint64_t>> b(v.rank(), std::vector<std::uint64_t>(w.rank()));
  for (std::size_t j = 0; j < v.rank(); ++j) {
    const unsigned ej = v.exponents()[j];
    for (std::size_t i = 0; i < w.rank(); ++i) {
      const unsigned ei = w.exponents()[i];
      const std::uint64_t a = f.matrix()[i][j];
      // b_ji = a_ij p^(e_j) / p^(e'_i), exact by well-definedness of f.
      const std::uint64_t val = ej >= ei ? (a % ipow(p, ej)) * ipow(p, ej - ei) : a / ipow(p, ei - ej);
      b[j][i] = val % ipow(p, ej);
    }
  }
  return GroupHom(w, v, std::move(b));
}

std::vector<FinAbGroup> enumerate_groups(std::uint64_t p, std::uint64_t max_order) {
  if (max_order < 1) throw UsageError("enumerate_groups: max_order must be >= 1");
  std::vector<FinAbGroup> out;
  std::vector<unsigned> part;
  // Partitions of n with parts <= cap, largest part first (descending lex order).
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      out.emplace_back(p, part);
      return;
    }
    for (unsigned k = std::min(remaining, cap); k >= 1; --k) {
      part.push_back(k);
      rec(remaining - k, k);
      part.pop_back();
    }
  };
  std::uint64_t order = 1;
  for (unsigned n = 0;; ++n) {
    rec(n, n);
    if (order > max_order / p) break;
    order *= p;
  }
  return out;
}

std::optional<std::uint64_t> count_homs(const FinAbGroup& source, const FinAbGroup& target) {
  unsigned total = 0;
  for (auto ej : source.exponents())
    for (auto ei : target.exponents()) total += std::min(ej, ei);
  if (static_cast<double>(total) * std::log2(static_cast<double>(source.prime())) > 62) return std::nullopt;
  return ipow(source.prime(), total);
}

std::vector<GroupHom> enumerate_homs(const FinAbGroup& source, const FinAbGroup& target, std::uint64_t max_count) {
  const auto count = count_homs(source, target);
  if (!count || *count > max_count)
    throw BudgetExceeded("enumerate_homs: Hom(" + source.to_string() + ", " + target.to_string() + ") exceeds budget of " +
                         std::to_string(max_count));
  const auto p = source.prime();
  const std::size_t rows = target.rank(), cols = source.rank();
  std::vector<std::uint64_t> step(rows * cols), limit(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const unsigned ei = target.exponents()[i], ej = source.exponents()[j];
      step[i * cols + j] = ei > ej ? ipow(p, ei - ej) : 1;
      limit[i * cols + j] = ipow(p, ei);
    }
  std::vector<GroupHom> out;
  out.reserve(*count);
  std::vector<std::uint64_t> cur(rows * cols, 0);
  // Odometer over the allowed entry values, last entry fastest.
  const auto advance = [&] {
    for (std::size_t k = cur.size(); k-- > 0;) {
      cur[k] += step[k];
      if (cur[k] < limit[k]) return true;
      cur[k] = 0;
    }
    return false;
  };
  do {
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = cur[i * cols + j];
    out.emplace_back(source, target, std::move(m));
  } while (advance());
  if (out.size() != *count) throw InternalError("enumerate_homs: count does not match the closed form");
  return out;
}

}  // namespace cyclo
