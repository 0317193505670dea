#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

/// p^e as a 64-bit integer; throws UsageError on overflow.
std::uint64_t ipow(std::uint64_t p, unsigned e);

/// An element a/p^s of the Pruefer group Z/p^inf, normalized so that
/// 0 <= a < p^s, p does not divide a when s > 0, and 0 is 0/p^0.
class PadicCircle {
 public:
  static PadicCircle make(std::uint64_t p, std::int64_t numerator, unsigned level);
  static PadicCircle zero(std::uint64_t p) { return make(p, 0, 0); }

  std::uint64_t prime() const { return p_; }
  std::uint64_t numerator() const { return a_; }
  unsigned level() const { return s_; }
  bool is_zero() const { return a_ == 0; }

  /// k such that this element equals k/M; requires p^level | M.
  std::uint64_t scaled_to(std::uint64_t conductor) const;

  PadicCircle operator-() const;
  friend PadicCircle operator+(const PadicCircle& x, const PadicCircle& y);
  friend PadicCircle operator-(const PadicCircle& x, const PadicCircle& y) { return x + (-y); }
  friend bool operator==(const PadicCircle&, const PadicCircle&) = default;

  std::string to_string() const;

 private:
  PadicCircle(std::uint64_t p, std::uint64_t a, unsigned s) : p_(p), a_(a), s_(s) {}
  std::uint64_t p_;
  std::uint64_t a_;
  unsigned s_;
};

struct GroupElem {
  std::vector<std::uint64_t> coords;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

/// Element of the dual group, written in the same invariant factors as the
/// group itself.
struct DualElem {
  std::vector<std::uint64_t> coords;
  friend bool operator==(const DualElem&, const DualElem&) = default;
};

/// The abelian p-group Z/p^e1 + ... + Z/p^em with e1 >= ... >= em >= 1.
class FinAbGroup {
 public:
  /// Exponents are sorted into canonical (non-increasing) order.
  FinAbGroup(std::uint64_t p, std::vector<unsigned> exponents);
  static FinAbGroup cyclic(std::uint64_t p, unsigned e) { return FinAbGroup(p, {e}); }

  /// Parses "4+2" (factor orders). The trivial group is "1" and needs p.
  static FinAbGroup parse(const std::string& notation, std::optional<std::uint64_t> p = std::nullopt);

  std::uint64_t prime() const { return p_; }
  const std::vector<unsigned>& exponents() const { return e_; }
  std::size_t rank() const { return e_.size(); }
  std::uint64_t order() const { return order_; }
  /// Largest e_i (0 for the trivial group); the group exponent is p^level.
  unsigned exponent_level() const { return e_.empty() ? 0 : e_.front(); }
  std::uint64_t exponent() const { return ipow(p_, exponent_level()); }
  std::uint64_t factor_order(std::size_t i) const { return ipow(p_, e_[i]); }

  std::uint64_t index_of(const std::vector<std::uint64_t>& coords) const;
  std::vector<std::uint64_t> coords_at(std::uint64_t index) const;

  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem negate(const GroupElem& a) const;

  /// "4+2"; the trivial group prints as "1".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::uint64_t p_;
  std::vector<unsigned> e_;
  std::uint64_t order_;
};

/// <v, l> = sum_i v_i l_i / p^(e_i) in Z/p^inf.
PadicCircle pairing(const FinAbGroup& group, const GroupElem& v, const DualElem& l);

/// All elements in lexicographic coordinate order; this order indexes
/// every matrix in the library.
std::vector<GroupElem> elements(const FinAbGroup& group);
std::vector<DualElem> dual_elements(const FinAbGroup& group);

/// Homomorphism between p-groups. Column j holds the image of the j-th
/// source generator in target coordinates.
class GroupHom {
 public:
  /// Validates p^(e_j) a_ij = 0 mod p^(e'_i) and reduces entries.
  GroupHom(FinAbGroup source, FinAbGroup target, std::vector<std::vector<std::uint64_t>> matrix);
  static GroupHom identity(const FinAbGroup& group);
  static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);

  const FinAbGroup& source() const { return src_; }
  const FinAbGroup& target() const { return dst_; }
  /// matrix()[i][j], i over target factors, j over source factors.
  const std::vector<std::vector<std::uint64_t>>& matrix() const { return a_; }

  std::vector<std::uint64_t> apply_coords(const std::vector<std::uint64_t>& v) const;
  GroupElem apply(const GroupElem& v) const { return {apply_coords(v.coords)}; }
  /// For a dual hom (source and target read as duals).
  DualElem apply(const DualElem& l) const { return {apply_coords(l.coords)}; }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FinAbGroup src_;
  FinAbGroup dst_;
  std::vector<std::vector<std::uint64_t>> a_;
};

/// g o f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// f^# : W^# -> V^# for f : V -> W, characterized by <v, f^#(l)> = <f(v), l>.
/// Returned with source W and target V, acting on dual coordinates.
GroupHom dual_hom(const GroupHom& f);

/// All groups of order <= max_order, sorted by order, then by exponent
/// list in descending lexicographic order (Z/4 before Z/2 + Z/2).
std::vector<FinAbGroup> enumerate_groups(std::uint64_t p, std::uint64_t max_order);

/// prod_{i,j} p^min(e_j, e'_i), or nullopt if it does not fit 64 bits.
std::optional<std::uint64_t> count_homs(const FinAbGroup& source, const FinAbGroup& target);

/// Every homomorphism once; throws BudgetExceeded past max_count.
std::vector<GroupHom> enumerate_homs(const FinAbGroup& source, const FinAbGroup& target,
                                     std::uint64_t max_count = std::uint64_t{1} << 20);

}  // namespace cyclo
