#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cyclo/cyclo_ring.hpp"
#include "cyclo/fin_ab.hpp"

namespace cyclo {

/// Closed-form function on Z/p^inf: 2 at every 1/p^s (s >= 1), 1 elsewhere.
struct TpzcAlpha {
  std::uint64_t p;
};

/// Function on Z/p^level given by its values; values[a] is the value at
/// a/p^level.
struct TableAlpha {
  std::uint64_t p;
  unsigned level;
  std::vector<CycloElem> values;
};

/// A set map alpha : Z/p^inf -> k, parameterizing Phi(alpha).
class AlphaFunction {
 public:
  static AlphaFunction tpzc(std::uint64_t p) { return AlphaFunction(TpzcAlpha{p}); }
  /// Requires values.size() == p^level.
  static AlphaFunction table(std::uint64_t p, unsigned level, std::vector<CycloElem> values);
  /// Tabulates f over Z/p^level.
  template <class F>
  static AlphaFunction tabulate(std::uint64_t p, unsigned level, F&& f) {
    std::vector<CycloElem> v;
    const auto n = ipow(p, level);
    v.reserve(n);
    for (std::uint64_t a = 0; a < n; ++a) v.push_back(f(PadicCircle::make(p, static_cast<std::int64_t>(a), level)));
    return table(p, level, std::move(v));
  }

  std::uint64_t prime() const;
  /// nullopt for the closed form (defined at every level).
  std::optional<unsigned> level() const;
  const std::variant<TpzcAlpha, TableAlpha>& repr() const { return repr_; }

 private:
  explicit AlphaFunction(std::variant<TpzcAlpha, TableAlpha> r) : repr_(std::move(r)) {}
  std::variant<TpzcAlpha, TableAlpha> repr_;
};

/// alpha(x) as an element of `ring`. Table values are lifted into the ring
/// when their conductor divides its conductor. Throws UsageError when x is
/// beyond the table's level.
CycloElem alpha_eval(const AlphaFunction& alpha, const PadicCircle& x, const CycloRing& ring);

/// The table of epsilon values z_M^(a M / p^level) over Z/p^level.
AlphaFunction epsilon_alpha(const CycloRing& ring, unsigned level);

}  // namespace cyclo
