#include "cyclo/alpha.hpp"

#include "cyclo/errors.hpp"

namespace cyclo {

AlphaFunction AlphaFunction::table(std::uint64_t p, unsigned level, std::vector<CycloElem> values) {
  if (values.size() != ipow(p, level)) throw UsageError("AlphaFunction: table must have p^level values");
  for (const auto& v : values)
    if (v.ring().prime() != p) throw UsageError("AlphaFunction: table values must live over Z[1/p]");
  return AlphaFunction(TableAlpha{p, level, std::move(values)});
}

std::uint64_t AlphaFunction::prime() const {
  return std::visit([](const auto& r) { return r.p; }, repr_);
}

std::optional<unsigned> AlphaFunction::level() const {
  if (const auto* t = std::get_if<TableAlpha>(&repr_)) return t->level;
  return std::nullopt;
}

CycloElem alpha_eval(const AlphaFunction& alpha, const PadicCircle& x, const CycloRing& ring) {
  if (x.prime() != alpha.prime()) throw UsageError("alpha_eval: argument lives over a different prime");
  if (std::holds_alternative<TpzcAlpha>(alpha.repr()))
    return CycloElem(ring, x.level() >= 1 && x.numerator() == 1 ? 2 : 1);
  const auto& t = std::get<TableAlpha>(alpha.repr());
  if (x.level() > t.level)
    throw UsageError("alpha_eval: " + x.to_string() + " is beyond the table level " + std::to_string(t.level));
  const CycloElem& v = t.values[x.numerator() * ipow(t.p, t.level - x.level())];
  if (v.ring() == ring) return v;
  return lift_conductor(v, ring.conductor());
}

AlphaFunction epsilon_alpha(const CycloRing& ring, unsigned level) {
  return AlphaFunction::tabulate(ring.prime(), level, [&](const PadicCircle& x) {
    return zeta_power(ring, static_cast<std::int64_t>(x.scaled_to(ring.conductor())));
  });
}

}  // namespace cyclo
