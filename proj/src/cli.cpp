#include "cyclo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cyclo/char_gauss.hpp"
#include "cyclo/diag.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/iso_verifier.hpp"
#include "cyclo/localized_int.hpp"
#include "cyclo/polynomial.hpp"

namespace cyclo {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

constexpr std::uint64_t kMaxPrime = 97;
constexpr std::uint64_t kMaxOrder = 256;
constexpr unsigned kMaxLevel = 4;
constexpr std::size_t kMaxSamples = 100000;

struct RunConfig {
  std::uint64_t p = 2;
  std::uint64_t max_order = 0;  // 0: per-prime default
  std::uint64_t nat_max_order = 0;
  unsigned max_r = 3;
  unsigned r = 2;
  std::string alpha = "tpzc";
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
  bool dump_matrix = false;
};

// CYCLO_BUDGET overrides every brute-force budget.
std::uint64_t hom_budget() { return std::getenv("CYCLO_BUDGET") ? default_budget() : std::uint64_t{1} << 20; }

std::uint64_t default_max_order(std::uint64_t p) {
  if (p == 2) return 32;
  if (p == 3) return 27;
  return p * p;
}

std::uint64_t default_nat_max_order(std::uint64_t p) {
  if (p == 2) return 16;
  if (p == 3) return 27;
  return p;
}

void validate(const RunConfig& c) {
  if (!is_prime(c.p) || c.p > kMaxPrime) throw UsageError("--p must be a prime <= " + std::to_string(kMaxPrime));
  if (c.max_order > kMaxOrder) throw UsageError("--max-order must be <= " + std::to_string(kMaxOrder));
  if (c.nat_max_order > 64) throw UsageError("--nat-max-order must be <= 64");
  if (c.max_r < 1 || c.max_r > kMaxLevel) throw UsageError("--max-r must be in [1, " + std::to_string(kMaxLevel) + "]");
  if (c.r < 1 || c.r > 3) throw UsageError("--r must be in [1, 3]");
  if (c.samples > kMaxSamples) throw UsageError("--samples must be <= " + std::to_string(kMaxSamples));
  if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (ipow(c.p, c.max_r) > 4096) throw UsageError("--max-r: p^r must be <= 4096");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render(const Report& rep, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << rep.to_json().dump(2) << "\n";
  } else if (format == "csv") {
    os << "id,pass,subject\n";
    for (const auto& c : rep.checks) os << csv_field(c.id) << "," << (c.pass ? "true" : "false") << "," << csv_field(c.subject) << "\n";
  } else {
    for (const auto& c : rep.checks) os << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
    os << rep.command << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
  }
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open --output file " + path);
  f << text;
}

Report verify(const std::string& what, const RunConfig& c) {
  Report rep;
  rep.command = "verify " + what;
  const std::uint64_t max_order = c.max_order ? c.max_order : default_max_order(c.p);
  if (what == "fourier") {
    rep.params = Json{{"p", c.p}, {"max_order", max_order}};
    rep.checks = fourier_inversion_sweep(c.p, max_order, c.jobs);
  } else if (what == "gauss") {
    rep.params = Json{{"p", c.p}, {"max_r", c.max_r}};
    for (unsigned r = 1; r <= c.max_r; ++r)
      rep.append(check_gauss_identities(c.p, r, CycloRing::make(gauss_conductor(c.p, r), c.p), c.jobs));
  } else if (what == "iso") {
    if (c.alpha != "tpzc") throw UsageError("--alpha: only tpzc is supported");
    SweepOptions o;
    o.p = c.p;
    o.max_order = max_order;
    o.naturality_max_order = c.nat_max_order ? c.nat_max_order : std::min(max_order, default_nat_max_order(c.p));
    o.hom_budget = hom_budget();
    o.dump_matrix = c.dump_matrix;
    o.jobs = c.jobs;
    rep.params = Json{{"p", c.p}, {"max_order", max_order}, {"naturality_max_order", o.naturality_max_order},
                      {"alpha", c.alpha}};
    rep.checks = sweep_theorem(o);
  } else if (what == "criterion-oracle") {
    OracleCompareOptions o;
    o.p = c.p;
    o.r = c.r;
    o.samples = c.samples;
    o.seed = c.seed;
    o.extra_order_cap = c.p == 2 ? 32 : 27;
    o.jobs = c.jobs;
    rep.params = Json{{"p", c.p}, {"r", c.r}, {"samples", c.samples}, {"seed", c.seed}};
    rep.checks = criterion_oracle_compare(o);
  } else if (what == "naturality") {
    const std::uint64_t bound = c.nat_max_order ? c.nat_max_order : (c.max_order ? c.max_order : default_nat_max_order(c.p));
    if (bound > 64) throw UsageError("naturality: --max-order must be <= 64");
    rep.params = Json{{"p", c.p}, {"max_order", bound}, {"alpha", c.alpha}};
    rep.checks = naturality_sweep(c.p, bound, hom_budget(), c.jobs);
  } else {
    throw UsageError("unknown verify target " + what);
  }
  return rep;
}

Json phi_json(const IntPolynomial& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

std::vector<std::uint64_t> parse_orders(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--group: expected a comma-separated list of positive integers");
    const std::uint64_t v = std::stoull(tok);
    if (v == 0) throw UsageError("--group: orders must be positive");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Fourier-type isomorphisms for finite abelian p-groups", "cyclo"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* phi = app.add_subcommand("phi", "Print the n-th cyclotomic polynomial");
  std::uint64_t phi_n = 1;
  std::string phi_format = "text";
  phi->add_option("--n", phi_n, "Index n >= 1")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  phi->add_option("--format", phi_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "Run a verification sweep");
  std::string target;
  ver->add_option("target", target, "fourier, gauss, iso, criterion-oracle or naturality")
      ->required()
      ->check(CLI::IsMember({"fourier", "gauss", "iso", "criterion-oracle", "naturality"}));
  ver->add_option("--p", cfg.p, "Prime");
  ver->add_option("--max-order", cfg.max_order, "Largest group order in the sweep");
  ver->add_option("--nat-max-order", cfg.nat_max_order, "Largest group order for naturality squares");
  ver->add_option("--max-r", cfg.max_r, "Largest level r for Gauss sums mod p^r");
  ver->add_option("--r", cfg.r, "Level r of the sampled alpha tables");
  ver->add_option("--alpha", cfg.alpha, "alpha function (tpzc)")->check(CLI::IsMember({"tpzc"}));
  ver->add_option("--samples", cfg.samples, "Number of random alpha tables");
  ver->add_option("--seed", cfg.seed, "Random seed");
  ver->add_option("--format", cfg.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  ver->add_option("--output", cfg.output, "Write the report to this file");
  ver->add_option("--jobs", cfg.jobs, "Worker threads");
  ver->add_flag("--dump-matrix", cfg.dump_matrix, "Embed the Phi(alpha) matrices in the report");

  auto* dg = app.add_subcommand("diag", "Decide strong diagonalizability of Z/m[V]");
  std::uint64_t modulus = 0, diag_n = 0;
  std::string group;
  bool emit_iso = false;
  dg->add_option("--modulus", modulus, "Modulus m >= 2")->required();
  auto* n_opt = dg->add_option("--n", diag_n, "Order of the cyclic group");
  auto* g_opt = dg->add_option("--group", group, "Cyclic orders e1,e2,...");
  n_opt->excludes(g_opt);
  dg->add_flag("--emit-iso", emit_iso, "Include the evaluation matrix and its checks");

  auto* gt = app.add_subcommand("gauss-table", "Tabulate Gauss sums G(chi, eps_u) mod p^r");
  unsigned gt_r = 1;
  std::string gt_format = "csv";
  std::string gt_output;
  gt->add_option("--p", cfg.p, "Prime");
  gt->add_option("--r", gt_r, "Level r");
  gt->add_option("--format", gt_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  gt->add_option("--output", gt_output, "Write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*phi) {
      const IntPolynomial& f = cyclotomic_polynomial(phi_n);
      if (phi_format == "json")
        out << phi_json(f).dump() << "\n";
      else
        out << f.to_string() << "\n";
      return kOk;
    }
    if (*ver) {
      validate(cfg);
      const Report rep = verify(target, cfg);
      emit(render(rep, cfg.format), cfg.output, out);
      return rep.failed() == 0 ? kOk : kFailed;
    }
    if (*dg) {
      if (modulus < 2) throw UsageError("--modulus must be >= 2");
      if (!*n_opt && !*g_opt) throw UsageError("diag needs --n or --group");
      DiagVerdict v;
      Json params;
      if (*g_opt) {
        const auto orders = parse_orders(group);
        v = decide_diag_group(orders, modulus);
        params = Json{{"modulus", modulus}, {"group", orders}};
      } else {
        if (diag_n == 0) throw UsageError("--n must be >= 1");
        v = decide_diag_cyclic(diag_n, modulus);
        params = Json{{"modulus", modulus}, {"n", diag_n}};
      }
      Json j = v.to_json();
      if (emit_iso && v.decision) {
        if (v.n > 20) throw UsageError("--emit-iso: exponent must be <= 20");
        const VandermondeCheck vc = vandermonde_iso(v.n, modulus, *v.witness);
        Json rows = Json::array();
        for (std::size_t i = 0; i < vc.matrix.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t k = 0; k < vc.matrix.cols(); ++k) row.push_back(vc.matrix(i, k).value());
          rows.push_back(std::move(row));
        }
        j["evaluation_matrix"] = std::move(rows);
        j["det"] = vc.det.value();
        j["det_unit"] = vc.det_unit;
        j["differences_unit"] = vc.differences_unit;
        j["factorization"] = vc.factorization;
        if (!vc.ok()) {
          out << j.dump() << "\n";
          return kFailed;
        }
      }
      out << j.dump() << "\n";
      return kOk;
    }
    if (*gt) {
      if (!is_prime(cfg.p) || cfg.p > kMaxPrime) throw UsageError("--p must be a prime <= " + std::to_string(kMaxPrime));
      if (gt_r < 1 || ipow(cfg.p, gt_r) > 1024) throw UsageError("--r must be >= 1 with p^r <= 1024");
      const CycloRing ring = CycloRing::make(gauss_conductor(cfg.p, gt_r), cfg.p);
      const std::uint64_t n = ipow(cfg.p, gt_r);
      std::ostringstream os;
      Json rows = Json::array();
      if (gt_format == "csv") os << "N,chi_exponents,u,sum_coeffs,is_unit\n";
      for (const auto& chi : enumerate_characters(cfg.p, gt_r, ring))
        for (std::uint64_t u = 0; u < n; ++u) {
          const CycloElem g = gauss_sum(chi, static_cast<std::int64_t>(u));
          const bool unit = is_unit(g);
          if (gt_format == "csv") {
            std::string coeffs;
            for (const auto& s : g.coeff_strings()) coeffs += (coeffs.empty() ? "" : " ") + s;
            os << n << "," << join(chi.exponents) << "," << u << "," << coeffs << "," << (unit ? "true" : "false") << "\n";
          } else {
            rows.push_back(Json{{"N", n}, {"chi_exponents", chi.exponents}, {"u", u}, {"sum_coeffs", to_json(g)},
                                {"is_unit", unit}});
          }
        }
      if (gt_format == "json") os << rows.dump(2) << "\n";
      emit(os.str(), gt_output, out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  }
  return kUsage;
}

}  // namespace cyclo
