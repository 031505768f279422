#include "quadprime/cli/app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quadprime/arith.hpp"
#include "quadprime/cli/config.hpp"
#include "quadprime/cli/export.hpp"
#include "quadprime/cli/verify.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/partial_sums.hpp"
#include "quadprime/progressions.hpp"
#include "quadprime/quadratic.hpp"
#include "quadprime/spf_cache.hpp"

namespace quadprime::cli {

namespace {

using u64 = std::uint64_t;
using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes bytes to --out when given, otherwise to out.
void emit(const RunConfig& config, const std::string& bytes, std::ostream& out) {
  if (config.output_path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + config.output_path.string() + " for writing");
  file << bytes;
  if (!file) throw std::runtime_error("write to " + config.output_path.string() + " failed");
  out << "wrote " << config.output_path.string() << '\n';
}

void require_limit(const RunConfig& config, u64 needed, const std::string& what) {
  if (needed > config.table_limit) {
    throw CapacityError(what + " needs a table up to " + std::to_string(needed) + " but --limit is " +
                        std::to_string(config.table_limit));
  }
}

std::string cmd_sieve(const RunConfig& config) {
  const SieveTable t = load_table(config, config.table_limit);
  u64 primes = 0;
  for (u64 n = 2; n <= t.limit(); ++n) primes += t.is_prime(n) ? 1 : 0;
  const std::int64_t m = mertens(t, t.limit());
  const std::int64_t l = liouville_summatory(t, t.limit());
  std::string cache;
  if (config.cache_dir) cache = spf_cache_path(*config.cache_dir, t.limit()).string();
  if (config.output_format == OutputFormat::csv) {
    std::string s = "key,value\n";
    s += "limit," + std::to_string(t.limit()) + "\n";
    s += "primes," + std::to_string(primes) + "\n";
    s += "mertens," + std::to_string(m) + "\n";
    s += "liouville_summatory," + std::to_string(l) + "\n";
    s += "cache_file," + cache + "\n";
    return s;
  }
  json j{{"limit", t.limit()},
         {"segment_size", t.segment_size()},
         {"primes", primes},
         {"mertens", m},
         {"liouville_summatory", l},
         {"cache_file", cache.empty() ? json(nullptr) : json(cache)}};
  return j.dump(2) + "\n";
}

std::string cmd_constants(const RunConfig& config, const std::optional<QuadraticPoly>& poly) {
  const u64 P = config.prime_bound;
  std::vector<ConstantEstimate> estimates;
  estimates.push_back(a2_constant(P));
  estimates.push_back(product_c0(P));
  estimates.push_back(product_sum_lambda_n_phi(P));
  estimates.push_back(product_artin_like(P));
  estimates.push_back(a0_phi_square_sum(P));
  estimates.push_back(a0_mu_dphi(P));
  std::optional<HardyLittlewoodEstimate> hl;
  if (poly) hl = hardy_littlewood_constant(*poly, P);

  if (config.output_format == OutputFormat::csv) {
    std::string s = "name,value,P,tail_estimate,tail_heuristic,paper_value,converged\n";
    const auto row = [&](const ConstantEstimate& c) {
      s += c.name + "," + fmt(c.value) + "," + std::to_string(c.truncation_point) + "," + fmt(c.tail_estimate) + "," +
           (c.tail_is_heuristic ? "true" : "false") + "," + (c.reference_value ? fmt(*c.reference_value) : "") + "," +
           (c.converged ? "true" : "false") + "\n";
    };
    for (const auto& c : estimates) row(c);
    if (hl) row(hl->estimate);
    return s;
  }
  json j = json::object();
  j["P"] = P;
  j["constants"] = json::array();
  for (const auto& c : estimates) j["constants"].push_back(to_json(c));
  if (hl) j["hardy_littlewood"] = to_json(*hl);
  return j.dump(2) + "\n";
}

struct CountOptions {
  QuadraticPoly poly;
  u64 n_max = 100'000;
  std::size_t list_cap = 100;
};

std::string cmd_count(const RunConfig& config, const CountOptions& opt) {
  validate(config);
  const QuadraticPoly& f = opt.poly;
  const auto counted = count_quadratic_primes(f, opt.n_max, opt.list_cap, config.workers);
  if (config.output_format == OutputFormat::csv) {
    std::ostringstream s;
    write_prime_values_csv(s, f, counted);
    return s.str();
  }
  const AdmissibilityReport adm = admissibility(f);
  json j = json::object();
  j["polynomial"] = {{"a", f.a}, {"b", f.b}, {"c", f.c}};
  j["N"] = opt.n_max;
  j["count"] = counted.count;
  j["admissibility"] = to_json(adm);
  if (const auto lp = least_prime(f, opt.n_max)) {
    j["least_prime"] = {{"n", lp->n}, {"p", lp->p}};
  } else {
    j["least_prime"] = nullptr;
  }
  j["values"] = counted.values;
  j["values_truncated"] = counted.values_truncated;
  if (adm.admissible && f.a > 0 && opt.n_max >= 3) {
    // pi_f(N) ~ C_f sqrt(a)/2 Li(N): f(n) <= a N^2 roughly, log f(n) ~ 2 log n.
    const auto hl = hardy_littlewood_constant(f, config.prime_bound);
    const double expected = hl.estimate.value * std::sqrt(static_cast<double>(f.a)) / 2.0 *
                            log_integral_from_2(static_cast<double>(opt.n_max));
    j["hardy_littlewood"] = to_json(hl);
    j["expected"] = expected;
    j["ratio"] = static_cast<double>(counted.count) / expected;
  }
  return j.dump(2) + "\n";
}

std::string cmd_progressions(const RunConfig& config, u64 q_max) {
  validate(config);
  std::vector<u64> grid = config.seed_grid.empty() ? std::vector<u64>{1'000'000} : config.seed_grid;
  u64 x_max = 0;
  for (const u64 x : grid) x_max = std::max(x_max, x);
  require_limit(config, x_max, "progressions");
  if (q_max == 0) throw ParameterError("--q-max must be >= 1");
  const SieveTable t = load_table(config, std::max<u64>(x_max, 2));

  std::string csv = "x,q,a,psi,pi,ratio\n";
  json rows = json::array();
  for (const u64 x : grid) {
    for (u64 q = 1; q <= q_max; ++q) {
      for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const u64 r = a % q;
        const double psi = psi_progression(t, x, q, r);
        const u64 pi = pi_progression(t, x, q, r);
        const double ratio = siegel_walfisz_ratio(t, x, q, r);
        csv += std::to_string(x) + "," + std::to_string(q) + "," + std::to_string(r) + "," + fmt(psi) + "," +
               std::to_string(pi) + "," + fmt(ratio) + "\n";
        rows.push_back({{"x", x}, {"q", q}, {"a", r}, {"psi", psi}, {"pi", pi}, {"ratio", ratio}});
      }
    }
  }
  if (config.output_format == OutputFormat::csv) return csv;
  return rows.dump(2) + "\n";
}

std::string cmd_decompose(const RunConfig& config, double B) {
  validate(config);
  std::vector<u64> grid = config.seed_grid.empty() ? std::vector<u64>{10'000, 1'000'000} : config.seed_grid;
  u64 root_max = 0;
  for (const u64 x : grid) root_max = std::max(root_max, isqrt(x));
  require_limit(config, root_max + 1, "decompose");
  const SieveTable t = load_table(config, std::max<u64>(root_max + 1, 2));

  std::vector<DecompositionReport> reports;
  for (const u64 x : grid) reports.push_back(compute_decomposition(t, x, B, config.workers));
  if (config.output_format == OutputFormat::csv) {
    std::ostringstream s;
    write_decomposition_csv(s, reports);
    return s.str();
  }
  json j = json::object();
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r));
  j["coverage"] = json::array();
  for (const u64 x : grid) {
    const ModuliCoverage c = moduli_set_coverage(t, x);
    j["coverage"].push_back({{"x", c.x},
                             {"sqrt_bound", c.sqrt_bound},
                             {"covered", c.covered},
                             {"covers_all", c.covers_all()},
                             {"first_missing", c.first_missing},
                             {"max_multiplicity", c.max_multiplicity},
                             {"max_multiplicity_at", c.max_multiplicity_at},
                             {"weight_mismatches", c.weight_mismatches}});
  }
  return j.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quadprime: sieve tables, claim verification and curve export for primes of the form a n^2 + b n + c"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string limit_text = std::to_string(kDefaultTableLimit);
  unsigned workers = 1;
  std::string format_text = "json";
  std::string out_path;
  std::string grid_text;
  std::string prime_bound_text = std::to_string(kDefaultPrimeBound);
  std::string poly_text;

  app.add_option("--limit", limit_text, "sieve table limit N (integers or 1eK)")->capture_default_str();
  app.add_option("--workers", workers, "worker threads")->capture_default_str();
  app.add_option("--format", format_text, "csv or json")->capture_default_str();
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--grid", grid_text, "comma separated evaluation points, e.g. 1e4,1e5,1e6");
  app.add_option("--prime-bound", prime_bound_text, "truncation point P for Euler products")->capture_default_str();
  app.add_option("--polynomial", poly_text, "coefficients a,b,c of a x^2 + b x + c");

  auto* sieve = app.add_subcommand("sieve", "build or load the table and print a summary");

  std::string set_text = "all";
  auto* verify = app.add_subcommand("verify", "run claim checks and print the ledger");
  verify->add_option("set", set_text, "identities, decomposition, constants, progressions, quadratic or all")
      ->capture_default_str();

  auto* constants = app.add_subcommand("constants", "truncated Euler products and series at --prime-bound");

  std::string n_max_text = "1e5";
  std::size_t list_cap = 100;
  auto* count = app.add_subcommand("count", "count n <= N with f(n) prime");
  count->add_option("--n-max", n_max_text, "largest argument N")->capture_default_str();
  count->add_option("--list-cap", list_cap, "how many prime values to list")->capture_default_str();

  u64 q_max = 20;
  auto* progressions = app.add_subcommand("progressions", "psi(x; q, a) for q <= --q-max at each grid point");
  progressions->add_option("--q-max", q_max, "largest modulus")->capture_default_str();

  double exponent_b = 3.0;
  auto* decompose = app.add_subcommand("decompose", "split of the shifted divisor-square sum at each grid point");
  decompose->add_option("--exponent-b", exponent_b, "B in the (log x)^B split")->capture_default_str();

  std::string quantity_text;
  auto* exporter = app.add_subcommand("export", "write a summatory curve as CSV plus a gnuplot script");
  exporter->add_option("quantity", quantity_text, "quantity name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    config.table_limit = parse_count(limit_text);
    config.workers = workers;
    config.output_format = parse_output_format(format_text);
    config.output_path = out_path;
    config.cache_dir = cache_dir_from_env();
    config.seed_grid = parse_grid(grid_text);
    config.prime_bound = parse_count(prime_bound_text);
    validate(config);
    std::optional<QuadraticPoly> poly;
    if (!poly_text.empty()) poly = parse_polynomial(poly_text);

    if (sieve->parsed()) {
      emit(config, cmd_sieve(config), out);
    } else if (verify->parsed()) {
      const ClaimsLedger ledger = cmd_verify(parse_claim_set(set_text), config);
      emit(config, render_ledger(ledger, config.output_format), out);
      err << "verified " << ledger.count(ClaimStatus::verified) << ", falsified "
          << ledger.count(ClaimStatus::falsified) << ", indeterminate " << ledger.count(ClaimStatus::indeterminate)
          << '\n';
      if (ledger.has_undocumented_falsification()) {
        err << "undocumented falsification present\n";
        return kExitFalsified;
      }
    } else if (constants->parsed()) {
      emit(config, cmd_constants(config, poly), out);
    } else if (count->parsed()) {
      CountOptions opt;
      opt.poly = poly ? *poly : QuadraticPoly::make(1, 0, 1);
      opt.n_max = parse_count(n_max_text);
      opt.list_cap = list_cap;
      emit(config, cmd_count(config, opt), out);
    } else if (progressions->parsed()) {
      emit(config, cmd_progressions(config, q_max), out);
    } else if (decompose->parsed()) {
      emit(config, cmd_decompose(config, exponent_b), out);
    } else if (exporter->parsed()) {
      const CurveQuantity q = parse_curve_quantity(quantity_text);
      if (config.seed_grid.empty()) throw ParameterError("export needs a non-empty --grid");
      const CurveFiles files = cmd_export_curve(q, config.seed_grid, config);
      out << "wrote " << files.csv.string() << '\n';
      if (!files.json.empty()) out << "wrote " << files.json.string() << '\n';
      out << "wrote " << files.script.string() << '\n';
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace quadprime::cli
