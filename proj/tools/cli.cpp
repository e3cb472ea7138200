#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirichlet_roots/asymptotics.hpp"
#include "dirichlet_roots/diagnostics.hpp"
#include "dirichlet_roots/kac_rice.hpp"
#include "dirichlet_roots/monte_carlo.hpp"
#include "dirichlet_roots/parallel.hpp"

namespace dirichlet_roots::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr char kThreadsEnv[] = "DIRICHLET_ROOTS_THREADS";
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char kFooter[] =
    "Exit codes: 0 success, 2 invalid usage or arguments, "
    "3 deterministic quadrature budget exceeded (retry with --method stratified).\n"
    "DIRICHLET_ROOTS_THREADS sets the default for --threads (0 = all cores).";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json spec_json(const PolynomialSpec& spec) {
  return {{"T", spec.cutoff()},
          {"k", spec.derivative_order()},
          {"sigma", spec.sigma()},
          {"part", std::string(to_string(spec.part()))},
          {"terms", spec.terms()}};
}

std::string spec_comment(const PolynomialSpec& spec) {
  return "T=" + num(spec.cutoff()) + " k=" + std::to_string(spec.derivative_order()) +
         " sigma=" + num(spec.sigma()) + " part=" + std::string(to_string(spec.part()));
}

void write_csv(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open --out file: " + path);
  file << content;
  if (!file) throw UsageError("failed writing --out file: " + path);
}

unsigned threads_from_env() {
  const char* raw = std::getenv(kThreadsEnv);
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > 4096) {
    throw UsageError(std::string(kThreadsEnv) + " must be an integer in [0, 4096]");
  }
  return static_cast<unsigned>(value);
}

struct SpecFlags {
  double T = 0.0;
  int k = 0;
  double sigma = 0.5;
  std::string part = "cos";
};

void add_spec_flags(CLI::App& cmd, SpecFlags& f, bool require_t) {
  auto* t = cmd.add_option("--T", f.T, "cutoff T (> 1); also the left end of [T, 2T]");
  if (require_t) t->required();
  cmd.add_option("--k", f.k, "derivative order k >= 0")->capture_default_str();
  cmd.add_option("--sigma", f.sigma, "weight exponent sigma >= 0")->capture_default_str();
  cmd.add_option("--part", f.part, "trigonometric part summed: cos or sin")->capture_default_str();
}

enum class MethodChoice { automatic, deterministic, stratified };

MethodChoice parse_method(const std::string& name) {
  if (name == "auto") return MethodChoice::automatic;
  if (name == "deterministic") return MethodChoice::deterministic;
  if (name == "stratified") return MethodChoice::stratified;
  throw UsageError("--method must be auto, deterministic or stratified");
}

QuadratureResult expected_count(const PolynomialSpec& spec, MethodChoice method, std::size_t strata,
                                std::uint64_t seed, unsigned threads) {
  const Interval interval = Interval::dyadic(spec);
  const DeterministicOptions options{.threads = threads};
  const bool deterministic =
      method == MethodChoice::deterministic ||
      (method == MethodChoice::automatic &&
       deterministic_node_count(spec, interval) <= options.node_budget);
  if (deterministic) return expected_count_deterministic(spec, interval, options);
  return expected_count_stratified(spec, interval, strata, seed, threads);
}

json asymptotic_json(const PolynomialSpec& spec) {
  if (spec.cutoff() < 2.0 || 2 * spec.derivative_order() > kMaxStieltjesIndex) return nullptr;
  const auto p = predict_expected_zeros(spec.cutoff(), spec.derivative_order());
  return {{"main", p.main_term},
          {"second", p.second_term},
          {"total", p.total},
          {"error_scale", p.error_scale}};
}

double zeta_ratio_or_nan(const PolynomialSpec& spec, double ek) {
  return spec.cutoff() >= 100.0 ? model_vs_zeta_ratio(spec.cutoff(), spec.derivative_order(), ek)
                                : kNaN;
}

// ---- expected ---------------------------------------------------------------

struct ExpectedFlags {
  SpecFlags spec;
  std::string method = "auto";
  std::size_t strata = 20'000;
  std::uint64_t seed = 1;
};

void cmd_expected(const ExpectedFlags& f, unsigned threads, const std::string& out_path,
                  std::ostream& out) {
  const auto spec = make_spec(f.spec.T, f.spec.k, f.spec.sigma, parse_part(f.spec.part));
  Stopwatch clock;
  const auto r = expected_count(spec, parse_method(f.method), f.strata, f.seed, threads);
  const double quad_time = clock.lap();

  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "expected";
  j["spec"] = spec_json(spec);
  j["interval"] = {spec.cutoff(), 2 * spec.cutoff()};
  j["method"] = std::string(to_string(r.method));
  j["seed"] = f.seed;
  j["ek_value"] = r.value;
  j["ek_error"] = r.abs_error_estimate;
  j["nodes_used"] = r.nodes_used;
  if (r.method == QuadratureMethod::stratified_random) j["stderr"] = r.stderr_estimate;
  j["asymptotic"] = asymptotic_json(spec);
  j["zeta_ratio"] = finite_or_null(zeta_ratio_or_nan(spec, r.value));
  j["wall_times"] = {{"quadrature", quad_time}};
  out << j.dump(2) << '\n';

  std::ostringstream csv;
  csv << "# expected " << spec_comment(spec) << " method=" << to_string(r.method)
      << " seed=" << f.seed << '\n'
      << "T,k,sigma,part,method,ek_value,ek_error,nodes_used\n"
      << num(spec.cutoff()) << ',' << spec.derivative_order() << ',' << num(spec.sigma()) << ','
      << to_string(spec.part()) << ',' << to_string(r.method) << ',' << num(r.value) << ','
      << num(r.abs_error_estimate) << ',' << r.nodes_used << '\n';
  write_csv(out_path, csv.str());
}

// ---- simulate ---------------------------------------------------------------

struct SimulateFlags {
  SpecFlags spec;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double step = 0.0;
};

void cmd_simulate(const SimulateFlags& f, unsigned threads, const std::string& out_path,
                  std::ostream& out) {
  const auto spec = make_spec(f.spec.T, f.spec.k, f.spec.sigma, parse_part(f.spec.part));
  if (f.step < 0.0 || !std::isfinite(f.step)) throw UsageError("--step must be >= 0");
  Stopwatch clock;
  const auto agg = run_trials(spec, Interval::dyadic(spec), f.trials, f.seed, f.step, threads);
  const double mc_time = clock.lap();

  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "simulate";
  j["spec"] = spec_json(spec);
  j["interval"] = {spec.cutoff(), 2 * spec.cutoff()};
  j["seed"] = f.seed;
  j["trials"] = agg.trials;
  j["grid_step"] = agg.grid_step;
  j["mean"] = agg.mean;
  j["stderr"] = agg.stderr_estimate;
  j["min"] = agg.min;
  j["max"] = agg.max;
  j["wall_times"] = {{"monte_carlo", mc_time}};
  out << j.dump(2) << '\n';

  std::ostringstream csv;
  csv << "# simulate " << spec_comment(spec) << " trials=" << agg.trials << " seed=" << f.seed
      << " grid_step=" << num(agg.grid_step) << '\n'
      << "trial_index,count\n";
  for (std::size_t i = 0; i < agg.per_trial_counts.size(); ++i) {
    csv << i << ',' << agg.per_trial_counts[i] << '\n';
  }
  write_csv(out_path, csv.str());
}

// ---- compare ----------------------------------------------------------------

struct CompareFlags {
  std::vector<double> T;
  int k = 0;
  double sigma = 0.5;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::string method = "auto";
  std::size_t strata = 20'000;
};

void cmd_compare(const CompareFlags& f, unsigned threads, const std::string& out_path,
                 std::ostream& out) {
  if (f.T.empty()) throw UsageError("--T needs at least one value");
  if (f.trials == 1) throw UsageError("--trials must be 0 (skip Monte Carlo) or >= 2");
  const MethodChoice method = parse_method(f.method);
  const Part part = derivative_part(Part::cosine, f.k);

  json rows = json::array();
  std::ostringstream csv;
  csv << "# compare k=" << f.k << " sigma=" << num(f.sigma) << " part=" << to_string(part)
      << " trials=" << f.trials << " seed=" << f.seed << '\n'
      << "T,ek,asym,mc_mean,mc_stderr,ratio\n";
  for (double T : f.T) {
    if (!(T >= 100.0)) throw UsageError("compare needs every T >= 100");
    const auto spec = make_spec(T, f.k, f.sigma, part);
    Stopwatch clock;
    const auto ek = expected_count(spec, method, f.strata, f.seed, threads);
    const double quad_time = clock.lap();
    double mc_mean = kNaN;
    double mc_stderr = kNaN;
    if (f.trials >= 2) {
      const auto agg = run_trials(spec, Interval::dyadic(spec), f.trials, f.seed, 0.0, threads);
      mc_mean = agg.mean;
      mc_stderr = agg.stderr_estimate;
    }
    const double mc_time = clock.lap();
    const auto asym = asymptotic_json(spec);
    const double asym_total = asym.is_null() ? kNaN : asym["total"].get<double>();
    const double ratio = model_vs_zeta_ratio(T, f.k, ek.value);

    rows.push_back({{"T", T},
                    {"ek", ek.value},
                    {"ek_error", ek.abs_error_estimate},
                    {"method", std::string(to_string(ek.method))},
                    {"nodes_used", ek.nodes_used},
                    {"asym", finite_or_null(asym_total)},
                    {"mc_mean", finite_or_null(mc_mean)},
                    {"mc_stderr", finite_or_null(mc_stderr)},
                    {"ratio", ratio},
                    {"wall_times", {{"quadrature", quad_time}, {"monte_carlo", mc_time}}}});
    csv << num(T) << ',' << num(ek.value) << ',' << num(asym_total) << ',' << num(mc_mean) << ','
        << num(mc_stderr) << ',' << num(ratio) << '\n';
  }

  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "compare";
  j["k"] = f.k;
  j["sigma"] = f.sigma;
  j["part"] = std::string(to_string(part));
  j["trials"] = f.trials;
  j["seed"] = f.seed;
  j["target_ratio"] = 2.0 / std::sqrt(3.0);
  j["rows"] = rows;
  out << j.dump(2) << '\n';
  write_csv(out_path, csv.str());
}

// ---- diagnostics ------------------------------------------------------------

struct DiagnosticsFlags {
  std::string suite;
  SpecFlags spec{.T = 1000.0};
  std::size_t N = 500;
  std::vector<double> coeffs;
  std::size_t gridpoints = 10'000;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
};

json diag_steps(const DiagnosticsFlags& f, unsigned threads, std::ostringstream& csv) {
  const auto spec = make_spec(f.spec.T, f.spec.k, f.spec.sigma, parse_part(f.spec.part));
  const auto reports = proof_step_integrals(spec, threads);
  json rows = json::array();
  csv << "# diagnostics suite=steps " << spec_comment(spec) << '\n'
      << "step_id,integral_value,bound_scale,observed_ratio\n";
  for (const auto& r : reports) {
    rows.push_back({{"step_id", r.step_id},
                    {"integral_value", r.integral_value},
                    {"bound_scale", r.bound_scale},
                    {"observed_ratio", r.observed_ratio}});
    csv << r.step_id << ',' << num(r.integral_value) << ',' << num(r.bound_scale) << ','
        << num(r.observed_ratio) << '\n';
  }
  return {{"spec", spec_json(spec)}, {"steps", rows}};
}

json diag_l2(const DiagnosticsFlags& f, unsigned threads, std::ostringstream& csv) {
  std::vector<std::complex<double>> a;
  std::string source;
  if (!f.coeffs.empty()) {
    for (double c : f.coeffs) a.emplace_back(c, 0.0);
    source = "explicit";
  } else {
    a = log_power_coefficients(f.N, f.spec.k);
    source = "log_power";
  }
  const auto r = l2_mean_value_check(a, f.spec.T, threads);
  csv << "# diagnostics suite=l2 T=" << num(f.spec.T) << " N=" << a.size() << " coefficients="
      << source << (source == "log_power" ? " k=" + std::to_string(f.spec.k) : "") << '\n'
      << "T,N,lhs,main,diff,error_budget,realized_constant\n"
      << num(f.spec.T) << ',' << a.size() << ',' << num(r.lhs) << ',' << num(r.main) << ','
      << num(r.lhs - r.main) << ',' << num(r.error_budget) << ',' << num(r.realized_constant)
      << '\n';
  return {{"T", f.spec.T},
          {"N", a.size()},
          {"coefficients", source},
          {"k", source == "log_power" ? json(f.spec.k) : json(nullptr)},
          {"lhs", r.lhs},
          {"main", r.main},
          {"diff", r.lhs - r.main},
          {"error_budget", r.error_budget},
          {"realized_constant", r.realized_constant}};
}

json diag_sup(const DiagnosticsFlags& f, unsigned threads, std::ostringstream& csv) {
  const auto spec = make_spec(f.spec.T, f.spec.k, f.spec.sigma, parse_part(f.spec.part));
  const auto r = u_sup_monitor(spec, Interval::dyadic(spec), f.gridpoints, threads);
  csv << "# diagnostics suite=sup " << spec_comment(spec) << " gridpoints=" << f.gridpoints << '\n'
      << "sum,sup,ratio,cap\n"
      << "u," << num(r.sup_u) << ',' << num(r.ratio_u) << ',' << num(r.cap_u) << '\n'
      << "u1," << num(r.sup_u1) << ',' << num(r.ratio_u1) << ',' << num(r.cap_u1) << '\n'
      << "u2," << num(r.sup_u2) << ',' << num(r.ratio_u2) << ',' << num(r.cap_u2) << '\n';
  return {{"spec", spec_json(spec)},
          {"gridpoints", f.gridpoints},
          {"sup_u", r.sup_u},
          {"sup_u1", r.sup_u1},
          {"sup_u2", r.sup_u2},
          {"ratio_u", r.ratio_u},
          {"ratio_u1", r.ratio_u1},
          {"ratio_u2", r.ratio_u2},
          {"cap_u", r.cap_u},
          {"cap_u1", r.cap_u1},
          {"cap_u2", r.cap_u2}};
}

json diag_sigma(const DiagnosticsFlags& f, unsigned threads, std::ostringstream& csv) {
  const std::vector<double> sigmas{0.0, 0.25, 0.5, 0.6, 0.75, 1.0};
  const auto rows = sigma_sweep(f.spec.T, sigmas, f.trials, f.seed, threads);
  json out = json::array();
  csv << "# diagnostics suite=sigma T=" << num(f.spec.T) << " k=0 part=cosine trials=" << f.trials
      << " seed=" << f.seed << '\n'
      << "sigma,mean,stderr,per_t_log_t\n";
  for (const auto& r : rows) {
    out.push_back({{"sigma", r.sigma},
                   {"mean", r.mean},
                   {"stderr", r.stderr_estimate},
                   {"per_t_log_t", r.per_t_log_t}});
    csv << num(r.sigma) << ',' << num(r.mean) << ',' << num(r.stderr_estimate) << ','
        << num(r.per_t_log_t) << '\n';
  }
  return {{"T", f.spec.T}, {"trials", f.trials}, {"seed", f.seed}, {"rows", out}};
}

void cmd_diagnostics(const DiagnosticsFlags& f, unsigned threads, const std::string& out_path,
                     std::ostream& out) {
  std::ostringstream csv;
  Stopwatch clock;
  json body;
  if (f.suite == "steps") {
    body = diag_steps(f, threads, csv);
  } else if (f.suite == "l2") {
    body = diag_l2(f, threads, csv);
  } else if (f.suite == "sup") {
    body = diag_sup(f, threads, csv);
  } else if (f.suite == "sigma") {
    body = diag_sigma(f, threads, csv);
  } else {
    throw UsageError("unknown suite '" + f.suite + "' (expected steps, l2, sup or sigma)");
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "diagnostics";
  j["suite"] = f.suite;
  j["result"] = body;
  j["wall_times"] = {{f.suite, clock.lap()}};
  out << j.dump(2) << '\n';
  write_csv(out_path, csv.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  unsigned threads = 0;
  try {
    threads = threads_from_env();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Zeros of random Dirichlet polynomials: Kac-Rice expectation, simulation, asymptotics",
               "dirichlet-roots"};
  app.footer(kFooter);
  app.require_subcommand(1);
  std::string out_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--out", out_path, "write the CSV table to this path");
  };

  ExpectedFlags ef;
  auto* expected = app.add_subcommand("expected", "Kac-Rice expected zero count on [T, 2T]");
  add_spec_flags(*expected, ef.spec, true);
  expected->add_option("--method", ef.method, "auto, deterministic or stratified")->capture_default_str();
  expected->add_option("--strata", ef.strata, "strata for the stratified method (>= 100)")->capture_default_str();
  expected->add_option("--seed", ef.seed, "seed for the stratified method")->capture_default_str();
  add_common(expected);

  SimulateFlags sf;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo zero counts on [T, 2T]");
  add_spec_flags(*simulate, sf.spec, true);
  simulate->add_option("--trials", sf.trials, "number of realizations (>= 2)")->capture_default_str();
  simulate->add_option("--seed", sf.seed, "master seed")->capture_default_str();
  simulate->add_option("--step", sf.step, "grid step (0 = default)")->capture_default_str();
  add_common(simulate);

  CompareFlags cf;
  auto* compare = app.add_subcommand("compare", "Kac-Rice vs asymptotics vs Monte Carlo vs zeta");
  compare->add_option("--T", cf.T, "comma-separated cutoffs (each >= 100)")->required()->delimiter(',');
  compare->add_option("--k", cf.k, "derivative order")->capture_default_str();
  compare->add_option("--sigma", cf.sigma, "weight exponent")->capture_default_str();
  compare->add_option("--trials", cf.trials, "Monte Carlo trials per T (0 = skip)")->capture_default_str();
  compare->add_option("--seed", cf.seed, "master seed")->capture_default_str();
  compare->add_option("--method", cf.method, "auto, deterministic or stratified")->capture_default_str();
  compare->add_option("--strata", cf.strata, "strata for the stratified method")->capture_default_str();
  add_common(compare);

  DiagnosticsFlags df;
  auto* diagnostics = app.add_subcommand("diagnostics", "supporting numerical checks");
  diagnostics->add_option("--suite", df.suite, "steps, l2, sup or sigma")->required();
  add_spec_flags(*diagnostics, df.spec, false);
  diagnostics->add_option("--N", df.N, "l2: number of coefficients (log n)^k / n")->capture_default_str();
  diagnostics->add_option("--coeffs", df.coeffs, "l2: explicit real coefficients, comma-separated")
      ->delimiter(',');
  diagnostics->add_option("--gridpoints", df.gridpoints, "sup: grid size (>= 1000)")->capture_default_str();
  diagnostics->add_option("--trials", df.trials, "sigma: trials per sigma")->capture_default_str();
  diagnostics->add_option("--seed", df.seed, "sigma: master seed")->capture_default_str();
  add_common(diagnostics);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expected) {
      cmd_expected(ef, threads, out_path, out);
    } else if (*simulate) {
      cmd_simulate(sf, threads, out_path, out);
    } else if (*compare) {
      cmd_compare(cf, threads, out_path, out);
    } else {
      cmd_diagnostics(df, threads, out_path, out);
    }
  } catch (const QuadratureBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dirichlet_roots::cli
