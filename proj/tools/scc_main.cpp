// Command-line surface for the starlike-convex class criteria:
//   check     coefficient-criterion membership test for a supplied series
//   extremal  sharp boundary series for given parameters and index
//   wright    Wright-type series coefficient table (optionally integrated)
//   region    closed-form vs criterion feasibility scan over a parameter grid
//   verify    sampled check of the defining inequality Re(phi) > alpha

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scc/core.hpp"
#include "scc/criteria.hpp"
#include "scc/report_json.hpp"
#include "scc/scan.hpp"
#include "scc/special_functions.hpp"
#include "scc/verifier.hpp"

namespace {

using nlohmann::json;

constexpr int kExitSatisfied = 0;
constexpr int kExitNotSatisfied = 1;
constexpr int kExitUsage = 2;

double parse_double_strict(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw std::invalid_argument("malformed number '" + token + "'");
  }
  return value;
}

// Comma- or whitespace-separated coefficient magnitudes a_2, a_3, ...
std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> values;
  std::string token;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!token.empty()) {
        values.push_back(parse_double_strict(token));
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) {
    values.push_back(parse_double_strict(token));
  }
  return values;
}

std::vector<double> read_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open coefficient file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficients(buffer.str());
}

scc::Convention parse_convention(const std::string& name) {
  if (name == "A" || name == "a") return scc::Convention::ClassA;
  if (name == "T" || name == "t") return scc::Convention::ClassT;
  throw std::invalid_argument("convention must be A or T, got '" + name + "'");
}

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  try {
    return parse_double_strict(raw);
  } catch (const std::invalid_argument&) {
    std::cerr << "warning: ignoring malformed " << name << "='" << raw << "'\n";
    return std::nullopt;
  }
}

struct GridFlags {
  int radii = -1;    // -1: not set on the command line
  int angles = -1;
  double rmax = -1.0;
};

// Flags win over SCC_RADII / SCC_ANGLES / SCC_RMAX, which win over the
// standard 64 x 256 grid with r_max = 0.999.
scc::DiskGrid resolve_grid(const GridFlags& flags) {
  double radii = flags.radii > 0 ? flags.radii
                                 : env_double("SCC_RADII").value_or(64.0);
  double angles = flags.angles > 0 ? flags.angles
                                   : env_double("SCC_ANGLES").value_or(256.0);
  double rmax = flags.rmax > 0.0 ? flags.rmax
                                 : env_double("SCC_RMAX").value_or(0.999);
  const double rmin = std::min(0.05, rmax * 0.5);
  return scc::DiskGrid::geometric(static_cast<std::size_t>(radii), rmax,
                                  static_cast<int>(angles), rmin);
}

const char* verdict_label(scc::Convention convention, bool satisfied) {
  if (satisfied) {
    return "member";
  }
  // the condition is only sufficient for ClassA, but characterizes ClassT
  return convention == scc::Convention::ClassA ? "inconclusive" : "not_member";
}

void print_criterion_text(std::ostream& out, const scc::CriterionResult& r,
                          scc::Convention convention) {
  out << "criterion value : " << scc::format_double(r.value) << "\n"
      << "criterion budget: " << scc::format_double(r.budget) << "\n"
      << "margin          : " << scc::format_double(r.budget - r.value) << "\n"
      << "satisfied       : " << (r.satisfied ? "yes" : "no") << "\n"
      << "verdict         : " << verdict_label(convention, r.satisfied)
      << "\n";
  if (r.per_term) {
    out << "terms (n, weight, contribution):\n";
    for (const auto& t : *r.per_term) {
      out << "  " << t.n << "  " << scc::format_double(t.weight) << "  "
          << scc::format_double(t.contribution) << "\n";
    }
  }
}

struct CheckOptions {
  std::string convention = "T";
  std::string coeffs;
  std::string file;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool verify = false;
  bool emit_json = false;
  bool with_terms = false;
  GridFlags grid;
};

int run_check(const CheckOptions& opt) {
  const scc::Convention convention = parse_convention(opt.convention);
  std::vector<double> coeffs = opt.file.empty()
                                   ? parse_coefficients(opt.coeffs)
                                   : read_coefficient_file(opt.file);
  const scc::SignedPowerSeries series(convention, std::move(coeffs));
  const scc::ClassParams params(opt.alpha, opt.beta, opt.gamma);
  const scc::CriterionResult result =
      scc::criterion_sum(series, params, opt.with_terms);

  std::optional<scc::VerificationReport> report;
  if (opt.verify) {
    report = scc::cross_validate(series, params, resolve_grid(opt.grid));
  }

  if (opt.emit_json) {
    json j{{"convention", scc::to_string(convention)},
           {"truncation", series.truncation()},
           {"criterion", result},
           {"verdict", verdict_label(convention, result.satisfied)}};
    if (report) {
      j["verification"] = *report;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_criterion_text(std::cout, result, convention);
    if (report) {
      std::cout << "min Re(phi)     : " << scc::format_double(report->min_re_phi)
                << " at z = (" << scc::format_double(report->argmin_z.real())
                << ", " << scc::format_double(report->argmin_z.imag()) << ")\n"
                << "numeric check   : "
                << (report->passed_numeric ? "pass" : "fail") << "\n";
    }
  }
  return result.satisfied ? kExitSatisfied : kExitNotSatisfied;
}

struct ExtremalOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int n = 2;
  std::string convention = "T";
  bool emit_json = false;
};

int run_extremal(const ExtremalOptions& opt) {
  const scc::Convention convention = parse_convention(opt.convention);
  const scc::ClassParams params(opt.alpha, opt.beta, opt.gamma);
  const scc::SignedPowerSeries series =
      scc::extremal_function(params, opt.n, convention);
  const double a_n = series.coefficient(opt.n);
  const scc::CriterionResult result = scc::criterion_sum(series, params);

  if (opt.emit_json) {
    json j{{"convention", scc::to_string(convention)},
           {"n", opt.n},
           {"coefficient", a_n},
           {"criterion", result}};
    std::cout << j.dump(2) << "\n";
  } else {
    const char* sign = convention == scc::Convention::ClassA ? "+" : "-";
    std::cout << "f(z) = z " << sign << " " << scc::format_double(a_n) << " z^"
              << opt.n << "\n";
    print_criterion_text(std::cout, result, convention);
  }
  return kExitSatisfied;
}

struct WrightOptions {
  double lambda = 1.0;
  double mu = 1.0;
  int truncation = scc::kDefaultWrightTruncation;
  bool integral = false;
  bool emit_json = false;
};

int run_wright(const WrightOptions& opt) {
  const scc::WrightParams w(opt.lambda, opt.mu);
  scc::SignedPowerSeries series =
      scc::wright_series(w, opt.truncation, scc::Convention::ClassA);
  if (opt.integral) {
    series = scc::integral_transform(series);
  }
  const auto& coeffs = series.coefficients();

  if (opt.emit_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      rows.push_back({{"n", static_cast<int>(i) + 2}, {"value", coeffs[i]}});
    }
    json j{{"lambda", opt.lambda},
           {"mu", opt.mu},
           {"truncation", opt.truncation},
           {"integral", opt.integral},
           {"coefficients", std::move(rows)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::cout << (i + 2) << ',' << scc::format_double(coeffs[i]) << "\n";
    }
  }
  return kExitSatisfied;
}

struct RegionOptions {
  std::string alpha = "0";
  std::string beta = "0";
  std::string gamma = "0";
  std::string lambda = "1";
  std::string mu = "1";
  std::string condition = "wright";
  int truncation = scc::kDefaultWrightTruncation;
  std::string out;
  unsigned threads = 0;
};

// "v" pins the axis; "lo:hi:steps" sweeps it.
scc::AxisSpec parse_axis(const std::string& text, const char* name) {
  std::vector<std::string> parts;
  std::string token;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  parts.push_back(token);
  if (parts.size() == 1) {
    const double v = parse_double_strict(parts[0]);
    return {v, v, 1};
  }
  if (parts.size() == 3) {
    const double lo = parse_double_strict(parts[0]);
    const double hi = parse_double_strict(parts[1]);
    const double steps = parse_double_strict(parts[2]);
    if (steps < 1.0 || steps != static_cast<double>(static_cast<int>(steps))) {
      throw std::invalid_argument(std::string(name) +
                                  ": steps must be a positive integer");
    }
    return {lo, hi, static_cast<int>(steps)};
  }
  throw std::invalid_argument(std::string(name) +
                              ": expected 'value' or 'lo:hi:steps', got '" +
                              text + "'");
}

int run_region(const RegionOptions& opt) {
  scc::ScanSpec spec;
  spec.alpha = parse_axis(opt.alpha, "alpha");
  spec.beta = parse_axis(opt.beta, "beta");
  spec.gamma = parse_axis(opt.gamma, "gamma");
  spec.lambda = parse_axis(opt.lambda, "lambda");
  spec.mu = parse_axis(opt.mu, "mu");
  spec.condition = scc::parse_scan_condition(opt.condition);
  spec.truncation = opt.truncation;

  const scc::ScanResult result = scc::run_scan(spec, opt.threads);

  std::ostream* summary_out = &std::cerr;
  if (opt.out.empty()) {
    scc::write_scan_csv(std::cout, result);
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    }
    scc::write_scan_csv(file, result);
    summary_out = &std::cout;
  }

  const auto& s = result.summary;
  *summary_out << "points                : " << s.total << "\n"
               << "closed-form true      : " << s.closed_form_true << "\n"
               << "criterion true        : " << s.criterion_true << "\n"
               << "agreement             : " << s.agreement << "\n"
               << "implication violations: " << s.implication_violations
               << "\n";
  return s.implication_violations == 0 ? kExitSatisfied : kExitNotSatisfied;
}

struct VerifyOptions {
  std::string convention = "T";
  std::string coeffs;
  std::string file;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  GridFlags grid;
};

int run_verify(const VerifyOptions& opt) {
  const scc::Convention convention = parse_convention(opt.convention);
  std::vector<double> coeffs = opt.file.empty()
                                   ? parse_coefficients(opt.coeffs)
                                   : read_coefficient_file(opt.file);
  const scc::SignedPowerSeries series(convention, std::move(coeffs));
  const scc::ClassParams params(opt.alpha, opt.beta, opt.gamma);
  try {
    const scc::VerificationReport report =
        scc::cross_validate(series, params, resolve_grid(opt.grid));
    std::cout << json(report).dump(2) << "\n";
    return report.passed_criterion && report.passed_numeric
               ? kExitSatisfied
               : kExitNotSatisfied;
  } catch (const scc::SingularityError& e) {
    json j{{"error", "singularity"}, {"z", scc::complex_to_json(e.where())}};
    std::cout << j.dump(2) << "\n";
    return kExitNotSatisfied;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Membership tests for the unified starlike-convex classes: coefficient "
      "criteria, sharp extremal series, Wright-type series and their "
      "integral transforms, closed-form parameter conditions, and a sampled "
      "numeric verifier of the defining inequality Re(phi(z)) > alpha."};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand(
      "check",
      "Evaluate the coefficient criterion sum (1+(n-1)g)(n-a-(n-1)ab)|a_n| "
      "against the budget 1-a. Sufficient for membership for A-series, "
      "equivalent to membership for T-series.");
  check_cmd->add_option("--convention", check.convention,
                        "series sign convention: A (z + sum a_n z^n) or T "
                        "(z - sum a_n z^n)");
  check_cmd->add_option("--coeffs", check.coeffs,
                        "comma-separated magnitudes a_2,a_3,... (empty: bare z)");
  check_cmd->add_option("--file", check.file,
                        "read coefficient magnitudes from a file instead");
  check_cmd->add_option("--alpha", check.alpha, "order parameter, in [0,1)");
  check_cmd->add_option("--beta", check.beta, "in [0,1)");
  check_cmd->add_option("--gamma", check.gamma,
                        "interpolation parameter, in [0,1]");
  check_cmd->add_flag("--verify", check.verify,
                      "also sample Re(phi) over a disk grid");
  check_cmd->add_flag("--json", check.emit_json, "emit JSON");
  check_cmd->add_flag("--terms", check.with_terms,
                      "include the per-term breakdown");
  check_cmd->add_option("--radii", check.grid.radii,
                        "verification grid: number of radii");
  check_cmd->add_option("--angles", check.grid.angles,
                        "verification grid: angles per radius");
  check_cmd->add_option("--rmax", check.grid.rmax,
                        "verification grid: largest radius, < 1");

  ExtremalOptions extremal;
  auto* extremal_cmd = app.add_subcommand(
      "extremal",
      "Construct the sharp single-term series z +/- (1-a)/w(n) z^n that "
      "attains equality in the coefficient criterion.");
  extremal_cmd->add_option("--alpha", extremal.alpha, "in [0,1)");
  extremal_cmd->add_option("--beta", extremal.beta, "in [0,1)");
  extremal_cmd->add_option("--gamma", extremal.gamma, "in [0,1]");
  extremal_cmd->add_option("--n", extremal.n, "coefficient index, >= 2")
      ->required();
  extremal_cmd->add_option("--convention", extremal.convention, "A or T");
  extremal_cmd->add_flag("--json", extremal.emit_json, "emit JSON");

  WrightOptions wright;
  auto* wright_cmd = app.add_subcommand(
      "wright",
      "Tabulate the Wright-type series coefficients c_n = "
      "G(mu)/G(l(n-1)+mu) e^{-1/mu}/(n-1)! (identical magnitudes for both "
      "conventions); --integral divides each c_n by n.");
  wright_cmd->add_option("--lambda", wright.lambda, "> -1")->required();
  wright_cmd->add_option("--mu", wright.mu, "> 0")->required();
  wright_cmd->add_option("--N", wright.truncation,
                         "truncation order (rows n = 2..N)");
  wright_cmd->add_flag("--integral", wright.integral,
                       "apply the integral transform a_n -> a_n/n");
  wright_cmd->add_flag("--json", wright.emit_json, "emit JSON");

  RegionOptions region;
  auto* region_cmd = app.add_subcommand(
      "region",
      "Scan a parameter grid and compare the closed-form condition with the "
      "coefficient criterion of the matching Wright-type series (truncation "
      "N). Closed-form true with criterion false is an implication violation "
      "and is counted in the summary.");
  region_cmd->add_option("--alpha", region.alpha, "value or lo:hi:steps");
  region_cmd->add_option("--beta", region.beta, "value or lo:hi:steps");
  region_cmd->add_option("--gamma", region.gamma, "value or lo:hi:steps");
  region_cmd->add_option("--lambda", region.lambda,
                         "value or lo:hi:steps (>= 1)");
  region_cmd->add_option("--mu", region.mu, "value or lo:hi:steps (> 0.462)");
  region_cmd->add_option(
      "--condition", region.condition,
      "wright | integral | criterion-a | criterion-t | criterion-a-integral "
      "| criterion-t-integral");
  region_cmd->add_option("--N", region.truncation, "series truncation");
  region_cmd->add_option("--out", region.out,
                         "CSV output path (default: stdout)");
  region_cmd->add_option("--threads", region.threads,
                         "worker threads (0 = hardware concurrency)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Cross-validate a series: coefficient criterion plus the sampled "
      "minimum of Re(phi) over a polar grid of the unit disk; reports JSON.");
  verify_cmd->add_option("--convention", verify.convention, "A or T");
  verify_cmd->add_option("--coeffs", verify.coeffs,
                         "comma-separated magnitudes a_2,a_3,...");
  verify_cmd->add_option("--file", verify.file,
                         "read coefficient magnitudes from a file");
  verify_cmd->add_option("--alpha", verify.alpha, "in [0,1)");
  verify_cmd->add_option("--beta", verify.beta, "in [0,1)");
  verify_cmd->add_option("--gamma", verify.gamma, "in [0,1]");
  verify_cmd->add_option("--radii", verify.grid.radii, "number of radii");
  verify_cmd->add_option("--angles", verify.grid.angles, "angles per radius");
  verify_cmd->add_option("--rmax", verify.grid.rmax, "largest radius, < 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check);
    if (extremal_cmd->parsed()) return run_extremal(extremal);
    if (wright_cmd->parsed()) return run_wright(wright);
    if (region_cmd->parsed()) return run_region(region);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSatisfied;
  }
  return kExitUsage;
}
