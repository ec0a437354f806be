#include "szego/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "szego/gaussian_roundtrip.hpp"
#include "szego/output_record.hpp"
#include "szego/profile_bounds.hpp"
#include "szego/profile_kernels.hpp"
#include "szego/radial_kernels.hpp"
#include "szego/verify.hpp"
#include "szego/weights.hpp"

namespace szego::cli {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double parse_real(const std::string& text, const std::string& what) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || !std::isfinite(x)) {
    throw UsageError(what + " expects a finite number, got '" + text + "'");
  }
  return x;
}

std::vector<double> parse_tuple(const std::string& text, char sep, std::size_t count, const std::string& what) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(parse_real(text.substr(start, end - start), what));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (parts.size() != count) {
    throw UsageError(what + " expects " + std::to_string(count) + " values separated by '" + sep + "', got '" +
                     text + "'");
  }
  return parts;
}

ComplexValue parse_complex(const std::string& text, const std::string& what) {
  const auto p = parse_tuple(text, ',', 2, what);
  return {p[0], p[1]};
}

BoundaryPoint parse_boundary(const std::string& text, const std::string& what) {
  const auto p = parse_tuple(text, ',', 3, what);
  return {{p[0], p[1]}, p[2]};
}

Eigen::VectorXd parse_grid(const std::string& text, const std::string& what) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
    throw UsageError(what + " expects min:max:count, got '" + text + "'");
  }
  const double lo = parse_real(text.substr(0, a), what);
  const double hi = parse_real(text.substr(a + 1, b - a - 1), what);
  const std::string count_text = text.substr(b + 1);
  long count = 0;
  const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 1) {
    throw UsageError(what + " needs a positive integer count, got '" + count_text + "'");
  }
  if (count == 1) {
    if (lo != hi) throw UsageError(what + " with count 1 needs min = max");
    return Eigen::VectorXd::Constant(1, lo);
  }
  return linear_grid(lo, hi, count);
}

std::string complex_param(ComplexValue z) { return format_number(z.real()) + "," + format_number(z.imag()); }

std::string boundary_param(const BoundaryPoint& p) { return complex_param(p.z) + "," + format_number(p.t); }

bool is_quadratic_profile(const WeightSpec& spec) { return spec.is_profile() && spec.alpha() == 2.0; }

OutputRecord make_record(const std::string& command, const std::string& method, ComplexValue value, double abs_err) {
  OutputRecord r;
  r.command = command;
  r.method = method;
  r.value_re = value.real();
  r.value_im = value.imag();
  r.abs_err = abs_err;
  return r;
}

OutputRecord from_eval(const std::string& command, const EvalResult& e) {
  OutputRecord r = make_record(command, e.method, e.value, e.abs_err_estimate);
  r.params["n_evals"] = std::to_string(e.n_evals);
  return r;
}

// Options shared by every subcommand.
struct Common {
  std::string format = "json";
  double abs_tol = QuadConfig{}.abs_tol;
  double rel_tol = QuadConfig{}.rel_tol;
  std::size_t max_subdiv = QuadConfig{}.max_subdivisions;

  void attach(CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--abs-tol", abs_tol);
    sub->add_option("--rel-tol", rel_tol);
    sub->add_option("--max-subdiv", max_subdiv);
  }

  QuadConfig config() const {
    QuadConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_subdivisions = max_subdiv;
    try {
      cfg.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

struct Args {
  std::string weight, tau, z, w, zt, ws, eta, lambda, eta_grid, tau_grid, tau0, tau1, suite, report;
  std::string method;
};

std::vector<OutputRecord> run_bergman(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const double tau = parse_real(a.tau, "--tau");
  const ComplexValue z = parse_complex(a.z, "--z");
  const ComplexValue w = parse_complex(a.w, "--w");
  const std::string method = a.method.empty() ? (spec.is_profile() ? "quadrature" : "series") : a.method;

  OutputRecord r;
  if (method == "series") {
    if (spec.is_profile()) throw UsageError("--method series needs a radial weight");
    r = from_eval("bergman", bergman_radial_series(spec.alpha(), tau, z, w, cfg));
  } else if (method == "quadrature") {
    if (!spec.is_profile()) throw UsageError("--method quadrature needs a profile weight");
    r = from_eval("bergman", bergman_profile(spec, tau, z, w, cfg));
  } else {
    if (!is_quadratic_profile(spec)) throw UsageError("--method closed needs the gaussian weight");
    const ComplexValue v = bergman_gaussian_closed(tau, z, w);
    r = make_record("bergman", "gaussian-closed", v, 4.0 * kEps * std::abs(v));
  }
  r.params["weight"] = spec.to_string();
  r.params["tau"] = format_number(tau);
  r.params["z"] = complex_param(z);
  r.params["w"] = complex_param(w);
  return {r};
}

std::vector<OutputRecord> run_szego(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const BoundaryPoint p1 = parse_boundary(a.zt, "--zt");
  const BoundaryPoint p2 = parse_boundary(a.ws, "--ws");
  std::string method = a.method;
  if (method.empty()) method = (!spec.is_profile() || is_quadratic_profile(spec)) ? "closed" : "triple";

  OutputRecord r;
  if (method == "closed") {
    if (!spec.is_profile()) {
      r = from_eval("szego", szego_radial_closed(spec.alpha(), p1, p2));
    } else if (is_quadratic_profile(spec)) {
      const ComplexValue v = szego_gaussian_closed(p1, p2);
      r = make_record("szego", "gaussian-closed", v, 8.0 * kEps * std::abs(v));
    } else {
      throw UsageError("--method closed is available for radial and gaussian weights only");
    }
  } else if (method == "laplace") {
    if (spec.is_profile()) throw UsageError("--method laplace needs a radial weight");
    r = from_eval("szego", szego_radial_via_laplace(spec.alpha(), p1, p2, cfg));
  } else {
    if (!spec.is_profile()) throw UsageError("--method triple needs a profile weight");
    r = from_eval("szego", szego_profile(spec, p1, p2, cfg));
  }
  r.params["weight"] = spec.to_string();
  r.params["zt"] = boundary_param(p1);
  r.params["ws"] = boundary_param(p2);
  return {r};
}

std::vector<OutputRecord> run_conjugate(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const double eta = parse_real(a.eta, "--eta");
  const std::string method = a.method.empty() ? "closed" : a.method;
  OutputRecord r;
  if (method == "closed") {
    const double v = young_conjugate_closed(spec, eta);
    r = make_record("conjugate", "closed", v, 4.0 * kEps * std::abs(v));
  } else {
    r = make_record("conjugate", "golden-section", young_conjugate_numeric(spec, eta, cfg.abs_tol), cfg.abs_tol);
  }
  r.params["weight"] = spec.to_string();
  r.params["eta"] = format_number(eta);
  return {r};
}

std::vector<OutputRecord> run_mu(const Args& a) {
  const WeightSpec spec = parse_weight(a.weight);
  const double eta = parse_real(a.eta, "--eta");
  const double v = inverse_derivative(spec, eta);
  OutputRecord r = make_record("mu", "closed", v, 4.0 * kEps * std::abs(v));
  r.params["weight"] = spec.to_string();
  r.params["eta"] = format_number(eta);
  return {r};
}

std::vector<OutputRecord> run_inner(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const double tau = parse_real(a.tau, "--tau");
  const double eta = parse_real(a.eta, "--eta");
  OutputRecord r = from_eval("inner-integral", inner_integral(spec, tau, eta, cfg));
  r.params["weight"] = spec.to_string();
  r.params["tau"] = format_number(tau);
  r.params["eta"] = format_number(eta);
  r.params["effective_conjugate"] = format_number(std::log(r.value_re) / (2.0 * tau));
  return {r};
}

std::vector<OutputRecord> run_bounds(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const double tau = parse_real(a.tau, "--tau");
  const double lambda = parse_real(a.lambda, "--lambda");
  const Eigen::VectorXd grid = parse_grid(a.eta_grid, "--eta-grid");
  if (grid.size() < 3) throw UsageError("--eta-grid needs at least 3 points");
  const BoundsReport b = sandwich_bounds_check(spec, tau, lambda, grid, cfg);

  std::vector<OutputRecord> out;
  auto base = [&](OutputRecord r) {
    r.params["weight"] = spec.to_string();
    r.params["tau"] = format_number(tau);
    r.params["lambda"] = format_number(lambda);
    return r;
  };
  const std::pair<const char*, const Eigen::VectorXd*> series[] = {{"upper_log_gap", &b.upper_log_gap},
                                                                    {"lower_log_gap", &b.lower_log_gap},
                                                                    {"dual_upper_log_gap", &b.dual_upper_log_gap},
                                                                    {"dual_lower_log_gap", &b.dual_lower_log_gap}};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    for (const auto& [name, values] : series) {
      OutputRecord r = base(make_record("bounds", name, (*values)(i), 0.0));
      r.params["eta"] = format_number(grid(i));
      out.push_back(std::move(r));
    }
  }
  const std::pair<const char*, bool> flags[] = {{"upper_bounded", b.upper_bounded},
                                                {"lower_bounded", b.lower_bounded},
                                                {"dual_upper_bounded", b.dual_upper_bounded},
                                                {"dual_lower_bounded", b.dual_lower_bounded}};
  for (const auto& [name, flag] : flags) out.push_back(base(make_record("bounds", name, flag ? 1.0 : 0.0, 0.0)));
  out.push_back(base(make_record("bounds", "log_upper_constant", b.log_upper_constant, 0.0)));
  out.push_back(base(make_record("bounds", "log_lower_constant", b.log_lower_constant, 0.0)));
  return out;
}

std::vector<OutputRecord> run_asymptotics(const Args& a, const QuadConfig& cfg) {
  const WeightSpec spec = parse_weight(a.weight);
  const double eta = parse_real(a.eta, "--eta");
  const Eigen::VectorXd grid = parse_grid(a.tau_grid, "--tau-grid");
  const AsymptoticsReport rep = laplace_asymptotic(spec, eta, grid, cfg);

  std::vector<OutputRecord> out;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    OutputRecord r = make_record("asymptotics", "ratio", rep.ratios(i), 0.0);
    r.params["tau"] = format_number(grid(i));
    r.params["printed_ratio"] = format_number(rep.printed_ratios(i));
    out.push_back(std::move(r));
  }
  out.push_back(make_record("asymptotics", "converged", rep.converged ? 1.0 : 0.0, 0.0));
  out.back().params["tolerance"] = format_number(rep.tolerance);
  for (auto& r : out) {
    r.params["weight"] = spec.to_string();
    r.params["eta"] = format_number(eta);
  }
  return out;
}

std::vector<OutputRecord> run_duality(const Args& a, const QuadConfig& cfg) {
  const double tau = parse_real(a.tau, "--tau");
  const double tau0 = parse_real(a.tau0, "--tau0");
  const double tau1 = parse_real(a.tau1, "--tau1");
  const bool finite = duality_finiteness_criterion(tau, tau0, tau1);
  std::vector<OutputRecord> out{make_record("duality", "quadratic-form", finite ? 1.0 : 0.0, 0.0)};
  if (finite) out.push_back(from_eval("duality", duality_marginal_integral(tau, tau0, tau1, cfg)));
  for (auto& r : out) {
    r.params["tau"] = format_number(tau);
    r.params["tau0"] = format_number(tau0);
    r.params["tau1"] = format_number(tau1);
  }
  return out;
}

std::vector<OutputRecord> report_records(const VerificationReport& rep) {
  std::vector<OutputRecord> out;
  for (const auto& c : rep.cases) {
    OutputRecord r = make_record("verify", rep.suite, c.actual, std::abs(c.expected - c.actual));
    r.params["case"] = c.name;
    r.params["expected_re"] = format_number(c.expected.real());
    r.params["expected_im"] = format_number(c.expected.imag());
    r.params["tolerance"] = format_number(c.tolerance);
    r.params["passed"] = c.passed ? "true" : "false";
    out.push_back(std::move(r));
  }
  for (const auto& n : rep.notes) {
    OutputRecord r = make_record("verify", "note", 0.0, 0.0);
    r.params["note"] = n;
    out.push_back(std::move(r));
  }
  return out;
}

std::string serialize(const std::vector<OutputRecord>& records, const std::string& format) {
  return format == "csv" ? records_to_csv(records) : records_to_json(records);
}

}  // namespace

std::string grammar() {
  return "usage:\n"
         "  bergman --weight <spec> --tau <f> --z <re,im> --w <re,im> [--method series|quadrature|closed] "
         "[--format json|csv]\n"
         "  szego --weight <spec> --zt <re,im,t> --ws <re,im,s> [--method closed|laplace|triple] [--format ...]\n"
         "  conjugate --weight <spec> --eta <f> [--method closed|numeric]\n"
         "  mu --weight <spec> --eta <f>\n"
         "  inner-integral --weight <spec> --tau <f> --eta <f>\n"
         "  bounds --weight <spec> --tau <f> --lambda <f> --eta-grid <min:max:count>\n"
         "  asymptotics --weight <spec> --eta <f> --tau-grid <min:max:count>\n"
         "  duality --tau <f> --tau0 <f> --tau1 <f>\n"
         "  verify --suite normalization|reproducing|crosscheck|bounds|asymptotics|all [--report <path>]\n"
         "weight specs: radial:alpha=<float> | profile:alpha=<float> | gaussian\n"
         "every subcommand also takes --format json|csv, --abs-tol <f>, --rel-tol <f>, --max-subdiv <n>\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman and Szego kernels of weighted model domains", "szego_cli"};
  app.require_subcommand(1, 1);
  app.set_help_flag();

  Args a;
  Common common;
  auto sub = [&](const char* name, const char* description) {
    CLI::App* s = app.add_subcommand(name, description);
    s->set_help_flag();
    common.attach(s);
    return s;
  };

  CLI::App* bergman = sub("bergman", "Bergman kernel K_tau(z, w)");
  bergman->add_option("--weight", a.weight)->required();
  bergman->add_option("--tau", a.tau)->required();
  bergman->add_option("--z", a.z)->required();
  bergman->add_option("--w", a.w)->required();
  bergman->add_option("--method", a.method)->check(CLI::IsMember({"series", "quadrature", "closed"}));

  CLI::App* szego = sub("szego", "Szego kernel S((z,t),(w,s))");
  szego->add_option("--weight", a.weight)->required();
  szego->add_option("--zt", a.zt)->required();
  szego->add_option("--ws", a.ws)->required();
  szego->add_option("--method", a.method)->check(CLI::IsMember({"closed", "laplace", "triple"}));

  CLI::App* conjugate = sub("conjugate", "Young conjugate p*(eta)");
  conjugate->add_option("--weight", a.weight)->required();
  conjugate->add_option("--eta", a.eta)->required();
  conjugate->add_option("--method", a.method)->check(CLI::IsMember({"closed", "numeric"}));

  CLI::App* mu = sub("mu", "inverse of p'");
  mu->add_option("--weight", a.weight)->required();
  mu->add_option("--eta", a.eta)->required();

  CLI::App* inner = sub("inner-integral", "int exp(2 tau (r eta - p(r))) dr");
  inner->add_option("--weight", a.weight)->required();
  inner->add_option("--tau", a.tau)->required();
  inner->add_option("--eta", a.eta)->required();

  CLI::App* bounds = sub("bounds", "sandwich bounds of log I by scaled conjugates");
  bounds->add_option("--weight", a.weight)->required();
  bounds->add_option("--tau", a.tau)->required();
  bounds->add_option("--lambda", a.lambda)->required();
  bounds->add_option("--eta-grid", a.eta_grid)->required();

  CLI::App* asymptotics = sub("asymptotics", "Laplace-method ratios along a tau grid");
  asymptotics->add_option("--weight", a.weight)->required();
  asymptotics->add_option("--eta", a.eta)->required();
  asymptotics->add_option("--tau-grid", a.tau_grid)->required();

  CLI::App* duality = sub("duality", "finiteness criterion for the weighted L^2 norm of K_tau");
  duality->add_option("--tau", a.tau)->required();
  duality->add_option("--tau0", a.tau0)->required();
  duality->add_option("--tau1", a.tau1)->required();

  CLI::App* verify = sub("verify", "oracle and consistency suites");
  verify->add_option("--suite", a.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--report", a.report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << grammar();
    return kExitUsage;
  }

  try {
    const QuadConfig cfg = common.config();
    std::vector<OutputRecord> records;
    int code = kExitOk;
    if (bergman->parsed()) {
      records = run_bergman(a, cfg);
    } else if (szego->parsed()) {
      records = run_szego(a, cfg);
    } else if (conjugate->parsed()) {
      records = run_conjugate(a, cfg);
    } else if (mu->parsed()) {
      records = run_mu(a);
    } else if (inner->parsed()) {
      records = run_inner(a, cfg);
    } else if (bounds->parsed()) {
      records = run_bounds(a, cfg);
    } else if (asymptotics->parsed()) {
      records = run_asymptotics(a, cfg);
    } else if (duality->parsed()) {
      records = run_duality(a, cfg);
    } else {
      const VerificationReport rep = run_suite(a.suite, cfg);
      records = report_records(rep);
      if (!rep.all_passed()) {
        err << rep.failures() << " of " << rep.cases.size() << " verification cases failed\n";
        code = kExitVerifyFailed;
      }
    }
    const std::string text = serialize(records, common.format);
    if (!a.report.empty()) {
      std::ofstream file(a.report, std::ios::binary);
      if (!file || !(file << text)) {
        err << "cannot write report to " << a.report << "\n";
        return kExitComputation;
      }
    }
    out << text;
    return code;
  } catch (const UsageError& e) {
    err << e.name() << ": " << e.what() << "\n" << grammar();
    return kExitUsage;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace szego::cli
