#include "szego/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

namespace szego {

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw DomainError("abs_tol must lie in (0, 1)");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
  if (!(truncation_decay_threshold > 0.0)) throw DomainError("truncation_decay_threshold must be positive");
}

QuadConfig QuadConfig::tightened(double factor) const {
  QuadConfig out = *this;
  out.abs_tol = std::max(abs_tol * factor, 1e-300);
  out.rel_tol = std::max(rel_tol * factor, 1e-15);
  return out;
}

namespace {

// Gauss-Kronrod 21-point abscissae on [-1, 1] (non-negative half, descending).
// Odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980221591, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kMaxDoublings = 64;

struct Panel {
  double a = 0.0;
  double b = 0.0;
  ComplexValue value;
  double error = 0.0;
  double abs_integral = 0.0;  // integral of |f|, for the roundoff floor
  double peak = 0.0;          // max |f| over the nodes
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

void check_finite(ComplexValue v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ConvergenceError("integrand is not finite at x = " + std::to_string(x));
  }
}

Panel gauss_kronrod(const RealIntegrand& f, double a, double b, long& n_evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  ComplexValue kronrod{0.0, 0.0};
  ComplexValue gauss{0.0, 0.0};
  double abs_sum = 0.0;
  double peak = 0.0;

  const ComplexValue mid = f(center);
  check_finite(mid, center);
  kronrod += kWgk[10] * mid;
  abs_sum += kWgk[10] * std::abs(mid);
  peak = std::abs(mid);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const ComplexValue lo = f(center - dx);
    const ComplexValue hi = f(center + dx);
    check_finite(lo, center - dx);
    check_finite(hi, center + dx);
    kronrod += kWgk[j] * (lo + hi);
    abs_sum += kWgk[j] * (std::abs(lo) + std::abs(hi));
    peak = std::max({peak, std::abs(lo), std::abs(hi)});
    if (j % 2 == 1) gauss += kWg[j / 2] * (lo + hi);
  }
  n_evals += 21;

  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = std::abs((kronrod - gauss) * half);
  p.abs_integral = abs_sum * std::abs(half);
  p.peak = peak;
  return p;
}

// Bisects the worst panel until the summed error estimate meets the target.
EvalResult refine(const RealIntegrand& f, std::vector<Panel> panels, const QuadConfig& cfg, long n_evals,
                  const char* method) {
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue(PanelOrder{}, std::move(panels));

  ComplexValue value{0.0, 0.0};
  double error = 0.0;
  double abs_integral = 0.0;
  {
    auto copy = queue;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      abs_integral += copy.top().abs_integral;
      copy.pop();
    }
  }

  std::size_t subdivisions = 0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (;;) {
    const double roundoff = 50.0 * kEps * abs_integral;
    const double target = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(value), roundoff});
    if (error <= target) break;
    if (subdivisions >= cfg.max_subdivisions) {
      throw ConvergenceError(std::string(method) + ": subdivision budget exhausted (error estimate " +
                             std::to_string(error) + ")");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError(std::string(method) + ": panel width below double resolution");
    }
    Panel left = gauss_kronrod(f, worst.a, mid, n_evals);
    Panel right = gauss_kronrod(f, mid, worst.b, n_evals);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_integral += left.abs_integral + right.abs_integral - worst.abs_integral;
    error = std::max(error, 0.0);
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  // Re-sum from scratch so running-update drift does not enter the result.
  ComplexValue exact_sum{0.0, 0.0};
  double exact_err = 0.0;
  while (!queue.empty()) {
    exact_sum += queue.top().value;
    exact_err += queue.top().error;
    queue.pop();
  }
  EvalResult out;
  out.value = exact_sum;
  out.abs_err_estimate = exact_err;
  out.method = method;
  out.n_evals = n_evals;
  return out;
}

}  // namespace

EvalResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("integrate_interval needs finite limits");
  long n = 0;
  if (a == b) return EvalResult{{0.0, 0.0}, 0.0, "gauss-kronrod-21", 0};
  std::vector<Panel> panels{gauss_kronrod(f, a, b, n)};
  return refine(f, std::move(panels), cfg, n, "gauss-kronrod-21");
}

EvalResult integrate_real_line(const RealIntegrand& f, const QuadConfig& cfg, WindowHint hint) {
  cfg.validate();
  if (!(hint.half_width > 0.0) || !std::isfinite(hint.half_width) || !std::isfinite(hint.center)) {
    throw DomainError("window hint needs a finite center and positive half-width");
  }
  long n = 0;
  const double c = hint.center;
  const double h = hint.half_width;
  std::vector<Panel> panels{gauss_kronrod(f, c - h, c, n), gauss_kronrod(f, c, c + h, n)};
  double peak = std::max(panels[0].peak, panels[1].peak);

  double inner = h;
  for (int doubling = 0;; ++doubling) {
    if (doubling == kMaxDoublings) {
      throw TruncationError("integrand shows no decay window on the real line");
    }
    const double outer = 2.0 * inner;
    Panel left, right;
    try {
      left = gauss_kronrod(f, c - outer, c - inner, n);
      right = gauss_kronrod(f, c + inner, c + outer, n);
    } catch (const ConvergenceError&) {
      throw TruncationError("integrand overflows while growing the real-line window");
    }
    const double shell_peak = std::max(left.peak, right.peak);
    peak = std::max(peak, shell_peak);
    panels.push_back(left);
    panels.push_back(right);
    inner = outer;
    if (shell_peak <= cfg.truncation_decay_threshold * peak) break;
  }
  return refine(f, std::move(panels), cfg, n, "gauss-kronrod-21/real-line");
}

EvalResult integrate_half_line(const RealIntegrand& f, const QuadConfig& cfg, double scale) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("half-line scale must be positive");
  long n = 0;
  std::vector<Panel> panels{gauss_kronrod(f, 0.0, scale, n)};
  double peak = panels[0].peak;
  double inner = scale;
  for (int doubling = 0;; ++doubling) {
    if (doubling == kMaxDoublings) {
      throw TruncationError("integrand shows no decay window on the half line");
    }
    const double outer = 2.0 * inner;
    Panel shell;
    try {
      shell = gauss_kronrod(f, inner, outer, n);
    } catch (const ConvergenceError&) {
      throw TruncationError("integrand overflows while growing the half-line window");
    }
    peak = std::max(peak, shell.peak);
    panels.push_back(shell);
    inner = outer;
    if (shell.peak <= cfg.truncation_decay_threshold * peak) break;
  }
  return refine(f, std::move(panels), cfg, n, "gauss-kronrod-21/half-line");
}

EvalResult integrate_plane_polar(const PolarIntegrand& g, const QuadConfig& cfg, double radial_scale) {
  cfg.validate();
  constexpr std::size_t kFirstPoints = 64;
  constexpr std::size_t kMaxPoints = std::size_t{1} << 16;
  const double angular_rel = std::max(cfg.rel_tol * 1e-2, 1e-15);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  long angular_evals = 0;
  double worst_angular_rel = 0.0;

  auto ring = [&](double r) -> ComplexValue {
    // Periodic trapezoid on N points, refined by inserting midpoints.
    std::size_t count = kFirstPoints;
    ComplexValue sum{0.0, 0.0};
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const ComplexValue v = g(r, kTwoPi * static_cast<double>(i) / static_cast<double>(count));
      sum += v;
      abs_sum += std::abs(v);
    }
    angular_evals += static_cast<long>(count);
    ComplexValue estimate = sum * (kTwoPi / static_cast<double>(count));
    while (true) {
      ComplexValue added{0.0, 0.0};
      for (std::size_t i = 0; i < count; ++i) {
        const double theta = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
        const ComplexValue v = g(r, theta);
        added += v;
        abs_sum += std::abs(v);
      }
      angular_evals += static_cast<long>(count);
      sum += added;
      count *= 2;
      const ComplexValue refined = sum * (kTwoPi / static_cast<double>(count));
      const double scale = abs_sum * (kTwoPi / static_cast<double>(count));
      const double diff = std::abs(refined - estimate);
      estimate = refined;
      if (diff <= angular_rel * scale || scale == 0.0) {
        if (scale > 0.0) worst_angular_rel = std::max(worst_angular_rel, diff / scale);
        break;
      }
      if (count >= kMaxPoints) {
        throw ConvergenceError("angular trapezoid did not converge");
      }
    }
    return r * estimate;
  };

  EvalResult out = integrate_half_line(ring, cfg, radial_scale);
  out.abs_err_estimate += worst_angular_rel * std::abs(out.value);
  out.n_evals = angular_evals;
  out.method = "polar(gauss-kronrod-21 x trapezoid)";
  return out;
}

EvalResult sum_series(const SeriesTerm& term, const QuadConfig& cfg, std::size_t patience) {
  cfg.validate();
  constexpr long kMaxTerms = 10'000'000;
  ComplexValue sum{0.0, 0.0};
  double previous = 0.0;
  std::size_t streak = 0;
  bool seen_nonzero = false;
  for (long k = 0; k < kMaxTerms; ++k) {
    const ComplexValue t = term(k);
    check_finite(t, static_cast<double>(k));
    sum += t;
    const double magnitude = std::abs(t);
    if (!seen_nonzero) {
      // Leading terms may underflow to zero before the series picks up.
      if (magnitude == 0.0) {
        if (++streak >= patience) return EvalResult{sum, 0.0, "series/geometric-tail", k + 1};
        continue;
      }
      seen_nonzero = true;
      streak = 0;
      previous = magnitude;
      continue;
    }
    {
      double ratio;
      if (previous > 0.0) {
        ratio = magnitude / previous;
      } else {
        ratio = (magnitude == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
      }
      if (ratio < 1.0) {
        streak = 0;
        const double tail = magnitude * ratio / (1.0 - ratio);
        if (tail <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum))) {
          return EvalResult{sum, tail, "series/geometric-tail", k + 1};
        }
      } else if (++streak >= patience) {
        throw ConvergenceError("series terms stopped contracting for " + std::to_string(patience) + " terms");
      }
    }
    previous = magnitude;
  }
  throw ConvergenceError("series term budget exhausted");
}

double damping_floor(const QuadConfig& cfg) {
  // Longest admissible decay length, in units of the Laplace parameter.
  constexpr double kMaxDecayLength = 1e4;
  return -std::log(cfg.truncation_decay_threshold) / kMaxDecayLength;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma needs a finite x > 0");

  // Shift into the asymptotic range: Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1)).
  constexpr double kAsymptoticStart = 15.0;
  double shift_log = 0.0;
  double product = 1.0;
  while (x < kAsymptoticStart) {
    product *= x;
    x += 1.0;
    if (product > 1e280 || product < 1e-280) {
      shift_log += std::log(product);
      product = 1.0;
    }
  }
  shift_log += std::log(product);

  // Stirling series with B_2 ... B_16.
  constexpr std::array<double, 8> kCoeff = {
      1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kCoeff) {
    series += c * power;
    power *= inv2;
  }
  constexpr double kHalfLogTwoPi = 0.918938533204672741780329736406;
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + series - shift_log;
}

}  // namespace szego
