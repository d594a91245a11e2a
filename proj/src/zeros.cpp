#include "xop/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xop/classical.hpp"

namespace xop {

namespace {

constexpr int kInitialPointsPerRoot = 64;
constexpr int kMaxPointsPerRoot = 1 << 14;
constexpr double kNewtonSwitchWidth = 1e-6;

double checked(const Evaluable& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "non-finite function value at x = " << x;
    throw NumericError(os.str());
  }
  return v;
}

std::vector<Bracket> scan_once(const Evaluable& f, double lo, double hi, long intervals) {
  std::vector<Bracket> found;
  double last_x = lo;
  double last_v = checked(f, lo);
  if (last_v == 0.0) found.push_back({lo, lo});
  for (long i = 1; i <= intervals; ++i) {
    const double x = (i == intervals) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
    const double v = checked(f, x);
    if (v == 0.0) {
      found.push_back({x, x});
    } else if (last_v != 0.0 && std::signbit(v) != std::signbit(last_v)) {
      found.push_back({last_x, x});
    }
    last_x = x;
    last_v = v;
  }
  return found;
}

std::string describe_failure(double lo, double hi, int expected, std::size_t found) {
  std::ostringstream os;
  os << "isolated " << found << " sign changes on [" << lo << ", " << hi << "], expected " << expected;
  return os.str();
}

void warn_degree(int n) {
  if (n > classical::kMaxDegree)
    warn("degree " + std::to_string(n) + " exceeds the supported cap of " +
         std::to_string(classical::kMaxDegree));
}

std::vector<double> refine_all(const Evaluable& f, const std::vector<Bracket>& brackets, double tol) {
  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (const auto& br : brackets) roots.push_back(refine_root(f, br, tol));
  std::sort(roots.begin(), roots.end());
  return roots;
}

void finish(ZeroSet& zs, const Evaluable& f) {
  zs.residuals.clear();
  for (double r : zs.regular) zs.residuals.push_back(std::abs(f(r)));
  for (double r : zs.exceptional) zs.residuals.push_back(std::abs(f(r)));
  const auto merged = zs.all();
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i] - merged[i - 1] < 100.0 * zs.tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "near-degenerate roots " << merged[i - 1] << " and " << merged[i];
      zs.warnings.push_back(os.str());
    }
  }
}

// Regular zeros on (-1, 1), scanned in the angle variable so the grid
// clusters near the endpoints like the zeros do.
std::vector<Bracket> bracket_on_unit_interval(const Evaluable& f, int count) {
  if (count == 0) return {};
  const Evaluable g = [&f](double theta) { return f(std::cos(theta)); };
  // theta runs from 0 (x = 1) to pi (x = -1).
  auto angular = bracket_scan(g, 0.0, std::numbers::pi, count);
  std::vector<Bracket> out;
  out.reserve(angular.size());
  for (const auto& br : angular) {
    const double x1 = std::cos(br.lo);
    const double x2 = std::cos(br.hi);
    out.push_back({std::min(x1, x2), std::max(x1, x2)});
  }
  return out;
}

}  // namespace

std::string family_name(XopFamily family) {
  switch (family) {
    case XopFamily::x1_laguerre:
      return "x1-laguerre";
    case XopFamily::x1_jacobi:
      return "x1-jacobi";
    case XopFamily::xm_laguerre_i:
      return "xm-laguerre-i";
  }
  return "unknown";
}

std::optional<XopFamily> parse_family(std::string_view name) {
  if (name == "x1-laguerre") return XopFamily::x1_laguerre;
  if (name == "x1-jacobi") return XopFamily::x1_jacobi;
  if (name == "xm-laguerre-i") return XopFamily::xm_laguerre_i;
  return std::nullopt;
}

std::vector<double> ZeroSet::all() const {
  std::vector<double> merged(regular);
  merged.insert(merged.end(), exceptional.begin(), exceptional.end());
  std::sort(merged.begin(), merged.end());
  return merged;
}

std::vector<Bracket> bracket_scan(const Evaluable& f, double lo, double hi, int expected_count) {
  if (expected_count < 0) throw DomainError("expected_count must be >= 0");
  if (!(lo < hi)) throw DomainError("bracket_scan requires lo < hi");
  if (expected_count == 0) return {};
  std::vector<Bracket> found;
  const long start = static_cast<long>(kInitialPointsPerRoot) * expected_count;
  const long limit = static_cast<long>(kMaxPointsPerRoot) * expected_count;
  for (long intervals = start; intervals <= limit; intervals *= 2) {
    found = scan_once(f, lo, hi, intervals);
    if (found.size() == static_cast<std::size_t>(expected_count)) return found;
    // Extra sign changes cannot disappear under refinement.
    if (found.size() > static_cast<std::size_t>(expected_count)) break;
  }
  throw IsolationFailure(describe_failure(lo, hi, expected_count, found.size()), found);
}

double refine_root(const Evaluable& f, Bracket bracket, double tol) {
  double a = std::min(bracket.lo, bracket.hi);
  double b = std::max(bracket.lo, bracket.hi);
  if (a == b) return a;
  double fa = checked(f, a);
  double fb = checked(f, b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) throw DomainError("refine_root: no sign change across bracket");

  const auto eff_tol = [tol](double x) {
    return std::max(tol, 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x));
  };

  // Shrink the bracket; keeps fa's sign on the left end.
  const auto shrink = [&](double x, double fx) {
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  };

  for (int it = 0; it < 200 && b - a > kNewtonSwitchWidth; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = checked(f, mid);
    if (fm == 0.0) return mid;
    shrink(mid, fm);
  }

  double x = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    const double fx = checked(f, x);
    if (fx == 0.0) return x;
    shrink(x, fx);
    if (b - a <= eff_tol(x)) return 0.5 * (a + b);

    const double h = 1e-7 * (1.0 + std::abs(x));
    const double slope = (checked(f, x + h) - checked(f, x - h)) / (2.0 * h);
    double next = (slope != 0.0) ? x - fx / slope : std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(next) || next < a || next > b) next = 0.5 * (a + b);
    if (std::abs(next - x) <= eff_tol(x)) return next;
    x = next;
  }
  return x;
}

ZeroSet locate_x1_laguerre_zeros(const Evaluable& f, int n, double alpha, double tol) {
  if (n < 1) throw DomainError("X1-Laguerre degree must be >= 1");
  const LaguerreParams params(alpha);
  warn_degree(n);
  ZeroSet zs;
  zs.family = XopFamily::x1_laguerre;
  zs.n = n;
  zs.alpha = alpha;
  zs.tolerance = tol;
  if (n >= 2) {
    const double largest = classical::zeros(classical::Family::laguerre(alpha), n - 1).back();
    const double upper = largest + 4.0 * (n + alpha);
    zs.regular = refine_all(f, bracket_scan(f, 0.0, upper, n - 1), tol);
  }
  // At n = 1 the zero sits exactly on -alpha-1; pad so rounding there cannot
  // hide the sign change.
  const double pad = 1e-9 * (1.0 + alpha);
  zs.exceptional = refine_all(f, bracket_scan(f, -alpha - 1.0 - pad, params.eta_root(), 1), tol);
  finish(zs, f);
  return zs;
}

ZeroSet locate_x1_jacobi_zeros(const Evaluable& f, int n, const JacobiParams& params, double tol) {
  if (n < 1) throw DomainError("X1-Jacobi degree must be >= 1");
  warn_degree(n);
  ZeroSet zs;
  zs.family = XopFamily::x1_jacobi;
  zs.n = n;
  zs.alpha = params.alpha();
  zs.beta = params.beta();
  zs.tolerance = tol;
  zs.regular = refine_all(f, bracket_on_unit_interval(f, n - 1), tol);

  const double b = params.b();
  double lo = 0.0;
  double hi = 0.0;
  if (n == 1) {
    const double c = params.c();
    const double pad = 1e-6 * std::abs(c - b);
    lo = c - pad;
    hi = c + pad;
  } else {
    // Between b and gamma_n b; the far end is padded so the closed bound
    // cannot be lost to rounding.
    const double far = params.gamma(n) * b;
    const double pad = 1e-6 * std::abs(far - b);
    lo = std::min(b, far);
    hi = std::max(b, far);
    if (far > b) {
      hi += pad;
    } else {
      lo -= pad;
    }
  }
  zs.exceptional = refine_all(f, bracket_scan(f, lo, hi, 1), tol);
  finish(zs, f);
  return zs;
}

ZeroSet find_zeros_x1_laguerre(int n, double alpha, double tol) {
  const Evaluable f = [n, alpha](double x) { return eval_x1_laguerre(n, alpha, x); };
  return locate_x1_laguerre_zeros(f, n, alpha, tol);
}

ZeroSet find_zeros_x1_jacobi(int n, const JacobiParams& params, double tol) {
  const Evaluable f = [n, params](double x) { return eval_x1_jacobi(n, params, x); };
  return locate_x1_jacobi_zeros(f, n, params, tol);
}

ZeroSet find_zeros_xm_laguerre(int m, int n, double alpha, double tol) {
  if (m < 1) throw DomainError("Xm-Laguerre requires m >= 1");
  if (n < m + 1) throw DomainError("find_zeros_xm_laguerre requires n >= m + 1");
  if (!(alpha > 0.0)) throw ParameterError("Xm-Laguerre type I requires alpha > 0");
  warn_degree(n);
  const Evaluable f = [m, n, alpha](double x) { return eval_xm_laguerre_i(m, n, alpha, x); };
  ZeroSet zs;
  zs.family = XopFamily::xm_laguerre_i;
  zs.m = m;
  zs.n = n;
  zs.alpha = alpha;
  zs.tolerance = tol;

  const double largest_limit = classical::zeros(classical::Family::laguerre(alpha - 1.0), m).back();
  const double left = 2.0 * largest_limit + 2.0 * m + alpha + 4.0;
  zs.exceptional = refine_all(f, bracket_scan(f, -left, 0.0, m), tol);

  const double largest = classical::zeros(classical::Family::laguerre(alpha), n - 1).back();
  const double upper = largest + 4.0 * (n + alpha);
  zs.regular = refine_all(f, bracket_scan(f, 0.0, upper, n - m), tol);
  finish(zs, f);
  return zs;
}

}  // namespace xop
