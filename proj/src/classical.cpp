#include "xop/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>

namespace xop {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_handler() {
  static WarningHandler handler = [](std::string_view message) {
    std::cerr << "warning: " << message << '\n';
  };
  return handler;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  std::swap(handler, warning_handler());
  return handler;
}

void warn(std::string_view message) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(message);
}

}  // namespace xop

namespace xop::classical {

namespace {

void require_degree(int n) {
  if (n < -1) throw DomainError("degree must be >= -1, got " + std::to_string(n));
}

void validate(const Family& f) {
  switch (f.kind()) {
    case Family::Kind::jacobi:
      if (!(f.alpha() > -1.0) || !(f.beta() > -1.0))
        throw ParameterError("Jacobi parameters require alpha > -1 and beta > -1");
      break;
    case Family::Kind::laguerre:
      if (!(f.alpha() > -1.0)) throw ParameterError("Laguerre parameter requires alpha > -1");
      break;
    case Family::Kind::hermite:
      break;
  }
}

// One recurrence step: returns p_{n+1} from p_n and p_{n-1}, for n >= 1.
double step(const Family& f, int n, double x, double pn, double pnm1) {
  switch (f.kind()) {
    case Family::Kind::jacobi: {
      const double a = f.alpha();
      const double b = f.beta();
      const double s = 2.0 * n + a + b;
      const double c1 = 2.0 * (n + 1) * (n + a + b + 1.0) * s;
      const double c2 = (s + 1.0) * (a * a - b * b);
      const double c3 = s * (s + 1.0) * (s + 2.0);
      const double c4 = 2.0 * (n + a) * (n + b) * (s + 2.0);
      return ((c2 + c3 * x) * pn - c4 * pnm1) / c1;
    }
    case Family::Kind::laguerre: {
      const double a = f.alpha();
      return ((2.0 * n + 1.0 + a - x) * pn - (n + a) * pnm1) / (n + 1.0);
    }
    case Family::Kind::hermite:
      return 2.0 * x * pn - 2.0 * n * pnm1;
  }
  return 0.0;
}

double first_degree(const Family& f, double x) {
  switch (f.kind()) {
    case Family::Kind::jacobi:
      return 0.5 * ((f.alpha() + f.beta() + 2.0) * x + (f.alpha() - f.beta()));
    case Family::Kind::laguerre:
      return 1.0 + f.alpha() - x;
    case Family::Kind::hermite:
      return 2.0 * x;
  }
  return 0.0;
}

}  // namespace

Family Family::jacobi(double alpha, double beta) {
  Family f(Kind::jacobi, alpha, beta);
  validate(f);
  return f;
}

Family Family::laguerre(double alpha) {
  Family f(Kind::laguerre, alpha, 0.0);
  validate(f);
  return f;
}

Family Family::hermite() { return Family(Kind::hermite, 0.0, 0.0); }

double Family::zeroth_moment() const {
  switch (kind_) {
    case Kind::jacobi:
      return std::exp((alpha_ + beta_ + 1.0) * std::numbers::ln2 + log_gamma(alpha_ + 1.0) +
                      log_gamma(beta_ + 1.0) - log_gamma(alpha_ + beta_ + 2.0));
    case Kind::laguerre:
      return std::exp(log_gamma(alpha_ + 1.0));
    case Kind::hermite:
      return std::sqrt(std::numbers::pi);
  }
  return 0.0;
}

std::string Family::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::jacobi:
      os << "jacobi(" << alpha_ << ", " << beta_ << ")";
      break;
    case Kind::laguerre:
      os << "laguerre(" << alpha_ << ")";
      break;
    case Kind::hermite:
      os << "hermite";
      break;
  }
  return os.str();
}

Pair eval_pair(const Family& family, int n, double x) {
  require_degree(n);
  validate(family);
  if (n < 0) return {0.0, 0.0};
  if (n == 0) return {1.0, 0.0};
  double prev = 1.0;
  double cur = first_degree(family, x);
  for (int k = 1; k < n; ++k) {
    const double next = step(family, k, x, cur, prev);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double eval(const Family& family, int n, double x) { return eval_pair(family, n, x).current; }

double derivative(const Family& family, int n, double x) {
  require_degree(n);
  if (n <= 0) return 0.0;
  switch (family.kind()) {
    case Family::Kind::jacobi: {
      const double a = family.alpha();
      const double b = family.beta();
      return 0.5 * (n + a + b + 1.0) * eval(Family::jacobi(a + 1.0, b + 1.0), n - 1, x);
    }
    case Family::Kind::laguerre:
      return -eval(Family::laguerre(family.alpha() + 1.0), n - 1, x);
    case Family::Kind::hermite:
      return 2.0 * n * eval(family, n - 1, x);
  }
  return 0.0;
}

double pochhammer(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x + k;
  return r;
}

double jacobi_at_one(int n, double alpha) {
  if (!(alpha > -1.0)) throw ParameterError("jacobi_at_one requires alpha > -1");
  if (n < 0) throw DomainError("jacobi_at_one requires n >= 0");
  if (n <= 8) {
    double r = 1.0;
    for (int j = 1; j <= n; ++j) r *= (alpha + j) / j;
    return r;
  }
  return std::exp(log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0) - log_gamma(alpha + 1.0));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoeff = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double sum = kCoeff[0];
  for (std::size_t i = 1; i < kCoeff.size(); ++i) sum += kCoeff[i] / (z + static_cast<double>(i));
  const double t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double hyp2f1_terminating(int n, double b, double c, double z) {
  if (n < 0) throw DomainError("hyp2f1_terminating requires n >= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    if (c + k == 0.0)
      throw DomainError("hyp2f1_terminating: c is a nonpositive integer reached before termination");
    term *= (k - n) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

JacobiMatrix jacobi_matrix(const Family& family, int n) {
  validate(family);
  JacobiMatrix m;
  m.diagonal.resize(static_cast<std::size_t>(n));
  m.offdiag_squared.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  const double a = family.alpha();
  const double b = family.beta();
  for (int k = 0; k < n; ++k) {
    switch (family.kind()) {
      case Family::Kind::jacobi: {
        const double s = 2.0 * k + a + b;
        m.diagonal[k] = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
        break;
      }
      case Family::Kind::laguerre:
        m.diagonal[k] = 2.0 * k + a + 1.0;
        break;
      case Family::Kind::hermite:
        m.diagonal[k] = 0.0;
        break;
    }
  }
  for (int k = 1; k < n; ++k) {
    double v = 0.0;
    switch (family.kind()) {
      case Family::Kind::jacobi: {
        const double s = 2.0 * k + a + b;
        if (k == 1) {
          v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        } else {
          v = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        }
        break;
      }
      case Family::Kind::laguerre:
        v = k * (k + a);
        break;
      case Family::Kind::hermite:
        v = 0.5 * k;
        break;
    }
    m.offdiag_squared[k - 1] = v;
  }
  return m;
}

int sturm_count(const JacobiMatrix& matrix, double x) {
  const std::size_t n = matrix.diagonal.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = (i == 0) ? 0.0 : matrix.offdiag_squared[i - 1] / q;
    q = matrix.diagonal[i] - x - coupling;
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

// Quadrature rules legitimately go past the degree cap, so only the public
// entry point warns.
std::vector<double> zeros_uncapped(const Family& family, int n) {
  if (n < 1) throw DomainError("zeros require n >= 1");
  const JacobiMatrix m = jacobi_matrix(family, n);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double left = (i > 0) ? std::sqrt(m.offdiag_squared[i - 1]) : 0.0;
    const double right = (i + 1 < n) ? std::sqrt(m.offdiag_squared[i]) : 0.0;
    lo = std::min(lo, m.diagonal[i] - left - right);
    hi = std::max(hi, m.diagonal[i] + left + right);
  }
  lo -= 1e-12 * (1.0 + std::abs(lo));
  hi += 1e-12 * (1.0 + std::abs(hi));

  std::vector<double> roots(static_cast<std::size_t>(n));
  double floor = lo;
  for (int k = 0; k < n; ++k) {
    double a = floor;
    double b = hi;
    while (true) {
      const double mid = 0.5 * (a + b);
      const double width_tol =
          std::max(1e-13, 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)));
      if (b - a <= width_tol || mid <= a || mid >= b) break;
      if (sturm_count(m, mid) >= k + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    double x = 0.5 * (a + b);
    const double d = derivative(family, n, x);
    if (d != 0.0) {
      const double dx = eval(family, n, x) / d;
      if (std::isfinite(dx) && std::abs(dx) <= 1e-10 * (1.0 + std::abs(x))) x -= dx;
    }
    roots[k] = x;
    floor = a;
  }
  return roots;
}

}  // namespace

std::vector<double> zeros(const Family& family, int n) {
  if (n > kMaxDegree) warn("classical zeros requested above degree " + std::to_string(kMaxDegree));
  return zeros_uncapped(family, n);
}

QuadratureRule gauss_rule(const Family& family, int order) {
  if (order < 1) throw DomainError("quadrature order must be >= 1");
  if (family.kind() == Family::Kind::hermite)
    throw DomainError("Gauss-Hermite rules are not supported");

  QuadratureRule rule;
  rule.family = family;
  rule.order = order;
  rule.nodes = zeros_uncapped(family, order);
  rule.weights.resize(rule.nodes.size());

  const int n = order;
  const double a = family.alpha();
  const double b = family.beta();
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    double log_w = 0.0;
    if (family.kind() == Family::Kind::laguerre) {
      const double next = eval(family, n + 1, x);
      log_w = log_gamma(n + a + 1.0) - log_gamma(n + 1.0) + std::log(x) - 2.0 * std::log(n + 1.0) -
              2.0 * std::log(std::abs(next));
    } else {
      const double dp = derivative(family, n, x);
      log_w = (a + b + 1.0) * std::numbers::ln2 + log_gamma(n + a + 1.0) + log_gamma(n + b + 1.0) -
              log_gamma(n + a + b + 1.0) - log_gamma(n + 1.0) - std::log1p(-x * x) -
              2.0 * std::log(std::abs(dp));
    }
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

}  // namespace xop::classical
