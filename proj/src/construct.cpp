#include "xop/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xop/classical.hpp"

namespace xop {

namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

ParameterMap derived_abc(double alpha, double beta) {
  if (alpha == beta) throw ParameterError("X1-Jacobi requires alpha != beta");
  if (sign(alpha) != sign(beta)) throw ParameterError("X1-Jacobi requires sign(alpha) == sign(beta)");
  ParameterMap m{};
  m.a = 0.5 * (beta - alpha);
  m.b = (beta + alpha) / (beta - alpha);
  m.c = m.b + 1.0 / m.a;
  return m;
}

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ParameterError("X1-Jacobi requires alpha > -1 and beta > -1");
  map_ = derived_abc(alpha, beta);
}

double JacobiParams::gamma(int n) const { return gamma_n(n, alpha_, beta_); }

LaguerreParams::LaguerreParams(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0)) throw ParameterError("X1-Laguerre requires alpha > 0");
}

double eval_x1_laguerre(int n, double alpha, double x) {
  if (!(alpha > 0.0)) throw ParameterError("X1-Laguerre requires alpha > 0");
  if (n < 1) throw DomainError("X1-Laguerre degree must be >= 1");
  const auto p = classical::eval_pair(classical::Family::laguerre(alpha), n - 1, x);
  return -(x + alpha + 1.0) * p.current + p.previous;
}

double eval_x1_jacobi(int n, const JacobiParams& params, double x) {
  if (n < 1) throw DomainError("X1-Jacobi degree must be >= 1");
  const auto family = classical::Family::jacobi(params.alpha(), params.beta());
  const auto p = classical::eval_pair(family, n - 1, x);
  const double b = params.b();
  return -0.5 * (x - b) * p.current +
         (b * p.current - p.previous) / (2.0 * n - 2.0 + params.alpha() + params.beta());
}

double eval_xm_laguerre_i(int m, int n, double alpha, double x) {
  if (m < 1) throw DomainError("Xm-Laguerre requires m >= 1");
  if (n < m) throw DomainError("Xm-Laguerre requires n >= m");
  if (!(alpha > 0.0)) throw ParameterError("Xm-Laguerre type I requires alpha > 0");
  const auto upper = classical::Family::laguerre(alpha);
  const auto lower = classical::Family::laguerre(alpha - 1.0);
  return classical::eval(upper, m, -x) * classical::eval(lower, n - m, x) +
         classical::eval(upper, n - m - 1, x) * classical::eval(lower, m, -x);
}

double coeff_f(int n, double alpha, double beta) {
  const double s = alpha + beta;
  return n * (n + s) / ((2.0 * n - 1.0 + s) * (2.0 * n + s));
}

double coeff_g(int n, double alpha, double beta) {
  const double s = alpha + beta;
  return (n + beta) * (n + alpha) / ((2.0 * n + 2.0 + s) * (2.0 * n + s));
}

double coeff_h(int n, double alpha, double beta) {
  const double s = alpha + beta;
  return (n - 1.0 + beta) * (n - 1.0 + alpha) / ((2.0 * n + s) * (2.0 * n + 1.0 + s));
}

double gamma_n(int n, double alpha, double beta) {
  const double s = alpha + beta;
  return (2.0 * n + s) / (2.0 * n - 2.0 + s);
}

double remark_scale(int n, double alpha, double beta) {
  return 2.0 * n * n + 2.0 * n * (alpha + beta + 1.0) + (alpha + 1.0) * (beta + 1.0);
}

double three_term_residual(int n, const JacobiParams& params, double x) {
  if (n < 2) throw DomainError("three_term_residual requires n >= 2");
  const double a = params.alpha();
  const double be = params.beta();
  const double b = params.b();
  const double lhs = -0.25 * (x - b) * (x - b) * classical::eval(classical::Family::jacobi(a, be), n, x);
  const double t1 = coeff_f(n + 1, a, be) * eval_x1_jacobi(n + 2, params, x);
  const double t2 = -2.0 * b * coeff_g(n, a, be) * eval_x1_jacobi(n + 1, params, x);
  const double t3 = coeff_h(n, a, be) * eval_x1_jacobi(n, params, x);
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  const double diff = std::abs(lhs - (t1 + t2 + t3));
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace xop
