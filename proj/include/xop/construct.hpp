#ifndef XOP_CONSTRUCT_HPP_
#define XOP_CONSTRUCT_HPP_

#include "xop/errors.hpp"

/// X1-Jacobi, X1-Laguerre and type-I Xm-Laguerre polynomials built from
/// classical ones. Normalizations are those of the defining formulas; the
/// Gram-Schmidt definitions live in gs_oracle.
namespace xop {

struct ParameterMap {
  double a;
  double b;
  double c;
};

/// a = (beta - alpha)/2, b = (beta + alpha)/(beta - alpha), c = b + 1/a.
ParameterMap derived_abc(double alpha, double beta);

/// Parameters of the X1-Jacobi family. Requires alpha, beta > -1, alpha != beta
/// and sign(alpha) == sign(beta).
class JacobiParams {
 public:
  JacobiParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double a() const noexcept { return map_.a; }
  double b() const noexcept { return map_.b; }
  double c() const noexcept { return map_.c; }
  /// Root of the weight's denominator polynomial x - b.
  double eta_root() const noexcept { return map_.b; }
  double gamma(int n) const;

 private:
  double alpha_;
  double beta_;
  ParameterMap map_;
};

/// Parameters of the X1-Laguerre family, alpha > 0.
class LaguerreParams {
 public:
  explicit LaguerreParams(double alpha);

  double alpha() const noexcept { return alpha_; }
  /// Root of the weight's denominator polynomial x + alpha.
  double eta_root() const noexcept { return -alpha_; }

 private:
  double alpha_;
};

/// -(x+alpha+1) L_{n-1}(x) + L_{n-2}(x), n >= 1.
double eval_x1_laguerre(int n, double alpha, double x);

/// -(x-b)/2 P_{n-1}(x) + (b P_{n-1}(x) - P_{n-2}(x)) / (2n-2+alpha+beta), n >= 1.
double eval_x1_jacobi(int n, const JacobiParams& params, double x);

/// Type-I Xm-Laguerre polynomial as the 2x2 determinant
/// L_m^{(a)}(-x) L_{n-m}^{(a-1)}(x) + L_{n-m-1}^{(a)}(x) L_m^{(a-1)}(-x), n >= m.
double eval_xm_laguerre_i(int m, int n, double alpha, double x);

double coeff_f(int n, double alpha, double beta);
double coeff_g(int n, double alpha, double beta);
double coeff_h(int n, double alpha, double beta);
/// (2n+alpha+beta)/(2n-2+alpha+beta).
double gamma_n(int n, double alpha, double beta);

/// 2n^2 + 2n(alpha+beta+1) + (alpha+1)(beta+1): the scale factor that makes
/// f_n (1 - x_{n,k})/2 monotone in the classical Jacobi case.
double remark_scale(int n, double alpha, double beta);

/// Scale-free residual of
///   -(x-b)^2/4 P_n(x) = f_{n+1} P^_{n+2}(x) - 2b g_n P^_{n+1}(x) + h_n P^_n(x),
/// divided by the largest magnitude among the three right-hand terms.
double three_term_residual(int n, const JacobiParams& params, double x);

}  // namespace xop

#endif  // XOP_CONSTRUCT_HPP_
