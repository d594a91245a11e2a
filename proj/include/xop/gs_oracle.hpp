#ifndef XOP_GS_ORACLE_HPP_
#define XOP_GS_ORACLE_HPP_

#include <vector>

#include "xop/classical.hpp"
#include "xop/construct.hpp"
#include "xop/zeros.hpp"

/// Independent reconstruction of the X1 families by literal Gram-Schmidt
/// orthogonalization under their weighted inner products. Used only to
/// cross-check the closed-form constructions.
namespace xop::oracle {

inline constexpr int kMaxOracleDegree = 10;
inline constexpr int kMaxRuleOrder = 256;
inline constexpr double kQuadratureStability = 1e-9;

/// Monomial coefficients, index = power.
class PolyCoeffs {
 public:
  PolyCoeffs() = default;
  /// Trailing coefficients below 1e-10 * max|c| are trimmed.
  explicit PolyCoeffs(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double leading() const { return coeffs_.back(); }
  double operator()(double x) const;
  PolyCoeffs monic() const;

 private:
  std::vector<double> coeffs_;
};

/// Coefficients in powers of (x - center).
struct ShiftedPoly {
  double center = 0.0;
  std::vector<double> coeffs;

  double operator()(double x) const;
  PolyCoeffs to_monomial() const;
};

/// <p, q> = int_0^inf p q e^{-x} x^alpha / (x+alpha)^2 dx by Gauss-Laguerre(alpha),
/// doubling rule_order until the value moves by less than 1e-9 relative.
/// rule_order must be at least (deg p + deg q)/2 + 8.
double inner_product_x1_laguerre(const PolyCoeffs& p, const PolyCoeffs& q, double alpha, int rule_order);

/// <p, q> = int_{-1}^{1} p q (1-x)^alpha (1+x)^beta / (x-b)^2 dx by Gauss-Jacobi.
double inner_product_x1_jacobi(const PolyCoeffs& p, const PolyCoeffs& q, const JacobiParams& params, int rule_order);

/// Degrees 1..n of an orthogonalized sequence, with the Gram matrix measured
/// on the converged rule.
struct GsSequence {
  std::vector<ShiftedPoly> polys;  // polys[i] has degree i + 1
  std::vector<std::vector<double>> gram;
  int rule_order = 0;

  /// max_{i != j} |<p_i, p_j>| / sqrt(<p_i,p_i><p_j,p_j>).
  double orthogonality_residual() const;
};

/// Seeds x+alpha+1, (x+alpha)^2, (x+alpha)^3, ... under the X1-Laguerre product.
/// rule_order 0 selects the default 4n + 32.
GsSequence x1_laguerre_sequence(int n, double alpha, int rule_order = 0);
/// Seeds x-c, (x-b)^2, (x-b)^3, ... under the X1-Jacobi product.
GsSequence x1_jacobi_sequence(int n, const JacobiParams& params, int rule_order = 0);

/// Degree-n member, monic.
PolyCoeffs x1_laguerre_via_gram_schmidt(int n, double alpha, int rule_order = 0);
PolyCoeffs x1_jacobi_via_gram_schmidt(int n, const JacobiParams& params, int rule_order = 0);

/// Zeros of an oracle polynomial, located with the engine's brackets.
ZeroSet oracle_zeros_x1_laguerre(int n, double alpha, double tol = kDefaultTolerance);
ZeroSet oracle_zeros_x1_jacobi(int n, const JacobiParams& params, double tol = kDefaultTolerance);

}  // namespace xop::oracle

#endif  // XOP_GS_ORACLE_HPP_
