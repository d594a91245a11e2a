#ifndef XOP_CLASSICAL_HPP_
#define XOP_CLASSICAL_HPP_

#include <span>
#include <string>
#include <vector>

#include "xop/errors.hpp"

/// Classical Jacobi, Laguerre and Hermite polynomials in the Szego
/// normalization: P_n(1) = binom(n+alpha, n), L_n(0) = binom(n+alpha, n),
/// H_n with leading coefficient 2^n.
namespace xop::classical {

/// Degrees above this are accepted but emit a warning: recurrence magnitudes
/// grow quickly and nothing in this library needs them.
inline constexpr int kMaxDegree = 60;

class Family {
 public:
  enum class Kind { jacobi, laguerre, hermite };

  static Family jacobi(double alpha, double beta);
  static Family laguerre(double alpha);
  static Family hermite();

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Integral of the base weight over the orthogonality interval.
  double zeroth_moment() const;

  std::string describe() const;

  bool operator==(const Family&) const = default;

 private:
  Family(Kind kind, double alpha, double beta) : kind_(kind), alpha_(alpha), beta_(beta) {}

  Kind kind_;
  double alpha_;
  double beta_;
};

/// Values of two consecutive degrees, produced by one recurrence sweep.
struct Pair {
  double current;   // p_n(x)
  double previous;  // p_{n-1}(x), 0 for n = 0
};

/// Degree -1 is identically zero.
double eval(const Family& family, int n, double x);
Pair eval_pair(const Family& family, int n, double x);
double derivative(const Family& family, int n, double x);

/// binom(n + alpha, n).
double jacobi_at_one(int n, double alpha);

/// All n real zeros in increasing order. Eigenvalues of the symmetric
/// tridiagonal recurrence matrix by Sturm-count bisection, polished by one
/// Newton step on the recurrence.
std::vector<double> zeros(const Family& family, int n);

/// Recurrence coefficients of the orthonormal polynomials:
/// b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
struct JacobiMatrix {
  std::vector<double> diagonal;         // a_0 .. a_{n-1}
  std::vector<double> offdiag_squared;  // b_1^2 .. b_{n-1}^2
};
JacobiMatrix jacobi_matrix(const Family& family, int n);

/// Number of eigenvalues of the tridiagonal matrix strictly below x.
int sturm_count(const JacobiMatrix& matrix, double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
  Family family = Family::hermite();

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss rule for the Jacobi or Laguerre weight. Hermite is unsupported.
QuadratureRule gauss_rule(const Family& family, int order);

/// 2F1(-n, b; c; z) as a finite sum of n + 1 terms.
double hyp2f1_terminating(int n, double b, double c, double z);

double log_gamma(double x);

/// (x)_n = x (x+1) ... (x+n-1).
double pochhammer(double x, int n);

}  // namespace xop::classical

#endif  // XOP_CLASSICAL_HPP_
