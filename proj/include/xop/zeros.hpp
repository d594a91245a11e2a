#ifndef XOP_ZEROS_HPP_
#define XOP_ZEROS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xop/construct.hpp"
#include "xop/errors.hpp"

namespace xop {

using Evaluable = std::function<double(double)>;

inline constexpr double kDefaultTolerance = 1e-12;

enum class XopFamily { x1_laguerre, x1_jacobi, xm_laguerre_i };

/// "x1-laguerre", "x1-jacobi", "xm-laguerre-i".
std::string family_name(XopFamily family);
std::optional<XopFamily> parse_family(std::string_view name);

/// Zeros of one exceptional polynomial, split into the regular ones (inside
/// the orthogonality interval) and the exceptional ones (outside it).
struct ZeroSet {
  XopFamily family = XopFamily::x1_laguerre;
  int m = 1;
  int n = 0;
  double alpha = 0.0;
  std::optional<double> beta;
  std::vector<double> regular;      // increasing
  std::vector<double> exceptional;  // increasing
  /// |p(root)| for regular roots followed by exceptional roots.
  std::vector<double> residuals;
  double tolerance = kDefaultTolerance;
  /// Near-degenerate pairs and other non-fatal diagnostics.
  std::vector<std::string> warnings;

  /// Regular and exceptional zeros merged in increasing order.
  std::vector<double> all() const;
};

/// Uniform scan of [lo, hi] for exactly expected_count sign changes. Starts at
/// 64 * expected_count intervals and doubles up to 2^14 * expected_count.
/// A grid point where f vanishes exactly yields the degenerate bracket [x, x].
/// Throws IsolationFailure with the brackets of the finest grid otherwise.
std::vector<Bracket> bracket_scan(const Evaluable& f, double lo, double hi, int expected_count);

/// Root inside a sign-change bracket to absolute tolerance tol: bisection to
/// width 1e-6, then Newton with a finite-difference slope, reverting to
/// bisection whenever an iterate leaves the bracket.
double refine_root(const Evaluable& f, Bracket bracket, double tol = kDefaultTolerance);

ZeroSet find_zeros_x1_laguerre(int n, double alpha, double tol = kDefaultTolerance);
ZeroSet find_zeros_x1_jacobi(int n, const JacobiParams& params, double tol = kDefaultTolerance);
ZeroSet find_zeros_xm_laguerre(int m, int n, double alpha, double tol = kDefaultTolerance);

/// Locators shared with the Gram-Schmidt oracle: same brackets, arbitrary f
/// of the given degree.
ZeroSet locate_x1_laguerre_zeros(const Evaluable& f, int n, double alpha, double tol);
ZeroSet locate_x1_jacobi_zeros(const Evaluable& f, int n, const JacobiParams& params, double tol);

}  // namespace xop

#endif  // XOP_ZEROS_HPP_
