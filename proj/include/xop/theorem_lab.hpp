#ifndef XOP_THEOREM_LAB_HPP_
#define XOP_THEOREM_LAB_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xop/parallel.hpp"
#include "xop/zeros.hpp"

/// Executable checks of the zero inequalities, interlacing, limits and
/// identities satisfied by the X1 families, over parameter grids.
///
/// Strict orderings are tested with a slack of 1e-10 * (1 + |value|): a
/// reversal smaller than the slack is attributed to root refinement noise.
///
/// worst_residual is the largest error for identity and limit checks, and
/// the tightest margin (negative when violated) for ordering checks.
namespace xop::lab {

inline constexpr double kOrderSlack = 1e-10;
inline constexpr double kLimitCap = 5e-3;

/// Coefficients of the Sturm-Liouville potential lambda_{n,4} of the
/// X1-Laguerre equation (A) and of its alpha-derivative numerator (B).
struct SturmLiouvilleData {
  int n = 0;
  double alpha = 0.0;
  double A3 = 0.0, A2 = 0.0, A1 = 0.0, A0 = 0.0;
  double B3 = 0.0, B2 = 0.0, B1 = 0.0, B0 = 0.0;

  static SturmLiouvilleData make(int n, double alpha);
  /// (B0, B1, B2, B3).
  std::array<double, 4> b_sequence() const { return {B0, B1, B2, B3}; }
};

/// (-x^4 + A3 x^3 + A2 x^2 + A1 x + A0) / (4 x^2 (x+alpha)^2), x > 0.
double lambda_n4(int n, double alpha, double x);
/// (x^4 + B3 x^3 + B2 x^2 + B1 x + B0) / (2 x^2 (x+alpha)^3), x > 0.
double dlambda_dalpha(int n, double alpha, double x);

/// Sign changes in seq, zeros skipped.
int descartes_sign_changes(std::span<const double> seq);

struct Param {
  std::string name;
  double value;
};

struct CheckResult {
  std::string name;
  std::vector<Param> params;
  bool passed = false;
  bool exploratory = false;
  double worst_residual = 0.0;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  /// Every non-exploratory check passed.
  bool gating_passed() const;
  /// Some exploratory check failed.
  bool has_findings() const;
};

// Default grids: alpha in {0.5, 1, 2, 5}, beta in {alpha+0.5, alpha+2,
// alpha+10, 4 alpha}, n <= 20.
std::vector<double> default_alphas();
std::vector<double> default_betas(double alpha);
std::vector<std::pair<double, double>> default_jacobi_grid();
inline constexpr int kDefaultNMax = 20;

/// Exceptional X1-Jacobi zeros: b < x_{n,n} <= gamma_n b, x_{1,1} = c and
/// x_{n+1,n+1} < x_{n,n}, for n = 1..n_max. Requires 0 < alpha < beta at every
/// grid point (ParameterError otherwise). One result per grid point, ordered
/// by (alpha, beta).
std::vector<CheckResult> check_thm1_jacobi(std::vector<std::pair<double, double>> grid, int n_max,
                                           Execution exec = Execution::parallel);

/// Exceptional X1-Laguerre zeros: x_{1,1} = -(alpha+1), strictly increasing in
/// n, all in [-alpha-1, -alpha).
std::vector<CheckResult> check_thm1_laguerre(std::vector<double> alphas, int n_max,
                                             Execution exec = Execution::parallel);

/// Interlacing of regular X1-Laguerre zeros of consecutive degrees (one result
/// per alpha) and their increase between consecutive grid values of alpha
/// (one result per pair).
std::vector<CheckResult> check_thm2(std::vector<double> alphas, int n_max, Execution exec = Execution::parallel);

/// Scaled zeros along a parameter sequence and their distance to the limit.
struct LimitTable {
  std::string target;             // "laguerre" or "hermite"
  int n = 0;
  std::vector<double> sequence;   // beta_j or alpha_j
  std::vector<int> ks;            // 1-based zero indices
  std::vector<double> limits;     // per k
  std::vector<std::vector<double>> scaled;  // [j][k]
  std::vector<std::vector<double>> errors;  // [j][k]
};

/// beta (1 - x^_{n,k}^{(alpha,beta)}) / 2 against x^_{n,n+1-k}^{(alpha)}, k = 1..n.
LimitTable jacobi_to_laguerre_table(int n, double alpha, const std::vector<double>& betas);
/// (x^_{n,k}^{(alpha)} - alpha) / sqrt(2 alpha) against h_{n-1,k-1}. ks defaults
/// to 2..n; k = 1 is a DomainError.
LimitTable laguerre_to_hermite_table(int n, const std::vector<double>& alphas, std::vector<int> ks = {});

/// Errors strictly decrease along the sequence and the last one is at most
/// cap * (1 + |limit|). Fewer than two points fail with "insufficient points".
CheckResult check_limit_table(const LimitTable& table, double cap = kLimitCap);
CheckResult check_thm3_jacobi_to_laguerre(int n, double alpha, const std::vector<double>& betas,
                                          double cap = kLimitCap);
CheckResult check_thm3_laguerre_to_hermite(int n, const std::vector<double>& alphas, std::vector<int> ks = {},
                                           double cap = kLimitCap);

/// P_n(x) < P_{n+1}(x) for n = 1..n_max at every sample; samples must be > 1.
CheckResult check_lemma_jacobi_inequality(int n_max, double alpha, double beta, const std::vector<double>& xs);

struct ConjectureTarget {
  XopFamily family = XopFamily::x1_laguerre;
  int m = 1;
  double alpha = 1.0;
  double beta = 0.0;  // X1-Jacobi only
};

/// Distance from each exceptional zero to the matching zero of the
/// denominator polynomial strictly decreases along ns. For X1-Jacobi also
/// |x_{n,n} - b| <= (gamma_n - 1)|b|.
CheckResult check_conjecture_convergence(const ConjectureTarget& target, const std::vector<int>& ns,
                                         bool exploratory = false);

/// For k = 1..m (zeros in decreasing order), z_{m,n,k} strictly increases in
/// n and stays below -x_{m,k}^{(alpha-1)}. Requires m >= 2, n >= m + 1.
CheckResult check_open_problem(int m, double alpha, const std::vector<int>& ns, bool exploratory = true);

/// (i) (x^_{n,k}^{(alpha)} - (2n+alpha-1)) / sqrt(2(n+alpha-1)) increasing over
/// alphas for the regular k in ks; (ii) f_n(alpha,beta)(1 - x^_{n,k}^{(alpha,beta)})/2
/// increasing over betas at fixed jacobi_alpha for every k in ks.
CheckResult check_remark_monotonicity(int n, const std::vector<int>& ks, const std::vector<double>& alphas,
                                      double jacobi_alpha, const std::vector<double>& betas);

// Identity checks.
CheckResult check_lambda_difference(int n_max, const std::vector<double>& alphas, int points);
CheckResult check_dlambda_finite_difference(int n_max, const std::vector<double>& alphas, int points);
CheckResult check_three_term_identity(int n_max, const std::vector<std::pair<double, double>>& pairs, int samples);
CheckResult check_descartes_b(int count, double alpha_max);
CheckResult check_hypergeometric(int n_max, const std::vector<double>& alphas, const std::vector<double>& betas,
                                 int samples);

enum class Suite { thm1, thm2, thm3, identities, lemma, conjecture, open_problem, remark, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite suite);

/// Overrides for the default grids; unset fields keep the defaults.
struct SuiteOptions {
  std::optional<std::vector<double>> alphas;
  std::optional<std::vector<double>> betas;
  std::optional<int> n_max;
  std::optional<int> m;
  std::optional<std::vector<int>> ns;
  Execution exec = Execution::parallel;
};

Report run_suite(Suite suite, const SuiteOptions& options = {});

}  // namespace xop::lab

#endif  // XOP_THEOREM_LAB_HPP_
