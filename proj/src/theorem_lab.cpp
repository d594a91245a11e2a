#include "xop/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "xop/classical.hpp"
#include "xop/construct.hpp"

namespace xop::lab {

namespace {

constexpr int kMaxReportedViolations = 5;

double slack(double a, double b) { return kOrderSlack * (1.0 + std::max(std::abs(a), std::abs(b))); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Accumulates assertions for one CheckResult.
class Tracker {
 public:
  enum class Mode { margin, error };

  explicit Tracker(Mode mode) : mode_(mode) {
    worst_ = (mode == Mode::margin) ? std::numeric_limits<double>::infinity() : 0.0;
  }

  // a < b (or a <= b), tolerating reversals up to the ordering slack.
  void order(double a, double b, const std::string& what) {
    const double margin = b - a;
    worst_ = std::min(worst_, margin);
    if (!(margin > -slack(a, b))) fail(what + ": " + fmt(a) + " !< " + fmt(b));
  }

  void bounded(double err, double tol, const std::string& what) {
    if (mode_ == Mode::error) worst_ = std::max(worst_, err);
    if (!(err <= tol)) fail(what + ": " + fmt(err) + " > " + fmt(tol));
  }

  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }

  void fail(const std::string& what) {
    ok_ = false;
    if (++violations_ <= kMaxReportedViolations) notes_.push_back(what);
  }

  void note(const std::string& s) { extra_.push_back(s); }

  void finish(CheckResult& r) const {
    r.passed = ok_;
    r.worst_residual = std::isfinite(worst_) ? worst_ : 0.0;
    std::ostringstream os;
    if (ok_) {
      os << "ok";
    } else {
      os << violations_ << " violation(s)";
      for (const auto& n : notes_) os << "; " << n;
    }
    for (const auto& e : extra_) os << "; " << e;
    r.detail = os.str();
  }

 private:
  Mode mode_;
  bool ok_ = true;
  int violations_ = 0;
  double worst_;
  std::vector<std::string> notes_;
  std::vector<std::string> extra_;
};

CheckResult make_result(std::string name, std::vector<Param> params, bool exploratory = false) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.exploratory = exploratory;
  return r;
}

void fail_with_exception(CheckResult& r, const std::exception& e) {
  r.passed = false;
  r.detail = std::string("zero engine failure: ") + e.what();
}

CheckResult insufficient(CheckResult r) {
  r.passed = false;
  r.detail = "insufficient points";
  return r;
}

template <class T>
void require_increasing(const std::vector<T>& seq, const char* what) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!(seq[i - 1] < seq[i])) throw DomainError(std::string(what) + " must be strictly increasing");
}

std::string label(const char* sym, int n, int k) {
  return std::string(sym) + "_{" + std::to_string(n) + "," + std::to_string(k) + "}";
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SturmLiouvilleData SturmLiouvilleData::make(int n, double alpha) {
  SturmLiouvilleData d;
  d.n = n;
  d.alpha = alpha;
  const double a = alpha;
  const double m = 2.0 * n - 1.0;
  d.A3 = 2.0 * m;
  d.A2 = 2.0 * a * a + 4.0 * m * a - 3.0;
  d.A1 = 2.0 * a * (m * a + 3.0);
  d.A0 = a * a * (1.0 - a * a);
  d.B3 = 2.0 * a;
  d.B2 = 6.0;
  d.B1 = -2.0 * a * (1.0 + a * a);
  d.B0 = -a * a * a * a;
  return d;
}

double lambda_n4(int n, double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("lambda_n4 requires x > 0");
  // Near x = 0 the value is ~A0/(4 alpha^2 x^2); extended precision keeps the
  // result within an ulp so differences in n stay exact.
  const auto d = SturmLiouvilleData::make(n, alpha);
  const long double X = x;
  const long double num = (((-X + d.A3) * X + d.A2) * X + d.A1) * X + d.A0;
  const long double s = X + alpha;
  return static_cast<double>(num / (4.0L * X * X * s * s));
}

double dlambda_dalpha(int n, double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("dlambda_dalpha requires x > 0");
  if (!(alpha > 0.0)) throw DomainError("dlambda_dalpha requires alpha > 0");
  const auto d = SturmLiouvilleData::make(n, alpha);
  const long double X = x;
  const long double num = (((X + d.B3) * X + d.B2) * X + d.B1) * X + d.B0;
  const long double s = X + alpha;
  return static_cast<double>(num / (2.0L * X * X * s * s * s));
}

int descartes_sign_changes(std::span<const double> seq) {
  int changes = 0;
  int last = 0;
  for (double v : seq) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool Report::gating_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.exploratory || c.passed; });
}

bool Report::has_findings() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.exploratory && !c.passed; });
}

std::vector<double> default_alphas() { return {0.5, 1.0, 2.0, 5.0}; }

std::vector<double> default_betas(double alpha) { return {alpha + 0.5, alpha + 2.0, alpha + 10.0, 4.0 * alpha}; }

std::vector<std::pair<double, double>> default_jacobi_grid() {
  std::vector<std::pair<double, double>> grid;
  for (double a : default_alphas())
    for (double b : default_betas(a)) grid.emplace_back(a, b);
  return grid;
}

// ---------------------------------------------------------------------------
// Exceptional zero bounds

std::vector<CheckResult> check_thm1_jacobi(std::vector<std::pair<double, double>> grid, int n_max, Execution exec) {
  for (const auto& [a, b] : grid) {
    const JacobiParams validated(a, b);
    if (!(0.0 < a && a < b)) throw ParameterError("check_thm1_jacobi requires 0 < alpha < beta");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto task = [&grid, n_max](std::size_t i) {
    const auto [alpha, beta] = grid[i];
    CheckResult r = make_result("thm1.jacobi", {{"alpha", alpha}, {"beta", beta}, {"n_max", double(n_max)}});
    try {
      const JacobiParams p(alpha, beta);
      Tracker t(Tracker::Mode::margin);
      double prev = 0.0;
      for (int n = 1; n <= n_max; ++n) {
        const ZeroSet zs = find_zeros_x1_jacobi(n, p);
        t.require(zs.regular.size() == std::size_t(n - 1) && zs.exceptional.size() == 1,
                  "wrong zero count at n=" + std::to_string(n));
        if (!zs.regular.empty()) {
          t.order(-1.0, zs.regular.front(), "regular zero above -1 at n=" + std::to_string(n));
          t.order(zs.regular.back(), 1.0, "regular zero below 1 at n=" + std::to_string(n));
        }
        const double x = zs.exceptional.front();
        t.order(p.b(), x, "b < " + label("x", n, n));
        t.order(x, p.gamma(n) * p.b(), label("x", n, n) + " <= gamma_n b");
        if (n == 1) t.bounded(std::abs(x - p.c()), kOrderSlack * (1.0 + std::abs(p.c())), "x_{1,1} = c");
        if (n > 1) t.order(x, prev, label("x", n, n) + " < " + label("x", n - 1, n - 1));
        prev = x;
      }
      t.finish(r);
    } catch (const std::exception& e) {
      fail_with_exception(r, e);
    }
    return r;
  };
  return map_indices<CheckResult>(grid.size(), task, exec);
}

std::vector<CheckResult> check_thm1_laguerre(std::vector<double> alphas, int n_max, Execution exec) {
  for (double a : alphas) LaguerreParams validated(a);
  alphas = sorted_unique(std::move(alphas));
  auto task = [&alphas, n_max](std::size_t i) {
    const double alpha = alphas[i];
    CheckResult r = make_result("thm1.laguerre", {{"alpha", alpha}, {"n_max", double(n_max)}});
    try {
      Tracker t(Tracker::Mode::margin);
      double prev = 0.0;
      for (int n = 1; n <= n_max; ++n) {
        const ZeroSet zs = find_zeros_x1_laguerre(n, alpha);
        t.require(zs.regular.size() == std::size_t(n - 1) && zs.exceptional.size() == 1,
                  "wrong zero count at n=" + std::to_string(n));
        if (!zs.regular.empty()) t.order(0.0, zs.regular.front(), "regular zero positive at n=" + std::to_string(n));
        const double x = zs.exceptional.front();
        t.order(-alpha - 1.0, x, "-alpha-1 <= " + label("x", n, 1));
        t.order(x, -alpha, label("x", n, 1) + " < -alpha");
        if (n == 1)
          t.bounded(std::abs(x + alpha + 1.0), kOrderSlack * (1.0 + std::abs(alpha + 1.0)), "x_{1,1} = -(alpha+1)");
        if (n > 1) t.order(prev, x, label("x", n - 1, 1) + " < " + label("x", n, 1));
        prev = x;
      }
      t.finish(r);
    } catch (const std::exception& e) {
      fail_with_exception(r, e);
    }
    return r;
  };
  return map_indices<CheckResult>(alphas.size(), task, exec);
}

// ---------------------------------------------------------------------------
// Interlacing and alpha-monotonicity

std::vector<CheckResult> check_thm2(std::vector<double> alphas, int n_max, Execution exec) {
  for (double a : alphas) LaguerreParams validated(a);
  alphas = sorted_unique(std::move(alphas));

  struct Table {
    std::vector<std::vector<double>> regular;  // indexed by n; empty for n < 2
    std::string error;
  };
  auto compute = [&alphas, n_max](std::size_t i) {
    Table tab;
    tab.regular.resize(std::size_t(std::max(n_max, 1) + 1));
    try {
      for (int n = 2; n <= n_max; ++n) tab.regular[n] = find_zeros_x1_laguerre(n, alphas[i]).regular;
    } catch (const std::exception& e) {
      tab.error = e.what();
    }
    return tab;
  };
  const auto tables = map_indices<Table>(alphas.size(), compute, exec);

  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    CheckResult r = make_result("thm2.interlacing", {{"alpha", alphas[i]}, {"n_max", double(n_max)}});
    if (!tables[i].error.empty()) {
      r.detail = "zero engine failure: " + tables[i].error;
    } else {
      Tracker t(Tracker::Mode::margin);
      for (int n = 2; n < n_max; ++n) {
        const auto& lo = tables[i].regular[n];
        const auto& hi = tables[i].regular[n + 1];
        if (lo.size() != std::size_t(n - 1) || hi.size() != std::size_t(n)) {
          t.fail("wrong regular zero count at n=" + std::to_string(n));
          continue;
        }
        t.order(0.0, hi[0], "0 < " + label("x", n + 1, 2));
        for (std::size_t j = 0; j < lo.size(); ++j) {
          const int k = int(j) + 2;
          t.order(hi[j], lo[j], label("x", n + 1, k) + " < " + label("x", n, k));
          t.order(lo[j], hi[j + 1], label("x", n, k) + " < " + label("x", n + 1, k + 1));
        }
      }
      t.finish(r);
    }
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    CheckResult r = make_result("thm2.alpha_monotonicity",
                                {{"alpha", alphas[i]}, {"alpha_next", alphas[i + 1]}, {"n_max", double(n_max)}});
    if (!tables[i].error.empty() || !tables[i + 1].error.empty()) {
      r.detail = "zero engine failure: " + tables[i].error + tables[i + 1].error;
    } else {
      Tracker t(Tracker::Mode::margin);
      for (int n = 2; n <= n_max; ++n) {
        const auto& lo = tables[i].regular[n];
        const auto& hi = tables[i + 1].regular[n];
        for (std::size_t j = 0; j < std::min(lo.size(), hi.size()); ++j)
          t.order(lo[j], hi[j], label("x", n, int(j) + 2) + " increasing in alpha");
      }
      t.finish(r);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scaled-zero limits

LimitTable jacobi_to_laguerre_table(int n, double alpha, const std::vector<double>& betas) {
  if (n < 1) throw DomainError("limit tables require n >= 1");
  require_increasing(betas, "beta sequence");
  LimitTable tab;
  tab.target = "laguerre";
  tab.n = n;
  tab.sequence = betas;
  const auto lag = find_zeros_x1_laguerre(n, alpha).all();
  for (int k = 1; k <= n; ++k) {
    tab.ks.push_back(k);
    tab.limits.push_back(lag[std::size_t(n - k)]);
  }
  for (double beta : betas) {
    const auto zeros = find_zeros_x1_jacobi(n, JacobiParams(alpha, beta)).all();
    std::vector<double> scaled, errors;
    for (int k = 1; k <= n; ++k) {
      const double s = beta * (1.0 - zeros[std::size_t(k - 1)]) / 2.0;
      scaled.push_back(s);
      errors.push_back(std::abs(s - tab.limits[std::size_t(k - 1)]));
    }
    tab.scaled.push_back(std::move(scaled));
    tab.errors.push_back(std::move(errors));
  }
  return tab;
}

LimitTable laguerre_to_hermite_table(int n, const std::vector<double>& alphas, std::vector<int> ks) {
  if (n < 2) throw DomainError("the Hermite limit needs n >= 2");
  require_increasing(alphas, "alpha sequence");
  if (ks.empty())
    for (int k = 2; k <= n; ++k) ks.push_back(k);
  for (int k : ks)
    if (k < 2 || k > n) throw DomainError("the Hermite limit covers the regular zeros k = 2..n only");
  LimitTable tab;
  tab.target = "hermite";
  tab.n = n;
  tab.sequence = alphas;
  tab.ks = ks;
  const auto h = classical::zeros(classical::Family::hermite(), n - 1);
  for (int k : ks) tab.limits.push_back(h[std::size_t(k - 2)]);
  for (double alpha : alphas) {
    const auto zeros = find_zeros_x1_laguerre(n, alpha).all();
    std::vector<double> scaled, errors;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double s = (zeros[std::size_t(ks[i] - 1)] - alpha) / std::sqrt(2.0 * alpha);
      scaled.push_back(s);
      errors.push_back(std::abs(s - tab.limits[i]));
    }
    tab.scaled.push_back(std::move(scaled));
    tab.errors.push_back(std::move(errors));
  }
  return tab;
}

CheckResult check_limit_table(const LimitTable& tab, double cap) {
  CheckResult r = make_result("thm3." + tab.target, {{"n", double(tab.n)}});
  if (tab.sequence.size() < 2) return insufficient(std::move(r));
  Tracker t(Tracker::Mode::error);
  for (std::size_t i = 0; i < tab.ks.size(); ++i) {
    const std::string k = "k=" + std::to_string(tab.ks[i]);
    std::ostringstream errs;
    errs << k << " errors";
    for (std::size_t j = 0; j < tab.sequence.size(); ++j) errs << ' ' << fmt(tab.errors[j][i]);
    t.note(errs.str());
    for (std::size_t j = 1; j < tab.sequence.size(); ++j) {
      const double prev = tab.errors[j - 1][i];
      const double cur = tab.errors[j][i];
      if (!(prev - cur > -slack(prev, cur))) t.fail(k + ": error does not decrease at step " + std::to_string(j));
    }
    const double last = tab.errors.back()[i];
    t.bounded(last, cap * (1.0 + std::abs(tab.limits[i])), k + ": final error above cap");
  }
  t.finish(r);
  return r;
}

CheckResult check_thm3_jacobi_to_laguerre(int n, double alpha, const std::vector<double>& betas, double cap) {
  CheckResult r = make_result("thm3.laguerre", {{"n", double(n)}, {"alpha", alpha}});
  if (betas.size() < 2) return insufficient(std::move(r));
  try {
    r = check_limit_table(jacobi_to_laguerre_table(n, alpha, betas), cap);
  } catch (const IsolationFailure& e) {
    fail_with_exception(r, e);
    return r;
  }
  r.params = {{"n", double(n)}, {"alpha", alpha}};
  return r;
}

CheckResult check_thm3_laguerre_to_hermite(int n, const std::vector<double>& alphas, std::vector<int> ks, double cap) {
  for (int k : ks)
    if (k < 2 || k > n) throw DomainError("the Hermite limit covers the regular zeros k = 2..n only");
  CheckResult r = make_result("thm3.hermite", {{"n", double(n)}});
  if (alphas.size() < 2) return insufficient(std::move(r));
  try {
    r = check_limit_table(laguerre_to_hermite_table(n, alphas, std::move(ks)), cap);
  } catch (const IsolationFailure& e) {
    fail_with_exception(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Jacobi inequality beyond x = 1

CheckResult check_lemma_jacobi_inequality(int n_max, double alpha, double beta, const std::vector<double>& xs) {
  for (double x : xs)
    if (!(x > 1.0)) throw DomainError("the Jacobi inequality is stated for x > 1");
  const auto family = classical::Family::jacobi(alpha, beta);
  CheckResult r = make_result("lemma.jacobi_inequality", {{"alpha", alpha}, {"beta", beta}, {"n_max", double(n_max)}});
  Tracker t(Tracker::Mode::margin);
  for (double x : xs) {
    for (int n = 1; n <= n_max; ++n) {
      const double pn = classical::eval(family, n, x);
      const double pn1 = classical::eval(family, n + 1, x);
      t.order(pn, pn1, "P_" + std::to_string(n) + "(" + fmt(x) + ") < P_" + std::to_string(n + 1));
    }
  }
  t.finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Exceptional zeros approaching the denominator roots

CheckResult check_conjecture_convergence(const ConjectureTarget& target, const std::vector<int>& ns, bool exploratory) {
  require_increasing(ns, "n sequence");
  std::vector<Param> params{{"m", double(target.m)}, {"alpha", target.alpha}};
  if (target.family == XopFamily::x1_jacobi) params.push_back({"beta", target.beta});
  CheckResult r = make_result("conjecture." + family_name(target.family), std::move(params), exploratory);
  if (ns.size() < 2) return insufficient(std::move(r));

  try {
    Tracker t(Tracker::Mode::margin);
    std::vector<std::vector<double>> gaps;
    for (int n : ns) {
      std::vector<double> d;
      switch (target.family) {
        case XopFamily::x1_laguerre: {
          const LaguerreParams p(target.alpha);
          d.push_back(std::abs(find_zeros_x1_laguerre(n, target.alpha).exceptional.front() - p.eta_root()));
          break;
        }
        case XopFamily::x1_jacobi: {
          const JacobiParams p(target.alpha, target.beta);
          const double gap = std::abs(find_zeros_x1_jacobi(n, p).exceptional.front() - p.eta_root());
          t.order(gap, (p.gamma(n) - 1.0) * std::abs(p.b()), "O(1/n) envelope at n=" + std::to_string(n));
          d.push_back(gap);
          break;
        }
        case XopFamily::xm_laguerre_i: {
          auto limits = classical::zeros(classical::Family::laguerre(target.alpha - 1.0), target.m);
          for (double& v : limits) v = -v;
          std::sort(limits.begin(), limits.end());
          const auto exc = find_zeros_xm_laguerre(target.m, n, target.alpha).exceptional;
          for (std::size_t k = 0; k < exc.size(); ++k) d.push_back(std::abs(exc[k] - limits[k]));
          break;
        }
      }
      gaps.push_back(std::move(d));
    }
    for (std::size_t j = 1; j < gaps.size(); ++j)
      for (std::size_t k = 0; k < gaps[j].size(); ++k)
        t.order(gaps[j][k], gaps[j - 1][k],
                "gap to denominator zero " + std::to_string(k + 1) + " shrinks from n=" + std::to_string(ns[j - 1]) +
                    " to n=" + std::to_string(ns[j]));
    std::ostringstream os;
    os << "final gaps";
    for (double g : gaps.back()) os << ' ' << fmt(g);
    t.note(os.str());
    t.finish(r);
  } catch (const IsolationFailure& e) {
    fail_with_exception(r, e);
  }
  return r;
}

CheckResult check_open_problem(int m, double alpha, const std::vector<int>& ns, bool exploratory) {
  if (m < 2) throw DomainError("the open problem concerns m >= 2");
  require_increasing(ns, "n sequence");
  for (int n : ns)
    if (n < m + 1) throw DomainError("the open problem check needs n >= m + 1");
  CheckResult r = make_result("open_problem.xm_laguerre_i", {{"m", double(m)}, {"alpha", alpha}}, exploratory);
  if (ns.size() < 2) return insufficient(std::move(r));

  try {
    const auto classical_zeros = classical::zeros(classical::Family::laguerre(alpha - 1.0), m);
    std::vector<std::vector<double>> z;  // [j][k-1], k in decreasing-order indexing
    for (int n : ns) {
      auto exc = find_zeros_xm_laguerre(m, n, alpha).exceptional;
      std::reverse(exc.begin(), exc.end());
      z.push_back(std::move(exc));
    }
    Tracker t(Tracker::Mode::margin);
    for (int k = 1; k <= m; ++k) {
      const double limit = -classical_zeros[std::size_t(k - 1)];
      double min_step = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < ns.size(); ++j) {
        const double zk = z[j][std::size_t(k - 1)];
        t.order(zk, limit, label("z", ns[j], k) + " < -x_{m,k}");
        if (j > 0) {
          t.order(z[j - 1][std::size_t(k - 1)], zk, label("z", ns[j - 1], k) + " < " + label("z", ns[j], k));
          min_step = std::min(min_step, zk - z[j - 1][std::size_t(k - 1)]);
        }
      }
      t.note("k=" + std::to_string(k) + " margin_to_limit " + fmt(limit - z.back()[std::size_t(k - 1)]) +
             " min_step " + fmt(min_step));
    }
    t.finish(r);
  } catch (const IsolationFailure& e) {
    fail_with_exception(r, e);
  }
  return r;
}

CheckResult check_remark_monotonicity(int n, const std::vector<int>& ks, const std::vector<double>& alphas,
                                      double jacobi_alpha, const std::vector<double>& betas) {
  require_increasing(alphas, "alpha grid");
  require_increasing(betas, "beta grid");
  for (int k : ks)
    if (k < 1 || k > n) throw DomainError("zero index out of range");
  CheckResult r = make_result("remark.monotonicity", {{"n", double(n)}, {"jacobi_alpha", jacobi_alpha}}, true);
  if (ks.empty()) {
    r.passed = true;
    r.detail = "vacuous: empty k range";
    return r;
  }
  try {
    Tracker t(Tracker::Mode::margin);
    std::vector<std::vector<double>> lag;
    for (double a : alphas) lag.push_back(find_zeros_x1_laguerre(n, a).all());
    for (int k : ks) {
      if (k < 2) continue;
      for (std::size_t j = 1; j < alphas.size(); ++j) {
        const auto value = [&](std::size_t i) {
          const double a = alphas[i];
          return (lag[i][std::size_t(k - 1)] - (2.0 * n + a - 1.0)) / std::sqrt(2.0 * (n + a - 1.0));
        };
        t.order(value(j - 1), value(j), "Laguerre-Hermite expression k=" + std::to_string(k) + " alpha=" + fmt(alphas[j]));
      }
    }
    std::vector<std::vector<double>> jac;
    for (double b : betas) jac.push_back(find_zeros_x1_jacobi(n, JacobiParams(jacobi_alpha, b)).all());
    for (int k : ks) {
      for (std::size_t j = 1; j < betas.size(); ++j) {
        const auto value = [&](std::size_t i) {
          return remark_scale(n, jacobi_alpha, betas[i]) * (1.0 - jac[i][std::size_t(k - 1)]) / 2.0;
        };
        t.order(value(j - 1), value(j), "Jacobi expression k=" + std::to_string(k) + " beta=" + fmt(betas[j]));
      }
    }
    t.finish(r);
  } catch (const IsolationFailure& e) {
    fail_with_exception(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

std::vector<double> log_spaced(double lo, double hi, int points) {
  std::vector<double> xs;
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < points; ++i) xs.push_back(std::pow(10.0, a + (b - a) * (i + 0.5) / points));
  return xs;
}

}  // namespace

CheckResult check_lambda_difference(int n_max, const std::vector<double>& alphas, int points) {
  CheckResult r = make_result("identities.lambda_difference", {{"n_max", double(n_max)}, {"points", double(points)}});
  Tracker t(Tracker::Mode::error);
  for (double a : alphas)
    for (int n = 1; n <= n_max; ++n)
      for (double x : log_spaced(1e-3, 1e3, points)) {
        const double diff = lambda_n4(n + 1, a, x) - lambda_n4(n, a, x);
        const double err = std::abs(diff - 1.0 / x) / (1.0 + 1.0 / x);
        t.bounded(err, 1e-12, "n=" + std::to_string(n) + " alpha=" + fmt(a) + " x=" + fmt(x));
      }
  t.finish(r);
  return r;
}

CheckResult check_dlambda_finite_difference(int n_max, const std::vector<double>& alphas, int points) {
  CheckResult r = make_result("identities.dlambda_dalpha", {{"n_max", double(n_max)}, {"points", double(points)}});
  constexpr double h = 1e-5;
  Tracker t(Tracker::Mode::error);
  for (double a : alphas)
    for (int n = 1; n <= n_max; ++n)
      for (double x : log_spaced(1e-3, 1e3, points)) {
        const double exact = dlambda_dalpha(n, a, x);
        const double fd = (lambda_n4(n, a + h, x) - lambda_n4(n, a - h, x)) / (2.0 * h);
        const double err = std::abs(fd - exact) / std::abs(exact);
        t.bounded(err, 1e-6, "n=" + std::to_string(n) + " alpha=" + fmt(a) + " x=" + fmt(x));
      }
  t.finish(r);
  return r;
}

CheckResult check_three_term_identity(int n_max, const std::vector<std::pair<double, double>>& pairs, int samples) {
  CheckResult r = make_result("identities.x1_jacobi_three_term", {{"n_max", double(n_max)}, {"samples", double(samples)}});
  Tracker t(Tracker::Mode::error);
  std::mt19937_64 rng(20240601);
  for (const auto& [a, b] : pairs) {
    const JacobiParams p(a, b);
    std::uniform_real_distribution<double> dist(std::min(-1.0, p.c()), std::max(-1.0, p.c()));
    for (int n = 2; n <= n_max; ++n)
      for (int s = 0; s < samples; ++s) {
        const double x = dist(rng);
        t.bounded(three_term_residual(n, p, x), 1e-10,
                  "n=" + std::to_string(n) + " (alpha,beta)=(" + fmt(a) + "," + fmt(b) + ") x=" + fmt(x));
      }
  }
  t.finish(r);
  return r;
}

CheckResult check_descartes_b(int count, double alpha_max) {
  CheckResult r = make_result("identities.descartes_b_sequence", {{"count", double(count)}, {"alpha_max", alpha_max}});
  Tracker t(Tracker::Mode::error);
  for (int i = 1; i <= count; ++i) {
    const double a = alpha_max * i / count;
    const auto seq = SturmLiouvilleData::make(1, a).b_sequence();
    const int changes = descartes_sign_changes(seq);
    t.bounded(std::abs(changes - 1.0), 0.0, "sign changes at alpha=" + fmt(a));
  }
  t.finish(r);
  return r;
}

CheckResult check_hypergeometric(int n_max, const std::vector<double>& alphas, const std::vector<double>& betas,
                                 int samples) {
  CheckResult r = make_result("identities.hypergeometric", {{"n_max", double(n_max)}, {"samples", double(samples)}});
  Tracker t(Tracker::Mode::error);
  for (double a : alphas)
    for (double b : betas) {
      const auto family = classical::Family::jacobi(a, b);
      for (int n = 0; n <= n_max; ++n) {
        const double prefactor = classical::pochhammer(a + 1.0, n) / std::exp(classical::log_gamma(n + 1.0));
        for (int s = 0; s < samples; ++s) {
          const double x = samples > 1 ? 5.0 * s / (samples - 1) : 0.0;
          const double z = x / b;
          const double lhs = classical::eval(family, n, 1.0 - 2.0 * x / b);
          const double rhs = prefactor * classical::hyp2f1_terminating(n, a + b + n + 1.0, a + 1.0, z);
          // Sum of |terms|: flipping z's sign makes every term positive.
          const double scale = prefactor * classical::hyp2f1_terminating(n, a + b + n + 1.0, a + 1.0, -z);
          const double err = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), scale});
          t.bounded(err, 1e-10, "n=" + std::to_string(n) + " alpha=" + fmt(a) + " beta=" + fmt(b) + " x=" + fmt(x));
        }
      }
    }
  t.finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Suites

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "thm1") return Suite::thm1;
  if (name == "thm2") return Suite::thm2;
  if (name == "thm3") return Suite::thm3;
  if (name == "identities") return Suite::identities;
  if (name == "lemma") return Suite::lemma;
  if (name == "conjecture") return Suite::conjecture;
  if (name == "open-problem") return Suite::open_problem;
  if (name == "remark") return Suite::remark;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::thm1: return "thm1";
    case Suite::thm2: return "thm2";
    case Suite::thm3: return "thm3";
    case Suite::identities: return "identities";
    case Suite::lemma: return "lemma";
    case Suite::conjecture: return "conjecture";
    case Suite::open_problem: return "open-problem";
    case Suite::remark: return "remark";
    case Suite::all: return "all";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<double, double>> jacobi_grid(const SuiteOptions& o) {
  if (!o.alphas && !o.betas) return default_jacobi_grid();
  std::vector<std::pair<double, double>> grid;
  for (double a : o.alphas.value_or(default_alphas()))
    for (double b : o.betas ? *o.betas : default_betas(a)) grid.emplace_back(a, b);
  return grid;
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

// The m = 4, alpha = 1, n in {6, 10, 14} instance is backed by published
// values and gates the exit status; every other instance is exploratory.
bool table_backed(int m, double alpha, const std::vector<int>& ns) {
  return m == 4 && alpha == 1.0 && ns == std::vector<int>{6, 10, 14};
}

std::vector<CheckResult> run_single(Suite suite, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  switch (suite) {
    case Suite::thm1: {
      const int n_max = o.n_max.value_or(kDefaultNMax);
      append(out, check_thm1_jacobi(jacobi_grid(o), n_max, o.exec));
      append(out, check_thm1_laguerre(o.alphas.value_or(default_alphas()), n_max, o.exec));
      break;
    }
    case Suite::thm2:
      append(out, check_thm2(o.alphas.value_or(default_alphas()), o.n_max.value_or(kDefaultNMax), o.exec));
      break;
    case Suite::thm3: {
      const std::vector<double> decades{1e2, 1e3, 1e4};
      for (int n : o.ns.value_or(std::vector<int>{4})) {
        for (double a : o.alphas.value_or(std::vector<double>{1.0}))
          out.push_back(check_thm3_jacobi_to_laguerre(n, a, o.betas.value_or(decades)));
        out.push_back(check_thm3_laguerre_to_hermite(n, decades));
      }
      break;
    }
    case Suite::identities:
      out.push_back(check_lambda_difference(20, {0.5, 1.0, 5.0}, 100));
      out.push_back(check_dlambda_finite_difference(20, {0.5, 1.0, 5.0}, 100));
      out.push_back(check_three_term_identity(15, {{1.0, 3.0}, {0.5, 2.5}, {2.0, 7.0}}, 20));
      out.push_back(check_descartes_b(100, 100.0));
      out.push_back(check_hypergeometric(10, default_alphas(), {10.0, 100.0}, 11));
      break;
    case Suite::lemma: {
      std::vector<double> xs;
      for (int i = 1; i <= 20; ++i) xs.push_back(1.0 + 4.0 * i / 20.0);
      for (const auto& [a, b] : jacobi_grid(o))
        out.push_back(check_lemma_jacobi_inequality(o.n_max.value_or(10), a, b, xs));
      break;
    }
    case Suite::conjecture: {
      if (!o.alphas && !o.betas && !o.ns && !o.m) {
        const std::vector<int> doubling{2, 4, 8, 16};
        out.push_back(check_conjecture_convergence({XopFamily::x1_jacobi, 1, 1.0, 3.0}, doubling));
        out.push_back(check_conjecture_convergence({XopFamily::x1_laguerre, 1, 1.0, 0.0}, doubling));
        out.push_back(check_conjecture_convergence({XopFamily::xm_laguerre_i, 4, 1.0, 0.0}, {6, 10, 14}));
        break;
      }
      const auto ns = o.ns.value_or(std::vector<int>{2, 4, 8, 16});
      for (double a : o.alphas.value_or(std::vector<double>{1.0})) {
        if (o.m && *o.m > 1) {
          out.push_back(check_conjecture_convergence({XopFamily::xm_laguerre_i, *o.m, a, 0.0}, ns,
                                                     !table_backed(*o.m, a, ns)));
          continue;
        }
        out.push_back(check_conjecture_convergence({XopFamily::x1_laguerre, 1, a, 0.0}, ns));
        for (double b : o.betas.value_or(default_betas(a)))
          out.push_back(check_conjecture_convergence({XopFamily::x1_jacobi, 1, a, b}, ns));
      }
      break;
    }
    case Suite::open_problem: {
      if (!o.alphas && !o.ns && !o.m) {
        out.push_back(check_open_problem(4, 1.0, {6, 10, 14}, false));
        for (int m = 2; m <= 5; ++m)
          for (double a : default_alphas()) {
            std::vector<int> ns;
            for (int step = 1; step <= 9; step += 2) ns.push_back(m + step);
            out.push_back(check_open_problem(m, a, ns, true));
          }
        break;
      }
      const int m = o.m.value_or(4);
      const auto ns = o.ns.value_or(std::vector<int>{m + 2, m + 6, m + 10});
      for (double a : o.alphas.value_or(std::vector<double>{1.0}))
        out.push_back(check_open_problem(m, a, ns, !table_backed(m, a, ns)));
      break;
    }
    case Suite::remark: {
      for (int n : o.ns.value_or(std::vector<int>{3, 4, 6})) {
        std::vector<int> ks;
        for (int k = 1; k <= n; ++k) ks.push_back(k);
        out.push_back(check_remark_monotonicity(n, ks, o.alphas.value_or(std::vector<double>{1, 2, 4, 8, 16}), 1.0,
                                                o.betas.value_or(std::vector<double>{2, 4, 8, 16, 32})));
      }
      break;
    }
    case Suite::all:
      for (Suite s : {Suite::identities, Suite::lemma, Suite::thm1, Suite::thm2, Suite::thm3, Suite::conjecture,
                      Suite::open_problem, Suite::remark})
        append(out, run_single(s, o));
      break;
  }
  return out;
}

}  // namespace

Report run_suite(Suite suite, const SuiteOptions& options) {
  Report report;
  report.suite = suite_name(suite);
  report.checks = run_single(suite, options);
  return report;
}

}  // namespace xop::lab
