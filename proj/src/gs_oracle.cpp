#include "xop/gs_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xop::oracle {

namespace {

// Quadrature nodes with the rational factor 1/(x - pole)^2 folded into the
// weights.
struct WeightedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

WeightedRule fold_pole(const classical::QuadratureRule& rule, double pole) {
  WeightedRule out;
  out.order = rule.order;
  out.nodes = rule.nodes;
  out.weights.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double d = rule.nodes[i] - pole;
    out.weights[i] = rule.weights[i] / (d * d);
  }
  return out;
}

struct Setting {
  classical::Family base;
  double center;             // the shift of the seed basis, also the pole
  std::vector<double> seed1;  // first seed in powers of (x - center)
};

Setting laguerre_setting(double alpha) {
  const LaguerreParams p(alpha);
  // x + alpha + 1 = (x + alpha) + 1
  return {classical::Family::laguerre(alpha), p.eta_root(), {1.0, 1.0}};
}

Setting jacobi_setting(const JacobiParams& p) {
  // x - c = (x - b) - (c - b)
  return {classical::Family::jacobi(p.alpha(), p.beta()), p.b(), {-(p.c() - p.b()), 1.0}};
}

void check_degree(int n) {
  if (n < 1 || n > kMaxOracleDegree)
    throw DomainError("the Gram-Schmidt oracle supports degrees 1.." + std::to_string(kMaxOracleDegree));
}

void check_order(int rule_order) {
  if (rule_order < 1 || rule_order > kMaxRuleOrder)
    throw DomainError("quadrature order must lie in 1.." + std::to_string(kMaxRuleOrder));
}

std::vector<double> seed(const Setting& s, int k) {
  if (k == 1) return s.seed1;
  std::vector<double> c(std::size_t(k + 1), 0.0);
  c[std::size_t(k)] = 1.0;
  return c;
}

double horner(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

std::vector<double> values_at(const std::vector<double>& coeffs, const WeightedRule& rule, double center) {
  std::vector<double> v(rule.nodes.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = horner(coeffs, rule.nodes[i] - center);
  return v;
}

double dot(const WeightedRule& rule, const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += rule.weights[i] * u[i] * v[i];
  return s;
}

std::vector<std::vector<double>> seed_gram(const Setting& s, int n, const WeightedRule& rule) {
  std::vector<std::vector<double>> vals;
  for (int k = 1; k <= n; ++k) vals.push_back(values_at(seed(s, k), rule, s.center));
  std::vector<std::vector<double>> g(std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) g[std::size_t(i)][std::size_t(j)] = g[std::size_t(j)][std::size_t(i)] = dot(rule, vals[i], vals[j]);
  return g;
}

double gram_change(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]) / std::sqrt(std::abs(b[i][i] * b[j][j])));
  return worst;
}

WeightedRule stable_rule(const Setting& s, int n, int rule_order) {
  int order = rule_order > 0 ? rule_order : 4 * n + 32;
  check_order(order);
  auto rule = fold_pole(classical::gauss_rule(s.base, order), s.center);
  auto gram = seed_gram(s, n, rule);
  while (2 * order <= kMaxRuleOrder) {
    order *= 2;
    auto finer = fold_pole(classical::gauss_rule(s.base, order), s.center);
    auto finer_gram = seed_gram(s, n, finer);
    const double change = gram_change(gram, finer_gram);
    rule = std::move(finer);
    gram = std::move(finer_gram);
    if (change < kQuadratureStability) return rule;
  }
  throw OraclePrecisionError("Gram matrix did not stabilize below order " + std::to_string(kMaxRuleOrder));
}

GsSequence orthogonalize(const Setting& s, int n, int rule_order) {
  check_degree(n);
  const WeightedRule rule = stable_rule(s, n, rule_order);
  GsSequence seq;
  seq.rule_order = rule.order;
  std::vector<std::vector<double>> vals;
  std::vector<double> norms;
  for (int k = 1; k <= n; ++k) {
    std::vector<double> c = seed(s, k);
    std::vector<double> v = values_at(c, rule, s.center);
    // Modified Gram-Schmidt, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < vals.size(); ++j) {
        const double coef = dot(rule, v, vals[j]) / norms[j];
        const auto& qc = seq.polys[j].coeffs;
        for (std::size_t i = 0; i < qc.size(); ++i) c[i] -= coef * qc[i];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coef * vals[j][i];
      }
    }
    norms.push_back(dot(rule, v, v));
    vals.push_back(std::move(v));
    seq.polys.push_back({s.center, std::move(c)});
  }
  // Gram matrix of the output, recomputed from coefficients.
  std::vector<std::vector<double>> fresh;
  for (const auto& p : seq.polys) fresh.push_back(values_at(p.coeffs, rule, s.center));
  seq.gram.assign(std::size_t(n), std::vector<double>(std::size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) seq.gram[i][j] = dot(rule, fresh[i], fresh[j]);
  return seq;
}

double converged_inner_product(const Setting& s, const PolyCoeffs& p, const PolyCoeffs& q, int rule_order) {
  const int needed = (p.degree() + q.degree()) / 2 + 8;
  if (rule_order < needed)
    throw DomainError("rule_order must be at least (deg p + deg q)/2 + 8 = " + std::to_string(needed));
  check_order(rule_order);
  auto evaluate = [&](int order, double& scale) {
    const auto rule = fold_pole(classical::gauss_rule(s.base, order), s.center);
    double sum = 0.0;
    scale = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double term = rule.weights[i] * p(rule.nodes[i]) * q(rule.nodes[i]);
      sum += term;
      scale += std::abs(term);
    }
    return sum;
  };
  int order = rule_order;
  double scale = 0.0;
  double value = evaluate(order, scale);
  while (2 * order <= kMaxRuleOrder) {
    order *= 2;
    double finer_scale = 0.0;
    const double finer = evaluate(order, finer_scale);
    const bool stable = std::abs(finer - value) <= kQuadratureStability * std::max(finer_scale, 1e-300);
    value = finer;
    if (stable) return value;
  }
  throw OraclePrecisionError("inner product did not stabilize below order " + std::to_string(kMaxRuleOrder));
}

}  // namespace

PolyCoeffs::PolyCoeffs(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  double biggest = 0.0;
  for (double c : coeffs_) biggest = std::max(biggest, std::abs(c));
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= 1e-10 * biggest) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double PolyCoeffs::operator()(double x) const { return horner(coeffs_, x); }

PolyCoeffs PolyCoeffs::monic() const {
  std::vector<double> c(coeffs_);
  const double lead = c.back();
  for (double& v : c) v /= lead;
  return PolyCoeffs(std::move(c));
}

double ShiftedPoly::operator()(double x) const { return horner(coeffs, x - center); }

PolyCoeffs ShiftedPoly::to_monomial() const {
  // Horner in polynomial arithmetic: r <- r * (x - center) + c_k.
  std::vector<double> r{0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    std::vector<double> next(r.size() + 1, 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] += r[i];
      next[i] -= center * r[i];
    }
    next[0] += *it;
    r = std::move(next);
  }
  return PolyCoeffs(std::move(r));
}

double GsSequence::orthogonality_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j)
      if (i != j) worst = std::max(worst, std::abs(gram[i][j]) / std::sqrt(gram[i][i] * gram[j][j]));
  return worst;
}

double inner_product_x1_laguerre(const PolyCoeffs& p, const PolyCoeffs& q, double alpha, int rule_order) {
  return converged_inner_product(laguerre_setting(alpha), p, q, rule_order);
}

double inner_product_x1_jacobi(const PolyCoeffs& p, const PolyCoeffs& q, const JacobiParams& params, int rule_order) {
  return converged_inner_product(jacobi_setting(params), p, q, rule_order);
}

GsSequence x1_laguerre_sequence(int n, double alpha, int rule_order) {
  return orthogonalize(laguerre_setting(alpha), n, rule_order);
}

GsSequence x1_jacobi_sequence(int n, const JacobiParams& params, int rule_order) {
  return orthogonalize(jacobi_setting(params), n, rule_order);
}

PolyCoeffs x1_laguerre_via_gram_schmidt(int n, double alpha, int rule_order) {
  return x1_laguerre_sequence(n, alpha, rule_order).polys.back().to_monomial().monic();
}

PolyCoeffs x1_jacobi_via_gram_schmidt(int n, const JacobiParams& params, int rule_order) {
  return x1_jacobi_sequence(n, params, rule_order).polys.back().to_monomial().monic();
}

ZeroSet oracle_zeros_x1_laguerre(int n, double alpha, double tol) {
  const ShiftedPoly p = x1_laguerre_sequence(n, alpha).polys.back();
  return locate_x1_laguerre_zeros([&p](double x) { return p(x); }, n, alpha, tol);
}

ZeroSet oracle_zeros_x1_jacobi(int n, const JacobiParams& params, double tol) {
  const ShiftedPoly p = x1_jacobi_sequence(n, params).polys.back();
  return locate_x1_jacobi_zeros([&p](double x) { return p(x); }, n, params, tol);
}

}  // namespace xop::oracle
