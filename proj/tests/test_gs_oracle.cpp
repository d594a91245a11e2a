#include <doctest.h>

#include <cmath>

#include "xop/gs_oracle.hpp"

using namespace xop;
using namespace xop::oracle;

TEST_CASE("polynomial coefficients") {
  const PolyCoeffs p({2.0, -3.0, 1.0, 1e-14});
  CHECK(p.degree() == 2);
  CHECK(p(1.0) == 0.0);
  CHECK(p(2.0) == 0.0);
  const auto q = PolyCoeffs({1.0, 4.0}).monic();
  CHECK(q.leading() == 1.0);
  CHECK(q.coeffs()[0] == 0.25);

  const ShiftedPoly s{2.0, {1.0, 0.0, 1.0}};  // 1 + (x-2)^2
  const auto m = s.to_monomial();
  CHECK(m.coeffs()[0] == doctest::Approx(5.0));
  CHECK(m.coeffs()[1] == doctest::Approx(-4.0));
  CHECK(m.coeffs()[2] == doctest::Approx(1.0));
  for (double x : {-1.0, 0.5, 3.0}) CHECK(s(x) == doctest::Approx(m(x)));
}

TEST_CASE("inner products") {
  const PolyCoeffs one({1.0});
  const PolyCoeffs lin({2.0, 1.0});
  // Two rule orders agree.
  CHECK(inner_product_x1_laguerre(one, one, 1.0, 16) ==
        doctest::Approx(inner_product_x1_laguerre(one, one, 1.0, 64)).epsilon(1e-9));
  // Symmetric.
  CHECK(inner_product_x1_laguerre(one, lin, 1.0, 16) == inner_product_x1_laguerre(lin, one, 1.0, 16));
  const JacobiParams p(1, 3);
  CHECK(inner_product_x1_jacobi(one, lin, p, 16) == inner_product_x1_jacobi(lin, one, p, 16));
  // int_0^inf e^-x x/(x+1)^2 dx = 2e E1(1) - 1 ... compared against a fine
  // midpoint sum instead of special functions.
  double ref = 0.0;
  const double h = 1e-4;
  for (double x = h / 2; x < 60.0; x += h) ref += std::exp(-x) * x / ((x + 1) * (x + 1)) * h;
  CHECK(inner_product_x1_laguerre(one, one, 1.0, 16) == doctest::Approx(ref).epsilon(1e-7));
  CHECK_THROWS_AS(inner_product_x1_laguerre(PolyCoeffs(std::vector<double>(20, 1.0)), one, 1.0, 10), DomainError);
}

TEST_CASE("X1-Laguerre by orthogonalization") {
  const auto p1 = x1_laguerre_via_gram_schmidt(1, 1.0);
  CHECK(p1.degree() == 1);
  CHECK(p1.coeffs()[0] == doctest::Approx(2.0));

  const auto z2 = oracle_zeros_x1_laguerre(2, 1.0);
  CHECK(std::abs(z2.exceptional[0] + std::sqrt(3.0)) <= 1e-8);
  CHECK(std::abs(z2.regular[0] - std::sqrt(3.0)) <= 1e-8);

  const auto a = oracle_zeros_x1_laguerre(5, 2.0).all();
  const auto b = find_zeros_x1_laguerre(5, 2.0).all();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-8);
}

TEST_CASE("X1-Jacobi by orthogonalization") {
  const JacobiParams p(1, 3);
  const auto p1 = x1_jacobi_via_gram_schmidt(1, p);
  CHECK(p1.coeffs()[0] == doctest::Approx(-3.0));

  const auto z2 = oracle_zeros_x1_jacobi(2, p);
  CHECK(std::abs(z2.regular[0] - (3 - std::sqrt(5.0)) / 2) <= 1e-8);
  CHECK(std::abs(z2.exceptional[0] - (3 + std::sqrt(5.0)) / 2) <= 1e-8);

  const JacobiParams q(0.5, 2.5);
  const auto a = oracle_zeros_x1_jacobi(6, q).all();
  const auto b = find_zeros_x1_jacobi(6, q).all();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-8);
}

TEST_CASE("orthogonalized sequences are orthogonal and match the closed forms up to scale") {
  const auto s = x1_laguerre_sequence(6, 1.5);
  CHECK(s.polys.size() == 6);
  CHECK(s.orthogonality_residual() <= 1e-8);
  for (int n = 1; n <= 6; ++n) {
    const auto& p = s.polys[std::size_t(n - 1)];
    const double scale = p(0.7) / eval_x1_laguerre(n, 1.5, 0.7);
    for (double x : {-2.0, 0.1, 3.0, 8.0}) CHECK(p(x) == doctest::Approx(scale * eval_x1_laguerre(n, 1.5, x)).epsilon(1e-8));
  }
  const auto t = x1_jacobi_sequence(6, JacobiParams(0.5, 2.5));
  CHECK(t.orthogonality_residual() <= 1e-8);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(x1_laguerre_sequence(kMaxOracleDegree + 1, 1.0), DomainError);
  CHECK_THROWS_AS(x1_jacobi_sequence(0, JacobiParams(1, 3)), DomainError);
}
