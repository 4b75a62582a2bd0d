#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "triops/quadrature.hpp"

using namespace triops;

TEST_CASE("gauss-legendre is exact on polynomials") {
  const GaussRule& g = gauss_legendre(15);
  for (int k = 0; k <= 29; ++k) {
    double q = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) q += g.weights[i] * std::pow(g.nodes[i], k);
    double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
    CHECK(std::abs(q - exact) < 1e-14);
  }
}

TEST_CASE("gauss-jacobi integrates s^a s^m on [0,1] exactly") {
  for (double a : {-0.5, 0.0, 0.3, 1.7}) {
    GaussRule r = gauss_jacobi01(12, a);
    for (int m = 0; m <= 23; ++m) {
      double q = 0.0;
      for (size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], m);
      CHECK(std::abs(q - 1.0 / (a + m + 1.0)) < 1e-13);
    }
  }
}

TEST_CASE("adaptive quadrature on smooth and oscillatory integrands") {
  QuadratureBudget b;
  auto r = integrate_adaptive([](double x) { return Cx(std::exp(x), 0.0); }, 0.0, 1.0, b);
  CHECK(std::abs(r.value.real() - (std::exp(1.0) - 1.0)) < 1e-12);

  r = integrate_adaptive([](double x) { return Cx(std::cos(50.0 * x), 0.0); }, 0.0, 1.0, b);
  CHECK(std::abs(r.value.real() - std::sin(50.0) / 50.0) < 1e-11);
}

TEST_CASE("budget exhaustion raises") {
  QuadratureBudget b;
  b.max_panels = 3;
  b.abs_tol = 1e-14;
  b.rel_tol = 1e-14;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return Cx(std::cos(300.0 * x) /
                                                              std::sqrt(x + 1e-12), 0.0); },
                                     0.0, 1.0, b),
                  BudgetExhausted);
}

TEST_CASE("log-endpoint rule handles log-scale variation near 0") {
  QuadratureBudget b;
  auto f = [](double y) { return Cx(1.0 / (-std::log(y)), 0.0); };
  auto r = integrate_log_endpoint(f, 0.25, 1.0, b);
  // reference from plain adaptive away from 0 plus a finer log rule
  QuadratureBudget fine;
  fine.abs_tol = 1e-13;
  auto ref = integrate_log_endpoint(f, 0.25, 1.0, fine);
  CHECK(std::abs(r.value - ref.value) < 1e-9);
  CHECK(r.converged);
}
