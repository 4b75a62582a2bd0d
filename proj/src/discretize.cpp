#include "triops/discretize.hpp"

#include <cmath>

namespace triops {

TriOp make_log_semigroup(const Grid& g, const KernelParams& p, const QuadratureBudget& budget) {
  p.validate(true);
  if (p.beta == Cx{0.0, 0.0}) throw std::domain_error("log-semigroup operator needs beta != 0");
  if (!(g.omega == p.omega))
    throw GridMismatch("grid omega differs from kernel omega");
  Cx gb = gamma(p.beta);
  Eigen::VectorXcd prim(g.n);
  for (int m = 0; m < g.n; ++m)
    prim(m) = semigroup_kernel_primitive(p, (m + 0.5) * g.h, budget).value / gb;
  return from_primitive_samples(g, prim, KernelSpec{OpKind::LogSemigroup, p});
}

TriOp make_fractional_integral(const Grid& g, Cx beta) {
  if (beta == Cx{0.0, 0.0}) throw std::domain_error("fractional integral undefined at beta = 0");
  if (beta.real() < 0.0)
    throw std::domain_error("fractional integral needs Re(beta) >= 0 (invert for negative order)");
  Cx gb1 = gamma(beta + 1.0);
  Eigen::VectorXcd prim(g.n);
  for (int m = 0; m < g.n; ++m)
    prim(m) = std::pow(Cx((m + 0.5) * g.h, 0.0), beta) / gb1;
  KernelParams p;
  p.beta = beta;
  p.omega = g.omega;
  return from_primitive_samples(g, prim, KernelSpec{OpKind::FracPower, p});
}

TriOp make_log_power_derivative(const Grid& g, Cx beta) {
  if (beta.real() < 0.0) throw std::domain_error("log-power derivative needs Re(beta) >= 0");
  Eigen::VectorXcd prim(g.n);
  for (int m = 0; m < g.n; ++m) {
    double u = (m + 0.5) * g.h;
    prim(m) = std::pow(Cx(-std::log(u), 0.0), -beta);
  }
  KernelParams p;
  p.beta = beta;
  p.omega = g.omega;
  return from_primitive_samples(g, prim, KernelSpec{OpKind::LogPowerDeriv, p});
}

TriOp make_log_power(const Grid& g, double beta, const QuadratureBudget& budget) {
  if (!(beta > 0.0)) throw std::domain_error("log-power operator needs beta > 0");
  Eigen::VectorXcd prim(g.n);
  auto k = [beta](double u) { return Cx(std::pow(-std::log(u), -beta), 0.0); };
  // accumulate int_0^{(m+1/2)h} over successive half-grid segments
  Cx acc = integrate_log_endpoint(k, 0.5 * g.h, 1.0, budget).value;
  prim(0) = acc;
  for (int m = 1; m < g.n; ++m) {
    acc += integrate_adaptive(k, (m - 0.5) * g.h, (m + 0.5) * g.h, budget).value;
    prim(m) = acc;
  }
  KernelParams p;
  p.beta = Cx(beta, 0.0);
  p.omega = g.omega;
  return from_primitive_samples(g, prim, KernelSpec{OpKind::LogPower, p});
}

TriOp make_log_left_inverse(const Grid& g) {
  // product integration for kernel -ln u, primitive u - u ln u
  Eigen::VectorXcd prim(g.n);
  for (int m = 0; m < g.n; ++m) {
    double u = (m + 0.5) * g.h;
    prim(m) = Cx(u - u * std::log(u), 0.0);
  }
  KernelParams p;
  p.omega = g.omega;
  TriOp L = from_primitive_samples(g, prim, KernelSpec{OpKind::Composite, p});
  // second-order differentiation matrix
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(g.n, g.n);
  double s = 1.0 / (2.0 * g.h);
  D(0, 0) = -3.0 * s;
  D(0, 1) = 4.0 * s;
  D(0, 2) = -1.0 * s;
  for (int j = 1; j < g.n - 1; ++j) {
    D(j, j - 1) = -s;
    D(j, j + 1) = s;
  }
  D(g.n - 1, g.n - 3) = s;
  D(g.n - 1, g.n - 2) = -4.0 * s;
  D(g.n - 1, g.n - 1) = 3.0 * s;
  return TriOp{g, L.m * D, KernelSpec{OpKind::LogLeftInverse, p}};
}

TriOp make_coordinate(const Grid& g) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i) M(i, i) = g.node(i);
  KernelParams p;
  p.omega = g.omega;
  return TriOp{g, std::move(M), KernelSpec{OpKind::Coordinate, p}};
}

}  // namespace triops
