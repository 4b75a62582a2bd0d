#pragma once

#include <functional>
#include <vector>

#include "triops/types.hpp"

namespace triops {

struct QuadResult {
  Cx value{0.0, 0.0};
  double error = 0.0;   // estimated absolute error
  int panels = 0;
  bool converged = false;
};

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1,1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Rule for integrals of the form  int_0^1 s^a f(s) ds  with a > -1:
/// sum_k w_k f(s_k) with the weight s^a absorbed into w_k.
GaussRule gauss_jacobi01(int n, double a);

using CxFn = std::function<Cx(double)>;

/// Adaptive Gauss-Legendre integration of f over [a,b].
/// Bisects the worst panel until the summed error estimate passes the
/// budget or max_panels is reached.
QuadResult integrate_adaptive(const CxFn& f, double a, double b, const QuadratureBudget& budget);

/// Same, but never throws on exhausted budget; caller inspects .converged.
QuadResult integrate_adaptive_nothrow(const CxFn& f, double a, double b,
                                      const QuadratureBudget& budget);

/// Integral of f over (0,b] for f bounded near 0 (|f| <= bound0) whose
/// variation near 0 lives on a logarithmic scale.  Substitutes y = e^{-v}
/// so panel refinement works at every magnitude of y.
QuadResult integrate_log_endpoint(const CxFn& f, double b, double bound0,
                                  const QuadratureBudget& budget);

}  // namespace triops
