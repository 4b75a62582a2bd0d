#pragma once

#include <Eigen/Dense>

#include "triops/types.hpp"

namespace triops {

/// Uniform midpoint grid on (0, omega): nodes x_i = (i - 1/2) h, i = 1..n.
/// Midpoints keep every evaluation away from the kernel singularities at
/// the endpoints.
struct Grid {
  double omega = 0.5;
  int n = 0;
  double h = 0.0;

  Grid() = default;
  Grid(double omega_, int n_) : omega(omega_), n(n_), h(omega_ / n_) {
    if (!(omega > 0.0 && omega < 1.0)) throw std::domain_error("grid omega must lie in (0,1)");
    if (n < 2) throw std::domain_error("grid needs at least 2 nodes");
  }

  double node(int i) const { return (i + 0.5) * h; }  // zero-based
  Eigen::VectorXd nodes() const {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = node(i);
    return x;
  }
  bool operator==(const Grid& o) const { return omega == o.omega && n == o.n; }
};

/// Complex samples of a function on a Grid.
struct GridFn {
  Grid grid;
  Eigen::VectorXcd values;

  GridFn() = default;
  GridFn(const Grid& g, Eigen::VectorXcd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n) throw GridMismatch("sample count does not match grid");
  }

  /// L2(0,omega) norm of the piecewise-constant interpolant.
  double l2_norm() const { return std::sqrt(grid.h) * values.norm(); }
};

/// Sample a callable on the grid.
template <typename F>
GridFn sample(const Grid& g, F&& f) {
  Eigen::VectorXcd v(g.n);
  for (int i = 0; i < g.n; ++i) v(i) = Cx(f(g.node(i)));
  return GridFn(g, std::move(v));
}

}  // namespace triops
