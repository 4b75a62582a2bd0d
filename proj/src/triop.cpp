#include "triops/triop.hpp"

namespace triops {

const char* op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::LogSemigroup: return "log-semigroup";
    case OpKind::FracPower: return "fractional-integral";
    case OpKind::LogPowerDeriv: return "log-power-derivative";
    case OpKind::LogPower: return "log-power";
    case OpKind::LogLeftInverse: return "log-left-inverse";
    case OpKind::Coordinate: return "coordinate";
    case OpKind::ModelA: return "model-A";
    case OpKind::ModelB: return "model-B";
    case OpKind::Composite: return "composite";
  }
  return "?";
}

bool TriOp::lower_triangular() const {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != Cx{0.0, 0.0}) return false;
  return true;
}

bool TriOp::nonzero_diagonal(double tol) const {
  for (int i = 0; i < m.rows(); ++i)
    if (!(std::abs(m(i, i)) > tol)) return false;
  return true;
}

GridFn apply(const TriOp& a, const GridFn& f) {
  if (!(a.grid == f.grid)) throw GridMismatch("apply: operator and function on different grids");
  return GridFn(a.grid, a.m * f.values);
}

TriOp compose(const TriOp& a, const TriOp& b) {
  if (!(a.grid == b.grid)) throw GridMismatch("compose: operands on different grids");
  return TriOp{a.grid, a.m * b.m, KernelSpec{OpKind::Composite, a.spec.params}};
}

TriOp adjoint(const TriOp& a) {
  return TriOp{a.grid, a.m.adjoint(), KernelSpec{OpKind::Composite, a.spec.params}};
}

TriOp invert_triangular(const TriOp& a) {
  if (!a.lower_triangular())
    throw std::invalid_argument("invert_triangular: matrix has entries above the diagonal");
  if (!a.nonzero_diagonal())
    throw SingularDiagonal("invert_triangular: zero diagonal entry");
  Eigen::MatrixXcd inv = a.m.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXcd::Identity(a.n(), a.n()));
  return TriOp{a.grid, std::move(inv), KernelSpec{OpKind::Composite, a.spec.params}};
}

TriOp from_primitive_samples(const Grid& g, const Eigen::VectorXcd& prim, KernelSpec spec) {
  if (prim.size() != g.n) throw GridMismatch("primitive sample count does not match grid");
  Eigen::VectorXcd c(g.n);
  c(0) = prim(0);
  for (int m = 1; m < g.n; ++m) c(m) = prim(m) - prim(m - 1);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j <= i; ++j) M(i, j) = c(i - j);
  return TriOp{g, std::move(M), spec};
}

}  // namespace triops
