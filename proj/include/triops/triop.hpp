#pragma once

#include <Eigen/Dense>

#include "triops/grid.hpp"
#include "triops/types.hpp"

namespace triops {

enum class OpKind {
  LogSemigroup,    // convolution with the logarithmic-semigroup kernel
  FracPower,       // Riemann-Liouville fractional integral
  LogPowerDeriv,   // d/dx of convolution with |ln u|^{-beta}
  LogPower,        // convolution with |ln u|^{-beta}
  LogLeftInverse,  // -int_0^x f'(t) ln(x-t) dt
  Coordinate,      // multiplication by x
  ModelA,          // logarithmic Friedrichs model
  ModelB,          // fractional Friedrichs model
  Composite,
};

const char* op_kind_name(OpKind k);

struct KernelSpec {
  OpKind family = OpKind::Composite;
  KernelParams params;
};

/// Dense matrix realization of a triangular integral operator on a Grid.
/// Strictly triangular kinds carry bit-exact zeros above the diagonal;
/// diagonal-plus-triangular kinds (Coordinate, ModelA, ModelB) add the
/// multiplication part.  The left-inverse kind carries one superdiagonal
/// from its centered-difference factor.
struct TriOp {
  Grid grid;
  Eigen::MatrixXcd m;
  KernelSpec spec;

  int n() const { return grid.n; }
  bool lower_triangular() const;      // zeros strictly above the diagonal
  bool nonzero_diagonal(double tol = 0.0) const;
};

GridFn apply(const TriOp& a, const GridFn& f);
TriOp compose(const TriOp& a, const TriOp& b);
TriOp adjoint(const TriOp& a);

/// Inverse by triangular solve; requires exact lower-triangular structure
/// and a nonzero diagonal.
TriOp invert_triangular(const TriOp& a);

/// Build a triangular convolution matrix from primitive values at the
/// half-grid points: prim[m] ~ primitive((m + 1/2) h), entry (i,j) =
/// prim[i-j] - prim[i-j-1] (prim[-1] = 0 for the diagonal half cell).
TriOp from_primitive_samples(const Grid& g, const Eigen::VectorXcd& prim, KernelSpec spec);

}  // namespace triops
