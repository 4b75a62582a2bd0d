#pragma once

#include "triops/specfun.hpp"
#include "triops/triop.hpp"

namespace triops {

/// Convolution operator with kernel E(x-t)/Gamma(beta) (midpoint product
/// integration through the primitive).  Re(beta) > 0, or Re(beta) = 0
/// with beta != 0 through the finite-part primitive.
TriOp make_log_semigroup(const Grid& g, const KernelParams& p, const QuadratureBudget& budget);

/// Riemann-Liouville fractional integral of order beta; entries from the
/// exact primitive u^beta / Gamma(beta+1).  Re(beta) > 0, or Re(beta) = 0
/// with beta != 0.
TriOp make_fractional_integral(const Grid& g, Cx beta);

/// d/dx convolution with |ln u|^{-beta}; entries from the exact primitive
/// K(u) = |ln u|^{-beta}, K(0) taken as 0.  Re(beta) >= 0.
TriOp make_log_power_derivative(const Grid& g, Cx beta);

/// Convolution with the bounded kernel |ln u|^{-beta}, beta real > 0;
/// primitive accumulated by adaptive quadrature over the half-grid cells.
TriOp make_log_power(const Grid& g, double beta, const QuadratureBudget& budget);

/// The integro-differential operator -int_0^x f'(t) ln(x-t) dt: product
/// integration for the kernel -ln u composed with second-order finite
/// differences (centered inside, one-sided at the ends).  Carries one
/// superdiagonal from the difference stencil.
TriOp make_log_left_inverse(const Grid& g);

/// Multiplication by x (diagonal).
TriOp make_coordinate(const Grid& g);

}  // namespace triops
