#pragma once

#include "triops/quadrature.hpp"
#include "triops/types.hpp"

namespace triops {

/// Euler gamma function for complex argument (Stirling series with
/// recurrence shift; reflection for Re z < 1/2).  Relative accuracy is a
/// few ulps times |ln Gamma|; well below 1e-13 for |z| <= 30.
Cx gamma(Cx z);

/// Entire reciprocal 1/Gamma(z).  Near the origin this evaluates the
/// Taylor series z + gamma_E z^2 + ..., never a division by a huge value.
Cx reciprocal_gamma(Cx z);

/// reciprocal_gamma(z)/z, regular at 0 (value 1 there).
Cx reciprocal_gamma_over(Cx z);

struct KernelValue {
  Cx value{0.0, 0.0};
  double error = 0.0;
};

/// Kernel of the logarithmic semigroup family at x in (0, omega]:
///   E(x) = int_0^inf rgamma(s) e^{-C s} s^{beta-1} x^{s-1} ds.
/// Admits Re(beta) >= 0 (the reciprocal gamma keeps the integrand
/// bounded at s=0 when Re(beta) = 0; beta = 0 is the coupling kernel of
/// the logarithmic Friedrichs model).
KernelValue semigroup_kernel(const KernelParams& p, double x, const QuadratureBudget& budget);

/// Primitive F(x) = int_0^x E(u) du, evaluated as the single swapped
/// integral int_0^inf rgamma(s) e^{-Cs} s^{beta-2} x^s ds; F(0) = 0.
/// For Re(beta) = 0 (beta != 0) the swapped integral oscillates at s -> 0
/// and is taken in the finite-part sense, which is the entrywise limit of
/// the Re(beta) -> 0+ family.
KernelValue semigroup_kernel_primitive(const KernelParams& p, double x,
                                       const QuadratureBudget& budget);

/// Weighted primitive int_0^x u E(u) du; bounded integrand for all
/// Re(beta) >= 0.  Used by the Friedrichs-model kernels.
KernelValue semigroup_kernel_weighted_primitive(const KernelParams& p, double x,
                                                const QuadratureBudget& budget);

/// Leading small-x term Gamma(beta+1) / (x |ln x|^{beta+1}); oracle only.
Cx semigroup_kernel_leading(const KernelParams& p, double x);

/// L1 norm of the convolution kernel, m = int_0^omega |E(x)/Gamma(beta)| dx,
/// an upper bound for the operator norm on every L^p.
double kernel_l1_norm(const KernelParams& p, const QuadratureBudget& budget);

}  // namespace triops
