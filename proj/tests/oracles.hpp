// Independent reference implementations used only by tests.  Each oracle
// takes a different evaluation route than the library code it checks.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "triops/types.hpp"

namespace oracles {

using triops::Cx;

// Classic Lanczos approximation (g = 7, 9 coefficients); reflection below
// Re z = 1/2.  Worst relative error about 2e-13 away from the poles.
inline Cx lanczos_gamma(Cx z) {
  static const double p[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  const double pi = 3.141592653589793238462643;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  Cx x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
  Cx t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Dense trapezoid evaluation of the kernel integral
//   E(x) = int rgamma(s) e^{-Cs} s^{beta-1} x^{s-1} ds
// over s in [lo, hi] with npts points.  1/Gamma comes from the Lanczos
// route (never from the library).
inline Cx trapezoid_kernel(Cx beta, Cx C, double x, double lo = 1e-6, double hi = 200.0,
                           long npts = 10000000) {
  const double h = (hi - lo) / double(npts - 1);
  Cx acc{0.0, 0.0};
  for (long k = 0; k < npts; ++k) {
    double s = lo + h * double(k);
    Cx f;
    if (s == 0.0) {
      // limit of rgamma(s) s^{beta-1}: 1 at beta = 0, 0 for Re beta > 0
      f = (beta == Cx{0.0, 0.0}) ? Cx(1.0 / x, 0.0) : Cx{0.0, 0.0};
    } else {
      f = (1.0 / lanczos_gamma(Cx(s, 0.0))) * std::exp(-C * s) *
          std::pow(Cx(s, 0.0), beta - 1.0) * std::pow(x, s - 1.0);
    }
    acc += (k == 0 || k == npts - 1) ? 0.5 * f : f;
  }
  return acc * h;
}

// Small-x tail of int_0^delta E(u) du by the Watson expansion
//   E(u) ~ (1/u) sum_k b_k Gamma(beta+k) |ln u|^{-beta-k},
// where sum b_k s^k is the Taylor series of e^{-Cs}/Gamma(s) at 0.
// Integrating term by term gives
//   sum_k b_k Gamma(beta+k) l^{1-beta-k} / (beta+k-1),  l = |ln delta|.
inline Cx kernel_tail_series(Cx beta, Cx C, double delta, int terms = 10) {
  static const std::array<double, 16> rg = {
      1.0,
      0.5772156649015328606065,
      -0.655878071520253881077,
      -0.042002635034095235529,
      0.1665386113822914895017,
      -0.04219773455554433674821,
      -0.009621971527876973562115,
      0.007218943246663099542395,
      -0.001165167591859065112114,
      -0.0002152416741149509728157,
      0.0001280502823881161861532,
      -0.00002013485478078823865569,
      -0.000001250493482142670657345,
      0.000001133027231981695882374,
      -2.05633841697760710345e-7,
      6.116095104481415817862e-9,
  };
  // b = rg (x) exp(-C s) series
  std::vector<Cx> b(terms + 1, Cx{0.0, 0.0});
  std::vector<Cx> ec(terms + 1);
  ec[0] = 1.0;
  for (int j = 1; j <= terms; ++j) ec[j] = ec[j - 1] * (-C) / double(j);
  for (int k = 1; k <= terms; ++k)
    for (int j = 0; k - j >= 1 && j <= terms; ++j)
      if (k - j <= int(rg.size())) b[k] += rg[k - j - 1] * ec[j];
  double l = std::abs(std::log(delta));
  Cx tail{0.0, 0.0};
  for (int k = 1; k <= terms; ++k)
    tail += b[k] * lanczos_gamma(beta + double(k)) *
            std::pow(Cx(l, 0.0), 1.0 - beta - double(k)) / (beta + double(k) - 1.0);
  return tail;
}

}  // namespace oracles
