#include "triops/specfun.hpp"

#include <array>
#include <cmath>

namespace triops {

namespace {

bool is_nonpositive_integer(Cx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,     1.0 / 156.0,   -3617.0 / 122400.0,
};

Cx log_gamma_stirling(Cx z) {
  // valid for Re z >= 20
  Cx lz = std::log(z);
  Cx s = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
  Cx zi = 1.0 / z, zp = zi;
  Cx z2 = zi * zi;
  for (double c : kStirling) {
    s += c * zp;
    zp *= z2;
  }
  return s;
}

// Taylor coefficients of 1/Gamma(z) = sum_{k>=1} c_k z^k
constexpr std::array<double, 28> kRgammaTaylor = {
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
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
};

Cx rgamma_series(Cx z) {
  Cx acc{0.0, 0.0}, zp = z;
  for (double c : kRgammaTaylor) {
    acc += c * zp;
    zp *= z;
  }
  return acc;
}

}  // namespace

Cx gamma(Cx z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("gamma: pole at non-positive integer " + std::to_string(z.real()));
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  Cx acc{1.0, 0.0};
  while (z.real() < 20.0) {
    acc *= z;
    z += 1.0;
  }
  return std::exp(log_gamma_stirling(z)) / acc;
}

Cx reciprocal_gamma(Cx z) {
  if (std::abs(z) <= 1.0) return rgamma_series(z);
  if (z.real() < 0.5) return std::sin(kPi * z) * gamma(1.0 - z) / kPi;
  return 1.0 / gamma(z);
}

Cx reciprocal_gamma_over(Cx z) {
  if (std::abs(z) <= 1.0) {
    Cx acc{0.0, 0.0}, zp{1.0, 0.0};
    for (double c : kRgammaTaylor) {
      acc += c * zp;
      zp *= z;
    }
    return acc;
  }
  return reciprocal_gamma(z) / z;
}

namespace {

// The three kernel integrals share the pattern
//   I = int_0^inf rgamma(s) s^{beta-1} w(s) e^{-L s} ds
// with w = 1 (kernel), 1/s (primitive) or 1/(1+s) (weighted primitive).
enum class Weight { One, OverS, OverOnePlusS };

Cx integrand(Cx beta, Cx L, Weight w, double s) {
  // written as s^{beta} * (rgamma(s)/s) * w(s) * e^{-Ls}; the first factor
  // carries the whole endpoint behaviour
  Cx v = std::pow(s, beta) * reciprocal_gamma_over(s) * std::exp(-L * s);
  switch (w) {
    case Weight::One: return v;
    case Weight::OverS: return v / s;
    case Weight::OverOnePlusS: return v / (1.0 + s);
  }
  return v;
}

// [0,1] piece by a ladder of Gauss-Jacobi rules (real beta only; the
// power weight is exactly the singular factor).
QuadResult head_gauss_jacobi(Cx beta, Cx L, Weight w, const QuadratureBudget& budget) {
  double a = beta.real() + (w == Weight::OverS ? -1.0 : 0.0);
  QuadResult res;
  Cx prev{0.0, 0.0};
  bool have_prev = false;
  for (int n : {16, 32, 64, 128, 256}) {
    GaussRule r = gauss_jacobi01(n, a);
    Cx q{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      double s = r.nodes[i];
      // remove the pure power absorbed by the rule's weight
      Cx regular = reciprocal_gamma_over(s) * std::exp(-L * s);
      if (w == Weight::OverOnePlusS) regular /= (1.0 + s);
      q += r.weights[i] * regular;
    }
    res.value = q;
    res.panels += n;
    if (have_prev) {
      res.error = std::abs(q - prev);
      if (res.error <= std::max(budget.abs_tol, budget.rel_tol * std::abs(q))) {
        res.converged = true;
        return res;
      }
    }
    prev = q;
    have_prev = true;
  }
  return res;
}

// [0,1] piece through s = e^{-v}; handles complex beta and the
// finite-part subtraction. decay rate in v: Re(beta) + (w == OverS ? 0 : 1).
QuadResult head_log_sub(Cx beta, Cx L, Weight w, bool finite_part,
                        const QuadratureBudget& budget) {
  double q = beta.real() + (w == Weight::OverS ? 0.0 : 1.0);
  if (finite_part) q = 1.0;  // subtracted integrand decays like e^{-v}
  double bound = 1.0 + std::abs(L);
  double vmax = (std::log(bound / budget.abs_tol) + 5.0) / std::max(q, 0.05);
  auto f = [=](double v) {
    double s = std::exp(-v);
    Cx g = integrand(beta, L, w, s);
    if (finite_part) g -= std::pow(s, beta - 1.0);
    return g * s;  // Jacobian
  };
  QuadResult r = integrate_adaptive_nothrow(f, 0.0, vmax, budget);
  if (finite_part) r.value += 1.0 / beta;
  return r;
}

QuadResult mellin_integral(Cx beta, Cx L, Weight w, const QuadratureBudget& budget) {
  budget.validate();
  if (!(L.real() > 0.0)) throw std::domain_error("kernel integral needs Re(C) + |ln x| > 0");
  bool zero_real = beta.real() == 0.0;
  bool finite_part = zero_real && w == Weight::OverS;
  if (finite_part && beta == Cx{0.0, 0.0})
    throw std::domain_error("kernel primitive undefined at beta = 0");

  QuadResult head;
  if (beta.imag() == 0.0 && !finite_part && beta.real() > 0.0)
    head = head_gauss_jacobi(beta, L, w, budget);
  else
    head = head_log_sub(beta, L, w, finite_part, budget);
  if (!head.converged)  // ladder exhausted or panel budget hit: retry on the log scale
    head = head_log_sub(beta, L, w, finite_part, budget);

  double smax = budget.tail_cut > 0.0
                    ? budget.tail_cut
                    : (std::log(1.0 / budget.abs_tol) + 10.0) / L.real();
  QuadResult tail;
  tail.converged = true;
  if (smax > 1.0)
    tail = integrate_adaptive_nothrow([=](double s) { return integrand(beta, L, w, s); }, 1.0,
                                      smax, budget);

  QuadResult out;
  out.value = head.value + tail.value;
  out.error = head.error + tail.error + budget.abs_tol * 0.1;  // truncated tail bound
  out.panels = head.panels + tail.panels;
  out.converged = head.converged && tail.converged;
  if (!out.converged)
    throw BudgetExhausted("kernel quadrature could not certify tolerance");
  return out;
}

}  // namespace

KernelValue semigroup_kernel(const KernelParams& p, double x, const QuadratureBudget& budget) {
  p.validate(true);
  if (!(x > 0.0) || x > p.omega)
    throw std::domain_error("kernel argument x must lie in (0, omega]");
  Cx L = p.C + std::log(1.0 / x);
  QuadResult r = mellin_integral(p.beta, L, Weight::One, budget);
  return {r.value / x, r.error / x};
}

KernelValue semigroup_kernel_primitive(const KernelParams& p, double x,
                                       const QuadratureBudget& budget) {
  p.validate(true);
  if (x < 0.0 || x > p.omega)
    throw std::domain_error("primitive argument x must lie in [0, omega]");
  if (x == 0.0) return {Cx{0.0, 0.0}, 0.0};
  Cx L = p.C + std::log(1.0 / x);
  QuadResult r = mellin_integral(p.beta, L, Weight::OverS, budget);
  return {r.value, r.error};
}

KernelValue semigroup_kernel_weighted_primitive(const KernelParams& p, double x,
                                                const QuadratureBudget& budget) {
  p.validate(true);
  if (x < 0.0 || x > p.omega)
    throw std::domain_error("weighted primitive argument x must lie in [0, omega]");
  if (x == 0.0) return {Cx{0.0, 0.0}, 0.0};
  Cx L = p.C + std::log(1.0 / x);
  QuadResult r = mellin_integral(p.beta, L, Weight::OverOnePlusS, budget);
  return {x * r.value, x * r.error};
}

Cx semigroup_kernel_leading(const KernelParams& p, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("leading term needs x in (0,1)");
  double l = std::abs(std::log(x));
  return gamma(p.beta + 1.0) / (x * std::pow(Cx{l, 0.0}, p.beta + 1.0));
}

double kernel_l1_norm(const KernelParams& p, const QuadratureBudget& budget) {
  p.validate(false);
  if (p.beta.imag() == 0.0 && p.C.imag() == 0.0) {
    // positive kernel: the integral telescopes to the primitive at omega
    return std::abs(semigroup_kernel_primitive(p, p.omega, budget).value / gamma(p.beta));
  }
  // small-x head from the leading asymptotics, adaptive quadrature above it
  double delta = 1e-7;
  double rb = p.beta.real();
  double head = std::abs(gamma(p.beta + 1.0)) * std::pow(std::abs(std::log(delta)), -rb) / rb;
  QuadratureBudget b = budget;
  b.abs_tol = std::max(budget.abs_tol, 1e-9);
  QuadResult body = integrate_adaptive(
      [&](double x) { return Cx{std::abs(semigroup_kernel(p, x, b).value), 0.0}; }, delta,
      p.omega, b);
  return (head + body.value.real()) / std::abs(gamma(p.beta));
}

}  // namespace triops
