#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace triops {

using Cx = std::complex<double>;

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;
inline constexpr double kPi = std::numbers::pi_v<double>;

/// Parameters of the logarithmic-semigroup kernel family.
struct KernelParams {
  Cx beta{1.0, 0.0};
  Cx C{kEulerGamma, 0.0};  // damping constant; default makes the left-inverse identity hold
  double omega = 0.5;      // interval length, must lie in (0,1)

  // Throws std::domain_error on violated constraints. Kernel evaluation
  // needs Re(beta) > 0; symbol-style paths admit Re(beta) >= 0.
  void validate(bool allow_zero_real_beta = false) const {
    if (!(omega > 0.0 && omega < 1.0))
      throw std::domain_error("interval length omega must lie in (0,1), got " +
                              std::to_string(omega));
    double lo = allow_zero_real_beta ? 0.0 : 1e-300;
    if (beta.real() < lo)
      throw std::domain_error(allow_zero_real_beta
                                  ? "Re(beta) must be >= 0"
                                  : "Re(beta) must be > 0 for kernel evaluation");
    if (!(C.real() - std::log(omega) > 0.0))
      throw std::domain_error("need Re(C) - ln(omega) > 0 so the kernel integral converges");
  }
};

/// Tolerances and limits for adaptive quadrature.
struct QuadratureBudget {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_panels = 4096;
  double tail_cut = 0.0;  // explicit truncation point for the s-integral; 0 = automatic

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_panels < 1)
      throw std::domain_error("quadrature budget requires abs_tol>0, rel_tol>0, max_panels>=1");
  }
};

struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatch : std::invalid_argument {
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularDiagonal : std::runtime_error {
  explicit SingularDiagonal(const std::string& what) : std::runtime_error(what) {}
};

struct ResolutionError : std::domain_error {
  explicit ResolutionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace triops
