#include "triops/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace triops {

namespace {

// Legendre polynomial value and derivative by recurrence.
std::pair<double, double> legendre_pd(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double d = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, d};
}

GaussRule compute_gauss_legendre(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_pd(n, x);
      double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, d] = legendre_pd(n, x);
    (void)p;
    double w = 2.0 / ((1.0 - x * x) * d * d);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

GaussRule gauss_jacobi01(int n, double a) {
  if (!(a > -1.0)) throw std::domain_error("gauss_jacobi01 requires exponent a > -1");
  // Golub-Welsch for the Jacobi weight (1+x)^a on [-1,1], mapped to [0,1].
  // Monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double kk = k;
    double ak = (k == 0) ? a / (a + 2.0)
                         : a * a / ((2 * kk + a) * (2 * kk + a + 2.0));
    J(k, k) = ak;
    if (k > 0) {
      double bk = 4.0 * kk * kk * (kk + a) * (kk + a) /
                  ((2 * kk + a) * (2 * kk + a) * (2 * kk + a + 1.0) * (2 * kk + a - 1.0));
      J(k, k - 1) = J(k - 1, k) = std::sqrt(bk);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    // mu0 = int_{-1}^1 (1+x)^a dx = 2^{a+1}/(a+1); the [0,1] map divides by 2^{a+1}
    double w = es.eigenvectors()(0, i) * es.eigenvectors()(0, i) / (a + 1.0);
    r.nodes[i] = 0.5 * (x + 1.0);
    r.weights[i] = w;
  }
  return r;
}

namespace {

struct Panel {
  double a, b;
  Cx value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const CxFn& f, double a, double b) {
  const GaussRule& g = gauss_legendre(15);
  auto quad = [&](double lo, double hi) {
    Cx s{0.0, 0.0};
    double c = 0.5 * (lo + hi), hl = 0.5 * (hi - lo);
    for (size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(c + hl * g.nodes[i]);
    return hl * s;
  };
  Cx whole = quad(a, b);
  double m = 0.5 * (a + b);
  Cx halves = quad(a, m) + quad(m, b);
  Panel p;
  p.a = a;
  p.b = b;
  p.value = halves;
  p.err = std::abs(whole - halves);
  return p;
}

QuadResult adaptive_core(const CxFn& f, double a, double b, const QuadratureBudget& budget) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Panel> q;
  q.push(eval_panel(f, a, b));
  Cx total = q.top().value;
  double err = q.top().err;
  int panels = 1;
  while (panels < budget.max_panels) {
    if (err <= std::max(budget.abs_tol, budget.rel_tol * std::abs(total))) break;
    Panel worst = q.top();
    q.pop();
    double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {  // interval at roundoff limit
      q.push(worst);
      break;
    }
    Panel l = eval_panel(f, worst.a, m), r = eval_panel(f, m, worst.b);
    total += l.value + r.value - worst.value;
    err += l.err + r.err - worst.err;
    q.push(l);
    q.push(r);
    ++panels;
  }
  res.value = total;
  res.error = err;
  res.panels = panels;
  res.converged = err <= std::max(budget.abs_tol, budget.rel_tol * std::abs(total)) * 1.0001 ||
                  err <= budget.abs_tol;
  return res;
}

}  // namespace

QuadResult integrate_adaptive_nothrow(const CxFn& f, double a, double b,
                                      const QuadratureBudget& budget) {
  return adaptive_core(f, a, b, budget);
}

QuadResult integrate_adaptive(const CxFn& f, double a, double b, const QuadratureBudget& budget) {
  QuadResult r = adaptive_core(f, a, b, budget);
  if (!r.converged)
    throw BudgetExhausted("adaptive quadrature failed to certify tolerance (err=" +
                          std::to_string(r.error) + ", panels=" + std::to_string(r.panels) + ")");
  return r;
}

QuadResult integrate_log_endpoint(const CxFn& f, double b, double bound0,
                                  const QuadratureBudget& budget) {
  if (!(b > 0.0)) throw std::domain_error("integrate_log_endpoint requires b > 0");
  // truncate the head [0, y_min]: its contribution is at most bound0 * y_min
  double y_min = std::min(0.25 * budget.abs_tol / std::max(bound0, 1e-300), 0.5 * b);
  double v_lo = std::log(1.0 / b);
  double v_hi = std::log(1.0 / y_min);
  auto g = [&](double v) {
    double y = std::exp(-v);
    return f(y) * y;
  };
  QuadResult r = adaptive_core(g, v_lo, v_hi, budget);
  r.error += bound0 * y_min;
  if (!r.converged)
    throw BudgetExhausted("log-endpoint quadrature failed to certify tolerance");
  return r;
}

}  // namespace triops
