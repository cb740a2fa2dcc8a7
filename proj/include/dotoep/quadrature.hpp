#ifndef DOTOEP_QUADRATURE_HPP
#define DOTOEP_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <utility>

#include "dotoep/errors.hpp"

// Adaptive Gauss-Legendre quadrature and the oscillation-partitioned
// scheme used for Fourier coefficients of the power symbols.
//
// The driver splits [0,pi] at the extrema of cos(k*theta) (panels of
// length pi/k) and integrates each panel with a 16-point rule, bisecting
// recursively where the parent/child estimates disagree.  Only the panel
// touching theta = 0 needs deep refinement: the integrands behave like
// theta^(2-alpha) there, smooth elsewhere.

namespace dotoep::quad {

namespace detail {

// 16-point Gauss-Legendre rule on [-1,1], nodes in the positive half.
// Computed once by Newton iteration on the Legendre recurrence; exact to
// machine precision for polynomial degree <= 31.
struct GlRule {
  std::array<double, 8> node;
  std::array<double, 8> weight;
};

inline const GlRule& gl_rule() {
  static const GlRule rule = [] {
    constexpr int n = 16;
    GlRule r{};
    for (int i = 0; i < n / 2; ++i) {
      // i-th root of P_16 counted from the right
      long double x = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
      long double dp = 0.0L;
      for (int iter = 0; iter < 100; ++iter) {
        long double p0 = 1.0L, p1 = x;
        for (int j = 2; j <= n; ++j) {
          const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::abs(static_cast<double>(dx)) < 1e-17) break;
      }
      r.node[static_cast<size_t>(n / 2 - 1 - i)] = static_cast<double>(x);
      r.weight[static_cast<size_t>(n / 2 - 1 - i)] =
          static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    }
    return r;
  }();
  return rule;
}

template <class F>
double gl16(F&& f, double a, double b) {
  const GlRule& r = gl_rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * r.node[static_cast<size_t>(i)];
    sum += r.weight[static_cast<size_t>(i)] * (f(c - x) + f(c + x));
  }
  return h * sum;
}

struct Partial {
  double value = 0.0;
  double err = 0.0;
};

template <class F>
Partial adapt(F&& f, double a, double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl16(f, a, m);
  const double right = gl16(f, m, b);
  const double delta = std::abs(left + right - whole);
  if (delta <= tol || depth <= 0) {
    return {left + right, delta};
  }
  Partial lo = adapt(f, a, m, left, 0.5 * tol, depth - 1);
  Partial hi = adapt(f, m, b, right, 0.5 * tol, depth - 1);
  return {lo.value + hi.value, lo.err + hi.err};
}

}  // namespace detail

// Integrates f over [a,b] to absolute accuracy abs_tol.  Throws
// AccuracyError when the subdivision budget is exhausted first.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, int max_depth = 60) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be > 0");
  if (a == b) return 0.0;
  const double whole = detail::gl16(f, a, b);
  detail::Partial p = detail::adapt(f, a, b, whole, abs_tol, max_depth);
  if (p.err > abs_tol) {
    throw AccuracyError("integrate: tolerance not reached", p.err, abs_tol);
  }
  return p.value;
}

// Integrates f(theta)*cos(k*theta) over [0,pi] with panels aligned to the
// oscillation, one panel of length pi/k each (single panel for k = 0).
template <class F>
double integrate_cos(F&& f, int k, double abs_tol, int max_depth = 60) {
  if (k < 0) throw std::invalid_argument("integrate_cos: k must be >= 0");
  const double pi = M_PI;
  auto g = [&](double t) { return f(t) * std::cos(k * t); };
  if (k <= 1) {
    return integrate(g, 0.0, pi, abs_tol, max_depth);
  }
  const int panels = k;
  const double w = pi / panels;
  const double panel_tol = abs_tol / panels;
  double total = 0.0;
  double err = 0.0;
  for (int m = 0; m < panels; ++m) {
    const double a = m * w;
    const double b = (m + 1) * w;
    const double whole = detail::gl16(g, a, b);
    detail::Partial p = detail::adapt(g, a, b, whole, panel_tol, max_depth);
    total += p.value;
    err += p.err;
  }
  if (err > abs_tol) {
    throw AccuracyError("integrate_cos: tolerance not reached", err, abs_tol);
  }
  return total;
}

}  // namespace dotoep::quad

#endif  // DOTOEP_QUADRATURE_HPP
