#ifndef FINORTHO_QUADRATURE_HPP
#define FINORTHO_QUADRATURE_HPP

/**
 * @file quadrature.hpp
 * @brief Double-exponential quadrature and closed-form moment oracles.
 *
 * Half-line integrals use x = exp(pi/2 sinh t); finite intervals use
 * tanh-sinh. The step halves from level to level (h = 2^-level) and nodes of
 * earlier levels are reused, so a result depends only on (tol, level range).
 */

#include <functional>
#include <vector>

#include "finortho/numkernel.hpp"
#include "finortho/sturm.hpp"

namespace finortho {

/// FINORTHO_MAX_QUAD_LEVEL if set to an integer in [4, 20], else 12.
int default_max_quad_level();

struct QuadResult;

struct QuadOptions {
  double tol = 1e-12;
  int min_level = 5;
  int max_level = default_max_quad_level();
  // Optional magnitude for slot i of a batch, given the current level's
  // estimates. Convergence is then judged against max(l1, reference), which
  // helps slots that cancel to almost nothing.
  std::function<LogScaled(std::size_t, const std::vector<QuadResult>&)> reference;
};

/**
 * @brief One integral estimate.
 *
 * `value`, `error` and `l1` (the integral of |f|) are all multiplied by
 * exp(log_scale); the plain-double integrators leave log_scale at 0.
 */
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  double log_scale = 0.0;
  int level = 0;

  LogScaled scaled_value() const;
  /// error / |value|, or error / l1 when the value is 0.
  double relative_error() const;
};

using RealFn = std::function<double(double)>;

QuadResult integrate_halfline(const RealFn& f, const QuadOptions& opt = {});
/// 2 * integral over (0, inf) of an even f.
QuadResult integrate_line_even(const RealFn& f, const QuadOptions& opt = {});
/// Integral over the line of a general f, as the half-line integral of f(x) + f(-x).
QuadResult integrate_line(const RealFn& f, const QuadOptions& opt = {});

/**
 * @brief Integrand on (lo, hi) that also receives the distances x - lo and
 * hi - x, which stay accurate where x itself rounds to an endpoint.
 */
using IntervalFn = std::function<double(double x, double from_lo, double to_hi)>;
QuadResult integrate_interval(const IntervalFn& f, double lo, double hi, const QuadOptions& opt = {});

/**
 * @brief Several half-line integrals sharing one node set.
 *
 * `eval(x, out)` fills out[i] with integrand i at x > 0 in sign/log form. A
 * level is accepted once every integral has converged relative to its own L1
 * norm. Each result carries its own log_scale, so values far outside the
 * double range are fine.
 */
using BatchFn = std::function<void(double x, std::vector<LogScaled>& out)>;
std::vector<QuadResult> integrate_halfline_batch(std::size_t count, const BatchFn& eval,
                                                 const QuadOptions& opt = {});

/// Integral of cos^expnt(theta) exp(q theta) over (-pi/2, pi/2); DivergenceError for expnt <= -1.
double theta_integral(double expnt, double q, double tol = 1e-12);

/// pi 2^-r Gamma(r+1) / |Gamma(1 + (r + i s)/2)|^2.
double cauchy_cos_moment(long r, double s);

/// Integral over the line of |x|^{2a} (1+x^{2m})^b x^j; 0 for odd j, DivergenceError if infinite.
LogScaled moment_jacobi_type(long j, const Rational& a, const Rational& b, int m);
/// Integral over the line of |x|^{2a} exp(-x^{-2m}) x^j; 0 for odd j, DivergenceError if infinite.
LogScaled moment_bessel_type(long j, const Rational& a, int m);

/**
 * @brief The j-th moment of any weight with a Beta/Gamma closed form.
 *
 * Covers everything except LineJ with q != 0 (UnsupportedShapeError).
 */
LogScaled weight_moment(const WeightSpec& w, long j);

}  // namespace finortho

#endif  // FINORTHO_QUADRATURE_HPP
