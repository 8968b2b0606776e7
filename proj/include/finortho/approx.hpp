#ifndef FINORTHO_APPROX_HPP
#define FINORTHO_APPROX_HPP

/**
 * @file approx.hpp
 * @brief Weighted least-squares projection onto a finite family.
 */

#include <functional>
#include <string>
#include <vector>

#include "finortho/family.hpp"
#include "finortho/quadrature.hpp"

namespace finortho {

/// A target function in sign/log form, so huge or tiny values are fine.
using TargetFn = std::function<LogScaled(double)>;

struct Target {
  std::string spec;
  TargetFn f;
  /// Tabulated targets are interpolated and therefore less accurate.
  bool lower_accuracy = false;
};

/**
 * @brief Built-in targets for the CLI.
 *
 * "monomial:J" is x^J, "gauss:J" is x^J exp(-x^2), "member:N" is member N of
 * `fam`, "table:PATH" reads "x,y" rows from a CSV file and interpolates
 * linearly (0 outside the table). ParameterError for anything else.
 */
Target parse_target(const std::string& spec, const Family& fam);

/// Quadrature settings for a target: interpolated tables are only piecewise
/// smooth, so they get a looser tolerance (1e-6) than analytic targets.
QuadOptions quad_options_for(const Target& t);

struct Projection {
  std::vector<double> coefficients;
  /// ||f||_W^2 by quadrature.
  LogScaled f_norm_square;
  /// ||f - sum c_n P_n||_W via ||f||^2 - sum c_n^2 ||P_n||^2.
  double error = 0.0;
  /// error / ||f||_W.
  double relative_error = 0.0;
  /// The Parseval difference went negative and was clamped to 0.
  bool clamped = false;
  bool lower_accuracy = false;

  nlohmann::json to_json() const;
};

/**
 * @brief c_n = <f, P_n>_W / ||P_n||^2 for n = 0..n_max.
 *
 * Inner products by quadrature, norm squares by the closed forms. The
 * Parseval error uses quadrature norm squares on the same nodes as the inner
 * products, which keeps it non-negative up to rounding.
 * AdmissibilityError beyond the finite range; DivergenceError if ||f||_W is
 * not finite.
 */
Projection project(const TargetFn& f, const Family& fam, long n_max, const QuadOptions& opt = {});

}  // namespace finortho

#endif  // FINORTHO_APPROX_HPP
