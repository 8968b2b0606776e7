#ifndef FINORTHO_VERIFY_HPP
#define FINORTHO_VERIFY_HPP

/**
 * @file verify.hpp
 * @brief Gram matrices, ODE suites and the Gram-Schmidt moment oracle.
 */

#include <string>
#include <vector>

#include "finortho/family.hpp"
#include "finortho/quadrature.hpp"

namespace finortho {

struct Tolerances {
  double offdiag = 1e-8;
  double diag = 1e-8;
  double oracle = 1e-9;
  /// Relative residual bound for families with floating-point coefficients.
  double ode_float = 1e-9;
  QuadOptions quad;
};

struct GramReport {
  std::string family;
  nlohmann::json parameters;
  long n_max = -1;
  /// G[n][k] by quadrature, saturated to the double range.
  std::vector<std::vector<double>> gram;
  /// |G[n][k]| / sqrt(G[n][n] G[k][k]).
  std::vector<std::vector<double>> normalized;
  std::vector<LogScaled> quad_diagonal;
  std::vector<LogScaled> formula_norms;
  double max_offdiag_normalized = 0.0;
  double max_diag_relerr = 0.0;
  bool ode_residual_ok = false;
  bool pass = false;
  Tolerances tol;

  nlohmann::json to_json() const;
};

/**
 * @brief Quadrature Gram matrix over indices 0..n_max.
 *
 * Cross-parity entries of families with an even weight are exactly 0 and are
 * not integrated. AdmissibilityError if n_max exceeds the family's range.
 */
GramReport gram_matrix(const Family& fam, long n_max, const Tolerances& tol = {});

/// Per-index ODE residual check; exact families must give the zero polynomial.
nlohmann::json ode_check(const Family& fam, long n_max, double float_tol = 1e-9);
bool ode_residuals_ok(const Family& fam, long n_max, double float_tol = 1e-9);

/**
 * @brief Monic orthogonal polynomials on a monomial lattice.
 *
 * Modified Gram-Schmidt over {x^e : e in the first `count` lattice entries}
 * with closed-form moments, in 100-digit MPFR arithmetic. DivergenceError if
 * a needed moment is infinite; UnsupportedShapeError for weights without
 * closed-form moments.
 */
std::vector<SparseSymPoly> gs_oracle(const WeightSpec& w, const std::vector<int>& lattice, std::size_t count);

/// Weighted L2 distance from x^exponent to span{x^e : e in span}, from closed-form moments.
LogScaled monomial_distance(const WeightSpec& w, int exponent, const std::vector<int>& span);

/**
 * @brief Compare monic family members with the oracle along each index chain.
 *
 * `per_chain` limits the members per chain (0 = all up to n_max).
 */
nlohmann::json oracle_check(const Family& fam, long n_max, double tol = 1e-9, std::size_t per_chain = 0);

/// Admissibility, degree law, parity, ODE, Gram, norm and oracle checks in one report.
nlohmann::json full_report(const Family& fam, long n_max, const Tolerances& tol = {});

}  // namespace finortho

#endif  // FINORTHO_VERIFY_HPP
