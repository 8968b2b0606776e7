#ifndef FINORTHO_STURM_HPP
#define FINORTHO_STURM_HPP

/**
 * @file sturm.hpp
 * @brief Symmetric generalized Sturm-Liouville equations
 *        A y'' + B y' + (lambda_n C + D + sigma_n E) y = 0,
 *        their exact residuals and the weights they induce.
 */

#include <functional>
#include <string>
#include <variant>

#include "finortho/numkernel.hpp"
#include "finortho/polycore.hpp"

namespace finortho {

struct PhiParams;
struct PsiParams;

/// sigma_n = (1 - (-1)^n) / 2.
inline int sigma(long n) { return n % 2 == 0 ? 0 : 1; }

/**
 * @brief Coefficients of a generalized symmetric Sturm-Liouville equation.
 *
 * D and E are constants; the eigenvalue is a rule of the index n.
 */
struct SLCoeffs {
  SparseSymPoly A, B, C;
  Rational D, E;
  std::function<Rational(long)> lambda;

  /// A, C even; B odd; C a single positive monomial (the symmetric form's hypotheses).
  bool symmetric_form() const;
};

/// A y'' + B y' + (lambda_n C + D + sigma_n E) y, exactly.
SparseSymPoly residual(const SLCoeffs& eq, const SparseSymPoly& y, long n);

/**
 * @brief Size of the residual relative to its largest contributing term.
 *
 * For polynomials whose coefficients came from floating point: the maximum
 * |residual coefficient| over the maximum, per exponent, of the summed
 * magnitudes of the three contributing products.
 */
double relative_residual(const SLCoeffs& eq, const SparseSymPoly& y, long n);

/// |x|^{2a} (1 + x^{2m})^b on the real line.
struct JacobiType {
  Rational a, b;
  int m = 1;
};
/// |x|^{2a} exp(-x^{-2m}) on the real line.
struct BesselType {
  Rational a;
  int m = 1;
};
/// x^q (1+x)^{-(p+q)} on [0, inf).
struct HalfLineM {
  Rational p, q;
};
/// x^p exp(-1/x) on [0, inf).
struct HalfLineN {
  Rational p;
};
/// (1+x^2)^{-(p-1/2)} on the real line.
struct LineI {
  Rational p;
};
/// (1+x^2)^{-p} exp(q arctan x) on the real line.
struct LineJ {
  Rational p, q;
};

using WeightSpec = std::variant<JacobiType, BesselType, HalfLineM, HalfLineN, LineI, LineJ>;

enum class Support { half_line, line };

Support support_of(const WeightSpec& w);
/// True when W(-x) = W(x) on the real line.
bool is_even_weight(const WeightSpec& w);
/// log W(x); -inf where W vanishes.
double log_weight(const WeightSpec& w, double x);
nlohmann::json to_json(const WeightSpec& w);
bool operator==(const JacobiType& l, const JacobiType& r);
bool operator==(const BesselType& l, const BesselType& r);

/**
 * @brief W = (C/A) exp(int B/A dx) for the two supported coefficient shapes,
 * with the integration constant fixed to 1.
 *
 * A = x^2 (1 + x^{2m}) gives JacobiType, A = x^{2m+2} gives BesselType.
 * Anything else throws UnsupportedShapeError.
 */
WeightSpec weight_of(const SLCoeffs& eq);

/// Whether the bracket [A K (y_n' y_k - y_k' y_n)] vanishes at +-inf for Phi_n, Phi_k.
bool boundary_decay_ok(const PhiParams& prm, long n, long k);
/// Whether the bracket [A K (y_n' y_k - y_k' y_n)] vanishes at +-inf for Psi_n, Psi_k.
bool boundary_decay_ok(const PsiParams& prm, long n, long k);

}  // namespace finortho

#endif  // FINORTHO_STURM_HPP
