#ifndef FINORTHO_INCOMPLETE_HPP
#define FINORTHO_INCOMPLETE_HPP

/**
 * @file incomplete.hpp
 * @brief The two incomplete symmetric finite families.
 *
 * Phi_n^{(r,s)}(x; a, b, m) = (x^{2s} + (x^{2r+1} - x^{2s}) sigma_n) M_{[n/2]}^{(u,v)}(x^{2m}),
 * orthogonal for |x|^{2a} (1 + x^{2m})^b on the real line, and
 *
 * Psi_n^{(r,s)}(x; a, m) = (x^{2s} + (x^{2r+1} - x^{2s}) sigma_n) N_{[n/2]}^{(p)}(x^{2m}),
 * orthogonal for |x|^{2a} exp(-x^{-2m}).
 *
 * Even members live on the exponent lattice {2s + 2mk}, odd members on
 * {2r + 1 + 2mk}, so for m >= 2 whole degrees are missing from the family.
 *
 * There is deliberately no incomplete counterpart of the I/J families: their
 * orthogonality interval is already the whole line, and t = x^{2m} does not
 * map it back onto itself, so the symmetric construction does not apply.
 */

#include <string>
#include <utility>
#include <vector>

#include "finortho/numkernel.hpp"
#include "finortho/polycore.hpp"
#include "finortho/sturm.hpp"

namespace finortho {

/// Strict requires 2a to be an even integer; lenient drops that one test.
enum class ParamMode { strict, lenient };

/// One named admissibility condition and whether it holds.
struct Condition {
  std::string name;
  bool holds = false;
};

struct PhiParams {
  Rational a, b;
  int m = 1;
  int r = 0;
  int s = 0;
  ParamMode mode = ParamMode::strict;

  std::vector<Condition> conditions() const;
  /// Throws ParameterError naming the first failed condition.
  void validate() const;
};

struct PsiParams {
  Rational a;
  int m = 1;
  int r = 0;
  int s = 0;
  ParamMode mode = ParamMode::strict;

  std::vector<Condition> conditions() const;
  void validate() const;
};

/// Inner M parameters (u, v) of Phi_n.
std::pair<Rational, Rational> phi_uv(long n, const PhiParams& prm);
SparseSymPoly phi_poly(long n, const PhiParams& prm);
/// m n + 2s + (2r - 2s - m + 1) sigma_n.
long phi_degree(long n, const PhiParams& prm);
/// The bound C: indices must be strictly below it.
Rational phi_bound(const PhiParams& prm);
/// Largest integer strictly below C; -1 if there is none. Validates prm.
long phi_max_index(const PhiParams& prm);
bool phi_admissible(const PhiParams& prm, long n, long k);
/// Closed-form norm square; AdmissibilityError outside the finite range.
LogScaled phi_norm(long n, const PhiParams& prm);
SLCoeffs phi_sl_equation(const PhiParams& prm);
WeightSpec phi_weight(const PhiParams& prm);

/// Inner N parameter of Psi_n.
Rational psi_p_inner(long n, const PsiParams& prm);
SparseSymPoly psi_poly(long n, const PsiParams& prm);
long psi_degree(long n, const PsiParams& prm);
Rational psi_bound(const PsiParams& prm);
long psi_max_index(const PsiParams& prm);
bool psi_admissible(const PsiParams& prm, long n, long k);
LogScaled psi_norm(long n, const PsiParams& prm);
SLCoeffs psi_sl_equation(const PsiParams& prm);
WeightSpec psi_weight(const PsiParams& prm);

}  // namespace finortho

#endif  // FINORTHO_INCOMPLETE_HPP
