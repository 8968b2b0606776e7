#ifndef FINORTHO_CLASSICAL_HPP
#define FINORTHO_CLASSICAL_HPP

/**
 * @file classical.hpp
 * @brief The four finite classical families M, N, I, J and the monic
 *        generalized Bessel polynomials.
 *
 * Constructors accept any parameters; only the norm functions enforce the
 * finite orthogonality range.
 */

#include <complex>

#include "finortho/numkernel.hpp"
#include "finortho/polycore.hpp"
#include "finortho/sturm.hpp"

namespace finortho {

/// Weight x^q (1+x)^{-(p+q)} on [0, inf); orthogonal up to N iff p > 2N+1, q > -1.
struct ParamsM {
  Rational p, q;
  /// Largest admissible index, -1 if none. ParameterError when q <= -1.
  long max_index() const;
  bool admissible(long n) const;
};

/// Weight x^p exp(-1/x) on [0, inf); orthogonal up to N iff p < -2N-1.
struct ParamsN {
  Rational p;
  long max_index() const;
  bool admissible(long n) const;
};

/// Weight (1+x^2)^{-(p-1/2)} on the line; orthogonal up to N iff N < p-1.
struct ParamsI {
  Rational p;
  long max_index() const;
  bool admissible(long n) const;
};

/// Weight (1+x^2)^{-p} exp(q arctan x) on the line; orthogonal up to N iff N < p-1/2.
struct ParamsJ {
  Rational p, q;
  long max_index() const;
  bool admissible(long n) const;
};

SparseSymPoly m_poly(long n, const ParamsM& prm);
LogScaled m_norm(long n, const ParamsM& prm);
/// (x^2+x) y'' + ((2-p)x + q + 1) y' - n(n+1-p) y = 0.
SLCoeffs m_equation(const ParamsM& prm);
WeightSpec m_weight(const ParamsM& prm);

SparseSymPoly n_poly(long n, const ParamsN& prm);
/// n! Gamma(-p-n) / (-(p+2n+1)); the factorial is Gamma(z+1) for non-integer p.
LogScaled n_norm(long n, const ParamsN& prm);
/// x^2 y'' + ((2+p)x + 1) y' - n(n+1+p) y = 0.
SLCoeffs n_equation(const ParamsN& prm);
WeightSpec n_weight(const ParamsN& prm);

/// Monic generalized Bessel polynomial; ParameterError for alpha in {-2, -3, ...}.
SparseSymPoly bessel_monic(long n, const Rational& alpha);

SparseSymPoly i_poly(long n, const ParamsI& prm);
LogScaled i_norm(long n, const ParamsI& prm);
/// (1+x^2) y'' + (3-2p) x y' - n(n+2-2p) y = 0.
SLCoeffs i_equation(const ParamsI& prm);
WeightSpec i_weight(const ParamsI& prm);

/// Sum_{k=0}^{-a} (a)_k (b)_k / (c)_k z^k / k! for a nonpositive integer a.
std::complex<double> hyp2f1_terminating(long neg_int, std::complex<double> b, std::complex<double> c,
                                        std::complex<double> z);

/// Relative bound on the imaginary residue accepted by j_poly.
inline constexpr double kRealnessTolerance = 1e-10;

/**
 * @brief J_n^{(p,q)} through complex arithmetic.
 *
 * Coefficients are rounded to double and stored as exact rationals of those
 * doubles. RealnessError if an imaginary part exceeds `realness_tol` times the
 * largest coefficient magnitude; ParameterError if 2p-2n is a pole of the
 * hypergeometric denominator.
 */
SparseSymPoly j_poly(long n, const ParamsJ& prm, double realness_tol = kRealnessTolerance);
/**
 * @brief n! Gamma(2p-n)/Gamma(2p-2n) times the theta integral.
 *
 * When 2p is an integer the theta integral is also evaluated by Cauchy's
 * formula, and a disagreement beyond 1e-9 raises ConvergenceError.
 */
double j_norm(long n, const ParamsJ& prm);
/// (1+x^2) y'' + (2(1-p)x + q) y' - n(n+1-2p) y = 0.
SLCoeffs j_equation(const ParamsJ& prm);
WeightSpec j_weight(const ParamsJ& prm);

}  // namespace finortho

#endif  // FINORTHO_CLASSICAL_HPP
