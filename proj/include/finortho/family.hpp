#ifndef FINORTHO_FAMILY_HPP
#define FINORTHO_FAMILY_HPP

/**
 * @file family.hpp
 * @brief One runtime interface over the six orthogonal families, for the
 *        verification, approximation and C API layers.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finortho/classical.hpp"
#include "finortho/incomplete.hpp"
#include "finortho/sturm.hpp"

namespace finortho {

enum class FamilyKind { M, N, I, J, Phi, Psi };

std::string kind_name(FamilyKind k);
/// Accepts "M", "N", "I", "J", "phi", "psi" (case-insensitive).
FamilyKind parse_kind(const std::string& name);

class Family {
 public:
  virtual ~Family() = default;

  virtual FamilyKind kind() const = 0;
  std::string name() const { return kind_name(kind()); }
  /// Parameters as exact rational strings (plus m, r, s, mode for the incomplete families).
  virtual nlohmann::json parameters() const = 0;

  virtual SparseSymPoly poly(long n) const = 0;
  /// The degree the construction law predicts.
  virtual long expected_degree(long n) const = 0;
  /// Largest admissible index, -1 if none; ParameterError when the parameters are invalid.
  virtual long max_index() const = 0;
  bool admissible(long n) const { return n >= 0 && n <= max_index(); }
  /// The strict upper bound on admissible indices.
  virtual Rational bound() const = 0;
  /// Named admissibility conditions (empty when the bound is the only one).
  virtual std::vector<Condition> conditions() const { return {}; }

  /// Closed-form norm square; AdmissibilityError beyond the finite range.
  virtual LogScaled norm_square(long n) const = 0;
  virtual WeightSpec weight() const = 0;
  virtual SLCoeffs equation() const = 0;
  /// False when the coefficients come from floating point (J).
  virtual bool exact_coefficients() const { return true; }
  /// True when every member has the parity of its index (I, J at q = 0, Phi, Psi).
  virtual bool parity_by_index() const { return false; }

  Support support() const { return support_of(weight()); }
  bool even_weight() const { return is_even_weight(weight()); }
  /// Whether the bracket term of the symmetric SL problem vanishes for (n, k); always true for classical families.
  virtual bool decay_ok(long, long) const { return true; }
  /// Scope note for lenient-mode instances ("" when all strict conditions hold).
  virtual std::string scope() const { return ""; }

  /**
   * @brief Index chains whose members are orthogonalized together by the oracle.
   *
   * Families with an even weight and members of definite parity split into
   * an even and an odd chain; the others have one chain.
   */
  std::vector<std::vector<long>> chains(long n_max) const;
};

/**
 * @brief Build a family from JSON parameters.
 *
 * Numbers may be JSON numbers or strings such as "-51", "1/2", "-0.5".
 * Keys: M {p, q}; N {p}; I {p}; J {p, q}; phi {a, b, m, r, s, mode};
 * psi {a, m, r, s, mode}. m defaults to 1, r and s to 0, mode to "strict".
 * Only the schema is checked here; the admissibility conditions are
 * enforced by max_index(), norm_square() and the verification layer.
 */
std::unique_ptr<Family> make_family(FamilyKind kind, const nlohmann::json& params);
std::unique_ptr<Family> make_family(const std::string& kind, const nlohmann::json& params);

/// Rational from a JSON number or string; ParameterError otherwise.
Rational rational_from_json(const nlohmann::json& v, const std::string& key);

}  // namespace finortho

#endif  // FINORTHO_FAMILY_HPP
