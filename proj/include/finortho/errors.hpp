#ifndef FINORTHO_ERRORS_HPP
#define FINORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finortho {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter record violates a structural condition (e.g. b >= 0 for Phi).
class ParameterError : public Error {
  using Error::Error;
};

/// An index lies outside the finite orthogonality range of a family.
class AdmissibilityError : public Error {
  using Error::Error;
};

/// A gamma/factorial argument hit a pole.
class PoleError : public Error {
  using Error::Error;
};

/// A moment or integral does not exist (the weight is not integrable).
class DivergenceError : public Error {
  using Error::Error;
};

/// Quadrature did not reach the requested tolerance at its maximum level.
class ConvergenceError : public Error {
  using Error::Error;
};

/// A complex-arithmetic construction left an imaginary residue above tolerance.
class RealnessError : public Error {
  using Error::Error;
};

/// Differential-equation coefficients match none of the supported shapes.
class UnsupportedShapeError : public Error {
  using Error::Error;
};

}  // namespace finortho

#endif  // FINORTHO_ERRORS_HPP
