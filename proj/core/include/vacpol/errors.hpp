#pragma once

#include <stdexcept>
#include <string>

namespace vacpol
{
//! Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! Operation is not defined for the requested nuclear model kind.
class UnsupportedOperation : public Error
{
  public:
    using Error::Error;
};

//! Evaluation at a point where the quantity diverges.
class SingularityError : public Error
{
  public:
    using Error::Error;
};

//! Coupling at or above the critical value Z alpha = 1.
class SupercriticalError : public DomainError
{
  public:
    using DomainError::DomainError;
};

//! A quadrature failed to reach its tolerance.
class QuadratureError : public Error
{
  public:
    QuadratureError(std::string const& what, double estimate, double abs_error)
        : Error(what + " (estimate " + std::to_string(estimate)
                + ", achieved error " + std::to_string(abs_error) + ")")
        , estimate_(estimate)
        , abs_error_(abs_error)
    {
    }

    double estimate() const noexcept { return estimate_; }
    double abs_error() const noexcept { return abs_error_; }

  private:
    double estimate_;
    double abs_error_;
};

//! An iterative refinement stopped before meeting its residual target.
class ConvergenceError : public Error
{
  public:
    ConvergenceError(std::string const& what, double residual)
        : Error(what + " (achieved residual " + std::to_string(residual) + ")")
        , residual_(residual)
    {
    }

    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

//! Two algebraically equal routes disagree beyond round-off.
class InvariantViolation : public Error
{
  public:
    using Error::Error;
};

//! An eigenvalue sits on the spectral cut at zero energy.
class GapCrossingError : public Error
{
  public:
    using Error::Error;
};

//! A tabulated function does not cover the support it is integrated over.
class CoverageError : public Error
{
  public:
    using Error::Error;
};
}  // namespace vacpol
