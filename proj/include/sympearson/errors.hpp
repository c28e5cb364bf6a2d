#pragma once

#include <stdexcept>
#include <string>

namespace sympearson {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Quantile requested from a law whose CDF has no continuous inverse.
class NonInvertible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Numerical expectation cannot reach the requested tolerance within budget.
class BudgetTooSmall : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Autoregressive coefficients place a characteristic root on or outside the unit circle.
class NotStationary : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Lag design matrix is numerically rank deficient.
class SingularDesign : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Empirical distribution function evaluated on an empty sample.
class EmptySample : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Alternative law failed the symmetry-about-zero self test.
class AsymmetricH : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sympearson
