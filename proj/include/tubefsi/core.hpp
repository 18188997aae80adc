#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace tubefsi {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Vectord = Vector<double>;

/// Bad input: a constructor or operation precondition was not met.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Query outside the region where a quantity is defined (R >= L, z < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not defined for this kind of input (e.g. evaluating an
/// eigenfunction known only through its eigenvalue).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tubefsi
