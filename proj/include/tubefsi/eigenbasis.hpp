#pragma once

// Dirichlet Laplacian eigenpairs on the plate cross-section.
//
// The square (0,pi)^2 is handled analytically: lambda = m^2 + n^2 with
// L2-normalized eigenfunctions (2/pi) sin(m x1) sin(n x2). Any other
// cross-section enters through a table of eigenvalues only.

#include "tubefsi/core.hpp"

#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

namespace tubefsi {

struct RectangleMode {
  int m = 1;
  int n = 1;
  friend bool operator==(const RectangleMode&, const RectangleMode&) = default;
};

struct ExternalMode {
  std::string label;
  friend bool operator==(const ExternalMode&, const ExternalMode&) = default;
};

using ModeDescriptor = std::variant<RectangleMode, ExternalMode>;

class Eigenpair {
 public:
  /// Throws ValidationError unless index >= 1 and lambda > 0.
  Eigenpair(int index, double lambda, ModeDescriptor descriptor);

  /// Square mode (m,n); lambda is m^2 + n^2 exactly.
  static Eigenpair rectangle(int index, int m, int n);

  int index() const { return index_; }
  double lambda() const { return lambda_; }
  const ModeDescriptor& descriptor() const { return descriptor_; }
  bool is_rectangle() const { return std::holds_alternative<RectangleMode>(descriptor_); }

 private:
  int index_;
  double lambda_;
  ModeDescriptor descriptor_;
};

/// Eigenpairs ordered by nondecreasing lambda; repeated eigenvalues allowed.
class EigenSequence {
 public:
  EigenSequence() = default;
  /// Throws ValidationError if lambdas decrease anywhere.
  explicit EigenSequence(std::vector<Eigenpair> pairs);

  const std::vector<Eigenpair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const Eigenpair& operator[](std::size_t i) const { return pairs_[i]; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

 private:
  std::vector<Eigenpair> pairs_;
};

/// First `count` square modes sorted by (lambda, m, n).
EigenSequence rectangle_eigensequence(int count);

/// (2/pi) sin(m x1) sin(n x2). Throws UnsupportedError for external modes and
/// DomainError outside [0,pi]^2.
template <typename Scalar>
Scalar eigenfunction_eval(const Eigenpair& pair, Scalar x1, Scalar x2) {
  const auto* mode = std::get_if<RectangleMode>(&pair.descriptor());
  if (mode == nullptr) {
    throw UnsupportedError("eigenfunction evaluation needs a rectangle mode; got external mode '" +
                           std::get<ExternalMode>(pair.descriptor()).label + "'");
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (!(x1 >= Scalar(0) && x1 <= pi && x2 >= Scalar(0) && x2 <= pi)) {
    throw DomainError("eigenfunction evaluation point lies outside [0,pi]^2");
  }
  using std::sin;
  return Scalar(2) / pi * sin(Scalar(mode->m) * x1) * sin(Scalar(mode->n) * x2);
}

/// Parses one positive decimal per line; '#' starts a comment, blank lines
/// are skipped. Errors name the offending line.
EigenSequence load_external_eigenvalues(std::istream& source);
EigenSequence load_external_eigenvalues(const std::filesystem::path& path);

}  // namespace tubefsi
