#pragma once

// Coupled dispersion relation of one gas/plate mode.
//
// A mode exp(i omega t) exp(-alpha z) of the half-line Klein-Gordon problem
// attached to the plate oscillator exists iff
//
//   omega^2 = lambda - alpha^2   and   omega^2 = alpha lambda^2 / (alpha + nu).
//
// Eliminating omega^2 leaves the cubic
//
//   p(alpha) = alpha^3 + nu alpha^2 + (lambda^2 - lambda) alpha - lambda nu,
//
// with p(0) = -lambda nu < 0 and p(sqrt(lambda)) = lambda^2 sqrt(lambda) > 0,
// so (0, sqrt(lambda)) always brackets a root.

#include "tubefsi/core.hpp"
#include "tubefsi/eigenbasis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace tubefsi {

template <typename Scalar>
class CouplingParams {
 public:
  /// Throws ValidationError unless lambda > 0 and nu > 0.
  CouplingParams(Scalar lambda, Scalar nu) : lambda_(lambda), nu_(nu) {
    using std::isfinite;
    if (!(lambda > Scalar(0)) || !isfinite(lambda)) {
      throw ValidationError("coupling parameters: lambda must be > 0");
    }
    if (!(nu > Scalar(0)) || !isfinite(nu)) {
      throw ValidationError("coupling parameters: nu must be > 0 (gas-plate interaction intensity)");
    }
  }

  /// nu = 0: the plate and the gas do not interact. Only meaningful as an
  /// analytic limit in tests; the physical model requires nu > 0.
  static CouplingParams decoupled_limit(Scalar lambda) {
    CouplingParams p(lambda, Scalar(1));
    p.nu_ = Scalar(0);
    return p;
  }

  Scalar lambda() const { return lambda_; }
  Scalar nu() const { return nu_; }
  bool decoupled() const { return nu_ == Scalar(0); }

  friend bool operator==(const CouplingParams&, const CouplingParams&) = default;

 private:
  Scalar lambda_;
  Scalar nu_;
};

template <typename Scalar>
struct DispersionRoot {
  CouplingParams<Scalar> params;
  Scalar alpha;   ///< spatial decay rate of the gas profile
  Scalar omega2;  ///< lambda - alpha^2
  Scalar omega;   ///< +sqrt(omega2)

  Scalar period() const { return Scalar(2) * std::numbers::pi_v<Scalar> / omega; }
};

using CouplingParamsd = CouplingParams<double>;
using DispersionRootd = DispersionRoot<double>;

template <typename Scalar>
Scalar dispersion_cubic(const CouplingParams<Scalar>& p, Scalar alpha) {
  const Scalar lam = p.lambda(), nu = p.nu();
  return ((alpha + nu) * alpha + (lam * lam - lam)) * alpha - lam * nu;
}

/// Relative residuals of the two dispersion relations at a candidate root.
template <typename Scalar>
struct DispersionResiduals {
  Scalar frequency;  ///< |omega^2 - (lambda - alpha^2)| / lambda
  Scalar coupling;   ///< |omega^2 (alpha + nu) - alpha lambda^2| / (alpha lambda^2)
};

template <typename Scalar>
DispersionResiduals<Scalar> dispersion_residuals(const DispersionRoot<Scalar>& r) {
  using std::abs;
  const Scalar lam = r.params.lambda(), nu = r.params.nu();
  const Scalar scale = r.alpha * lam * lam;
  return {abs(r.omega2 - (lam - r.alpha * r.alpha)) / lam,
          scale > Scalar(0) ? abs(r.omega2 * (r.alpha + nu) - scale) / scale : Scalar(0)};
}

/// Bisection on (0, sqrt(lambda)) down to a half-width of 1e-14 (relative to
/// the bracket), then one Newton step. Both residuals must end up <= tol.
template <typename Scalar>
DispersionRoot<Scalar> solve_dispersion(const CouplingParams<Scalar>& params,
                                        Scalar tol = Scalar(1e-12)) {
  using std::abs;
  using std::sqrt;
  if (!(tol > Scalar(0) && tol <= Scalar(1e-6))) {
    throw ValidationError("dispersion tolerance must lie in (0, 1e-6]");
  }
  const Scalar lam = params.lambda();
  if (params.decoupled()) return {params, Scalar(0), lam, sqrt(lam)};

  Scalar lo = 0, hi = sqrt(lam);
  const Scalar width = Scalar(1e-14) * hi;
  constexpr int kMaxIterations = 400;
  int it = 0;
  for (; it < kMaxIterations && (hi - lo) > Scalar(2) * width; ++it) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (mid <= lo || mid >= hi) break;
    if (dispersion_cubic(params, mid) > Scalar(0)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (it == kMaxIterations) {
    throw SolverError("dispersion bisection did not converge; bracket [" + std::to_string(double(lo)) +
                      ", " + std::to_string(double(hi)) + "]");
  }

  Scalar alpha = lo + (hi - lo) / Scalar(2);
  const Scalar nu = params.nu();
  const Scalar slope = (Scalar(3) * alpha + Scalar(2) * nu) * alpha + (lam * lam - lam);
  if (slope != Scalar(0)) {
    const Scalar polished = alpha - dispersion_cubic(params, alpha) / slope;
    if (polished > lo - width && polished < hi + width) alpha = polished;
  }

  const Scalar omega2 = lam - alpha * alpha;
  if (!(omega2 > Scalar(0))) {
    throw SolverError("dispersion root violates alpha^2 < lambda (internal consistency)");
  }
  DispersionRoot<Scalar> root{params, alpha, omega2, sqrt(omega2)};
  const auto res = dispersion_residuals(root);
  if (!(res.frequency <= tol && res.coupling <= tol)) {
    throw SolverError("dispersion root residuals exceed tolerance; bracket [" +
                      std::to_string(double(lo)) + ", " + std::to_string(double(hi)) + "]");
  }
  return root;
}

/// Number of sign changes of the dispersion cubic over `subintervals` equal
/// pieces of [0, sqrt(lambda)]. Exactly one certifies uniqueness of the root.
template <typename Scalar>
int count_root_sign_changes(const CouplingParams<Scalar>& params, int subintervals = 1000) {
  using std::sqrt;
  const Scalar end = sqrt(params.lambda());
  int changes = 0;
  Scalar prev = dispersion_cubic(params, Scalar(0));
  for (int i = 1; i <= subintervals; ++i) {
    const Scalar next = dispersion_cubic(params, end * Scalar(i) / Scalar(subintervals));
    if ((prev < Scalar(0) && next >= Scalar(0)) || (prev > Scalar(0) && next <= Scalar(0))) ++changes;
    prev = next;
  }
  return changes;
}

/// One root per eigenvalue, order preserved. Errors name the mode index.
std::vector<DispersionRootd> dispersion_sweep(const EigenSequence& seq, double nu, double tol = 1e-12);

struct AsymptoticsRow {
  double lambda;
  double omega2_minus_lambda;
  double alpha_lambda_minus_nu;
};

struct AsymptoticsReport {
  std::vector<AsymptoticsRow> rows;
  /// |omega^2 - lambda| nonincreasing over the last half of the rows.
  bool omega_gap_decreasing = true;
  /// |alpha lambda - nu| nonincreasing over the last half of the rows.
  bool alpha_gap_decreasing = true;
};

AsymptoticsReport asymptotics_report(const std::vector<DispersionRootd>& roots);

/// True if |values| never increases from `first` onward; equal lambdas must
/// give equal entries.
bool magnitudes_nonincreasing(const std::vector<AsymptoticsRow>& rows, std::size_t first,
                              double AsymptoticsRow::*column);

}  // namespace tubefsi
