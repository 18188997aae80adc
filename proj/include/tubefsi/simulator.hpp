#pragma once

// Explicit time integration of one gas/plate mode on [0, L]:
//
//   phi_tt = phi_zz - lambda phi,                 0 < z < L
//   d_z phi(0) = u_dot  (elastic) or 0 (rigid),   d_z phi(L) = 0
//   u_tt = -lambda^2 u - gamma u_dot + nu phi_t(0)
//
// Kick-drift-kick leapfrog with the 3-point Laplacian. The bottom flux enters
// through the ghost node phi_{-1} = phi_1 - 2 h u_dot. The closing half kick
// couples phi_t(0) and u_dot implicitly (a 2x2 solve), which is the staggered
// scheme with both coupling terms and the damping taken time-centred.

#include "tubefsi/energy.hpp"
#include "tubefsi/state.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <iosfwd>
#include <string>
#include <vector>

namespace tubefsi {

inline constexpr double kInstabilityThreshold = 1e12;

namespace detail {

// Half kick of the gas velocities with the bottom flux left out.
template <typename Scalar>
void kick_gas(ModeState<Scalar>& s, Scalar h, Scalar half_dt) {
  const Eigen::Index n = s.phi.size() - 2;
  const Scalar inv_h2 = Scalar(1) / (h * h);
  const Scalar lam = s.params.lambda();
  s.phi_t.segment(1, n) +=
      half_dt * ((s.phi.segment(2, n) + s.phi.segment(0, n) - Scalar(2) * s.phi.segment(1, n)) * inv_h2 -
                 lam * s.phi.segment(1, n));
  s.phi_t[0] += half_dt * (Scalar(2) * (s.phi[1] - s.phi[0]) * inv_h2 - lam * s.phi[0]);
  const Eigen::Index last = n + 1;
  s.phi_t[last] += half_dt * (Scalar(2) * (s.phi[last - 1] - s.phi[last]) * inv_h2 - lam * s.phi[last]);
}

}  // namespace detail

/// Advances `s` by one dt in place. Throws InstabilityError when the solution
/// blows up (CFL violation).
template <typename Scalar>
void advance(ModeState<Scalar>& s, const GridSpec<Scalar>& grid, BottomCondition bottom) {
  const Scalar dt = grid.dt(), h = grid.h(), half_dt = dt / Scalar(2);
  const Scalar lam = s.params.lambda(), nu = s.params.nu();
  const bool elastic = bottom == BottomCondition::Elastic;

  // Opening half kick, explicit in the integer-time state.
  const Scalar plate_force = -lam * lam * s.u - s.gamma * s.u_dot + nu * s.phi_t[0];
  const Scalar bottom_flux = elastic ? Scalar(2) * s.u_dot / h : Scalar(0);
  detail::kick_gas(s, h, half_dt);
  s.phi_t[0] -= half_dt * bottom_flux;
  if (elastic) s.u_dot += half_dt * plate_force;

  // Drift.
  s.phi += dt * s.phi_t;
  if (elastic) s.u += dt * s.u_dot;

  // Closing half kick; the bottom node and the plate are solved together:
  //   V + (dt/h) W                        = V* 
  //   -(dt/2) nu V + (1 + gamma dt/2) W   = W* - (dt/2) lambda^2 u
  detail::kick_gas(s, h, half_dt);
  if (elastic) {
    const Scalar a12 = dt / h;
    const Scalar a21 = -half_dt * nu;
    const Scalar a22 = Scalar(1) + half_dt * s.gamma;
    const Scalar r1 = s.phi_t[0];
    const Scalar r2 = s.u_dot - half_dt * lam * lam * s.u;
    const Scalar det = a22 - a12 * a21;
    s.phi_t[0] = (r1 * a22 - a12 * r2) / det;
    s.u_dot = (r2 - a21 * r1) / det;
  }
  s.t += dt;

  using std::abs;
  const Scalar limit(kInstabilityThreshold);
  if (!s.phi.allFinite() || s.phi.cwiseAbs().maxCoeff() > limit || !(abs(s.u) <= limit)) {
    throw InstabilityError("mode solution blew up at t = " + std::to_string(double(s.t)) +
                               " (check dt <= 0.9 h and dt <= 0.5/lambda)",
                           double(s.t));
  }
}

template <typename Scalar>
ModeState<Scalar> step(ModeState<Scalar> s, const GridSpec<Scalar>& grid, BottomCondition bottom) {
  s.require_matches(grid);
  advance(s, grid, bottom);
  return s;
}

/// Steps `s` in place `steps` times; `observe(s, step_index)` is called after
/// steps that are multiples of `stride` and after the last one.
template <typename Scalar, typename Observer>
void integrate(ModeState<Scalar>& s, const GridSpec<Scalar>& grid, BottomCondition bottom,
               std::int64_t steps, std::int64_t stride, Observer&& observe) {
  s.require_matches(grid);
  grid.require_stable_for(s.params.lambda());
  if (stride < 1) throw ValidationError("probe stride must be >= 1");
  const Scalar t0 = s.t;
  for (std::int64_t n = 1; n <= steps; ++n) {
    advance(s, grid, bottom);
    s.t = t0 + Scalar(n) * grid.dt();
    if (n % stride == 0 || n == steps) observe(std::as_const(s), n);
  }
}

/// L - support_radius: the wall at z = L cannot influence [0, support_radius]
/// before this time (unit wave speed).
template <typename Scalar>
Scalar causal_horizon(const GridSpec<Scalar>& grid, Scalar support_radius) {
  if (support_radius < Scalar(0) || support_radius > grid.L()) {
    throw ValidationError("causal horizon: support radius must lie in [0, L]");
  }
  return grid.L() - support_radius;
}

/// Where exp(-alpha z) falls below `cutoff`.
inline double exponential_support(double alpha, double cutoff = 1e-12) { return std::log(1.0 / cutoff) / alpha; }

/// Where a Gaussian of the given center/width falls below `cutoff` of its peak.
inline double gaussian_support(double center, double width, double cutoff = 1e-12) {
  return center + width * std::sqrt(2.0 * std::log(1.0 / cutoff));
}

enum class ProbeKind { Total, Gas, Plate, Local, U, UDot, Phi0, PhiT0 };

struct Probe {
  ProbeKind kind;
  double R = 0;  ///< radius, Local only
  std::string name() const;
  /// Parses E_total, E_gas, E_plate, E_local_<R>, u, u_dot, phi0, phi_t0.
  static Probe parse(const std::string& name);
};

struct ProbeSet {
  std::vector<Probe> probes;
  std::int64_t stride = 1;

  /// E_total, E_gas, E_plate, one E_local per radius, u, u_dot, phi0, phi_t0.
  static ProbeSet standard(const std::vector<double>& radii, std::int64_t stride);
};

/// Sampled probe values, one row per sample time.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void append(double t, std::vector<double> values);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& row(std::size_t i) const { return rows_[i]; }
  std::size_t size() const { return times_.size(); }
  /// Throws ValidationError for an unknown column name.
  std::vector<double> column(const std::string& name) const;

  /// `t,<probe1>,...` followed by one line per sample. Each header line is
  /// written as a '#' comment first.
  void write_csv(std::ostream& out, const std::vector<std::string>& header = {}) const;

 private:
  std::vector<std::string> columns_;
  std::vector<double> times_;
  std::vector<std::vector<double>> rows_;
};

/// Evaluates the probes on one state.
std::vector<double> sample_probes(const ModeStated& s, const GridSpecd& grid, const ProbeSet& probes);

/// Runs `initial` to grid.t_end(), sampling at t = 0, every probe stride and
/// at the end. Instabilities propagate with the failing time.
TimeSeries run(const ModeStated& initial, const GridSpecd& grid, BottomCondition bottom, const ProbeSet& probes);

/// Same, also handing back the final state.
TimeSeries run(const ModeStated& initial, const GridSpecd& grid, BottomCondition bottom, const ProbeSet& probes,
               ModeStated& final_state);

/// Formats a number the way every CSV writer in this project does.
std::string format_number(double value);

}  // namespace tubefsi
