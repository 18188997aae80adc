#pragma once

// Time-periodic solutions of the coupled gas/plate mode:
//
//   phi(t,z) = [A cos(omega t) + B sin(omega t)] exp(-alpha z)
//   u(t)     = -(alpha/omega) [A sin(omega t) - B cos(omega t)]
//
// with (omega, alpha) a root of the dispersion relation. The transverse
// eigenfunction factor is left out here; see fields.hpp.

#include "tubefsi/dispersion.hpp"
#include "tubefsi/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace tubefsi {

template <typename Scalar>
struct PeriodicModeSpec {
  DispersionRoot<Scalar> root;
  Scalar A = 1;
  Scalar B = 0;

  Scalar period() const { return root.period(); }
  const CouplingParams<Scalar>& params() const { return root.params; }
};

using PeriodicModeSpecd = PeriodicModeSpec<double>;

template <typename Scalar>
struct PlateSample {
  Scalar u;
  Scalar u_dot;
};

template <typename Scalar>
Scalar eval_gas_mode(const PeriodicModeSpec<Scalar>& spec, Scalar t, Scalar z) {
  using std::cos;
  using std::exp;
  using std::sin;
  if (z < Scalar(0)) throw DomainError("gas mode is defined for z >= 0 only");
  const Scalar wt = spec.root.omega * t;
  return (spec.A * cos(wt) + spec.B * sin(wt)) * exp(-spec.root.alpha * z);
}

template <typename Scalar>
PlateSample<Scalar> eval_plate_mode(const PeriodicModeSpec<Scalar>& spec, Scalar t) {
  using std::cos;
  using std::sin;
  const Scalar wt = spec.root.omega * t;
  const Scalar c = cos(wt), s = sin(wt);
  const Scalar alpha = spec.root.alpha;
  return {-(alpha / spec.root.omega) * (spec.A * s - spec.B * c), -alpha * (spec.A * c + spec.B * s)};
}

/// The periodic solution sampled on the grid at t = 0.
template <typename Scalar>
ModeState<Scalar> initial_data(const PeriodicModeSpec<Scalar>& spec, const GridSpec<Scalar>& grid) {
  ModeState<Scalar> state(spec.params(), grid.nodes());
  const Scalar alpha = spec.root.alpha;
  for (Eigen::Index j = 0; j < grid.nodes(); ++j) {
    using std::exp;
    const Scalar profile = exp(-alpha * grid.z(j));
    state.phi[j] = spec.A * profile;
    state.phi_t[j] = spec.root.omega * spec.B * profile;
  }
  const auto plate = eval_plate_mode(spec, Scalar(0));
  state.u = plate.u;
  state.u_dot = plate.u_dot;
  return state;
}

/// Closed-form modal energy of a periodic solution (time independent).
template <typename Scalar>
Scalar periodic_mode_energy(const PeriodicModeSpec<Scalar>& spec) {
  const auto& r = spec.root;
  const Scalar lam = r.params.lambda(), nu = r.params.nu();
  const Scalar A2 = spec.A * spec.A, B2 = spec.B * spec.B;
  const Scalar gas = (r.omega2 * B2 + (r.alpha * r.alpha + lam) * A2) / (Scalar(4) * r.alpha);
  const Scalar plate = r.alpha * r.alpha * (A2 + lam * lam * B2 / r.omega2) / (Scalar(2) * nu);
  return gas + plate;
}

/// Acceptance bound for residual_check: 1e-10 (1 + |A| + |B|) lambda^2.
template <typename Scalar>
Scalar residual_bound(const PeriodicModeSpec<Scalar>& spec) {
  using std::abs;
  const Scalar lam = spec.params().lambda();
  return Scalar(1e-10) * (Scalar(1) + abs(spec.A) + abs(spec.B)) * lam * lam;
}

/// Max absolute residual of the gas equation, the bottom boundary relation
/// and the plate equation, using exact derivatives of the ansatz, over a
/// seeded cloud of `samples` points t in [0, 3T], z in [0, 10/alpha].
template <typename Scalar>
Scalar residual_check(const PeriodicModeSpec<Scalar>& spec, int samples, std::uint64_t seed = 0) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::sin;
  if (samples < 1) throw ValidationError("residual check needs at least one sample");

  const auto& r = spec.root;
  const Scalar lam = r.params.lambda(), nu = r.params.nu();
  const Scalar z_max = r.alpha > Scalar(0) ? Scalar(10) / r.alpha : Scalar(10);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Scalar> t_dist(Scalar(0), Scalar(3) * spec.period());
  std::uniform_real_distribution<Scalar> z_dist(Scalar(0), z_max);

  Scalar worst = 0;
  for (int i = 0; i < samples; ++i) {
    const Scalar t = t_dist(rng);
    const Scalar z = z_dist(rng);
    const Scalar wt = r.omega * t;
    const Scalar in_phase = spec.A * cos(wt) + spec.B * sin(wt);
    const Scalar quadrature = -spec.A * sin(wt) + spec.B * cos(wt);  // d/dt in_phase = omega * quadrature
    const Scalar decay = exp(-r.alpha * z);

    const Scalar phi = in_phase * decay;
    const Scalar phi_tt = -r.omega2 * phi;
    const Scalar phi_zz = r.alpha * r.alpha * phi;
    const Scalar gas = phi_tt - phi_zz + lam * phi;

    const auto plate = eval_plate_mode(spec, t);
    const Scalar phi_z0 = -r.alpha * in_phase;
    const Scalar boundary = phi_z0 - plate.u_dot;

    const Scalar u_tt = -r.omega2 * plate.u;
    const Scalar phi_t0 = r.omega * quadrature;
    const Scalar plate_eq = u_tt + lam * lam * plate.u - nu * phi_t0;

    worst = std::max({worst, abs(gas), abs(boundary), abs(plate_eq)});
  }
  return worst;
}

/// Copy of `spec` whose decay rate is shifted by `delta` while omega is kept;
/// no longer a solution. Used to show the residual check is sensitive.
template <typename Scalar>
PeriodicModeSpec<Scalar> with_perturbed_alpha(PeriodicModeSpec<Scalar> spec, Scalar delta) {
  spec.root.alpha += delta;
  return spec;
}

}  // namespace tubefsi
