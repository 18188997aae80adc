#pragma once

// Modal energy
//
//   E = 1/2 int_0^L (phi_t^2 + phi_z^2 + lambda phi^2) dz + (u_dot^2 + lambda^2 u^2) / (2 nu)
//
// evaluated with the trapezoidal rule and second-order differences, and the
// local gas energy over [0, R].

#include "tubefsi/state.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tubefsi {

template <typename Scalar>
struct EnergyReport {
  Scalar e_gas = 0;
  Scalar e_plate = 0;
  Scalar e_total = 0;
  std::map<Scalar, Scalar> e_local;  ///< R -> gas energy over [0, R]
};

using EnergyReportd = EnergyReport<double>;

/// phi_t^2 + phi_z^2 + lambda phi^2 at every node.
template <typename Scalar>
Vector<Scalar> gas_energy_density(const ModeState<Scalar>& s, const GridSpec<Scalar>& grid) {
  s.require_matches(grid);
  const Eigen::Index n = grid.nodes();
  const Scalar h = grid.h();
  Vector<Scalar> phi_z(n);
  phi_z.segment(1, n - 2) = (s.phi.segment(2, n - 2) - s.phi.segment(0, n - 2)) / (Scalar(2) * h);
  phi_z[0] = (-Scalar(3) * s.phi[0] + Scalar(4) * s.phi[1] - s.phi[2]) / (Scalar(2) * h);
  phi_z[n - 1] = (Scalar(3) * s.phi[n - 1] - Scalar(4) * s.phi[n - 2] + s.phi[n - 3]) / (Scalar(2) * h);
  const Scalar lam = s.params.lambda();
  return (s.phi_t.array().square() + phi_z.array().square() + lam * s.phi.array().square()).matrix();
}

/// (u_dot^2 + lambda^2 u^2) / (2 nu). With nu = 0 only the resting plate is
/// admissible.
template <typename Scalar>
Scalar plate_energy(const ModeState<Scalar>& s) {
  const Scalar lam = s.params.lambda();
  if (s.params.decoupled()) {
    if (s.u == Scalar(0) && s.u_dot == Scalar(0)) return Scalar(0);
    throw DomainError("plate energy is undefined for nu = 0 with a moving plate");
  }
  return (s.u_dot * s.u_dot + lam * lam * s.u * s.u) / (Scalar(2) * s.params.nu());
}

/// 1/2 int_0^R density, trapezoidal on whole cells plus a linearly
/// interpolated partial cell.
template <typename Scalar>
Scalar local_gas_energy(const Vector<Scalar>& density, const GridSpec<Scalar>& grid, Scalar R) {
  if (!(R > Scalar(0))) throw DomainError("local energy radius must be > 0");
  if (!(R < grid.L())) {
    throw DomainError("local energy radius R = " + std::to_string(double(R)) + " must be < L = " +
                      std::to_string(double(grid.L())));
  }
  const Scalar h = grid.h();
  using std::floor;
  auto k = Eigen::Index(floor(R / h));
  if (k >= grid.nz()) k = grid.nz() - 1;
  Scalar integral = 0;
  if (k > 0) integral = h * (density.segment(0, k + 1).sum() - (density[0] + density[k]) / Scalar(2));
  const Scalar rest = R - Scalar(k) * h;
  if (rest > Scalar(0)) {
    const Scalar at_R = density[k] + (density[k + 1] - density[k]) * (rest / h);
    integral += rest * (density[k] + at_R) / Scalar(2);
  }
  return integral / Scalar(2);
}

template <typename Scalar>
EnergyReport<Scalar> modal_energy(const ModeState<Scalar>& s, const GridSpec<Scalar>& grid,
                                  std::span<const Scalar> r_values = {}) {
  const Vector<Scalar> density = gas_energy_density(s, grid);
  const Eigen::Index n = grid.nodes();
  EnergyReport<Scalar> report;
  report.e_gas = grid.h() * (density.sum() - (density[0] + density[n - 1]) / Scalar(2)) / Scalar(2);
  report.e_plate = plate_energy(s);
  report.e_total = report.e_gas + report.e_plate;
  for (const Scalar R : r_values) report.e_local[R] = local_gas_energy(density, grid, R);
  return report;
}

/// sqrt(2 E(a - b)): distance of two states in the energy norm.
template <typename Scalar>
Scalar energy_distance(const ModeState<Scalar>& a, const ModeState<Scalar>& b, const GridSpec<Scalar>& grid) {
  using std::sqrt;
  return sqrt(Scalar(2) * modal_energy(difference(a, b), grid).e_total);
}

/// Component-wise sum over modes. Local energies must use the same radii.
template <typename Scalar>
EnergyReport<Scalar> multi_mode_energy(std::span<const EnergyReport<Scalar>> reports) {
  EnergyReport<Scalar> sum;
  bool first = true;
  for (const auto& r : reports) {
    sum.e_gas += r.e_gas;
    sum.e_plate += r.e_plate;
    sum.e_total += r.e_total;
    if (first) {
      sum.e_local = r.e_local;
      first = false;
      continue;
    }
    if (r.e_local.size() != sum.e_local.size()) {
      throw ValidationError("multi-mode energy: reports use different local radii");
    }
    for (const auto& [R, e] : r.e_local) {
      auto it = sum.e_local.find(R);
      if (it == sum.e_local.end()) throw ValidationError("multi-mode energy: reports use different local radii");
      it->second += e;
    }
  }
  return sum;
}

}  // namespace tubefsi

namespace tubefsi {

/// Relative L2 distance of two states on the same grid:
///   ||a - b|| / ||b||,  ||s||^2 = int (phi^2 + phi_t^2) dz + u^2 + u_dot^2.
/// Zero when both states vanish.
template <typename Scalar>
Scalar relative_l2_distance(const ModeState<Scalar>& a, const ModeState<Scalar>& b, const GridSpec<Scalar>& grid) {
  a.require_matches(grid);
  b.require_matches(grid);
  auto trapezoid = [&](const Vector<Scalar>& f) {
    return grid.h() * (f.sum() - (f[0] + f[f.size() - 1]) / Scalar(2));
  };
  const Vector<Scalar> dphi = a.phi - b.phi, dphi_t = a.phi_t - b.phi_t;
  const Scalar du = a.u - b.u, du_dot = a.u_dot - b.u_dot;
  const Scalar diff = trapezoid((dphi.array().square() + dphi_t.array().square()).matrix()) + du * du + du_dot * du_dot;
  const Scalar base = trapezoid((b.phi.array().square() + b.phi_t.array().square()).matrix()) + b.u * b.u +
                      b.u_dot * b.u_dot;
  using std::sqrt;
  if (base == Scalar(0)) return diff == Scalar(0) ? Scalar(0) : std::numeric_limits<Scalar>::infinity();
  return sqrt(diff / base);
}

}  // namespace tubefsi
