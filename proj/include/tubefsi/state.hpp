#pragma once

#include "tubefsi/core.hpp"
#include "tubefsi/dispersion.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace tubefsi {

/// Uniform grid on the truncated half-line [0, L] plus the time stepping.
template <typename Scalar>
class GridSpec {
 public:
  /// Throws ValidationError unless all entries are positive and dt <= 0.9 h.
  GridSpec(Scalar L, int nz, Scalar dt, Scalar t_end) : L_(L), nz_(nz), dt_(dt), t_end_(t_end) {
    if (!(L > Scalar(0))) throw ValidationError("grid: L must be > 0");
    if (nz < 2) throw ValidationError("grid: nz must be >= 2");
    if (!(dt > Scalar(0))) throw ValidationError("grid: dt must be > 0");
    if (!(t_end > Scalar(0))) throw ValidationError("grid: t_end must be > 0");
    if (dt > Scalar(0.9) * h()) {
      throw ValidationError("grid: CFL violated, dt must be <= 0.9 h (h = " + std::to_string(double(h())) + ")");
    }
  }

  /// Same, plus the plate oscillator bound dt <= 0.5 / lambda.
  GridSpec(Scalar L, int nz, Scalar dt, Scalar t_end, Scalar lambda) : GridSpec(L, nz, dt, t_end) {
    require_stable_for(lambda);
  }

  Scalar L() const { return L_; }
  int nz() const { return nz_; }
  Scalar dt() const { return dt_; }
  Scalar t_end() const { return t_end_; }
  Scalar h() const { return L_ / Scalar(nz_); }
  Eigen::Index nodes() const { return nz_ + 1; }
  Scalar z(Eigen::Index j) const { return Scalar(j) * h(); }

  /// Steps needed to reach t_end (t_end rounded up to a multiple of dt).
  std::int64_t steps() const {
    using std::ceil;
    return std::int64_t(ceil(t_end_ / dt_ - Scalar(1e-9)));
  }

  void require_stable_for(Scalar lambda) const {
    if (dt_ > Scalar(0.5) / lambda) {
      throw ValidationError("grid: dt must be <= 0.5/lambda = " + std::to_string(double(Scalar(0.5) / lambda)));
    }
  }

  GridSpec with_t_end(Scalar t_end) const { return GridSpec(L_, nz_, dt_, t_end); }

 private:
  Scalar L_;
  int nz_;
  Scalar dt_;
  Scalar t_end_;
};

using GridSpecd = GridSpec<double>;

/// Largest step <= dt_max that divides `period` into a whole number of steps.
template <typename Scalar>
Scalar aligned_time_step(Scalar period, Scalar dt_max) {
  using std::ceil;
  return period / ceil(period / dt_max);
}

enum class BottomCondition {
  Elastic,  ///< d_z phi(0) = u_dot, plate oscillator active
  Rigid,    ///< d_z phi(0) = 0, plate frozen
};

inline const char* to_string(BottomCondition b) { return b == BottomCondition::Elastic ? "elastic" : "rigid"; }

/// One gas mode on the z-grid together with its plate amplitude.
/// phi_t, u_dot are integer-time velocities (the mean of the adjacent
/// staggered half-step velocities of the integrator).
template <typename Scalar>
struct ModeState {
  ModeState(CouplingParams<Scalar> p, Eigen::Index nodes)
      : phi(Vector<Scalar>::Zero(nodes)), phi_t(Vector<Scalar>::Zero(nodes)), params(p) {}

  Vector<Scalar> phi;
  Vector<Scalar> phi_t;
  Scalar u = 0;
  Scalar u_dot = 0;
  Scalar t = 0;
  CouplingParams<Scalar> params;
  Scalar gamma = 0;  ///< plate damping; 0 in the conservative model

  void require_matches(const GridSpec<Scalar>& grid) const {
    if (phi.size() != grid.nodes() || phi_t.size() != grid.nodes()) {
      throw ValidationError("mode state has " + std::to_string(phi.size()) + " nodes, grid expects " +
                            std::to_string(grid.nodes()));
    }
  }
};

using ModeStated = ModeState<double>;

/// a - b component-wise; time, parameters and damping are taken from a.
template <typename Scalar>
ModeState<Scalar> difference(const ModeState<Scalar>& a, const ModeState<Scalar>& b) {
  ModeState<Scalar> d = a;
  d.phi -= b.phi;
  d.phi_t -= b.phi_t;
  d.u -= b.u;
  d.u_dot -= b.u_dot;
  return d;
}

template <typename Scalar>
ModeState<Scalar> scaled(ModeState<Scalar> s, Scalar factor) {
  s.phi *= factor;
  s.phi_t *= factor;
  s.u *= factor;
  s.u_dot *= factor;
  return s;
}

}  // namespace tubefsi
