#pragma once

// Superposition of modal solutions into the plate displacement u(x1,x2,t)
// and the gas potential phi(x1,x2,z,t) over the square cross-section.

#include "tubefsi/eigenbasis.hpp"
#include "tubefsi/periodic.hpp"
#include "tubefsi/state.hpp"

#include <filesystem>
#include <variant>
#include <vector>

namespace tubefsi {

/// A simulated mode snapshot; the grid is needed to locate z.
struct SimulatedMode {
  ModeStated state;
  GridSpecd grid;
};

using ModalData = std::variant<PeriodicModeSpecd, SimulatedMode>;

struct ModeContribution {
  Eigenpair pair;
  ModalData data;
};

struct PlateGrid {
  int n1 = 33;
  int n2 = 33;
};

struct FieldSnapshot {
  Vectord x1;                       ///< n1 nodes on [0, pi]
  Vectord x2;                       ///< n2 nodes on [0, pi]
  std::vector<double> z;            ///< gas sample heights
  Eigen::MatrixXd plate;            ///< n1 x n2
  std::vector<Eigen::MatrixXd> gas; ///< one n1 x n2 slice per z
  double t = 0;
  std::vector<int> mode_indices;
};

/// Periodic modes are evaluated in closed form at t; simulated modes must be
/// snapshots at t and are interpolated linearly in z. All modes must share nu.
FieldSnapshot assemble(const std::vector<ModeContribution>& modes, double t, PlateGrid plate_grid,
                       const std::vector<double>& z_samples);

/// Writes <stem>_gas.csv (x1,x2,z,phi) and <stem>_plate.csv (x1,x2,u).
void export_snapshot(const FieldSnapshot& snap, const std::filesystem::path& stem,
                     const std::vector<std::string>& header = {});

}  // namespace tubefsi
