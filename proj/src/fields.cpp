#include "tubefsi/fields.hpp"

#include "tubefsi/simulator.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>

namespace tubefsi {

namespace {

struct ModalValues {
  double u;
  std::vector<double> phi;  // one per z sample
  double nu;
};

ModalValues evaluate(const ModalData& data, double t, const std::vector<double>& z_samples) {
  ModalValues out;
  if (const auto* spec = std::get_if<PeriodicModeSpecd>(&data)) {
    out.u = eval_plate_mode(*spec, t).u;
    for (const double z : z_samples) out.phi.push_back(eval_gas_mode(*spec, t, z));
    out.nu = spec->params().nu();
    return out;
  }
  const auto& sim = std::get<SimulatedMode>(data);
  sim.state.require_matches(sim.grid);
  if (std::abs(sim.state.t - t) > 1e-9 * std::max(1.0, std::abs(t))) {
    throw ValidationError("simulated mode is a snapshot at t = " + format_number(sim.state.t) +
                          ", not at the requested t = " + format_number(t));
  }
  out.u = sim.state.u;
  const double h = sim.grid.h();
  for (const double z : z_samples) {
    if (z < 0 || z > sim.grid.L()) throw DomainError("z sample " + format_number(z) + " lies outside [0, L]");
    auto j = Eigen::Index(std::floor(z / h));
    if (j >= sim.grid.nz()) j = sim.grid.nz() - 1;
    const double w = z / h - double(j);
    out.phi.push_back((1.0 - w) * sim.state.phi[j] + w * sim.state.phi[j + 1]);
  }
  out.nu = sim.state.params.nu();
  return out;
}

}  // namespace

FieldSnapshot assemble(const std::vector<ModeContribution>& modes, double t, PlateGrid plate_grid,
                       const std::vector<double>& z_samples) {
  if (plate_grid.n1 < 2 || plate_grid.n2 < 2) throw ValidationError("plate grid needs at least 2x2 nodes");
  for (const double z : z_samples) {
    if (!(z >= 0)) throw DomainError("z samples must be >= 0");
  }

  FieldSnapshot snap;
  snap.t = t;
  snap.z = z_samples;
  snap.x1 = Vectord::LinSpaced(plate_grid.n1, 0.0, std::numbers::pi);
  snap.x2 = Vectord::LinSpaced(plate_grid.n2, 0.0, std::numbers::pi);
  snap.plate = Eigen::MatrixXd::Zero(plate_grid.n1, plate_grid.n2);
  snap.gas.assign(z_samples.size(), Eigen::MatrixXd::Zero(plate_grid.n1, plate_grid.n2));

  std::optional<double> nu;
  for (const auto& mode : modes) {
    const ModalValues values = evaluate(mode.data, t, z_samples);
    if (nu && *nu != values.nu) throw ValidationError("all modes in a field must share the same nu");
    nu = values.nu;

    // Eigenfunction vanishes on the boundary; only interior nodes are touched.
    Eigen::MatrixXd shape = Eigen::MatrixXd::Zero(plate_grid.n1, plate_grid.n2);
    for (int i = 1; i + 1 < plate_grid.n1; ++i) {
      for (int k = 1; k + 1 < plate_grid.n2; ++k) shape(i, k) = eigenfunction_eval(mode.pair, snap.x1[i], snap.x2[k]);
    }
    snap.plate += values.u * shape;
    for (std::size_t iz = 0; iz < z_samples.size(); ++iz) snap.gas[iz] += values.phi[iz] * shape;
    snap.mode_indices.push_back(mode.pair.index());
  }
  return snap;
}

void export_snapshot(const FieldSnapshot& snap, const std::filesystem::path& stem,
                     const std::vector<std::string>& header) {
  const auto open = [&](const std::string& suffix) {
    std::filesystem::path path = stem;
    path += suffix;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& line : header) out << "# " << line << '\n';
    return std::pair{std::move(out), path};
  };

  {
    auto [out, path] = open("_gas.csv");
    out << "x1,x2,z,phi\n";
    for (std::size_t iz = 0; iz < snap.z.size(); ++iz) {
      for (Eigen::Index i = 0; i < snap.x1.size(); ++i) {
        for (Eigen::Index k = 0; k < snap.x2.size(); ++k) {
          out << format_number(snap.x1[i]) << ',' << format_number(snap.x2[k]) << ',' << format_number(snap.z[iz])
              << ',' << format_number(snap.gas[iz](i, k)) << '\n';
        }
      }
    }
    if (!out) throw IoError("failed writing " + path.string());
  }
  {
    auto [out, path] = open("_plate.csv");
    out << "x1,x2,u\n";
    for (Eigen::Index i = 0; i < snap.x1.size(); ++i) {
      for (Eigen::Index k = 0; k < snap.x2.size(); ++k) {
        out << format_number(snap.x1[i]) << ',' << format_number(snap.x2[k]) << ',' << format_number(snap.plate(i, k))
            << '\n';
      }
    }
    if (!out) throw IoError("failed writing " + path.string());
  }
}

}  // namespace tubefsi
