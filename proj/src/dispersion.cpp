#include "tubefsi/dispersion.hpp"

namespace tubefsi {

std::vector<DispersionRootd> dispersion_sweep(const EigenSequence& seq, double nu, double tol) {
  if (seq.empty()) throw ValidationError("dispersion sweep needs at least one eigenvalue");
  std::vector<DispersionRootd> roots;
  roots.reserve(seq.size());
  for (const auto& pair : seq) {
    try {
      roots.push_back(solve_dispersion(CouplingParamsd(pair.lambda(), nu), tol));
    } catch (const SolverError& e) {
      throw SolverError("mode k=" + std::to_string(pair.index()) + ": " + e.what());
    }
  }
  return roots;
}

bool magnitudes_nonincreasing(const std::vector<AsymptoticsRow>& rows, std::size_t first,
                              double AsymptoticsRow::*column) {
  for (std::size_t i = first + 1; i < rows.size(); ++i) {
    if (std::abs(rows[i].*column) > std::abs(rows[i - 1].*column)) return false;
  }
  return true;
}

AsymptoticsReport asymptotics_report(const std::vector<DispersionRootd>& roots) {
  AsymptoticsReport report;
  report.rows.reserve(roots.size());
  for (const auto& r : roots) {
    const double lam = r.params.lambda();
    report.rows.push_back({lam, r.omega2 - lam, r.alpha * lam - r.params.nu()});
  }
  const std::size_t half = report.rows.size() / 2;
  report.omega_gap_decreasing =
      magnitudes_nonincreasing(report.rows, half, &AsymptoticsRow::omega2_minus_lambda);
  report.alpha_gap_decreasing =
      magnitudes_nonincreasing(report.rows, half, &AsymptoticsRow::alpha_lambda_minus_nu);
  return report;
}

}  // namespace tubefsi
