#include "tubefsi/simulator.hpp"

#include <cstdio>
#include <ostream>

namespace tubefsi {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string Probe::name() const {
  switch (kind) {
    case ProbeKind::Total: return "E_total";
    case ProbeKind::Gas: return "E_gas";
    case ProbeKind::Plate: return "E_plate";
    case ProbeKind::Local: return "E_local_" + format_number(R);
    case ProbeKind::U: return "u";
    case ProbeKind::UDot: return "u_dot";
    case ProbeKind::Phi0: return "phi0";
    case ProbeKind::PhiT0: return "phi_t0";
  }
  return {};
}

Probe Probe::parse(const std::string& name) {
  if (name == "E_total") return {ProbeKind::Total};
  if (name == "E_gas") return {ProbeKind::Gas};
  if (name == "E_plate") return {ProbeKind::Plate};
  if (name == "u") return {ProbeKind::U};
  if (name == "u_dot") return {ProbeKind::UDot};
  if (name == "phi0") return {ProbeKind::Phi0};
  if (name == "phi_t0") return {ProbeKind::PhiT0};
  const std::string prefix = "E_local_";
  if (name.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const double R = std::stod(name.substr(prefix.size()), &used);
      if (used == name.size() - prefix.size() && R > 0) return {ProbeKind::Local, R};
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("unknown probe '" + name + "'");
}

ProbeSet ProbeSet::standard(const std::vector<double>& radii, std::int64_t stride) {
  ProbeSet set;
  set.stride = stride;
  set.probes = {{ProbeKind::Total}, {ProbeKind::Gas}, {ProbeKind::Plate}};
  for (const double R : radii) set.probes.push_back({ProbeKind::Local, R});
  for (auto kind : {ProbeKind::U, ProbeKind::UDot, ProbeKind::Phi0, ProbeKind::PhiT0}) set.probes.push_back({kind});
  return set;
}

void TimeSeries::append(double t, std::vector<double> values) {
  if (values.size() != columns_.size()) throw ValidationError("time series row has the wrong width");
  times_.push_back(t);
  rows_.push_back(std::move(values));
}

std::vector<double> TimeSeries::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c] != name) continue;
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[c]);
    return out;
  }
  throw ValidationError("time series has no column '" + name + "'");
}

void TimeSeries::write_csv(std::ostream& out, const std::vector<std::string>& header) const {
  for (const auto& line : header) out << "# " << line << '\n';
  out << 't';
  for (const auto& c : columns_) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << format_number(times_[i]);
    for (const double v : rows_[i]) out << ',' << format_number(v);
    out << '\n';
  }
}

std::vector<double> sample_probes(const ModeStated& s, const GridSpecd& grid, const ProbeSet& probes) {
  std::vector<double> radii;
  bool needs_energy = false;
  for (const auto& p : probes.probes) {
    if (p.kind == ProbeKind::Local) radii.push_back(p.R);
    needs_energy = needs_energy || p.kind == ProbeKind::Total || p.kind == ProbeKind::Gas ||
                   p.kind == ProbeKind::Plate || p.kind == ProbeKind::Local;
  }
  EnergyReportd energy;
  if (needs_energy) energy = modal_energy<double>(s, grid, radii);

  std::vector<double> values;
  values.reserve(probes.probes.size());
  for (const auto& p : probes.probes) {
    switch (p.kind) {
      case ProbeKind::Total: values.push_back(energy.e_total); break;
      case ProbeKind::Gas: values.push_back(energy.e_gas); break;
      case ProbeKind::Plate: values.push_back(energy.e_plate); break;
      case ProbeKind::Local: values.push_back(energy.e_local.at(p.R)); break;
      case ProbeKind::U: values.push_back(s.u); break;
      case ProbeKind::UDot: values.push_back(s.u_dot); break;
      case ProbeKind::Phi0: values.push_back(s.phi[0]); break;
      case ProbeKind::PhiT0: values.push_back(s.phi_t[0]); break;
    }
  }
  return values;
}

TimeSeries run(const ModeStated& initial, const GridSpecd& grid, BottomCondition bottom, const ProbeSet& probes,
               ModeStated& final_state) {
  std::vector<std::string> names;
  for (const auto& p : probes.probes) {
    if (p.kind == ProbeKind::Local && !(p.R < grid.L())) {
      throw ValidationError("probe " + p.name() + " needs R < L");
    }
    names.push_back(p.name());
  }
  TimeSeries series(std::move(names));
  ModeStated s = initial;
  series.append(s.t, sample_probes(s, grid, probes));
  integrate(s, grid, bottom, grid.steps(), probes.stride,
            [&](const ModeStated& current, std::int64_t) {
              series.append(current.t, sample_probes(current, grid, probes));
            });
  final_state = std::move(s);
  return series;
}

TimeSeries run(const ModeStated& initial, const GridSpecd& grid, BottomCondition bottom, const ProbeSet& probes) {
  ModeStated final_state = initial;
  return run(initial, grid, bottom, probes, final_state);
}

}  // namespace tubefsi
