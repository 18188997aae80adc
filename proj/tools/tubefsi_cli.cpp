// tubefsi: batch front end for the gas/plate mode laboratory.
//
//   tubefsi dispersion      dispersion roots and asymptotic gaps per mode (CSV)
//   tubefsi periodic-check  residuals + one simulated period of a periodic solution
//   tubefsi simulate        time series of one mode (CSV)
//   tubefsi decay           local energy decay experiment(s), verdict records
//   tubefsi stability       distance between a periodic trajectory and perturbed copies
//   tubefsi export-field    plate/gas fields of a superposition of modes (CSV)
//
// Exit codes: 0 success, 1 runtime failure or FAIL verdict, 2 invalid input,
// 3 inconclusive decay verdict.

#include "CLI11.hpp"
#include "json.hpp"

#include "tubefsi/dispersion.hpp"
#include "tubefsi/eigenbasis.hpp"
#include "tubefsi/experiments.hpp"
#include "tubefsi/fields.hpp"
#include "tubefsi/jobs.hpp"
#include "tubefsi/periodic.hpp"
#include "tubefsi/simulator.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace tubefsi;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

constexpr double kPeriodReturnThreshold = 1e-3;

struct CommonOptions {
  double nu = 1.0;
  std::string mode = "1,1";
  std::string eigenvalues;
  int k = 1;
  double A = 1.0;
  double B = 0.0;
  double L = 200.0;
  int nz = 20000;
  double dt = 0.008;
  std::optional<double> t_end;
  std::vector<double> R{10.0};
  double gamma = 0.0;
  std::vector<double> epsilon{1e-3, 1e-2};
  std::uint64_t seed = 0;
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--nu", o.nu, "gas-plate interaction intensity (> 0)")->capture_default_str();
  cmd->add_option("--mode", o.mode, "square mode m,n (lambda = m^2 + n^2)")->capture_default_str();
  cmd->add_option("--eigenvalues", o.eigenvalues, "eigenvalue table (one positive value per line)");
  cmd->add_option("--k", o.k, "1-based index into the eigenvalue table")->capture_default_str();
  cmd->add_option("--A", o.A, "cosine amplitude of the periodic solution")->capture_default_str();
  cmd->add_option("--B", o.B, "sine amplitude of the periodic solution")->capture_default_str();
  cmd->add_option("--L", o.L, "truncation length of the half-line")->capture_default_str();
  cmd->add_option("--nz", o.nz, "number of grid cells")->capture_default_str();
  cmd->add_option("--dt", o.dt, "time step (upper bound when aligned to a period)")->capture_default_str();
  cmd->add_option("--t-end", o.t_end, "final time");
  cmd->add_option("--R", o.R, "local energy radii r1,r2,...")->delimiter(',')->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "plate damping (>= 0)")->capture_default_str();
  cmd->add_option("--epsilon", o.epsilon, "perturbation sizes e1,e2,...")->delimiter(',')->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed of every pseudorandom sample")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory (stdout when empty)");
  cmd->add_option("--jobs", o.jobs, "concurrent independent experiments")->capture_default_str();
}

RectangleMode parse_mode(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma != std::string::npos) {
      std::size_t used_m = 0, used_n = 0;
      const int m = std::stoi(text.substr(0, comma), &used_m);
      const std::string rest = text.substr(comma + 1);
      const int n = std::stoi(rest, &used_n);
      if (used_m == comma && used_n == rest.size() && m >= 1 && n >= 1) return {m, n};
    }
  } catch (const std::exception&) {
  }
  throw ValidationError("--mode expects two positive integers 'm,n', got '" + text + "'");
}

Eigenpair selected_pair(const CommonOptions& o) {
  if (o.eigenvalues.empty()) {
    const auto [m, n] = parse_mode(o.mode);
    return Eigenpair::rectangle(1, m, n);
  }
  const auto seq = load_external_eigenvalues(fs::path(o.eigenvalues));
  if (o.k < 1 || std::size_t(o.k) > seq.size()) {
    throw ValidationError("--k must lie in [1, " + std::to_string(seq.size()) + "]");
  }
  return seq[std::size_t(o.k - 1)];
}

PeriodicModeSpecd periodic_spec(const CommonOptions& o) {
  const double lambda = selected_pair(o).lambda();
  return {solve_dispersion(CouplingParamsd(lambda, o.nu)), o.A, o.B};
}

void validate_common(const CommonOptions& o) {
  if (o.jobs < 1) throw ValidationError("--jobs must be >= 1");
  if (!(o.gamma >= 0)) throw ValidationError("--gamma must be >= 0");
}

/// Resolved configuration of a subcommand as '#'-comment lines.
std::vector<std::string> config_header(const CLI::App* cmd) {
  std::vector<std::string> lines{std::string("tubefsi ") + cmd->get_name()};
  std::istringstream in(cmd->config_to_str(true, false));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

class Output {
 public:
  explicit Output(const std::string& dir) : dir_(dir) {
    if (!dir_.empty()) {
      std::error_code ec;
      fs::create_directories(dir_, ec);
      if (ec) throw IoError("cannot create output directory " + dir_ + ": " + ec.message());
    }
  }

  bool to_files() const { return !dir_.empty(); }
  std::string path(const std::string& name) const { return (fs::path(dir_) / name).string(); }

  /// Writes to <dir>/<name>, or to stdout without --out.
  template <typename Writer>
  std::string write(const std::string& name, Writer&& writer) const {
    if (dir_.empty()) {
      writer(std::cout);
      return "-";
    }
    const std::string p = path(name);
    std::ofstream file(p);
    if (!file) throw IoError("cannot write " + p);
    writer(file);
    if (!file) throw IoError("failed writing " + p);
    return p;
  }

 private:
  std::string dir_;
};

// ---------------------------------------------------------------- dispersion

struct DispersionOptions {
  CommonOptions common;
  int modes = 50;
  double tol = 1e-12;
};

int cmd_dispersion(const CLI::App* cmd, const DispersionOptions& o) {
  validate_common(o.common);
  CouplingParamsd(1.0, o.common.nu);  // reject nu <= 0 before any work
  const EigenSequence seq = o.common.eigenvalues.empty() ? rectangle_eigensequence(o.modes)
                                                         : load_external_eigenvalues(fs::path(o.common.eigenvalues));
  const auto roots = dispersion_sweep(seq, o.common.nu, o.tol);
  const auto report = asymptotics_report(roots);

  auto header = config_header(cmd);
  header.push_back(std::string("omega_gap_decreasing_last_half=") + (report.omega_gap_decreasing ? "true" : "false"));
  header.push_back(std::string("alpha_gap_decreasing_last_half=") + (report.alpha_gap_decreasing ? "true" : "false"));

  Output(o.common.out).write("dispersion.csv", [&](std::ostream& out) {
    for (const auto& line : header) out << "# " << line << '\n';
    out << "k,lambda,alpha,omega,omega2_minus_lambda,alpha_lambda_minus_nu\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out << seq[i].index() << ',' << format_number(roots[i].params.lambda()) << ','
          << format_number(roots[i].alpha) << ',' << format_number(roots[i].omega) << ','
          << format_number(report.rows[i].omega2_minus_lambda) << ','
          << format_number(report.rows[i].alpha_lambda_minus_nu) << '\n';
    }
  });
  return 0;
}

// ------------------------------------------------------------ periodic-check

struct PeriodicCheckOptions {
  CommonOptions common;
  int samples = 1000;
  double perturb_alpha = 0.0;
};

int cmd_periodic_check(const CLI::App* cmd, const PeriodicCheckOptions& o) {
  validate_common(o.common);
  PeriodicModeSpecd spec = periodic_spec(o.common);
  if (o.perturb_alpha != 0.0) spec = with_perturbed_alpha(spec, o.perturb_alpha);

  const double residual = residual_check(spec, o.samples, o.common.seed);
  const double bound = residual_bound(spec);

  const double T = spec.period();
  const GridSpecd grid(o.common.L, o.common.nz, aligned_time_step(T, o.common.dt), T, spec.params().lambda());
  const ModeStated initial = initial_data(spec, grid);
  ModeStated final_state = initial;
  run(initial, grid, BottomCondition::Elastic, ProbeSet{{{ProbeKind::Total}}, grid.steps()}, final_state);
  const double period_error = relative_l2_distance(final_state, initial, grid);

  const bool pass = residual <= bound && period_error <= kPeriodReturnThreshold;
  nlohmann::ordered_json record = {
      {"experiment", "periodic-check"},
      {"config", config_header(cmd)},
      {"lambda", spec.params().lambda()},
      {"nu", spec.params().nu()},
      {"alpha", spec.root.alpha},
      {"omega", spec.root.omega},
      {"period", T},
      {"max_residual", residual},
      {"residual_bound", bound},
      {"period_return_error", period_error},
      {"period_return_threshold", kPeriodReturnThreshold},
      {"verdict", pass ? "PASS" : "FAIL"},
  };
  Output(o.common.out).write("periodic_check.json", [&](std::ostream& out) { out << record.dump(2) << '\n'; });
  return pass ? 0 : kExitRuntime;
}

// ------------------------------------------------------------------ simulate

struct SimulateOptions {
  CommonOptions common;
  std::string bottom = "elastic";
  std::string initial = "periodic";
  double center = 5.0;
  double width = 0.5;
  double amplitude = 1.0;
  std::int64_t stride = 100;
};

BottomCondition parse_bottom(const std::string& s) {
  if (s == "elastic") return BottomCondition::Elastic;
  if (s == "rigid") return BottomCondition::Rigid;
  throw ValidationError("--bottom must be 'elastic' or 'rigid'");
}

InitialCondition make_initial(const std::string& kind, const CommonOptions& c, double center, double width,
                              double amplitude) {
  if (kind == "gaussian") return Localized{center, width, amplitude};
  if (kind == "periodic") return Periodic{periodic_spec(c)};
  if (kind == "perturbed") {
    if (c.epsilon.empty()) throw ValidationError("--initial perturbed needs --epsilon");
    return PerturbedPeriodic{periodic_spec(c), c.epsilon.front()};
  }
  throw ValidationError("--initial must be 'periodic', 'perturbed' or 'gaussian'");
}

int cmd_simulate(const CLI::App* cmd, const SimulateOptions& o) {
  validate_common(o.common);
  const CommonOptions& c = o.common;
  const double lambda = selected_pair(c).lambda();
  const DecayExperimentSpec spec{
      .bottom = parse_bottom(o.bottom),
      .mode = CouplingParamsd(lambda, c.nu),
      .initial = make_initial(o.initial, c, o.center, o.width, o.amplitude),
      .R = c.R.empty() ? 1.0 : c.R.front(),
      .grid = GridSpecd(c.L, c.nz, c.dt, c.t_end.value_or(10.0), lambda),
      .probe_stride = o.stride,
      .gamma = c.gamma,
  };
  const ModeStated initial = build_initial_state(spec);
  const TimeSeries series = run(initial, spec.grid, spec.bottom, ProbeSet::standard(c.R, o.stride));
  Output(c.out).write("simulate.csv", [&](std::ostream& out) { series.write_csv(out, config_header(cmd)); });
  return 0;
}

// --------------------------------------------------------------------- decay

struct DecayOptions {
  CommonOptions common;
  std::string bottom = "rigid";
  std::string initial;  // default: gaussian for rigid, periodic for elastic
  double center = 5.0;
  double width = 0.5;
  double amplitude = 1.0;
  double periods = 10.0;
  std::int64_t stride = 25;
};

int cmd_decay(const CLI::App* cmd, const DecayOptions& o) {
  validate_common(o.common);
  const CommonOptions& c = o.common;
  if (c.R.empty()) throw ValidationError("--R needs at least one radius");
  const BottomCondition bottom = parse_bottom(o.bottom);
  const std::string kind = !o.initial.empty() ? o.initial : bottom == BottomCondition::Rigid ? "gaussian" : "periodic";
  const InitialCondition initial = make_initial(kind, c, o.center, o.width, o.amplitude);
  const double lambda = selected_pair(c).lambda();

  // Periodic data: align dt with the period and default to whole periods.
  double dt = c.dt;
  double t_end = c.t_end.value_or(150.0);
  if (!std::holds_alternative<Localized>(initial)) {
    const double T = std::holds_alternative<Periodic>(initial) ? std::get<Periodic>(initial).spec.period()
                                                               : std::get<PerturbedPeriodic>(initial).spec.period();
    dt = aligned_time_step(T, c.dt);
    if (!c.t_end) t_end = o.periods * T;
  }
  const GridSpecd grid(c.L, c.nz, dt, t_end, lambda);

  std::vector<DecayExperimentSpec> specs;
  for (const double R : c.R) {
    specs.push_back({.bottom = bottom,
                     .mode = CouplingParamsd(lambda, c.nu),
                     .initial = initial,
                     .R = R,
                     .grid = grid,
                     .probe_stride = o.stride,
                     .gamma = c.gamma});
  }
  const auto verdicts = run_jobs(specs.size(), c.jobs, [&](std::size_t i) { return run_decay(specs[i]); });

  const Output output(c.out);
  const auto header = config_header(cmd);
  bool inconclusive = false;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string id = std::string("decay-") + to_string(bottom) + "-R" + format_number(specs[i].R);
    std::string csv = "-";
    if (output.to_files()) {
      csv = output.write(id + ".csv", [&](std::ostream& out) { verdicts[i].e_local_series.write_csv(out, header); });
      output.write(id + ".json", [&](std::ostream& out) { out << verdict_record(id, specs[i], verdicts[i], csv) << '\n'; });
    } else {
      verdicts[i].e_local_series.write_csv(std::cout, header);
    }
    std::cout << verdict_record(id, specs[i], verdicts[i], csv) << '\n';
    inconclusive = inconclusive || verdicts[i].classification == DecayClass::Inconclusive;
  }
  return inconclusive ? kExitInconclusive : 0;
}

// ----------------------------------------------------------------- stability

struct StabilityOptions {
  CommonOptions common;
  double horizon_periods = 10.0;
  std::string perturbation = "scale";
  std::int64_t stride = 50;
};

int cmd_stability(const CLI::App* cmd, const StabilityOptions& o) {
  validate_common(o.common);
  const CommonOptions& c = o.common;
  const PeriodicModeSpecd spec = periodic_spec(c);
  Perturbation kind = Perturbation::Scale;
  if (o.perturbation == "plate-velocity") {
    kind = Perturbation::PlateVelocity;
  } else if (o.perturbation != "scale") {
    throw ValidationError("--perturbation must be 'scale' or 'plate-velocity'");
  }
  const double T = spec.period();
  const double horizon = c.t_end.value_or(o.horizon_periods * T);
  const GridSpecd grid(c.L, c.nz, aligned_time_step(T, c.dt), horizon, spec.params().lambda());

  const auto reports = run_jobs(c.epsilon.size(), c.jobs, [&](std::size_t i) {
    return stability_run(spec, c.epsilon[i], grid, horizon, kind, c.gamma, o.stride);
  });

  const Output output(c.out);
  const auto header = config_header(cmd);
  output.write("stability.csv", [&](std::ostream& out) {
    for (const auto& line : header) out << "# " << line << '\n';
    out << "epsilon,max_deviation,min_deviation,deviation_over_epsilon,difference_energy_drift,nonincreasing\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      bool nonincreasing = true;
      for (std::size_t j = 1; j < r.deviation.size(); ++j) nonincreasing = nonincreasing && r.deviation[j] <= r.deviation[j - 1];
      const double eps = c.epsilon[i];
      out << format_number(eps) << ',' << format_number(r.max_deviation) << ',' << format_number(r.min_deviation)
          << ',' << format_number(eps > 0 ? r.max_deviation / eps : std::nan("")) << ','
          << format_number(r.difference_energy_drift) << ',' << (nonincreasing ? "true" : "false") << '\n';
    }
  });
  if (output.to_files()) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      output.write("stability_eps" + format_number(c.epsilon[i]) + ".csv", [&](std::ostream& out) {
        for (const auto& line : header) out << "# " << line << '\n';
        out << "t,deviation,difference_energy\n";
        const auto& r = reports[i];
        for (std::size_t j = 0; j < r.times.size(); ++j) {
          out << format_number(r.times[j]) << ',' << format_number(r.deviation[j]) << ','
              << format_number(r.difference_energy[j]) << '\n';
        }
      });
    }
  }
  return 0;
}

// -------------------------------------------------------------- export-field

struct ExportFieldOptions {
  CommonOptions common;
  std::vector<std::string> modes{"1,1"};
  double t = 0.0;
  int n1 = 33;
  int n2 = 33;
  std::vector<double> z{0.0, 0.5, 1.0, 2.0};
  std::string stem = "field";
  bool simulate = false;
};

int cmd_export_field(const CLI::App* cmd, const ExportFieldOptions& o) {
  validate_common(o.common);
  const CommonOptions& c = o.common;
  std::vector<ModeContribution> contributions;
  std::vector<std::pair<Eigenpair, PeriodicModeSpecd>> periodic_modes;
  int index = 1;
  for (const auto& text : o.modes) {
    const auto [m, n] = parse_mode(text);
    const Eigenpair pair = Eigenpair::rectangle(index++, m, n);
    periodic_modes.emplace_back(pair, PeriodicModeSpecd{solve_dispersion(CouplingParamsd(pair.lambda(), c.nu)), c.A, c.B});
  }
  if (o.simulate && o.t < 0) throw ValidationError("--simulate needs --t >= 0");

  const auto simulated = run_jobs(periodic_modes.size(), c.jobs, [&](std::size_t i) -> ModalData {
    const auto& spec = periodic_modes[i].second;
    if (!o.simulate) return spec;
    const double lambda = spec.params().lambda();
    if (o.t == 0.0) {
      const GridSpecd grid(c.L, c.nz, c.dt, c.dt, lambda);
      return SimulatedMode{initial_data(spec, grid), grid};
    }
    const GridSpecd grid(c.L, c.nz, aligned_time_step(o.t, c.dt), o.t, lambda);
    ModeStated s = initial_data(spec, grid);
    integrate(s, grid, BottomCondition::Elastic, grid.steps(), grid.steps(), [](const ModeStated&, auto) {});
    s.t = o.t;
    return SimulatedMode{std::move(s), grid};
  });
  for (std::size_t i = 0; i < periodic_modes.size(); ++i) contributions.push_back({periodic_modes[i].first, simulated[i]});

  const FieldSnapshot snap = assemble(contributions, o.t, {o.n1, o.n2}, o.z);
  const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  Output output(c.out);
  export_snapshot(snap, dir / o.stem, config_header(cmd));
  std::cout << (dir / (o.stem + "_gas.csv")).string() << '\n' << (dir / (o.stem + "_plate.csv")).string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gas-filled tube over an elastic plate: dispersion, periodic solutions, local energy"};
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
  app.require_subcommand(1);

  DispersionOptions dispersion;
  auto* c_dispersion = app.add_subcommand("dispersion", "dispersion roots and asymptotic gaps per mode");
  add_common(c_dispersion, dispersion.common);
  c_dispersion->add_option("--modes", dispersion.modes, "number of square modes")->capture_default_str();
  c_dispersion->add_option("--tol", dispersion.tol, "relative residual tolerance")->capture_default_str();

  PeriodicCheckOptions periodic;
  auto* c_periodic = app.add_subcommand("periodic-check", "residuals and one simulated period of a periodic solution");
  add_common(c_periodic, periodic.common);
  c_periodic->add_option("--samples", periodic.samples, "residual sample points")->capture_default_str();
  c_periodic->add_option("--perturb-alpha", periodic.perturb_alpha, "shift alpha away from the root")
      ->capture_default_str();

  SimulateOptions simulate;
  auto* c_simulate = app.add_subcommand("simulate", "probe time series of one mode");
  add_common(c_simulate, simulate.common);
  c_simulate->add_option("--bottom", simulate.bottom, "elastic | rigid")->capture_default_str();
  c_simulate->add_option("--initial", simulate.initial, "periodic | perturbed | gaussian")->capture_default_str();
  c_simulate->add_option("--center", simulate.center, "gaussian center")->capture_default_str();
  c_simulate->add_option("--width", simulate.width, "gaussian width")->capture_default_str();
  c_simulate->add_option("--amplitude", simulate.amplitude, "gaussian amplitude")->capture_default_str();
  c_simulate->add_option("--stride", simulate.stride, "steps between samples")->capture_default_str();

  DecayOptions decay;
  auto* c_decay = app.add_subcommand("decay", "local energy decay experiment, one per radius");
  add_common(c_decay, decay.common);
  c_decay->add_option("--bottom", decay.bottom, "rigid | elastic")->capture_default_str();
  c_decay->add_option("--initial", decay.initial, "gaussian | periodic | perturbed (default by bottom)");
  c_decay->add_option("--center", decay.center, "gaussian center")->capture_default_str();
  c_decay->add_option("--width", decay.width, "gaussian width")->capture_default_str();
  c_decay->add_option("--amplitude", decay.amplitude, "gaussian amplitude")->capture_default_str();
  c_decay->add_option("--periods", decay.periods, "run length for periodic data without --t-end")
      ->capture_default_str();
  c_decay->add_option("--stride", decay.stride, "steps between samples")->capture_default_str();

  StabilityOptions stability;
  auto* c_stability = app.add_subcommand("stability", "perturbation growth around a periodic solution");
  add_common(c_stability, stability.common);
  c_stability->add_option("--horizon-periods", stability.horizon_periods, "horizon in periods without --t-end")
      ->capture_default_str();
  c_stability->add_option("--perturbation", stability.perturbation, "scale | plate-velocity")->capture_default_str();
  c_stability->add_option("--stride", stability.stride, "steps between samples")->capture_default_str();

  ExportFieldOptions field;
  auto* c_field = app.add_subcommand("export-field", "plate and gas fields of a superposition of modes");
  add_common(c_field, field.common);
  c_field->add_option("--modes", field.modes, "square modes, e.g. --modes 1,1 --modes 1,2")->capture_default_str();
  c_field->add_option("--t", field.t, "time")->capture_default_str();
  c_field->add_option("--n1", field.n1, "plate grid nodes along x1")->capture_default_str();
  c_field->add_option("--n2", field.n2, "plate grid nodes along x2")->capture_default_str();
  c_field->add_option("--z", field.z, "gas sample heights z1,z2,...")->delimiter(',')->capture_default_str();
  c_field->add_option("--stem", field.stem, "output file stem")->capture_default_str();
  c_field->add_flag("--simulate", field.simulate, "time-integrate each mode instead of evaluating it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (c_dispersion->parsed()) return cmd_dispersion(c_dispersion, dispersion);
    if (c_periodic->parsed()) return cmd_periodic_check(c_periodic, periodic);
    if (c_simulate->parsed()) return cmd_simulate(c_simulate, simulate);
    if (c_decay->parsed()) return cmd_decay(c_decay, decay);
    if (c_stability->parsed()) return cmd_stability(c_stability, stability);
    if (c_field->parsed()) return cmd_export_field(c_field, field);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InstabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}
