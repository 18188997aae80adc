#include "tubefsi/experiments.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tubefsi {

const char* to_string(DecayClass c) {
  switch (c) {
    case DecayClass::Decaying: return "Decaying";
    case DecayClass::DecayingTrivial: return "DecayingTrivial";
    case DecayClass::NonDecaying: return "NonDecaying";
    case DecayClass::Inconclusive: return "Inconclusive";
  }
  return "?";
}

DecayVerdict classify_decay(const std::vector<double>& times, const std::vector<double>& e_local) {
  if (times.empty() || times.size() != e_local.size()) {
    throw ValidationError("decay classification needs a nonempty e_local series");
  }
  DecayVerdict v;
  v.e_local0 = e_local.front();
  if (v.e_local0 == 0.0) {
    v.classification = DecayClass::DecayingTrivial;
    return v;
  }

  const double quarter_start = 0.75 * times.back();
  double max_q = 0, sum_q = 0;
  std::size_t count_q = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < quarter_start) continue;
    max_q = std::max(max_q, e_local[i]);
    sum_q += e_local[i];
    ++count_q;
  }
  v.ratio_end = e_local.back() / v.e_local0;
  v.final_quarter_max = max_q / v.e_local0;
  v.final_quarter_mean = sum_q / double(count_q) / v.e_local0;

  if (v.ratio_end <= kDecayRatioEnd && v.final_quarter_max <= kDecayFinalQuarterMax) {
    v.classification = DecayClass::Decaying;
  } else if (v.final_quarter_mean >= kNonDecayFinalQuarterMean) {
    v.classification = DecayClass::NonDecaying;
  } else {
    v.classification = DecayClass::Inconclusive;
  }
  return v;
}

namespace {

const PeriodicModeSpecd* periodic_spec(const InitialCondition& initial) {
  if (const auto* p = std::get_if<Periodic>(&initial)) return &p->spec;
  if (const auto* p = std::get_if<PerturbedPeriodic>(&initial)) return &p->spec;
  return nullptr;
}

ModeStated gaussian_state(const Localized& g, const CouplingParamsd& mode, const GridSpecd& grid) {
  if (!(g.width > 0)) throw ValidationError("localized data: width must be > 0");
  ModeStated s(mode, grid.nodes());
  for (Eigen::Index j = 0; j < grid.nodes(); ++j) {
    const double x = (grid.z(j) - g.center) / g.width;
    s.phi[j] = g.amplitude * std::exp(-0.5 * x * x);
  }
  return s;
}

}  // namespace

double support_radius(const InitialCondition& initial) {
  if (const auto* g = std::get_if<Localized>(&initial)) return gaussian_support(g->center, g->width);
  const auto* spec = periodic_spec(initial);
  return exponential_support(spec->root.alpha);
}

ModeStated build_initial_state(const DecayExperimentSpec& spec) {
  ModeStated state = [&] {
    if (const auto* g = std::get_if<Localized>(&spec.initial)) return gaussian_state(*g, spec.mode, spec.grid);
    const auto* periodic = periodic_spec(spec.initial);
    if (!(periodic->params() == spec.mode)) {
      throw ValidationError("periodic initial data was built for different (lambda, nu) than the experiment mode");
    }
    ModeStated s = initial_data(*periodic, spec.grid);
    if (const auto* p = std::get_if<PerturbedPeriodic>(&spec.initial)) s = scaled(std::move(s), 1.0 + p->epsilon);
    return s;
  }();
  if (!(spec.gamma >= 0)) throw ValidationError("plate damping gamma must be >= 0");
  state.gamma = spec.gamma;
  return state;
}

DecayVerdict run_decay(const DecayExperimentSpec& spec) {
  if (!(spec.R > 0) || !(spec.R < spec.grid.L())) {
    throw ValidationError("decay experiment needs 0 < R < L");
  }
  const double support = std::min(std::max(spec.R, support_radius(spec.initial)), spec.grid.L());
  const double horizon = causal_horizon(spec.grid, support);
  if (spec.grid.t_end() > horizon) {
    throw ValidationError("t_end = " + format_number(spec.grid.t_end()) + " exceeds the causal horizon " +
                          format_number(horizon) + " (increase L)");
  }

  const ModeStated initial = build_initial_state(spec);
  ProbeSet probes{{{ProbeKind::Local, spec.R}}, spec.probe_stride};
  TimeSeries series = run(initial, spec.grid, spec.bottom, probes);

  DecayVerdict verdict = classify_decay(series.times(), series.column(probes.probes[0].name()));
  verdict.e_local_series = std::move(series);
  return verdict;
}

std::string verdict_record(const std::string& id, const DecayExperimentSpec& spec, const DecayVerdict& verdict,
                           const std::string& csv_path) {
  using nlohmann::ordered_json;
  ordered_json initial;
  if (const auto* g = std::get_if<Localized>(&spec.initial)) {
    initial = {{"kind", "localized"}, {"center", g->center}, {"width", g->width}, {"amplitude", g->amplitude}};
  } else {
    const auto* p = periodic_spec(spec.initial);
    initial = {{"kind", std::holds_alternative<Periodic>(spec.initial) ? "periodic" : "perturbed_periodic"},
               {"A", p->A},
               {"B", p->B},
               {"alpha", p->root.alpha},
               {"omega", p->root.omega},
               {"period", p->period()}};
    if (const auto* pp = std::get_if<PerturbedPeriodic>(&spec.initial)) initial["epsilon"] = pp->epsilon;
  }
  ordered_json record = {
      {"experiment", id},
      {"spec",
       {{"bottom", to_string(spec.bottom)},
        {"lambda", spec.mode.lambda()},
        {"nu", spec.mode.nu()},
        {"gamma", spec.gamma},
        {"R", spec.R},
        {"initial", initial},
        {"grid", {{"L", spec.grid.L()}, {"nz", spec.grid.nz()}, {"dt", spec.grid.dt()}, {"t_end", spec.grid.t_end()}}},
        {"probe_stride", spec.probe_stride}}},
      {"e_local0", verdict.e_local0},
      {"ratio_end", verdict.ratio_end},
      {"final_quarter_max", verdict.final_quarter_max},
      {"final_quarter_mean", verdict.final_quarter_mean},
      {"classification", to_string(verdict.classification)},
      {"series_csv", csv_path},
  };
  return record.dump(2);
}

StabilityReport stability_run(const PeriodicModeSpecd& spec, double epsilon, const GridSpecd& grid, double horizon,
                              Perturbation kind, double gamma, std::int64_t stride) {
  const double amplitude = std::abs(spec.A) + std::abs(spec.B);
  if (!(epsilon >= 0) || epsilon > 0.1 * amplitude) {
    throw ValidationError("stability probe needs 0 <= epsilon <= 0.1 (|A| + |B|)");
  }
  if (!(horizon > 0) || horizon > causal_horizon(grid, std::min(grid.L(), exponential_support(spec.root.alpha)))) {
    throw ValidationError("stability horizon must be positive and within the causal horizon");
  }
  if (!(gamma >= 0)) throw ValidationError("plate damping gamma must be >= 0");
  if (stride < 1) throw ValidationError("probe stride must be >= 1");

  const GridSpecd run_grid = grid.with_t_end(horizon);
  ModeStated reference = initial_data(spec, run_grid);
  reference.gamma = gamma;
  ModeStated perturbed = reference;
  if (kind == Perturbation::Scale) {
    perturbed = scaled(std::move(perturbed), 1.0 + epsilon);
  } else {
    perturbed.u_dot += epsilon;
  }

  StabilityReport report;
  auto record = [&](const ModeStated& a, const ModeStated& b) {
    const double e = modal_energy(difference(b, a), run_grid).e_total;
    report.times.push_back(a.t);
    report.difference_energy.push_back(e);
    report.deviation.push_back(std::sqrt(2.0 * e));
  };
  record(reference, perturbed);
  run_grid.require_stable_for(spec.params().lambda());
  const std::int64_t steps = run_grid.steps();
  for (std::int64_t n = 1; n <= steps; ++n) {
    advance(reference, run_grid, BottomCondition::Elastic);
    advance(perturbed, run_grid, BottomCondition::Elastic);
    reference.t = perturbed.t = double(n) * run_grid.dt();
    if (n % stride == 0 || n == steps) record(reference, perturbed);
  }

  report.max_deviation = *std::max_element(report.deviation.begin(), report.deviation.end());
  report.min_deviation = *std::min_element(report.deviation.begin(), report.deviation.end());
  const double e0 = report.difference_energy.front();
  if (e0 > 0) {
    for (const double e : report.difference_energy) {
      report.difference_energy_drift = std::max(report.difference_energy_drift, std::abs(e - e0) / e0);
    }
  }
  return report;
}

double stability_probe(const PeriodicModeSpecd& spec, double epsilon, const GridSpecd& grid, double horizon) {
  return stability_run(spec, epsilon, grid, horizon).max_deviation;
}

}  // namespace tubefsi
