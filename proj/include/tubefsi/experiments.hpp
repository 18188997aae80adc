#pragma once

// Local energy decay (rigid bottom) versus persistent periodic motion
// (elastic bottom), and the stability of periodic trajectories under
// perturbation.

#include "tubefsi/periodic.hpp"
#include "tubefsi/simulator.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tubefsi {

/// amplitude * exp(-(z - center)^2 / (2 width^2)), zero velocity.
struct Localized {
  double center = 5.0;
  double width = 0.5;
  double amplitude = 1.0;
};

struct Periodic {
  PeriodicModeSpecd spec;
};

/// Periodic data with every state component scaled by (1 + epsilon).
struct PerturbedPeriodic {
  PeriodicModeSpecd spec;
  double epsilon = 0.0;
};

using InitialCondition = std::variant<Localized, Periodic, PerturbedPeriodic>;

struct DecayExperimentSpec {
  BottomCondition bottom = BottomCondition::Rigid;
  CouplingParamsd mode;
  InitialCondition initial;
  double R = 10.0;
  GridSpecd grid;
  std::int64_t probe_stride = 10;
  double gamma = 0.0;
};

enum class DecayClass { Decaying, DecayingTrivial, NonDecaying, Inconclusive };

const char* to_string(DecayClass c);

// Thresholds on e_local relative to its initial value.
inline constexpr double kDecayRatioEnd = 0.1;         // e_local(t_end) <= 0.1 e_local(0)
inline constexpr double kDecayFinalQuarterMax = 0.2;  // and max over final quarter <= 0.2 e_local(0)
inline constexpr double kNonDecayFinalQuarterMean = 0.5;  // mean over final quarter >= 0.5 e_local(0)

struct DecayVerdict {
  TimeSeries e_local_series{{}};
  double e_local0 = 0;
  double ratio_end = 0;
  double final_quarter_max = 0;   ///< relative to e_local0
  double final_quarter_mean = 0;  ///< relative to e_local0
  DecayClass classification = DecayClass::Inconclusive;
};

/// Applies the decay thresholds to a sampled e_local(t) series. The final
/// quarter is t >= 0.75 t_last.
DecayVerdict classify_decay(const std::vector<double>& times, const std::vector<double>& e_local);

/// Grid sampling of the initial condition, validated against `mode`.
ModeStated build_initial_state(const DecayExperimentSpec& spec);

/// Radius beyond which the initial data is below 1e-12 of its scale.
double support_radius(const InitialCondition& initial);

/// Runs the experiment and classifies e_local[R]. Throws ValidationError if
/// R >= L or t_end exceeds the causal horizon of max(R, data support).
DecayVerdict run_decay(const DecayExperimentSpec& spec);

/// JSON verdict record: id, spec echo, ratio_end, classification, CSV path.
std::string verdict_record(const std::string& id, const DecayExperimentSpec& spec, const DecayVerdict& verdict,
                           const std::string& csv_path);

enum class Perturbation {
  Scale,          ///< phi, phi_t, u, u_dot all times (1 + epsilon)
  PlateVelocity,  ///< u_dot + epsilon
};

struct StabilityReport {
  std::vector<double> times;
  std::vector<double> deviation;          ///< energy-norm distance sqrt(2 E(a - b))
  std::vector<double> difference_energy;  ///< E(a - b)
  double max_deviation = 0;
  double min_deviation = 0;
  /// Largest |E_diff(t) - E_diff(0)| / E_diff(0); zero for a zero difference.
  double difference_energy_drift = 0;
};

/// Simulates the periodic solution and its perturbation side by side up to
/// `horizon`, recording their distance every `stride` steps.
StabilityReport stability_run(const PeriodicModeSpecd& spec, double epsilon, const GridSpecd& grid, double horizon,
                              Perturbation kind = Perturbation::Scale, double gamma = 0.0,
                              std::int64_t stride = 10);

/// Supremum over probe times of the distance between the periodic
/// trajectory and its (1 + epsilon)-scaled copy.
double stability_probe(const PeriodicModeSpecd& spec, double epsilon, const GridSpecd& grid, double horizon);

}  // namespace tubefsi
