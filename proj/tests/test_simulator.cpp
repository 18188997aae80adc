#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tubefsi/periodic.hpp"
#include "tubefsi/simulator.hpp"

#include <cmath>
#include <sstream>
#include <thread>

using namespace tubefsi;

namespace {

PeriodicModeSpecd mode_11(double A = 1, double B = 0, double nu = 1) {
  return {solve_dispersion(CouplingParamsd(2.0, nu)), A, B};
}

// Relative L2 distance of two states: int (dphi^2 + dphi_t^2) dz + du^2 + du_dot^2.
double relative_l2(const ModeStated& a, const ModeStated& b, const GridSpecd& grid) {
  auto norm2 = [&](const Vectord& phi, const Vectord& phi_t, double u, double ud) {
    const Vectord d = (phi.array().square() + phi_t.array().square()).matrix();
    return grid.h() * (d.sum() - 0.5 * (d[0] + d[d.size() - 1])) + u * u + ud * ud;
  };
  const double diff = norm2(a.phi - b.phi, a.phi_t - b.phi_t, a.u - b.u, a.u_dot - b.u_dot);
  return std::sqrt(diff / norm2(b.phi, b.phi_t, b.u, b.u_dot));
}

double period_return_error(const PeriodicModeSpecd& spec, double L, int nz, double dt_max) {
  const double T = spec.period();
  const GridSpecd grid(L, nz, aligned_time_step(T, dt_max), T);
  const ModeStated initial = initial_data(spec, grid);
  ModeStated s = initial;
  integrate(s, grid, BottomCondition::Elastic, grid.steps(), grid.steps(), [](const ModeStated&, auto) {});
  EXPECT_NEAR(s.t, T, 1e-9);
  return relative_l2(s, initial, grid);
}

}  // namespace

TEST(Grid, Validation) {
  EXPECT_THROW(GridSpecd(0.0, 10, 0.01, 1.0), ValidationError);
  EXPECT_THROW(GridSpecd(10.0, 1, 0.01, 1.0), ValidationError);
  EXPECT_THROW(GridSpecd(10.0, 100, 0.0, 1.0), ValidationError);
  EXPECT_THROW(GridSpecd(10.0, 100, 0.01, 0.0), ValidationError);
  EXPECT_THROW(GridSpecd(10.0, 100, 0.091, 1.0), ValidationError);  // CFL: h = 0.1
  EXPECT_NO_THROW(GridSpecd(10.0, 100, 0.09, 1.0));
  EXPECT_THROW(GridSpecd(100.0, 100, 0.5, 1.0, 2.0), ValidationError);  // dt > 0.5/lambda
  EXPECT_NO_THROW(GridSpecd(100.0, 100, 0.25, 1.0, 2.0));
}

TEST(Grid, StepsAndAlignedStep) {
  const GridSpecd grid(10.0, 100, 0.05, 1.0);
  EXPECT_EQ(grid.steps(), 20);
  const double dt = aligned_time_step(5.0039, 0.008);
  EXPECT_LE(dt, 0.008);
  EXPECT_NEAR(5.0039 / dt, std::round(5.0039 / dt), 1e-9);
}

TEST(Step, ZeroStateIsFixedPoint) {
  const GridSpecd grid(10.0, 100, 0.05, 1.0);
  const ModeStated zero(CouplingParamsd(2.0, 1.0), grid.nodes());
  for (auto bottom : {BottomCondition::Elastic, BottomCondition::Rigid}) {
    const ModeStated next = step(zero, grid, bottom);
    EXPECT_EQ(next.phi.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(next.phi_t.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(next.u, 0.0);
    EXPECT_EQ(next.u_dot, 0.0);
    EXPECT_DOUBLE_EQ(next.t, 0.05);
  }
}

TEST(Step, RejectsMismatchedState) {
  const GridSpecd grid(10.0, 100, 0.05, 1.0);
  const ModeStated s(CouplingParamsd(2.0, 1.0), 50);
  EXPECT_THROW(step(s, grid, BottomCondition::Rigid), ValidationError);
}

TEST(Step, BlowUpIsReported) {
  const GridSpecd grid(10.0, 100, 0.05, 1.0);
  ModeStated s(CouplingParamsd(2.0, 1.0), grid.nodes());
  s.phi[50] = 2e12;
  try {
    step(s, grid, BottomCondition::Rigid);
    FAIL() << "expected instability";
  } catch (const InstabilityError& e) {
    EXPECT_DOUBLE_EQ(e.time(), 0.05);
  }
}

TEST(Step, ElasticWithoutCouplingMatchesRigidBitForBit) {
  const GridSpecd grid(20.0, 400, 0.04, 5.0);
  ModeStated s(CouplingParamsd::decoupled_limit(3.0), grid.nodes());
  for (Eigen::Index j = 0; j < grid.nodes(); ++j) {
    const double z = grid.z(j);
    s.phi[j] = std::exp(-4 * (z - 1.5) * (z - 1.5)) + 0.3 * std::exp(-z);
    s.phi_t[j] = std::sin(z) * std::exp(-z);
  }
  ModeStated rigid = s, elastic = s;
  for (int n = 0; n < 200; ++n) {
    advance(rigid, grid, BottomCondition::Rigid);
    advance(elastic, grid, BottomCondition::Elastic);
    ASSERT_EQ(elastic.u_dot, 0.0);
    ASSERT_EQ(elastic.u, 0.0);
    ASSERT_EQ(elastic.phi[0], rigid.phi[0]) << n;
    ASSERT_EQ(elastic.phi_t[0], rigid.phi_t[0]) << n;
  }
  EXPECT_TRUE((elastic.phi.array() == rigid.phi.array()).all());
  EXPECT_TRUE((elastic.phi_t.array() == rigid.phi_t.array()).all());
}

TEST(Step, TimeReversible) {
  // The plate is driven by the gas velocity, so plain velocity reversal is not
  // a symmetry. (phi, phi_t, u, u_dot) -> (phi, -phi_t, -u, u_dot) is.
  const auto spec = mode_11(1.0, 0.3);
  const GridSpecd grid(60.0, 3000, 0.016, 10.0);
  const ModeStated initial = initial_data(spec, grid);
  auto reverse = [](ModeStated& s) {
    s.phi_t = -s.phi_t;
    s.u = -s.u;
  };
  ModeStated s = initial;
  for (int n = 0; n < 500; ++n) advance(s, grid, BottomCondition::Elastic);
  EXPECT_GT((s.phi - initial.phi).cwiseAbs().maxCoeff(), 0.1);
  reverse(s);
  for (int n = 0; n < 500; ++n) advance(s, grid, BottomCondition::Elastic);
  reverse(s);
  EXPECT_LT((s.phi - initial.phi).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((s.phi_t - initial.phi_t).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT(std::abs(s.u - initial.u), 1e-8);
  EXPECT_LT(std::abs(s.u_dot - initial.u_dot), 1e-8);
}

TEST(Step, RigidReversibleByVelocityNegation) {
  const GridSpecd grid(20.0, 2000, 0.008, 1.0);
  ModeStated s(CouplingParamsd(2.0, 1.0), grid.nodes());
  for (Eigen::Index j = 0; j < grid.nodes(); ++j) s.phi[j] = std::exp(-(grid.z(j) - 5) * (grid.z(j) - 5) / 0.5);
  const ModeStated initial = s;
  for (int n = 0; n < 400; ++n) advance(s, grid, BottomCondition::Rigid);
  s.phi_t = -s.phi_t;
  for (int n = 0; n < 400; ++n) advance(s, grid, BottomCondition::Rigid);
  EXPECT_LT((s.phi - initial.phi).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((s.phi_t + initial.phi_t).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Simulation, RigidGaussianMatchesSpectralOracle) {
  const double lambda = 2.0, width = 0.5;
  const auto gaussian = [&](double z) { return std::exp(-(z - 5) * (z - 5) / (2 * width * width)); };
  const GridSpecd grid(200.0, 20000, 0.008, 2.0);
  ModeStated s(CouplingParamsd(lambda, 1.0), grid.nodes());
  for (Eigen::Index j = 0; j < grid.nodes(); ++j) s.phi[j] = gaussian(grid.z(j));
  integrate(s, grid, BottomCondition::Rigid, grid.steps(), grid.steps(), [](const ModeStated&, auto) {});
  ASSERT_NEAR(s.t, 2.0, 1e-12);

  const Eigen::Index nodes = 2001;  // [0, 20]
  std::vector<double> z(nodes);
  for (Eigen::Index j = 0; j < nodes; ++j) z[j] = grid.z(j);
  const auto exact = oracle::spectral_even_extension(gaussian, lambda, 2.0, z);
  double l2 = 0;
  for (Eigen::Index j = 0; j < nodes; ++j) {
    const double d = s.phi[j] - exact[j];
    l2 += (j == 0 || j == nodes - 1 ? 0.5 : 1.0) * d * d * grid.h();
  }
  EXPECT_LE(std::sqrt(l2), 1e-3);
  // the packet has split: the peak left z = 5
  EXPECT_LT(std::abs(s.phi[500]), 0.5);
}

TEST(Simulation, PeriodicReturnsAfterOnePeriodAtSecondOrder) {
  const auto spec = mode_11();
  const double e1 = period_return_error(spec, 60.0, 3000, 0.016);
  const double e2 = period_return_error(spec, 60.0, 6000, 0.008);
  EXPECT_LT(e1, 1e-3);
  const double order = std::log2(e1 / e2);
  EXPECT_GE(order, 1.8);
  EXPECT_LE(order, 2.2);
}

TEST(Simulation, EnergyDriftOverTenPeriods) {
  const auto spec = mode_11(0.6, 0.8);
  const double T = spec.period();
  const GridSpecd grid(100.0, 10000, aligned_time_step(T, 0.008), 10 * T);
  const auto series = run(initial_data(spec, grid), grid, BottomCondition::Elastic,
                          ProbeSet{{{ProbeKind::Total}}, 25});
  const auto e = series.column("E_total");
  double drift = 0;
  for (double v : e) drift = std::max(drift, std::abs(v - e.front()) / e.front());
  EXPECT_LE(drift, 1e-4);
}

TEST(Simulation, DampedEnergyNonIncreasing) {
  const auto spec = mode_11();
  const double T = spec.period();
  const GridSpecd grid(100.0, 10000, aligned_time_step(T, 0.008), 5 * T);
  ModeStated s = initial_data(spec, grid);
  s.gamma = 0.1;
  const auto e = run(s, grid, BottomCondition::Elastic, ProbeSet{{{ProbeKind::Total}}, 10}).column("E_total");
  for (std::size_t i = 1; i < e.size(); ++i) EXPECT_LE(e[i], e[i - 1]) << i;
  EXPECT_LT(e.back(), 0.9 * e.front());
}

TEST(Simulation, RunSamplesAndCsv) {
  const auto spec = mode_11();
  const GridSpecd grid(40.0, 2000, 0.01, 1.0);
  const auto series = run(initial_data(spec, grid), grid, BottomCondition::Elastic, ProbeSet::standard({5.0, 10.0}, 30));
  // t = 0, every 30 steps of 100, and the last step
  EXPECT_EQ(series.size(), 5u);
  EXPECT_NEAR(series.times().back(), 1.0, 1e-12);
  std::ostringstream csv;
  series.write_csv(csv, {"demo"});
  std::istringstream lines(csv.str());
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first, "# demo");
  EXPECT_EQ(second, "t,E_total,E_gas,E_plate,E_local_5,E_local_10,u,u_dot,phi0,phi_t0");
  EXPECT_THROW(series.column("nope"), ValidationError);
  EXPECT_THROW(run(initial_data(spec, grid), grid, BottomCondition::Elastic, ProbeSet::standard({40.0}, 1)),
               ValidationError);
}

TEST(Simulation, ProbeNamesRoundTrip) {
  for (const auto& p : ProbeSet::standard({2.5, 10.0}, 1).probes) {
    const Probe back = Probe::parse(p.name());
    EXPECT_EQ(back.kind, p.kind);
    EXPECT_EQ(back.R, p.R);
  }
  EXPECT_THROW(Probe::parse("E_local_x"), ValidationError);
  EXPECT_THROW(Probe::parse("energy"), ValidationError);
}

TEST(Simulation, IndependentRunsMayRunConcurrently) {
  const auto spec = mode_11();
  const GridSpecd grid(60.0, 3000, 0.01, 3.0);
  const ModeStated initial = initial_data(spec, grid);
  const ProbeSet probes = ProbeSet::standard({10.0}, 20);
  const auto serial = run(initial, grid, BottomCondition::Elastic, probes);
  TimeSeries a{{}}, b{{}};
  {
    std::jthread ta([&] { a = run(initial, grid, BottomCondition::Elastic, probes); });
    std::jthread tb([&] { b = run(initial, grid, BottomCondition::Elastic, probes); });
  }
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(a.row(i), serial.row(i));
    EXPECT_EQ(b.row(i), serial.row(i));
  }
}

TEST(CausalHorizon, Examples) {
  EXPECT_EQ(causal_horizon(GridSpecd(100.0, 1000, 0.05, 1.0), 10.0), 90.0);
  EXPECT_EQ(causal_horizon(GridSpecd(40.0, 400, 0.05, 1.0), 40.0), 0.0);
  const double horizon = causal_horizon(GridSpecd(200.0, 2000, 0.05, 1.0), exponential_support(0.75));
  EXPECT_NEAR(horizon, 163.1586385, 1e-6);  // 200 - ln(1e12)/0.75
  EXPECT_THROW(causal_horizon(GridSpecd(40.0, 400, 0.05, 1.0), 41.0), ValidationError);
}
