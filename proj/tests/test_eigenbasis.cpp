#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tubefsi/eigenbasis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tubefsi;

namespace {
constexpr double kPi = std::numbers::pi;

RectangleMode mode_of(const Eigenpair& p) { return std::get<RectangleMode>(p.descriptor()); }
}  // namespace

TEST(Eigenbasis, FirstModeIsOneOne) {
  const auto seq = rectangle_eigensequence(1);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].lambda(), 2.0);
  EXPECT_EQ(mode_of(seq[0]), (RectangleMode{1, 1}));
  EXPECT_EQ(seq[0].index(), 1);
}

TEST(Eigenbasis, FirstThreeWithTieBreak) {
  const auto seq = rectangle_eigensequence(3);
  EXPECT_EQ(seq[0].lambda(), 2.0);
  EXPECT_EQ(seq[1].lambda(), 5.0);
  EXPECT_EQ(seq[2].lambda(), 5.0);
  EXPECT_EQ(mode_of(seq[1]), (RectangleMode{1, 2}));
  EXPECT_EQ(mode_of(seq[2]), (RectangleMode{2, 1}));
}

TEST(Eigenbasis, TenthModeMatchesBruteForce) {
  const auto brute = oracle::brute_force_rectangle(10);
  const auto seq = rectangle_eigensequence(10);
  EXPECT_EQ(seq[9].lambda(), double(brute[9].lambda));
  EXPECT_EQ(mode_of(seq[9]), (RectangleMode{brute[9].m, brute[9].n}));
  // enumeration: 2,5,5,8,10,10,13,13,17,17
  EXPECT_EQ(seq[9].lambda(), 17.0);
  EXPECT_EQ(mode_of(seq[9]), (RectangleMode{4, 1}));
}

TEST(Eigenbasis, LongSequenceMatchesBruteForce) {
  const auto brute = oracle::brute_force_rectangle(40);  // complete below lambda = 1601
  const auto seq = rectangle_eigensequence(500);
  ASSERT_LT(seq[499].lambda(), 1601.0);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    ASSERT_EQ(seq[k].lambda(), double(brute[k].lambda)) << "k=" << k;
    ASSERT_EQ(mode_of(seq[k]), (RectangleMode{brute[k].m, brute[k].n})) << "k=" << k;
    ASSERT_EQ(seq[k].index(), int(k) + 1);
  }
}

TEST(Eigenbasis, RejectsBadCount) { EXPECT_THROW(rectangle_eigensequence(0), ValidationError); }

TEST(Eigenbasis, PairInvariants) {
  EXPECT_THROW(Eigenpair(1, 0.0, ExternalMode{"x"}), ValidationError);
  EXPECT_THROW(Eigenpair(1, -3.0, ExternalMode{"x"}), ValidationError);
  EXPECT_THROW(Eigenpair(0, 3.0, ExternalMode{"x"}), ValidationError);
  EXPECT_THROW(Eigenpair(1, 6.0, RectangleMode{1, 2}), ValidationError);
  EXPECT_NO_THROW(Eigenpair(1, 5.0, RectangleMode{1, 2}));
  EXPECT_THROW(EigenSequence({Eigenpair::rectangle(1, 1, 2), Eigenpair::rectangle(2, 1, 1)}), ValidationError);
}

TEST(Eigenfunction, PeakValue) {
  const auto p = Eigenpair::rectangle(1, 1, 1);
  EXPECT_NEAR(eigenfunction_eval(p, kPi / 2, kPi / 2), 2 / kPi, 1e-15);
}

TEST(Eigenfunction, VanishesOnBoundary) {
  for (const auto& p : rectangle_eigensequence(20)) {
    EXPECT_EQ(eigenfunction_eval(p, 0.0, 1.3), 0.0);
    EXPECT_EQ(eigenfunction_eval(p, 0.7, 0.0), 0.0);
  }
}

TEST(Eigenfunction, TwoOneAtQuarter) {
  // (2/pi) sin(pi/2) sin(pi/2), evaluated independently.
  const auto p = Eigenpair::rectangle(1, 2, 1);
  EXPECT_NEAR(eigenfunction_eval(p, kPi / 4, kPi / 2), 0.63661977236758134, 1e-15);
}

TEST(Eigenfunction, ExternalIsUnsupported) {
  const Eigenpair p(1, 3.5, ExternalMode{"row 1"});
  EXPECT_THROW(eigenfunction_eval(p, 1.0, 1.0), UnsupportedError);
}

TEST(Eigenfunction, OutsideSquareIsDomainError) {
  EXPECT_THROW(eigenfunction_eval(Eigenpair::rectangle(1, 1, 1), -0.1, 1.0), DomainError);
  EXPECT_THROW(eigenfunction_eval(Eigenpair::rectangle(1, 1, 1), 1.0, 3.5), DomainError);
}

TEST(Eigenfunction, LongDoubleInstantiation) {
  const auto p = Eigenpair::rectangle(1, 1, 1);
  const long double pi = std::numbers::pi_v<long double>;
  EXPECT_NEAR(double(eigenfunction_eval(p, pi / 2, pi / 2) - 2 / pi), 0.0, 1e-18);
}

namespace {

// Max deviation of the midpoint-rule Gram matrix of the first modes from I.
double orthonormality_error(int N, const EigenSequence& seq) {
  const double h = kPi / N;
  Eigen::MatrixXd samples(N * N, seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) samples(i * N + j, k) = eigenfunction_eval(seq[k], (i + 0.5) * h, (j + 0.5) * h);
  const Eigen::MatrixXd gram = h * h * samples.transpose() * samples;
  return (gram - Eigen::MatrixXd::Identity(seq.size(), seq.size())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Eigenfunction, DiscreteOrthonormality) {
  const auto seq = rectangle_eigensequence(6);
  // Midpoint sums of these trigonometric products are exact up to aliasing,
  // so the error is at round-off for every N large enough.
  for (int N : {16, 32, 64}) EXPECT_LT(orthonormality_error(N, seq), 1e-12) << "N=" << N;
}

TEST(Eigenfunction, FiniteDifferenceLaplacianSecondOrder) {
  // -Delta e = lambda e via the 5-point stencil; error ~ h^2.
  const auto p = Eigenpair::rectangle(1, 2, 3);
  auto max_error = [&](double h) {
    double worst = 0;
    for (double x1 : {0.4, 1.1, 2.3})
      for (double x2 : {0.6, 1.7, 2.5}) {
        const double lap = (eigenfunction_eval(p, x1 + h, x2) + eigenfunction_eval(p, x1 - h, x2) +
                            eigenfunction_eval(p, x1, x2 + h) + eigenfunction_eval(p, x1, x2 - h) -
                            4 * eigenfunction_eval(p, x1, x2)) / (h * h);
        worst = std::max(worst, std::abs(-lap - p.lambda() * eigenfunction_eval(p, x1, x2)));
      }
    return worst;
  };
  const double e1 = max_error(0.02), e2 = max_error(0.01);
  EXPECT_LT(e1, 1e-2);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.1);
}

TEST(ExternalTable, ParsesSortsAndLabels) {
  std::istringstream in("# eigenvalues of some domain\n5.5\n\n  2.25  # first\n9\n");
  const auto seq = load_external_eigenvalues(in);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0].lambda(), 2.25);
  EXPECT_EQ(seq[1].lambda(), 5.5);
  EXPECT_EQ(seq[2].lambda(), 9.0);
  EXPECT_EQ(std::get<ExternalMode>(seq[0].descriptor()).label, "row 4");
  EXPECT_EQ(seq[2].index(), 3);
}

TEST(ExternalTable, NamesBadRow) {
  std::istringstream negative("1.0\n2.0\n-4.0\n");
  try {
    load_external_eigenvalues(negative);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  std::istringstream text("1.0\nabc\n");
  try {
    load_external_eigenvalues(text);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
  std::istringstream zero("0\n");
  EXPECT_THROW(load_external_eigenvalues(zero), ValidationError);
}

TEST(ExternalTable, MissingFile) {
  EXPECT_THROW(load_external_eigenvalues(std::filesystem::path("/nonexistent/eigs.txt")), IoError);
}
