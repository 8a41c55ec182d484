// SPDX-License-Identifier: Apache-2.0
//
// phasor -- phase-only array response adjustment via polygon construction
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "phasor/array_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "nonuniform11.hpp"

namespace phasor {
namespace {

constexpr double kPi = std::numbers::pi;

ArrayGeometry fixture_geometry()
{
    return ArrayGeometry(testdata::kPositions);
}

TEST(Angle, DegreeRadianRoundtrip)
{
    EXPECT_DOUBLE_EQ(Angle::from_degrees(-30.0).radians(), -30.0 * kPi / 180.0);
    EXPECT_DOUBLE_EQ(Angle::from_radians(kPi / 4).degrees(), 45.0);
}

TEST(Angle, RejectsOutOfRangeAndNonFinite)
{
    EXPECT_THROW(Angle::from_degrees(90.1), std::invalid_argument);
    EXPECT_THROW(Angle::from_degrees(-120.0), std::invalid_argument);
    EXPECT_THROW(Angle::from_degrees(std::nan("")), std::invalid_argument);
    // Grid arithmetic overshoot within 1e-9 rad is clamped, not rejected.
    EXPECT_DOUBLE_EQ(Angle::from_degrees(90.0 + 1e-12).degrees(), 90.0);
}

TEST(PowerLevel, DbView)
{
    EXPECT_DOUBLE_EQ(PowerLevel::from_db(-30.0).linear(), 1e-3);
    EXPECT_DOUBLE_EQ(PowerLevel::from_linear(100.0).db(), 20.0);
    EXPECT_TRUE(PowerLevel::exact_null().is_null());
    EXPECT_EQ(PowerLevel::exact_null().db(), -std::numeric_limits<double>::infinity());
    EXPECT_TRUE(PowerLevel::from_db(-std::numeric_limits<double>::infinity()).is_null());
    EXPECT_THROW(PowerLevel::from_linear(-1.0), std::invalid_argument);
}

TEST(ArrayGeometry, Validation)
{
    EXPECT_THROW(ArrayGeometry({}), std::invalid_argument);
    EXPECT_THROW(ArrayGeometry({0.0, std::nan("")}), std::invalid_argument);
    EXPECT_EQ(ArrayGeometry({0.0}).size(), 1u);
}

TEST(WeightVector, Validation)
{
    EXPECT_THROW(WeightVector({}), std::invalid_argument);
    EXPECT_THROW(WeightVector({{0.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
    EXPECT_NO_THROW(WeightVector({{0.0, 0.0}, {1.0, 0.0}}));
}

TEST(SteeringVector, BroadsideIsAllOnes)
{
    const ArrayGeometry geom({0.0, 0.5, 1.0});
    const ComplexVector a = steering_vector(geom, Angle::from_degrees(0.0));
    for (const Complex& e : a) {
        EXPECT_DOUBLE_EQ(e.real(), 1.0);
        EXPECT_DOUBLE_EQ(e.imag(), 0.0);
    }
}

TEST(SteeringVector, EndfireAlternates)
{
    const ArrayGeometry geom({0.0, 0.5, 1.0});
    const ComplexVector a = steering_vector(geom, Angle::from_degrees(90.0));
    EXPECT_NEAR(std::abs(a[0] - Complex(1.0, 0.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(a[1] - Complex(-1.0, 0.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(a[2] - Complex(1.0, 0.0)), 0.0, 1e-14);
}

TEST(SteeringVector, FixtureAtMinus30MatchesDirectFormula)
{
    const ArrayGeometry geom = fixture_geometry();
    const ComplexVector a = steering_vector(geom, Angle::from_degrees(-30.0));
    for (std::size_t n = 0; n < geom.size(); ++n) {
        const Complex expected = std::polar(1.0, -kPi * testdata::kPositions[n]);
        EXPECT_NEAR(std::abs(a[n] - expected), 0.0, 1e-14) << "entry " << n;
        EXPECT_NEAR(std::abs(a[n]), 1.0, 1e-14);
    }
}

TEST(SteeringVector, UnitModulusProperty)
{
    std::mt19937_64 rng(11u);
    std::uniform_real_distribution<double> pos(-5.0, 15.0);
    std::uniform_real_distribution<double> ang(-90.0, 90.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> x(1 + rng() % 24);
        for (double& v : x)
            v = pos(rng);
        const ComplexVector a = steering_vector(ArrayGeometry(x), Angle::from_degrees(ang(rng)));
        for (const Complex& e : a)
            ASSERT_NEAR(std::abs(e), 1.0, 1e-14);
    }
}

TEST(PowerResponse, UnityAtMainBeam)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w =
        build_preassigned_weight(geom, testdata::kGains, Angle::from_degrees(-30.0));
    const PowerLevel level = power_response(w, geom, Angle::from_degrees(-30.0),
                                            Angle::from_degrees(-30.0));
    EXPECT_NEAR(level.linear(), 1.0, 1e-15);
}

TEST(PowerResponse, PublishedWeightsHitMinus30Db)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w{ComplexVector(testdata::kAdjustedWeights.begin(),
                                       testdata::kAdjustedWeights.end())};
    const PowerLevel level = power_response(w, geom, Angle::from_degrees(testdata::kThetaCDeg),
                                            Angle::from_degrees(testdata::kTheta0Deg));
    EXPECT_NEAR(level.db(), testdata::kLevelDb, 0.1);
}

TEST(PowerResponse, GlobalPhaseInvariance)
{
    std::mt19937_64 rng(23u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const ArrayGeometry geom = fixture_geometry();
    for (int rep = 0; rep < 25; ++rep) {
        ComplexVector w(geom.size());
        for (Complex& e : w)
            e = Complex(u(rng), u(rng));
        const double c = kPi * u(rng);
        ComplexVector w_rot(w);
        for (Complex& e : w_rot)
            e *= std::polar(1.0, c);
        const Angle thetaC = Angle::from_degrees(90.0 * u(rng));
        const Angle theta0 = Angle::from_degrees(testdata::kTheta0Deg);
        const double a = power_response(WeightVector(w), geom, thetaC, theta0).linear();
        const double b = power_response(WeightVector(w_rot), geom, thetaC, theta0).linear();
        ASSERT_NEAR(a, b, 1e-12 * std::max(a, 1.0));
    }
}

TEST(PowerResponse, DegenerateMainBeamThrows)
{
    const ArrayGeometry geom({0.0, 0.5});
    const WeightVector w{{{1.0, 0.0}, {-1.0, 0.0}}}; // orthogonal to a(0)
    EXPECT_THROW(power_response(w, geom, Angle::from_degrees(30.0), Angle::from_degrees(0.0)),
                 DegenerateMainBeam);
}

TEST(SamplePattern, SinglePointGridIsZeroDb)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w =
        build_preassigned_weight(geom, testdata::kGains, Angle::from_degrees(-30.0));
    const auto samples =
        sample_pattern(w, geom, Angle::from_degrees(-30.0), {Angle::from_degrees(-30.0)});
    ASSERT_EQ(samples.size(), 1u);
    EXPECT_DOUBLE_EQ(samples[0].theta_deg, -30.0);
    EXPECT_NEAR(samples[0].power_db, 0.0, 1e-12);
}

TEST(SamplePattern, PublishedWeightsSampleAt52)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w{ComplexVector(testdata::kAdjustedWeights.begin(),
                                       testdata::kAdjustedWeights.end())};
    const auto samples = sample_pattern(w, geom, Angle::from_degrees(testdata::kTheta0Deg),
                                        {Angle::from_degrees(52.0)});
    ASSERT_EQ(samples.size(), 1u);
    EXPECT_NEAR(samples[0].power_db, -30.0, 0.1);
}

TEST(SamplePattern, GlobalPhaseLeavesPatternUnchanged)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w =
        build_preassigned_weight(geom, testdata::kGains, Angle::from_degrees(-30.0));
    ComplexVector rotated(w.entries());
    for (Complex& e : rotated)
        e *= std::polar(1.0, 1.234);

    std::vector<Angle> grid;
    for (double deg = -90.0; deg <= 90.0; deg += 7.5)
        grid.push_back(Angle::from_degrees(deg));

    const auto pa = sample_pattern(w, geom, Angle::from_degrees(-30.0), grid);
    const auto pb = sample_pattern(WeightVector(rotated), geom, Angle::from_degrees(-30.0), grid);
    for (std::size_t k = 0; k < pa.size(); ++k)
        ASSERT_NEAR(pa[k].power_db, pb[k].power_db, 1e-9);
}

TEST(SamplePattern, EmptyGridRejected)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w =
        build_preassigned_weight(geom, testdata::kGains, Angle::from_degrees(-30.0));
    EXPECT_THROW(sample_pattern(w, geom, Angle::from_degrees(-30.0), {}), std::invalid_argument);
}

TEST(BuildPreassignedWeight, UnitGainsAtBroadside)
{
    const ArrayGeometry geom({0.0, 0.5, 1.0, 1.5});
    const WeightVector w =
        build_preassigned_weight(geom, {1.0, 1.0, 1.0, 1.0}, Angle::from_degrees(0.0));
    for (std::size_t n = 0; n < w.size(); ++n)
        EXPECT_NEAR(std::abs(w[n] - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(BuildPreassignedWeight, MagnitudesEqualGains)
{
    const ArrayGeometry geom = fixture_geometry();
    const WeightVector w =
        build_preassigned_weight(geom, testdata::kGains, Angle::from_degrees(-30.0));
    for (std::size_t n = 0; n < w.size(); ++n)
        EXPECT_NEAR(std::abs(w[n]), testdata::kGains[n], 1e-15 * testdata::kGains[n]);
}

TEST(BuildPreassignedWeight, MagnitudeLawProperty)
{
    std::mt19937_64 rng(37u);
    std::uniform_real_distribution<double> gain(0.5, 1.5);
    std::uniform_real_distribution<double> pos(0.0, 10.0);
    std::uniform_real_distribution<double> ang(-90.0, 90.0);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rng() % 30;
        std::vector<double> x(n), g(n);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = pos(rng);
            g[k] = gain(rng);
        }
        const WeightVector w = build_preassigned_weight(ArrayGeometry(x), g,
                                                        Angle::from_degrees(ang(rng)));
        for (std::size_t k = 0; k < n; ++k)
            ASSERT_NEAR(std::abs(w[k]), g[k], 1e-15 * g[k]);
    }
}

TEST(BuildPreassignedWeight, Validation)
{
    const ArrayGeometry geom({0.0, 0.5, 1.0});
    EXPECT_THROW(build_preassigned_weight(geom, {1.0, 1.0}, Angle::from_degrees(0.0)),
                 LengthMismatch);
    EXPECT_THROW(build_preassigned_weight(geom, {1.0, 0.0, 1.0}, Angle::from_degrees(0.0)),
                 std::invalid_argument);
}

} // namespace
} // namespace phasor
