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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phasor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

} // namespace

Angle Angle::from_radians(double rad)
{
    if (!std::isfinite(rad))
        throw std::invalid_argument("Angle: value must be finite");
    // Grid arithmetic can land a hair beyond +-90 deg; accept and clamp.
    if (std::abs(rad) > kHalfPi + 1e-9)
        throw std::invalid_argument("Angle: steering angle outside [-90, 90] degrees");
    return Angle(std::clamp(rad, -kHalfPi, kHalfPi));
}

Angle Angle::from_degrees(double deg)
{
    if (!std::isfinite(deg))
        throw std::invalid_argument("Angle: value must be finite");
    return from_radians(deg * kPi / 180.0);
}

double Angle::degrees() const
{
    return rad_ * 180.0 / kPi;
}

PowerLevel PowerLevel::from_linear(double linear)
{
    if (!(linear >= 0.0) || !std::isfinite(linear))
        throw std::invalid_argument("PowerLevel: linear power must be finite and >= 0");
    return PowerLevel(linear);
}

PowerLevel PowerLevel::from_db(double db)
{
    if (std::isnan(db) || db == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("PowerLevel: dB value must not be NaN or +inf");
    if (db == -std::numeric_limits<double>::infinity())
        return exact_null();
    return PowerLevel(std::pow(10.0, db / 10.0));
}

double PowerLevel::db() const
{
    return linear_ == 0.0 ? -std::numeric_limits<double>::infinity() : 10.0 * std::log10(linear_);
}

ArrayGeometry::ArrayGeometry(std::vector<double> positions_wavelengths)
    : positions_(std::move(positions_wavelengths))
{
    if (positions_.empty())
        throw std::invalid_argument("ArrayGeometry: needs at least one element");
    for (double x : positions_)
        if (!std::isfinite(x))
            throw std::invalid_argument("ArrayGeometry: positions must be finite");
}

WeightVector::WeightVector(ComplexVector entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw std::invalid_argument("WeightVector: needs at least one entry");
    bool any_nonzero = false;
    for (const Complex& w : entries_) {
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw std::invalid_argument("WeightVector: entries must be finite");
        any_nonzero |= (w != Complex(0.0, 0.0));
    }
    if (!any_nonzero)
        throw std::invalid_argument("WeightVector: must not be identically zero");
}

ComplexVector steering_vector(const ArrayGeometry& geom, Angle theta)
{
    const double s = std::sin(theta.radians());
    ComplexVector a(geom.size());
    for (std::size_t n = 0; n < geom.size(); ++n)
        a[n] = std::polar(1.0, 2.0 * kPi * geom.positions()[n] * s);
    return a;
}

Complex array_response(const WeightVector& w, const ComplexVector& a)
{
    if (w.size() != a.size())
        throw LengthMismatch("array_response: weight has " + std::to_string(w.size()) +
                             " entries, steering vector has " + std::to_string(a.size()));
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < a.size(); ++n)
        acc += std::conj(w[n]) * a[n];
    return acc;
}

namespace {

double weight_norm(const WeightVector& w)
{
    double s = 0.0;
    for (const Complex& e : w.entries())
        s += std::norm(e);
    return std::sqrt(s);
}

} // namespace

PowerLevel power_response(const WeightVector& w, const ArrayGeometry& geom, Angle theta_c,
                          Angle theta_0)
{
    const Complex main_beam = array_response(w, steering_vector(geom, theta_0));
    const double floor = 1e-12 * weight_norm(w) * std::sqrt(static_cast<double>(geom.size()));
    if (std::abs(main_beam) <= floor)
        throw DegenerateMainBeam("power_response: |w^H a(theta0)| below " + std::to_string(floor));
    const Complex at_c = array_response(w, steering_vector(geom, theta_c));
    return PowerLevel::from_linear(std::norm(at_c) / std::norm(main_beam));
}

std::vector<PatternSample> sample_pattern(const WeightVector& w, const ArrayGeometry& geom,
                                          Angle theta_0, const std::vector<Angle>& grid)
{
    if (grid.empty())
        throw std::invalid_argument("sample_pattern: grid must not be empty");
    const Complex main_beam = array_response(w, steering_vector(geom, theta_0));
    const double floor = 1e-12 * weight_norm(w) * std::sqrt(static_cast<double>(geom.size()));
    if (std::abs(main_beam) <= floor)
        throw DegenerateMainBeam("sample_pattern: |w^H a(theta0)| below " + std::to_string(floor));
    const double denom = std::norm(main_beam);

    std::vector<PatternSample> out;
    out.reserve(grid.size());
    for (const Angle& theta : grid) {
        const Complex r = array_response(w, steering_vector(geom, theta));
        const double linear = std::norm(r) / denom;
        const double db = linear == 0.0 ? -std::numeric_limits<double>::infinity()
                                        : 10.0 * std::log10(linear);
        out.push_back(PatternSample{theta.degrees(), db});
    }
    return out;
}

WeightVector build_preassigned_weight(const ArrayGeometry& geom, const std::vector<double>& gains,
                                      Angle theta_0)
{
    if (gains.size() != geom.size())
        throw LengthMismatch("build_preassigned_weight: " + std::to_string(gains.size()) +
                             " gains for " + std::to_string(geom.size()) + " elements");
    for (double g : gains)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("build_preassigned_weight: gains must be > 0");

    ComplexVector a = steering_vector(geom, theta_0);
    ComplexVector w(geom.size());
    for (std::size_t n = 0; n < geom.size(); ++n)
        w[n] = gains[n] * a[n];
    return WeightVector(std::move(w));
}

} // namespace phasor
