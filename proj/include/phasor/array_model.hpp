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

#pragma once

#include <complex>
#include <vector>

#include "phasor/errors.hpp"

namespace phasor {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// A steering / observation direction. Radians internally, degrees at all
/// external boundaries. Restricted to [-90, 90] degrees.
class Angle {
  public:
    static Angle from_radians(double rad);
    static Angle from_degrees(double deg);

    double radians() const { return rad_; }
    double degrees() const;

  private:
    explicit Angle(double rad) : rad_(rad) {}
    double rad_;
};

/// A power ratio. Stored linear; `db()` gives the 10*log10 view.
/// linear == 0 encodes an exact null (db view -infinity).
class PowerLevel {
  public:
    static PowerLevel from_linear(double linear);
    static PowerLevel from_db(double db);
    static PowerLevel exact_null() { return PowerLevel(0.0); }

    double linear() const { return linear_; }
    double db() const;
    bool is_null() const { return linear_ == 0.0; }

  private:
    explicit PowerLevel(double linear) : linear_(linear) {}
    double linear_ = 1.0;
};

/// Element positions of a linear array, in units of the carrier wavelength.
class ArrayGeometry {
  public:
    explicit ArrayGeometry(std::vector<double> positions_wavelengths);

    std::size_t size() const { return positions_.size(); }
    const std::vector<double>& positions() const { return positions_; }

  private:
    std::vector<double> positions_;
};

/// Complex excitation per element. Never identically zero.
class WeightVector {
  public:
    explicit WeightVector(ComplexVector entries);

    std::size_t size() const { return entries_.size(); }
    const ComplexVector& entries() const { return entries_; }
    Complex operator[](std::size_t n) const { return entries_[n]; }

  private:
    ComplexVector entries_;
};

struct PatternSample {
    double theta_deg;
    double power_db;
};

/// Steering vector of an isotropic linear array:
/// entry n = exp(j * 2*pi * x_n * sin(theta)), unit modulus.
ComplexVector steering_vector(const ArrayGeometry& geom, Angle theta);

/// Normalized power response |w^H a(theta_c)|^2 / |w^H a(theta_0)|^2.
/// Throws DegenerateMainBeam when |w^H a(theta_0)| <= 1e-12 * ||w|| * sqrt(N).
PowerLevel power_response(const WeightVector& w, const ArrayGeometry& geom,
                          Angle theta_c, Angle theta_0);

/// Pattern in dB over a grid of angles, normalized so theta_0 sits at 0 dB.
std::vector<PatternSample> sample_pattern(const WeightVector& w, const ArrayGeometry& geom,
                                          Angle theta_0, const std::vector<Angle>& grid);

/// w_n = g_n * a_n(theta_0); entry magnitudes equal the gains.
WeightVector build_preassigned_weight(const ArrayGeometry& geom,
                                      const std::vector<double>& gains, Angle theta_0);

/// w^H a as a plain inner product (conjugates w). Lengths must match.
Complex array_response(const WeightVector& w, const ComplexVector& a);

} // namespace phasor
