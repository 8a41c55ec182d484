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

#include <optional>
#include <string>
#include <vector>

#include "phasor/adjuster.hpp"
#include "phasor/array_model.hpp"

namespace phasor {

// JSON scenario schema (angles in degrees, rhoC in dB with the string "null"
// standing for an exact null, positions in wavelengths):
//   {
//     "positions":  [0.0, 0.3, ...],
//     "gains":      [1.12, ...],          // exactly one of gains / weights
//     "weights":    [[re, im], ...],
//     "theta0_deg": -30.0,
//     "thetaC_deg": 52.0,
//     "rhoC_db":    -30.0,                // or "null"
//     "psiC_rad":   1.23                  // optional
//   }
struct Scenario {
    std::vector<double> positions;
    std::optional<std::vector<double>> gains;
    std::optional<ComplexVector> weights;
    double theta0_deg = 0.0;
    double thetaC_deg = 0.0;
    PowerLevel rhoC = PowerLevel::from_linear(1.0);
    std::optional<double> psiC;
};

/// A result file is the scenario it came from plus the outputs; it parses
/// as a weights source for pattern export ("w_new" wins over gains/weights).
struct ResultFile {
    Scenario scenario;
    ComplexVector w_new;
    double psi_used = 0.0;
    double residual = 0.0;
    double achieved_db = 0.0;
    double distortion_db = 0.0;
};

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& sc, const std::string& path);

void save_result(const ResultFile& rf, const std::string& path);
ResultFile load_result(const std::string& path);

ArrayGeometry scenario_geometry(const Scenario& sc);
AdjustmentSpec scenario_spec(const Scenario& sc);
/// Resolves the pre-assigned weight: explicit weights, or gains * a(theta0).
WeightVector scenario_weight(const Scenario& sc, const ArrayGeometry& geom);

/// Weights to plot from either a scenario or a result file at `path`:
/// a result's "w_new" when present, the scenario weight otherwise.
struct PatternSource {
    ArrayGeometry geom;
    WeightVector weights;
    Angle theta0;
};
PatternSource load_pattern_source(const std::string& path);

/// Ascending grid from..to in `step` increments (degrees); both step <= 0 and
/// from > to are rejected.
std::vector<Angle> make_grid(double from_deg, double to_deg, double step_deg);

/// CSV with header "theta_deg,power_db", one row per sample, plain
/// locale-independent decimals with 15 significant digits.
void write_pattern_csv(const std::vector<PatternSample>& samples, const std::string& path);

} // namespace phasor
