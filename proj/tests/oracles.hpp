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
//
// Test-only oracles, deliberately independent of the library's closure
// machinery: they search directions numerically instead of using the
// feasibility condition or the arc construction under test.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "phasor/polygon.hpp"

namespace phasor::testing {

/// Residual |sum_i d_i * exp(j*phi_i)|.
double closure_residual(const std::vector<double>& d, const std::vector<double>& phi);

/// Greedy per-coordinate minimization of the closure residual: each pass
/// points every edge opposite the sum of the others. Monotone; returns the
/// final residual.
double coordinate_descent(const std::vector<double>& d, std::vector<double>& phi, int sweeps);

/// Brute-force feasibility: coarse direction grid (N <= 4) or seeded random
/// restarts (N = 5, 6), each refined by coordinate descent; feasible when
/// any refined residual drops below 1e-3 * sum(d). Supports N in [3, 6].
bool brute_force_polygon_feasible(const std::vector<double>& d, std::uint64_t seed);

/// Objective of the phase-selection problem: |exp(j*a) - exp(j*b)|.
double chordal_distance(double a, double b);

/// Minimum of chordal_distance(phi, ref) over grid points of [0, 2*pi) that
/// lie inside the arc set. Returns +inf if no grid point is inside.
double grid_min_chordal(const PhaseArcSet& arcs, double ref, int points);

/// Random descending positive edge list; rejects infeasible draws when
/// `feasible` is set (and vice versa keeps whatever comes otherwise).
std::vector<double> random_edges(std::mt19937_64& rng, std::size_t n, bool feasible);

} // namespace phasor::testing
