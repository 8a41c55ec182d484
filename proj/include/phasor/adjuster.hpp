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
// Orchestration of a full phase-only adjustment: build the constraint vector
// h, turn it into a rotation problem, close the polygon with phase choices
// guided by a reference weight, and assemble the new weight vector.

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "phasor/array_model.hpp"
#include "phasor/polygon.hpp"

namespace phasor {

/// What to adjust: steer theta0, set the response at thetaC to rhoC.
/// psiC, when absent, is chosen by a grid search (see choose_psi).
struct AdjustmentSpec {
    Angle theta0;
    Angle thetaC;
    PowerLevel rhoC;
    std::optional<double> psiC; ///< radians in [0, 2*pi)
};

/// Magnitudes and phases of the constraint terms v_n = h_n * |w_pre,n|.
/// Entries with |v_n| <= 1e-14 * max|v| are inactive: they contribute nothing
/// to w^H h and keep their original phases.
struct RotationProblem {
    std::vector<double> magnitudes;
    std::vector<double> phases;
    std::vector<std::size_t> active;
};

/// Bijection between sorted edge positions and original element indices.
struct SortPermutation {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> to_original; ///< sorted position -> element index
    std::vector<std::size_t> to_sorted;   ///< element index -> sorted position, npos if inactive
};

/// Outcome of an adjustment.
struct AdjustmentReport {
    WeightVector w_new;
    double psi_used;      ///< radians
    double residual;      ///< |w_new^H h|
    PowerLevel achieved;  ///< response level actually obtained at thetaC
    double distortion_db; ///< mean |delta dB| vs. the pre-adjustment pattern,
                          ///< grid -90..90 deg step 0.05, excluding +-2 deg
                          ///< around thetaC
};

/// h = a(thetaC) - sqrt(rhoC) * exp(j*psi) * a(theta0). Any weight with
/// w^H h = 0 attains level rhoC at thetaC.
ComplexVector compose_h(const ArrayGeometry& geom, const AdjustmentSpec& spec, double psi);

/// v_n = h_n * |w_pre,n|; flags near-zero entries inactive. An empty active
/// set means w^H h = 0 already holds for every phase choice.
RotationProblem compose_rotation_problem(const ComplexVector& h, const WeightVector& w_pre);

/// Active magnitudes sorted descending, plus the permutation to undo it.
/// Throws TooFewActiveEdges when fewer than 3 edges are active and no
/// special-case closure exists (one edge never closes; two edges close only
/// with equal magnitudes).
std::pair<EdgeList, SortPermutation> sort_edges(const RotationProblem& rp);

/// Minimum-norm perturbation of w_pre satisfying h^H w = 0 exactly:
/// w_pre - h * (h^H w_pre) / (h^H h). Used to bias phase choices toward a
/// low-distortion pattern. Returns w_pre unchanged when h is the zero vector.
WeightVector reference_weight(const WeightVector& w_pre, const ComplexVector& h);

/// The point of the arc union minimizing |exp(j*phi) - exp(j*ref)|; equals
/// ref when ref lies inside an arc, otherwise the nearest arc endpoint on
/// the circle (ties toward the smaller angle mod 2*pi).
double select_phase(const PhaseArcSet& arcs, double reference_phase);

/// Deterministic grid search for the free phase parameter: evaluates
/// psi_grid uniform candidates in [0, 2*pi), runs the full adjustment for
/// each feasible one, and returns the candidate with the smallest pattern
/// distortion. Throws NoFeasiblePsi when every candidate fails.
/// rhoC == 0 short-circuits to 0 (h does not depend on psi there).
double choose_psi(const ArrayGeometry& geom, const AdjustmentSpec& spec,
                  const WeightVector& w_pre, unsigned psi_grid = 64);

/// Full phase-only adjustment with reference-guided phase selection.
/// Magnitudes of w_pre are preserved exactly; the response at thetaC lands
/// on rhoC up to floating rounding.
AdjustmentReport adjust(const ArrayGeometry& geom, const WeightVector& w_pre,
                        const AdjustmentSpec& spec, unsigned psi_grid = 64);

/// Same contract as adjust(), but edge directions come from the closed-form
/// three-block solution with no reference guidance. Kept as a comparison
/// baseline; tends to move the uncontrolled region more.
AdjustmentReport triangle_adjust(const ArrayGeometry& geom, const WeightVector& w_pre,
                                 const AdjustmentSpec& spec, unsigned psi_grid = 64);

} // namespace phasor
