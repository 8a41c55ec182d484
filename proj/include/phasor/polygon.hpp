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
// Geometric engine: decide when a list of positive edge lengths can close
// into a polygon in the complex plane, produce the closed-form three-block
// (triangle) solution, and walk the sequential construction that yields the
// set of feasible directions for each edge.
//
// Conventions used throughout this header:
//   * Edge indices are 1-based (i = 1..N) to match the natural statement of
//     the closure conditions; vector storage is 0-based as usual.
//   * "Polygon-feasible" means the edges can be directed so they sum to the
//     zero vector, which holds iff d_1 <= d_2 + ... + d_N (equality admitted,
//     the degenerate collinear polygon).

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phasor/errors.hpp"

namespace phasor {

/// Positive edge lengths sorted in non-increasing order.
class EdgeList {
  public:
    /// Validates strictly positive, non-increasing entries.
    explicit EdgeList(std::vector<double> descending);

    std::size_t size() const { return d_.size(); }
    double operator[](std::size_t i) const { return d_[i]; } // 0-based
    const std::vector<double>& values() const { return d_; }
    double total() const { return total_; }

    /// Sum of edges k..l, 1-based inclusive. Throws IndexOutOfRange unless
    /// 1 <= k <= l <= N.
    double sum_range(std::size_t k, std::size_t l) const;

  private:
    std::vector<double> d_;
    double total_ = 0.0;
};

/// True iff the edges can be directed to sum to zero: d_1 <= sum(d_2..d_N).
/// Equality counts as feasible (collinear, degenerate polygon).
bool is_polygon_feasible(const EdgeList& d);

/// The split index m in {2..N-1} minimizing |sum(d_2..d_i) - sum(d_{i+1}..d_N)|,
/// ties broken toward the smallest index. Requires N >= 3.
std::size_t best_split_index(const EdgeList& d);

/// min over i in {2..N-1} of |sum(d_2..d_i) - sum(d_{i+1}..d_N)|. For any
/// feasible edge list this never exceeds d_1, which is what makes the
/// three-block construction a valid triangle. Requires N >= 3.
double min_split_imbalance(const EdgeList& d);

/// Closed-form three-block direction assignment:
///   phi_1 = pi, phi_i = alpha1 for 2 <= i <= m, phi_i = alpha1+alpha2+pi after.
struct TriangleSolution {
    std::size_t split_index; ///< m, 1-based, 2 <= m <= N-1
    double alpha1;           ///< interior angle between edge 1 and the first block
    double alpha2;           ///< interior angle between the two blocks
    std::vector<double> phases; ///< direction per edge, size N
};

/// Grouping the edges into d_1, sum(d_2..d_m) and sum(d_{m+1}..d_N) forms a
/// triangle whenever the list is polygon-feasible; its two interior angles
/// give a closed-form direction assignment whose vector sum is zero.
/// Throws InfeasibleEdges otherwise. acos arguments are clamped to [-1, 1]
/// so boundary (collinear) lists are handled without NaNs.
TriangleSolution construct_triangle(const EdgeList& d);

/// Running state of the sequential construction: after committing directions
/// for edges 1..step, the partial sum is modulus * exp(j * phase).
struct ChainState {
    std::size_t step;
    double modulus;
    double phase;

    /// State after the first edge, which is fixed at direction pi.
    static ChainState initial(double d1) { return ChainState{1, d1, kPi}; }

  private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
};

/// A union of at most two closed arcs on the circle, values taken mod 2*pi.
/// Arcs may wrap across 2*pi and may degenerate to single points.
class PhaseArcSet {
  public:
    struct Arc {
        double start;  ///< normalized to [0, 2*pi)
        double length; ///< in [0, 2*pi]
    };

    PhaseArcSet() = default; ///< empty set

    static PhaseArcSet full_circle();
    static PhaseArcSet single(double lo, double hi); ///< requires hi >= lo
    static PhaseArcSet point(double a);
    static PhaseArcSet two_points(double a, double b);
    /// The mirror-symmetric union [c-dmax, c-dmin] u [c+dmin, c+dmax].
    static PhaseArcSet mirror_pair(double center, double dmin, double dmax);

    bool empty() const { return count_ == 0; }
    std::size_t count() const { return count_; }
    const Arc& arc(std::size_t k) const { return arcs_[k]; }
    double total_length() const;

    /// Membership modulo 2*pi, with slack `tol` radians at the endpoints.
    bool contains(double phi, double tol = 0.0) const;

    /// The point of the union closest to `ref` on the circle, ties broken
    /// toward the smaller angle in [0, 2*pi). Throws EmptyArcSet when empty.
    /// Returns a value in [0, 2*pi).
    double nearest(double ref) const;

    /// Image of the set under x -> theta - x (reflection plus shift); this is
    /// how feasible edge directions map to feasible element phases.
    PhaseArcSet reflected_shift(double theta) const;

  private:
    Arc arcs_[2] = {};
    std::size_t count_ = 0;
};

/// Range [x_min, x_max] of partial-sum moduli after adding edge i (1-based,
/// 2 <= i <= N-2) that keep both the local triangle {x_prev, d_i, x_i} and
/// the remaining edges {x_i, d_{i+1}, ..., d_N} closable:
///   x_min = max(|x_prev - d_i|, d_{i+1} - sum(d_{i+2}..d_N))
///   x_max = min(x_prev + d_i,   sum(d_{i+1}..d_N))
/// Throws EmptyInterval if the range is empty beyond numerical slack.
std::pair<double, double> feasible_modulus_interval(double x_prev, const EdgeList& d,
                                                    std::size_t i);

/// Feasible directions for edge i (1-based, 2 <= i <= N-2) given the partial
/// sum x_prev * exp(j*gamma_prev): two arcs mirror-symmetric about
/// gamma_prev + pi, spanning the included-angle range [dmin, dmax] derived
/// from the feasible modulus interval by the law of cosines.
/// Throws ZeroModulus when x_prev <= 0 (the caller decides the convention
/// for a zero partial sum: every direction is feasible on its own).
PhaseArcSet step_phase_arcs(double x_prev, double gamma_prev, const EdgeList& d,
                            std::size_t i);

/// Partial sum after committing one more edge: modulus/phase of
/// x*exp(j*gamma) + d_i*exp(j*phi). A zero result takes phase 0 by convention.
ChainState advance_chain(const ChainState& state, double d_i, double phi);

/// Candidate directions for the second-to-last edge: the moduli
/// {x, d_last2, d_last} must close a triangle, leaving at most the two
/// mirror choices gamma + pi -+ delta. A zero chain modulus leaves the
/// direction unconstrained (full circle) provided d_last2 == d_last.
/// Throws BrokenTriangle when the triangle inequality fails beyond 1e-9
/// relative, which signals numerical drift upstream.
PhaseArcSet final_two_edges(const ChainState& state, double d_last2, double d_last);

/// Direction that closes the polygon: opposite the current partial sum.
double closing_phase(const ChainState& state);

/// x wrapped into [0, 2*pi).
double wrap_two_pi(double x);

/// Circular distance |a - b| mod 2*pi, in [0, pi].
double circular_distance(double a, double b);

} // namespace phasor
