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

#include "phasor/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phasor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Boundary triangles produce cosine arguments like 1 + 1e-16 under floating
// arithmetic; clamping keeps every feasible input NaN-free.
double clamped_acos(double x)
{
    return std::acos(std::clamp(x, -1.0, 1.0));
}

} // namespace

double wrap_two_pi(double x)
{
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // fmod can return exactly kTwoPi after the correction when x is a tiny
    // negative number; normalize that away.
    if (r >= kTwoPi)
        r -= kTwoPi;
    return r;
}

double circular_distance(double a, double b)
{
    const double d = wrap_two_pi(a - b);
    return std::min(d, kTwoPi - d);
}

EdgeList::EdgeList(std::vector<double> descending) : d_(std::move(descending))
{
    if (d_.empty())
        throw std::invalid_argument("EdgeList: must not be empty");
    double prev = std::numeric_limits<double>::infinity();
    for (double v : d_) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("EdgeList: entries must be finite and > 0");
        if (v > prev)
            throw std::invalid_argument("EdgeList: entries must be non-increasing");
        prev = v;
        total_ += v;
    }
}

double EdgeList::sum_range(std::size_t k, std::size_t l) const
{
    if (k < 1 || k > l || l > size())
        throw IndexOutOfRange("EdgeList::sum_range: need 1 <= k <= l <= N, got k=" +
                              std::to_string(k) + " l=" + std::to_string(l) + " N=" +
                              std::to_string(size()));
    double s = 0.0;
    for (std::size_t i = k; i <= l; ++i)
        s += d_[i - 1];
    return s;
}

bool is_polygon_feasible(const EdgeList& d)
{
    if (d.size() < 2)
        return false;
    return d[0] <= d.sum_range(2, d.size());
}

std::size_t best_split_index(const EdgeList& d)
{
    const std::size_t n = d.size();
    if (n < 3)
        throw std::invalid_argument("best_split_index: needs at least 3 edges");
    std::size_t best = 2;
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 2; i <= n - 1; ++i) {
        const double gap = std::abs(d.sum_range(2, i) - d.sum_range(i + 1, n));
        if (gap < best_gap) {
            best_gap = gap;
            best = i;
        }
    }
    return best;
}

double min_split_imbalance(const EdgeList& d)
{
    const std::size_t m = best_split_index(d);
    return std::abs(d.sum_range(2, m) - d.sum_range(m + 1, d.size()));
}

TriangleSolution construct_triangle(const EdgeList& d)
{
    if (!is_polygon_feasible(d))
        throw InfeasibleEdges("construct_triangle: longest edge exceeds the sum of the others");
    const std::size_t n = d.size();
    if (n < 3)
        throw std::invalid_argument("construct_triangle: needs at least 3 edges");

    const std::size_t m = best_split_index(d);
    const double a = d[0];
    const double b = d.sum_range(2, m);
    const double c = d.sum_range(m + 1, n);

    const double alpha1 = clamped_acos((a * a + b * b - c * c) / (2.0 * a * b));
    const double alpha2 = clamped_acos((b * b + c * c - a * a) / (2.0 * b * c));

    std::vector<double> phases(n);
    phases[0] = kPi;
    for (std::size_t i = 2; i <= m; ++i)
        phases[i - 1] = alpha1;
    for (std::size_t i = m + 1; i <= n; ++i)
        phases[i - 1] = alpha1 + alpha2 + kPi;

    return TriangleSolution{m, alpha1, alpha2, std::move(phases)};
}

PhaseArcSet PhaseArcSet::full_circle()
{
    PhaseArcSet s;
    s.arcs_[0] = Arc{0.0, kTwoPi};
    s.count_ = 1;
    return s;
}

PhaseArcSet PhaseArcSet::single(double lo, double hi)
{
    if (hi < lo)
        throw std::invalid_argument("PhaseArcSet::single: hi < lo");
    PhaseArcSet s;
    s.arcs_[0] = Arc{wrap_two_pi(lo), std::min(hi - lo, kTwoPi)};
    s.count_ = 1;
    return s;
}

PhaseArcSet PhaseArcSet::point(double a)
{
    return single(a, a);
}

PhaseArcSet PhaseArcSet::two_points(double a, double b)
{
    PhaseArcSet s;
    s.arcs_[0] = Arc{wrap_two_pi(a), 0.0};
    s.arcs_[1] = Arc{wrap_two_pi(b), 0.0};
    s.count_ = 2;
    return s;
}

PhaseArcSet PhaseArcSet::mirror_pair(double center, double dmin, double dmax)
{
    dmin = std::clamp(dmin, 0.0, kPi);
    dmax = std::clamp(dmax, dmin, kPi);
    if (dmin == 0.0 && dmax >= kPi)
        return full_circle();
    if (dmin == 0.0)
        return single(center - dmax, center + dmax);
    PhaseArcSet s;
    s.arcs_[0] = Arc{wrap_two_pi(center - dmax), dmax - dmin};
    s.arcs_[1] = Arc{wrap_two_pi(center + dmin), dmax - dmin};
    s.count_ = 2;
    return s;
}

double PhaseArcSet::total_length() const
{
    double t = 0.0;
    for (std::size_t k = 0; k < count_; ++k)
        t += arcs_[k].length;
    return t;
}

bool PhaseArcSet::contains(double phi, double tol) const
{
    for (std::size_t k = 0; k < count_; ++k) {
        const Arc& a = arcs_[k];
        if (a.length + 2.0 * tol >= kTwoPi)
            return true;
        const double off = wrap_two_pi(phi - a.start);
        if (off <= a.length + tol || off >= kTwoPi - tol)
            return true;
    }
    return false;
}

double PhaseArcSet::nearest(double ref) const
{
    if (count_ == 0)
        throw EmptyArcSet("PhaseArcSet::nearest: empty arc set");

    // Distance ties within 1e-12 rad resolve toward the smaller angle.
    constexpr double kTieTol = 1e-12;
    double best_dist = std::numeric_limits<double>::infinity();
    double best_point = 0.0;
    auto consider = [&](double dist, double point) {
        point = wrap_two_pi(point);
        if (dist < best_dist - kTieTol ||
            (dist <= best_dist + kTieTol && point < best_point)) {
            best_dist = std::min(dist, best_dist);
            best_point = point;
        }
    };

    for (std::size_t k = 0; k < count_; ++k) {
        const Arc& a = arcs_[k];
        const double off = wrap_two_pi(ref - a.start);
        if (off <= a.length || a.length >= kTwoPi) {
            consider(0.0, ref);
        } else {
            consider(circular_distance(ref, a.start), a.start);
            consider(circular_distance(ref, a.start + a.length), a.start + a.length);
        }
    }
    return best_point;
}

PhaseArcSet PhaseArcSet::reflected_shift(double theta) const
{
    PhaseArcSet out;
    out.count_ = count_;
    for (std::size_t k = 0; k < count_; ++k) {
        // {theta - x : x in [start, start+length]} = [theta-start-length, theta-start]
        out.arcs_[k] = Arc{wrap_two_pi(theta - arcs_[k].start - arcs_[k].length),
                           arcs_[k].length};
    }
    return out;
}

std::pair<double, double> feasible_modulus_interval(double x_prev, const EdgeList& d,
                                                    std::size_t i)
{
    const std::size_t n = d.size();
    if (i < 2 || i + 2 > n)
        throw IndexOutOfRange("feasible_modulus_interval: need 2 <= i <= N-2, got i=" +
                              std::to_string(i) + " N=" + std::to_string(n));
    if (!(x_prev >= 0.0))
        throw std::invalid_argument("feasible_modulus_interval: x_prev must be >= 0");

    const double d_i = d[i - 1];
    const double tail_after_next = d.sum_range(i + 2, n); // never empty: i+2 <= N
    double x_min = std::max(std::abs(x_prev - d_i), d[i] - tail_after_next);
    double x_max = std::min(x_prev + d_i, d.sum_range(i + 1, n));

    if (x_min > x_max) {
        // Permit rounding-level inversions, reject anything structural.
        if (x_min - x_max <= 1e-9 * d.total())
            x_min = x_max;
        else
            throw EmptyInterval("feasible_modulus_interval: empty range [" +
                                std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
    }
    return {x_min, x_max};
}

PhaseArcSet step_phase_arcs(double x_prev, double gamma_prev, const EdgeList& d, std::size_t i)
{
    if (!(x_prev > 0.0))
        throw ZeroModulus("step_phase_arcs: zero chain modulus has no reference direction");

    const auto [x_min, x_max] = feasible_modulus_interval(x_prev, d, i);
    const double d_i = d[i - 1];
    const double denom = 2.0 * x_prev * d_i;
    const double delta_min = clamped_acos((x_prev * x_prev + d_i * d_i - x_min * x_min) / denom);
    const double delta_max = clamped_acos((x_prev * x_prev + d_i * d_i - x_max * x_max) / denom);

    return PhaseArcSet::mirror_pair(gamma_prev + kPi, std::min(delta_min, delta_max),
                                    std::max(delta_min, delta_max));
}

ChainState advance_chain(const ChainState& state, double d_i, double phi)
{
    const std::complex<double> sum =
        std::polar(state.modulus, state.phase) + std::polar(d_i, phi);
    const double modulus = std::abs(sum);
    return ChainState{state.step + 1, modulus, modulus == 0.0 ? 0.0 : std::arg(sum)};
}

PhaseArcSet final_two_edges(const ChainState& state, double d_last2, double d_last)
{
    const double x = state.modulus;
    const double scale = x + d_last2 + d_last;
    const double tol = 1e-9 * scale;

    if (x <= 1e-14 * scale) {
        // Zero partial sum: the remaining two edges must cancel each other.
        if (std::abs(d_last2 - d_last) > tol)
            throw BrokenTriangle("final_two_edges: zero chain modulus with unequal last edges");
        return PhaseArcSet::full_circle();
    }
    if (d_last > x + d_last2 + tol || d_last2 > x + d_last + tol || x > d_last2 + d_last + tol)
        throw BrokenTriangle("final_two_edges: {" + std::to_string(x) + ", " +
                             std::to_string(d_last2) + ", " + std::to_string(d_last) +
                             "} violates the triangle inequality");

    const double delta =
        clamped_acos((x * x + d_last2 * d_last2 - d_last * d_last) / (2.0 * x * d_last2));
    const double opposite = state.phase + kPi;
    return PhaseArcSet::two_points(opposite - delta, opposite + delta);
}

double closing_phase(const ChainState& state)
{
    return wrap_two_pi(state.phase + kPi);
}

} // namespace phasor
