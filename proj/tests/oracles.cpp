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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace phasor::testing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> direction_sum(const std::vector<double>& d, const std::vector<double>& phi)
{
    std::complex<double> s(0.0, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        s += std::polar(d[i], phi[i]);
    return s;
}

} // namespace

double closure_residual(const std::vector<double>& d, const std::vector<double>& phi)
{
    return std::abs(direction_sum(d, phi));
}

double coordinate_descent(const std::vector<double>& d, std::vector<double>& phi, int sweeps)
{
    std::complex<double> s = direction_sum(d, phi);
    for (int pass = 0; pass < sweeps; ++pass) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::complex<double> without = s - std::polar(d[i], phi[i]);
            if (std::abs(without) > 0.0)
                phi[i] = std::arg(-without);
            s = without + std::polar(d[i], phi[i]);
        }
        s = direction_sum(d, phi); // periodic exact refresh against drift
    }
    return std::abs(s);
}

bool brute_force_polygon_feasible(const std::vector<double>& d, std::uint64_t seed)
{
    const std::size_t n = d.size();
    if (n < 3 || n > 6)
        throw std::invalid_argument("brute_force_polygon_feasible: supports N in [3, 6]");
    const double total = std::accumulate(d.begin(), d.end(), 0.0);
    const double threshold = 1e-3 * total;

    auto refine = [&](std::vector<double> phi) {
        return coordinate_descent(d, phi, 60);
    };

    if (n <= 4) {
        constexpr int kGrid = 720;
        double best = std::numeric_limits<double>::infinity();
        std::vector<double> best_phi(n, 0.0);
        std::vector<double> phi(n, 0.0);
        phi[0] = kPi;
        for (int a = 0; a < kGrid; ++a) {
            phi[1] = kTwoPi * a / kGrid;
            const int inner = (n == 4) ? kGrid : 1;
            for (int b = 0; b < inner; ++b) {
                if (n == 4)
                    phi[2] = kTwoPi * b / kGrid;
                // Last direction: point opposite the rest, the best it can do.
                std::complex<double> partial(0.0, 0.0);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    partial += std::polar(d[i], phi[i]);
                phi[n - 1] = (std::abs(partial) > 0.0) ? std::arg(-partial) : 0.0;
                const double r = closure_residual(d, phi);
                if (r < best) {
                    best = r;
                    best_phi = phi;
                }
            }
        }
        return refine(best_phi) < threshold;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (int restart = 0; restart < 48; ++restart) {
        std::vector<double> phi(n);
        for (double& p : phi)
            p = u(rng);
        if (refine(std::move(phi)) < threshold)
            return true;
    }
    return false;
}

double chordal_distance(double a, double b)
{
    return std::abs(std::polar(1.0, a) - std::polar(1.0, b));
}

double grid_min_chordal(const PhaseArcSet& arcs, double ref, int points)
{
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < points; ++k) {
        const double phi = kTwoPi * k / points;
        if (arcs.contains(phi))
            best = std::min(best, chordal_distance(phi, ref));
    }
    return best;
}

std::vector<double> random_edges(std::mt19937_64& rng, std::size_t n, bool feasible)
{
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (;;) {
        std::vector<double> d(n);
        for (double& v : d)
            v = u(rng);
        std::sort(d.begin(), d.end(), std::greater<>());
        const double rest = std::accumulate(d.begin() + 1, d.end(), 0.0);
        if ((d[0] <= rest) == feasible)
            return d;
    }
}

} // namespace phasor::testing

