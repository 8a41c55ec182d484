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

#include "phasor/adjuster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace phasor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Chain moduli at or below this fraction of the total edge length are treated
// as the zero vector: the next edge direction is unconstrained by the prefix.
constexpr double kZeroModulusFraction = 1e-14;

double abs_squared_sum(const ComplexVector& v)
{
    double s = 0.0;
    for (const Complex& z : v)
        s += std::norm(z);
    return s;
}

// Pattern distortion bookkeeping shared by every psi candidate of one
// adjustment: fixed grid -90..90 deg in 0.05 deg steps, steering vectors
// precomputed once, pre-adjustment pattern cached.
class DistortionEvaluator {
  public:
    DistortionEvaluator(const ArrayGeometry& geom, const WeightVector& w_pre, Angle theta0,
                        Angle thetaC)
        : n_(geom.size())
    {
        constexpr double kFrom = -90.0, kStep = 0.05;
        constexpr std::size_t kCount = 3601;

        const std::vector<double>& x = geom.positions();
        steer_.resize(kCount * n_);
        keep_.resize(kCount);
        const double theta_c_deg = thetaC.degrees();
        for (std::size_t k = 0; k < kCount; ++k) {
            const double deg = kFrom + static_cast<double>(k) * kStep;
            const double s = std::sin(deg * kPi / 180.0);
            for (std::size_t j = 0; j < n_; ++j)
                steer_[k * n_ + j] = std::polar(1.0, kTwoPi * x[j] * s);
            keep_[k] = std::abs(deg - theta_c_deg) > 2.0;
        }
        main_beam_ = steering_vector(geom, theta0);
        pre_db_ = pattern_db(w_pre);
    }

    double mean_abs_delta_db(const WeightVector& w_new) const
    {
        const std::vector<double> new_db = pattern_db(w_new);
        double acc = 0.0;
        std::size_t cnt = 0;
        for (std::size_t k = 0; k < new_db.size(); ++k) {
            if (!keep_[k])
                continue;
            acc += std::abs(new_db[k] - pre_db_[k]);
            ++cnt;
        }
        return cnt == 0 ? 0.0 : acc / static_cast<double>(cnt);
    }

  private:
    std::vector<double> pattern_db(const WeightVector& w) const
    {
        const Complex denom_resp = array_response(w, main_beam_);
        const double denom = std::norm(denom_resp);
        if (denom == 0.0)
            throw DegenerateMainBeam("distortion metric: zero main-beam response");
        const std::size_t count = steer_.size() / n_;
        std::vector<double> db(count);
        for (std::size_t k = 0; k < count; ++k) {
            Complex r(0.0, 0.0);
            for (std::size_t j = 0; j < n_; ++j)
                r += std::conj(w[j]) * steer_[k * n_ + j];
            // Floor avoids -inf at exact nulls; the metric only ranks patterns.
            db[k] = 10.0 * std::log10(std::max(std::norm(r) / denom, 1e-300));
        }
        return db;
    }

    std::size_t n_;
    ComplexVector steer_;
    ComplexVector main_beam_;
    std::vector<bool> keep_;
    std::vector<double> pre_db_;
};

enum class PhaseStrategy { kReferenceGuided, kTriangle };

// Walks the sequential construction over the sorted edges, choosing each
// direction so the element phase lands as close to its reference phase as
// the feasible arcs allow. theta[i]/ref[i] are per sorted edge. Returns
// element phases in sorted order.
//
// The reference is compared in the gauge fixed by the first-direction
// convention: pinning edge 1 at direction pi also pins the global phase of
// the result, so the reference is rotated by a constant to make its first
// element phase coincide with the committed one. Without this, a reference
// that already satisfies the constraint would not be reproduced.
std::vector<double> chain_element_phases(const EdgeList& d, const std::vector<double>& theta,
                                         const std::vector<double>& ref)
{
    const std::size_t n = d.size();
    const double zero_floor = kZeroModulusFraction * d.total();
    std::vector<double> phi(n);

    phi[0] = theta[0] - kPi; // first direction pinned; patterns ignore global phase
    ChainState state = ChainState::initial(d[0]);

    const double gauge = ref[0] - phi[0];

    auto pick = [&](std::size_t idx, const PhaseArcSet& direction_arcs) {
        const PhaseArcSet element_arcs = direction_arcs.reflected_shift(theta[idx]);
        phi[idx] = select_phase(element_arcs, ref[idx] - gauge);
        const double direction = wrap_two_pi(theta[idx] - phi[idx]);
        state = advance_chain(state, d[idx], direction);
    };

    for (std::size_t i = 2; i + 2 <= n; ++i) { // 1-based i = 2..N-2
        if (state.modulus <= zero_floor)
            pick(i - 1, PhaseArcSet::full_circle());
        else
            pick(i - 1, step_phase_arcs(state.modulus, state.phase, d, i));
    }

    pick(n - 2, final_two_edges(state, d[n - 2], d[n - 1]));

    const double last_direction = closing_phase(state);
    phi[n - 1] = theta[n - 1] - last_direction;
    return phi;
}

std::vector<double> triangle_element_phases(const EdgeList& d, const std::vector<double>& theta)
{
    const TriangleSolution tri = construct_triangle(d);
    std::vector<double> phi(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        phi[k] = theta[k] - tri.phases[k];
    return phi;
}

WeightVector assemble_weight(const WeightVector& w_pre,
                             const std::vector<std::size_t>& active_order,
                             const std::vector<double>& phi_sorted)
{
    ComplexVector w(w_pre.entries());
    for (std::size_t k = 0; k < active_order.size(); ++k) {
        const std::size_t n = active_order[k];
        w[n] = std::polar(std::abs(w_pre[n]), phi_sorted[k]);
    }
    return WeightVector(std::move(w));
}

AdjustmentReport finish_report(const ArrayGeometry& geom, const AdjustmentSpec& spec,
                               WeightVector w_new, const ComplexVector& h, double psi,
                               const DistortionEvaluator& eval)
{
    Complex residual(0.0, 0.0);
    for (std::size_t n = 0; n < h.size(); ++n)
        residual += std::conj(w_new[n]) * h[n];
    const PowerLevel achieved = power_response(w_new, geom, spec.thetaC, spec.theta0);
    const double distortion = eval.mean_abs_delta_db(w_new);
    return AdjustmentReport{std::move(w_new), psi, std::abs(residual), achieved, distortion};
}

AdjustmentReport run_with_psi(const ArrayGeometry& geom, const WeightVector& w_pre,
                              const AdjustmentSpec& spec, double psi, PhaseStrategy strategy,
                              const DistortionEvaluator& eval)
{
    const ComplexVector h = compose_h(geom, spec, psi);
    const RotationProblem rp = compose_rotation_problem(h, w_pre);

    // Every constraint term vanishes: w^H h = 0 for any phases, keep them.
    if (rp.active.empty())
        return finish_report(geom, spec, w_pre, h, psi, eval);

    if (rp.active.size() == 1)
        throw TooFewActiveEdges("adjust: a single nonzero constraint term cannot cancel");

    if (rp.active.size() == 2) {
        const std::size_t n1 = rp.active[0], n2 = rp.active[1];
        const double m1 = rp.magnitudes[n1], m2 = rp.magnitudes[n2];
        if (std::abs(m1 - m2) > 1e-12 * std::max(m1, m2))
            throw TooFewActiveEdges("adjust: two active terms with unequal magnitudes");
        // Opposite directions cancel the pair; first direction pinned at pi.
        std::vector<double> phi = {rp.phases[n1] - kPi, rp.phases[n2]};
        return finish_report(geom, spec,
                             assemble_weight(w_pre, {n1, n2}, phi), h, psi, eval);
    }

    auto [d, perm] = sort_edges(rp);
    if (!is_polygon_feasible(d))
        throw InfeasibleEdges("adjust: dominant constraint term exceeds the sum of the others");

    std::vector<double> theta_sorted(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        theta_sorted[k] = rp.phases[perm.to_original[k]];

    std::vector<double> phi_sorted;
    if (strategy == PhaseStrategy::kTriangle) {
        phi_sorted = triangle_element_phases(d, theta_sorted);
    } else {
        const WeightVector ref_weight = reference_weight(w_pre, h);
        std::vector<double> ref_sorted(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) {
            const std::size_t n = perm.to_original[k];
            const Complex r = ref_weight[n];
            // A vanishing reference entry has no phase; fall back to the
            // original weight's phase so the element moves as little as possible.
            ref_sorted[k] = (r == Complex(0.0, 0.0)) ? std::arg(w_pre[n]) : std::arg(r);
        }
        phi_sorted = chain_element_phases(d, theta_sorted, ref_sorted);
    }

    return finish_report(geom, spec, assemble_weight(w_pre, perm.to_original, phi_sorted),
                         h, psi, eval);
}

void validate_adjust_inputs(const ArrayGeometry& geom, const WeightVector& w_pre,
                            const AdjustmentSpec& spec)
{
    if (w_pre.size() != geom.size())
        throw LengthMismatch("adjust: weight has " + std::to_string(w_pre.size()) +
                             " entries for " + std::to_string(geom.size()) + " elements");
    if (spec.thetaC.radians() == spec.theta0.radians() && spec.rhoC.linear() != 1.0)
        throw std::invalid_argument(
            "adjust: thetaC equals theta0; the normalization point can only hold level 1");
    if (spec.psiC && (!std::isfinite(*spec.psiC) || *spec.psiC < 0.0 || *spec.psiC >= kTwoPi))
        throw std::invalid_argument("adjust: psiC must lie in [0, 2*pi)");
}

double resolve_psi(const ArrayGeometry& geom, const AdjustmentSpec& spec,
                   const WeightVector& w_pre, unsigned psi_grid, PhaseStrategy strategy,
                   const DistortionEvaluator& eval)
{
    if (spec.psiC)
        return *spec.psiC;
    if (spec.rhoC.is_null())
        return 0.0; // h does not depend on psi at an exact null

    if (psi_grid == 0)
        throw std::invalid_argument("adjust: psi grid size must be positive");

    double best_psi = 0.0;
    double best_distortion = std::numeric_limits<double>::infinity();
    bool any = false;
    for (unsigned k = 0; k < psi_grid; ++k) {
        const double psi = kTwoPi * static_cast<double>(k) / static_cast<double>(psi_grid);
        try {
            const AdjustmentReport r = run_with_psi(geom, w_pre, spec, psi, strategy, eval);
            if (!any || r.distortion_db < best_distortion) {
                any = true;
                best_distortion = r.distortion_db;
                best_psi = psi;
            }
        } catch (const Infeasible&) {
            continue;
        }
    }
    if (!any)
        throw NoFeasiblePsi("adjust: no feasible psi among " + std::to_string(psi_grid) +
                            " grid candidates");
    return best_psi;
}

AdjustmentReport drive(const ArrayGeometry& geom, const WeightVector& w_pre,
                       const AdjustmentSpec& spec, unsigned psi_grid, PhaseStrategy strategy)
{
    validate_adjust_inputs(geom, w_pre, spec);
    const DistortionEvaluator eval(geom, w_pre, spec.theta0, spec.thetaC);
    const double psi = resolve_psi(geom, spec, w_pre, psi_grid, strategy, eval);
    return run_with_psi(geom, w_pre, spec, psi, strategy, eval);
}

} // namespace

ComplexVector compose_h(const ArrayGeometry& geom, const AdjustmentSpec& spec, double psi)
{
    const ComplexVector ac = steering_vector(geom, spec.thetaC);
    const ComplexVector a0 = steering_vector(geom, spec.theta0);
    const Complex scale = std::polar(std::sqrt(spec.rhoC.linear()), psi);
    ComplexVector h(geom.size());
    for (std::size_t n = 0; n < geom.size(); ++n)
        h[n] = ac[n] - scale * a0[n];
    return h;
}

RotationProblem compose_rotation_problem(const ComplexVector& h, const WeightVector& w_pre)
{
    if (h.size() != w_pre.size())
        throw LengthMismatch("compose_rotation_problem: h has " + std::to_string(h.size()) +
                             " entries, weight has " + std::to_string(w_pre.size()));
    const std::size_t n = h.size();
    RotationProblem rp;
    rp.magnitudes.resize(n);
    rp.phases.resize(n);
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex v = h[k] * std::abs(w_pre[k]);
        rp.magnitudes[k] = std::abs(v);
        rp.phases[k] = (v == Complex(0.0, 0.0)) ? 0.0 : std::arg(v);
        peak = std::max(peak, rp.magnitudes[k]);
    }
    const double floor = 1e-14 * peak;
    for (std::size_t k = 0; k < n; ++k)
        if (rp.magnitudes[k] > floor)
            rp.active.push_back(k);
    return rp;
}

std::pair<EdgeList, SortPermutation> sort_edges(const RotationProblem& rp)
{
    const std::size_t n_active = rp.active.size();
    if (n_active == 0)
        throw TooFewActiveEdges("sort_edges: no active edges");
    if (n_active == 1)
        throw TooFewActiveEdges("sort_edges: a single edge cannot close");

    std::vector<std::size_t> order(rp.active);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rp.magnitudes[a] > rp.magnitudes[b];
    });

    if (n_active == 2) {
        const double m1 = rp.magnitudes[order[0]], m2 = rp.magnitudes[order[1]];
        if (m1 - m2 > 1e-12 * m1)
            throw TooFewActiveEdges("sort_edges: two edges close only with equal magnitudes");
    }

    std::vector<double> d(n_active);
    for (std::size_t k = 0; k < n_active; ++k)
        d[k] = rp.magnitudes[order[k]];
    // Guard against rounding breaking the non-increasing precondition on ties.
    for (std::size_t k = 1; k < n_active; ++k)
        d[k] = std::min(d[k], d[k - 1]);

    SortPermutation perm;
    perm.to_original = std::move(order);
    perm.to_sorted.assign(rp.magnitudes.size(), SortPermutation::npos);
    for (std::size_t k = 0; k < n_active; ++k)
        perm.to_sorted[perm.to_original[k]] = k;

    return {EdgeList(std::move(d)), std::move(perm)};
}

WeightVector reference_weight(const WeightVector& w_pre, const ComplexVector& h)
{
    if (h.size() != w_pre.size())
        throw LengthMismatch("reference_weight: h has " + std::to_string(h.size()) +
                             " entries, weight has " + std::to_string(w_pre.size()));
    const double hh = abs_squared_sum(h);
    if (hh == 0.0)
        return w_pre; // constraint vacuous, nothing to project out

    Complex h_dot_w(0.0, 0.0); // h^H w_pre
    for (std::size_t n = 0; n < h.size(); ++n)
        h_dot_w += std::conj(h[n]) * w_pre[n];

    const Complex coeff = h_dot_w / hh;
    ComplexVector out(w_pre.entries());
    for (std::size_t n = 0; n < h.size(); ++n)
        out[n] -= h[n] * coeff;
    return WeightVector(std::move(out));
}

double select_phase(const PhaseArcSet& arcs, double reference_phase)
{
    if (arcs.empty())
        throw EmptyArcSet("select_phase: empty arc set");
    return arcs.nearest(reference_phase);
}

double choose_psi(const ArrayGeometry& geom, const AdjustmentSpec& spec,
                  const WeightVector& w_pre, unsigned psi_grid)
{
    validate_adjust_inputs(geom, w_pre, spec);
    const DistortionEvaluator eval(geom, w_pre, spec.theta0, spec.thetaC);
    return resolve_psi(geom, spec, w_pre, psi_grid, PhaseStrategy::kReferenceGuided, eval);
}

AdjustmentReport adjust(const ArrayGeometry& geom, const WeightVector& w_pre,
                        const AdjustmentSpec& spec, unsigned psi_grid)
{
    return drive(geom, w_pre, spec, psi_grid, PhaseStrategy::kReferenceGuided);
}

AdjustmentReport triangle_adjust(const ArrayGeometry& geom, const WeightVector& w_pre,
                                 const AdjustmentSpec& spec, unsigned psi_grid)
{
    return drive(geom, w_pre, spec, psi_grid, PhaseStrategy::kTriangle);
}

} // namespace phasor
