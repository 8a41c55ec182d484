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
// Batch front-end: adjust scenarios, export beampatterns as CSV, verify
// invariants of a scenario or of a previously written result file.
//
// Exit codes: 0 success, 1 input error, 2 infeasible adjustment.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "phasor/adjuster.hpp"
#include "phasor/scenario_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

unsigned psi_grid_from_env()
{
    const char* env = std::getenv("PHASOR_PSI_GRID");
    if (env == nullptr)
        return 64;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1000000)
        throw std::invalid_argument("PHASOR_PSI_GRID must be an integer in [1, 1000000]");
    return static_cast<unsigned>(v);
}

int cmd_adjust(const std::string& scenario_path, const std::string& out_path)
{
    using namespace phasor;
    const Scenario sc = load_scenario(scenario_path);
    const ArrayGeometry geom = scenario_geometry(sc);
    const WeightVector w_pre = scenario_weight(sc, geom);
    const AdjustmentReport rep = adjust(geom, w_pre, scenario_spec(sc), psi_grid_from_env());

    ResultFile rf;
    rf.scenario = sc;
    rf.w_new = rep.w_new.entries();
    rf.psi_used = rep.psi_used;
    rf.residual = rep.residual;
    rf.achieved_db = rep.achieved.db();
    rf.distortion_db = rep.distortion_db;
    save_result(rf, out_path);

    std::printf("adjusted: level %.6f dB, psi %.9f rad, residual %.3e, distortion %.4f dB\n",
                rep.achieved.db(), rep.psi_used, rep.residual, rep.distortion_db);
    return kExitOk;
}

int cmd_pattern(const std::string& in_path, double from_deg, double to_deg, double step_deg,
                const std::string& out_path)
{
    using namespace phasor;
    const PatternSource src = load_pattern_source(in_path);
    const std::vector<Angle> grid = make_grid(from_deg, to_deg, step_deg);
    write_pattern_csv(sample_pattern(src.weights, src.geom, src.theta0, grid), out_path);
    std::printf("wrote %zu samples to %s\n", grid.size(), out_path.c_str());
    return kExitOk;
}

struct Check {
    const char* name;
    bool pass;
    std::string detail;
};

void print_checks(const std::vector<Check>& checks)
{
    for (const Check& c : checks)
        std::printf("%s %s (%s)\n", c.pass ? "PASS" : "FAIL", c.name, c.detail.c_str());
}

std::string format(const char* fmt, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

// Invariants a finished adjustment must satisfy. `w_pre_mags` are the
// magnitudes the new weight has to preserve.
std::vector<Check> run_checks(const phasor::ArrayGeometry& geom,
                              const phasor::AdjustmentSpec& spec,
                              const std::vector<double>& w_pre_mags,
                              const phasor::WeightVector& w_new, double psi_used)
{
    using namespace phasor;
    std::vector<Check> checks;

    double max_rel_dev = 0.0;
    for (std::size_t n = 0; n < w_new.size(); ++n) {
        const double ref = w_pre_mags[n];
        const double dev = std::abs(std::abs(w_new[n]) - ref);
        max_rel_dev = std::max(max_rel_dev, ref > 0.0 ? dev / ref : dev);
    }
    checks.push_back({"magnitude-preservation", max_rel_dev <= 1e-12,
                      format("max relative deviation %.3e, limit %.0e", max_rel_dev, 1e-12)});

    const ComplexVector h = compose_h(geom, spec, psi_used);
    Complex resid(0.0, 0.0);
    double w_sq = 0.0, h_sq = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) {
        resid += std::conj(w_new[n]) * h[n];
        w_sq += std::norm(w_new[n]);
        h_sq += std::norm(h[n]);
    }
    const double resid_limit = 1e-9 * std::sqrt(w_sq) * std::sqrt(h_sq);
    checks.push_back({"residual", std::abs(resid) <= resid_limit,
                      format("|w^H h| = %.3e, limit %.3e", std::abs(resid), resid_limit)});

    const PowerLevel achieved = power_response(w_new, geom, spec.thetaC, spec.theta0);
    if (spec.rhoC.is_null()) {
        checks.push_back({"level", achieved.linear() <= 1e-8,
                          format("achieved %.2f dB, limit %.2f dB", achieved.db(), -80.0)});
    } else {
        const double rel = std::abs(achieved.linear() - spec.rhoC.linear()) / spec.rhoC.linear();
        checks.push_back({"level", rel <= 1e-6,
                          format("achieved %.9f dB, relative error %.3e", achieved.db(), rel)});
    }
    return checks;
}

// Verifies a scenario (runs the adjustment first) or a result file (checks
// the stored weights against the stored psi). Prints PASS/FAIL per check.
int cmd_verify(const std::string& path)
{
    using namespace phasor;

    std::vector<Check> checks;
    bool is_result = true;
    ResultFile rf;
    try {
        rf = load_result(path);
    } catch (const ParseError&) {
        is_result = false;
    }

    if (is_result) {
        const ArrayGeometry geom = scenario_geometry(rf.scenario);
        const WeightVector w_pre = scenario_weight(rf.scenario, geom);
        std::vector<double> mags(w_pre.size());
        for (std::size_t n = 0; n < w_pre.size(); ++n)
            mags[n] = std::abs(w_pre[n]);
        checks = run_checks(geom, scenario_spec(rf.scenario), mags,
                            WeightVector(rf.w_new), rf.psi_used);
    } else {
        const Scenario sc = load_scenario(path);
        const ArrayGeometry geom = scenario_geometry(sc);
        const WeightVector w_pre = scenario_weight(sc, geom);
        std::vector<double> mags(w_pre.size());
        for (std::size_t n = 0; n < w_pre.size(); ++n)
            mags[n] = std::abs(w_pre[n]);
        const AdjustmentReport rep = adjust(geom, w_pre, scenario_spec(sc), psi_grid_from_env());
        checks = run_checks(geom, scenario_spec(sc), mags, rep.w_new, rep.psi_used);
    }

    print_checks(checks);
    for (const Check& c : checks)
        if (!c.pass)
            return kExitInputError;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"phasor: phase-only array response adjustment"};
    app.require_subcommand(1);
    app.footer("Scenarios without psiC_rad search a deterministic grid for the free phase\n"
               "parameter; grid size defaults to 64, override with PHASOR_PSI_GRID.\n"
               "Exit codes: 0 success, 1 input error, 2 infeasible adjustment.");

    std::string scenario_path, out_path, in_path;
    double from_deg = -90.0, to_deg = 90.0, step_deg = 0.05;

    CLI::App* adjust_cmd = app.add_subcommand("adjust", "Adjust a scenario, write a result file");
    adjust_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    adjust_cmd->add_option("-o,--output", out_path, "Result JSON file")->required();

    CLI::App* pattern_cmd =
        app.add_subcommand("pattern", "Export the beampattern of a scenario or result as CSV");
    pattern_cmd->add_option("file", in_path, "Scenario or result JSON file")->required();
    pattern_cmd->add_option("--from", from_deg, "Grid start in degrees (default -90)");
    pattern_cmd->add_option("--to", to_deg, "Grid end in degrees (default 90)");
    pattern_cmd->add_option("--step", step_deg, "Grid step in degrees (default 0.05)");
    pattern_cmd->add_option("-o,--output", out_path, "CSV output file")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Re-check all invariants of a scenario or result file");
    verify_cmd->add_option("file", in_path, "Scenario or result JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints message or help text
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (adjust_cmd->parsed())
            return cmd_adjust(scenario_path, out_path);
        if (pattern_cmd->parsed())
            return cmd_pattern(in_path, from_deg, to_deg, step_deg, out_path);
        return cmd_verify(in_path);
    } catch (const phasor::Infeasible& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
}
