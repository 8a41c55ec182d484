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

#include "phasor/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>

#include <json.hpp>

namespace phasor {

namespace {

using nlohmann::json;

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void save_json(const json& j, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

double require_number(const json& j, const std::string& field)
{
    if (!j.contains(field) || !j[field].is_number())
        throw ParseError("field '" + field + "' must be a number");
    return j[field].get<double>();
}

std::vector<double> require_number_array(const json& j, const std::string& field)
{
    if (!j.contains(field) || !j[field].is_array() || j[field].empty())
        throw ParseError("field '" + field + "' must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j[field].size());
    for (const auto& v : j[field]) {
        if (!v.is_number())
            throw ParseError("field '" + field + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ComplexVector parse_complex_array(const json& j, const std::string& field)
{
    if (!j[field].is_array() || j[field].empty())
        throw ParseError("field '" + field + "' must be a non-empty array of [re, im] pairs");
    ComplexVector out;
    out.reserve(j[field].size());
    for (const auto& v : j[field]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("field '" + field + "' entries must be [re, im] pairs");
        out.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return out;
}

json complex_array_to_json(const ComplexVector& w)
{
    json arr = json::array();
    for (const Complex& z : w)
        arr.push_back({z.real(), z.imag()});
    return arr;
}

PowerLevel parse_rho(const json& j)
{
    if (!j.contains("rhoC_db"))
        throw ParseError("field 'rhoC_db' is required (number in dB, or \"null\")");
    const json& r = j["rhoC_db"];
    if (r.is_null() || (r.is_string() && r.get<std::string>() == "null"))
        return PowerLevel::exact_null();
    if (!r.is_number())
        throw ParseError("field 'rhoC_db' must be a number or the string \"null\"");
    return PowerLevel::from_db(r.get<double>());
}

json rho_to_json(const PowerLevel& rho)
{
    if (rho.is_null())
        return json("null");
    return json(rho.db());
}

Scenario scenario_from_json(const json& j, const std::string& path)
{
    Scenario sc;
    sc.positions = require_number_array(j, "positions");
    const bool has_gains = j.contains("gains");
    const bool has_weights = j.contains("weights");
    if (has_gains == has_weights)
        throw ParseError("'" + path + "': exactly one of 'gains' or 'weights' is required");
    if (has_gains)
        sc.gains = require_number_array(j, "gains");
    else
        sc.weights = parse_complex_array(j, "weights");
    sc.theta0_deg = require_number(j, "theta0_deg");
    sc.thetaC_deg = require_number(j, "thetaC_deg");
    sc.rhoC = parse_rho(j);
    if (j.contains("psiC_rad")) {
        if (!j["psiC_rad"].is_number())
            throw ParseError("field 'psiC_rad' must be a number");
        sc.psiC = j["psiC_rad"].get<double>();
    }
    return sc;
}

json scenario_to_json(const Scenario& sc)
{
    json j;
    j["positions"] = sc.positions;
    if (sc.gains)
        j["gains"] = *sc.gains;
    else if (sc.weights)
        j["weights"] = complex_array_to_json(*sc.weights);
    j["theta0_deg"] = sc.theta0_deg;
    j["thetaC_deg"] = sc.thetaC_deg;
    j["rhoC_db"] = rho_to_json(sc.rhoC);
    if (sc.psiC)
        j["psiC_rad"] = *sc.psiC;
    return j;
}

// dB values can legitimately be -inf (exact null); JSON has no literal for it.
json db_to_json(double db)
{
    if (std::isinf(db))
        return json("null");
    return json(db);
}

double db_from_json(const json& v, const std::string& field)
{
    if (v.is_string() && v.get<std::string>() == "null")
        return -std::numeric_limits<double>::infinity();
    if (!v.is_number())
        throw ParseError("field '" + field + "' must be a number or the string \"null\"");
    return v.get<double>();
}

void append_number(std::string& line, double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
    line.append(buf, res.ptr);
}

} // namespace

Scenario load_scenario(const std::string& path)
{
    return scenario_from_json(load_json(path), path);
}

void save_scenario(const Scenario& sc, const std::string& path)
{
    save_json(scenario_to_json(sc), path);
}

void save_result(const ResultFile& rf, const std::string& path)
{
    json j = scenario_to_json(rf.scenario);
    j["w_new"] = complex_array_to_json(rf.w_new);
    j["psi_used_rad"] = rf.psi_used;
    j["residual"] = rf.residual;
    j["achieved_db"] = db_to_json(rf.achieved_db);
    j["distortion_db"] = rf.distortion_db;
    save_json(j, path);
}

ResultFile load_result(const std::string& path)
{
    const json j = load_json(path);
    ResultFile rf;
    rf.scenario = scenario_from_json(j, path);
    if (!j.contains("w_new"))
        throw ParseError("'" + path + "': field 'w_new' is required in a result file");
    rf.w_new = parse_complex_array(j, "w_new");
    rf.psi_used = require_number(j, "psi_used_rad");
    rf.residual = require_number(j, "residual");
    if (!j.contains("achieved_db"))
        throw ParseError("field 'achieved_db' is required in a result file");
    rf.achieved_db = db_from_json(j["achieved_db"], "achieved_db");
    rf.distortion_db = require_number(j, "distortion_db");
    return rf;
}

ArrayGeometry scenario_geometry(const Scenario& sc)
{
    try {
        return ArrayGeometry(sc.positions);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("field 'positions': ") + e.what());
    }
}

AdjustmentSpec scenario_spec(const Scenario& sc)
{
    return AdjustmentSpec{Angle::from_degrees(sc.theta0_deg), Angle::from_degrees(sc.thetaC_deg),
                          sc.rhoC, sc.psiC};
}

WeightVector scenario_weight(const Scenario& sc, const ArrayGeometry& geom)
{
    if (sc.weights) {
        if (sc.weights->size() != geom.size())
            throw ParseError("field 'weights': expected " + std::to_string(geom.size()) +
                             " entries, got " + std::to_string(sc.weights->size()));
        return WeightVector(*sc.weights);
    }
    if (sc.gains->size() != geom.size())
        throw ParseError("field 'gains': expected " + std::to_string(geom.size()) +
                         " entries, got " + std::to_string(sc.gains->size()));
    return build_preassigned_weight(geom, *sc.gains, Angle::from_degrees(sc.theta0_deg));
}

PatternSource load_pattern_source(const std::string& path)
{
    const json j = load_json(path);
    Scenario sc = scenario_from_json(j, path);
    ArrayGeometry geom = scenario_geometry(sc);
    const Angle theta0 = Angle::from_degrees(sc.theta0_deg);
    if (j.contains("w_new")) {
        ComplexVector w = parse_complex_array(j, "w_new");
        if (w.size() != geom.size())
            throw ParseError("field 'w_new': expected " + std::to_string(geom.size()) +
                             " entries, got " + std::to_string(w.size()));
        return PatternSource{std::move(geom), WeightVector(std::move(w)), theta0};
    }
    WeightVector w = scenario_weight(sc, geom);
    return PatternSource{std::move(geom), std::move(w), theta0};
}

std::vector<Angle> make_grid(double from_deg, double to_deg, double step_deg)
{
    if (!std::isfinite(from_deg) || !std::isfinite(to_deg) || !std::isfinite(step_deg))
        throw std::invalid_argument("grid: bounds and step must be finite");
    if (step_deg <= 0.0)
        throw std::invalid_argument("grid: step must be > 0");
    if (from_deg > to_deg)
        throw std::invalid_argument("grid: 'from' must not exceed 'to'");

    const auto count =
        static_cast<std::size_t>(std::floor((to_deg - from_deg) / step_deg + 1e-9)) + 1;
    std::vector<Angle> grid;
    grid.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        grid.push_back(Angle::from_degrees(from_deg + static_cast<double>(k) * step_deg));
    return grid;
}

void write_pattern_csv(const std::vector<PatternSample>& samples, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << "theta_deg,power_db\n";
    std::string line;
    for (const PatternSample& s : samples) {
        line.clear();
        append_number(line, s.theta_deg);
        line.push_back(',');
        append_number(line, s.power_db);
        line.push_back('\n');
        out << line;
    }
    if (!out)
        throw ParseError("write failed for '" + path + "'");
}

} // namespace phasor
