// Copyright 2026 The clustercert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "clustercert/bounds.hpp"
#include "clustercert/densesim.hpp"
#include "clustercert/errormodel.hpp"
#include "clustercert/errors.hpp"
#include "clustercert/estimation.hpp"
#include "clustercert/io.hpp"
#include "clustercert/localize.hpp"
#include "clustercert/pauli.hpp"

namespace clustercert::cli {

namespace {

using Json = nlohmann::ordered_json;
using io::num;

double rounded(double v) { return std::stod(num(v)); }

std::string schema(const std::string& command) { return "clustercert." + command + "/1"; }

std::string csv_preamble(const std::string& command) { return "# schema: " + schema(command) + "\n"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_of(const Json& p, std::initializer_list<const char*> allowed) {
    const auto f = p.at("format").get<std::string>();
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw DomainError("format '" + f + "' is not available for this command");
}

std::string cmd_thresholds(const Json& p) {
    const int max_measured = p.at("max_measured").get<int>();
    if (max_measured < 1) throw DomainError("max_measured must be at least 1");
    const auto format = format_of(p, {"csv", "json"});
    if (format == "json") {
        Json rows = Json::array();
        for (int m = 1; m <= max_measured; ++m) {
            const auto r = threshold_z_exact(m);
            rows.push_back({{"measured_qubits", m}, {"threshold_exact", r.str()}, {"threshold_decimal", rounded(r.value())}});
        }
        return dump({{"schema", schema("thresholds")}, {"rows", rows}});
    }
    std::string out = csv_preamble("thresholds") + "measured_qubits,threshold_exact,threshold_decimal\n";
    for (int m = 1; m <= max_measured; ++m) {
        const auto r = threshold_z_exact(m);
        out += fmt::format("{},{},{}\n", m, r.str(), num(r.value()));
    }
    return out;
}

std::string cmd_wc_verify(const Json& p) {
    format_of(p, {"json"});
    const int n = p.at("n").get<int>();
    const double z = p.at("z").get<double>();
    if (n < 2) throw DomainError("n must be at least 2");
    const double lambda = wc_lambda(z, n);
    const auto nq = static_cast<std::size_t>(n);
    if (nq > dense_limit()) throw ResourceError("wc-verify needs a dense state of " + std::to_string(n) + " qubits");
    const Ensemble rho = wc_state(nq, lambda);
    const auto gens = cluster_generators(nq);

    double max_backbone = 0.0;
    std::vector<std::uint8_t> exps(nq);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nq); ++mask) {
        for (std::size_t i = 0; i < nq; ++i) exps[i] = (mask >> i) & 1u;
        const auto el = compose_exponents(gens, exps);
        const double value = expectation(rho, el.op);
        max_backbone = std::max(max_backbone, std::abs(value - backbone_floor_raw(el.m, z)));
    }
    const double fid = fidelity(rho, cluster_state(nq));
    const double expected = fidelity_floor_uniform(z, n);
    const double backbone_fid = backbone_fidelity(rho);
    const double fid_dev = std::abs(fid - expected);
    const double backbone_dev = std::abs(backbone_fid - expected);
    return dump({{"schema", schema("wc-verify")},
                 {"n", n},
                 {"z", rounded(z)},
                 {"lambda", rounded(lambda)},
                 {"stabilizer_elements", (std::uint64_t{1} << nq) - 1},
                 {"max_backbone_deviation", rounded(max_backbone)},
                 {"fidelity", rounded(fid)},
                 {"fidelity_expected", rounded(expected)},
                 {"fidelity_deviation", rounded(fid_dev)},
                 {"backbone_fidelity", rounded(backbone_fid)},
                 {"backbone_fidelity_deviation", rounded(backbone_dev)},
                 {"max_deviation", rounded(std::max({max_backbone, fid_dev, backbone_dev}))}});
}

std::string cmd_compare(const Json& p) {
    const double p_min = p.at("p_min").get<double>();
    const double p_max = p.at("p_max").get<double>();
    const int steps = p.at("steps").get<int>();
    const int max_span = p.at("max_span").get<int>();
    if (!(0.0 <= p_min && p_min < p_max && p_max <= 0.5)) throw DomainError("need 0 <= p_min < p_max <= 1/2");
    if (steps < 2) throw DomainError("steps must be at least 2");
    const auto format = format_of(p, {"csv", "json"});
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) grid.push_back(p_min + (p_max - p_min) * i / (steps - 1));
    const auto rows = compare_ranges(grid, max_span);
    const auto crossings = le3_crossings();
    if (format == "json") {
        Json jr = Json::array();
        for (const auto& r : rows) {
            jr.push_back({{"p", rounded(r.p)}, {"zxz_value", rounded(r.zxz_value)}, {"zxz_range", r.zxz_range},
                          {"direct_range", r.direct_range}, {"le3_direct", rounded(r.le3_direct)},
                          {"le3_zxz", rounded(r.le3_zxz)}});
        }
        return dump({{"schema", schema("compare")},
                     {"rows", jr},
                     {"le3_crossings", {{"direct", rounded(crossings.direct)}, {"zxz", rounded(crossings.zxz)}}}});
    }
    std::string out = csv_preamble("compare");
    out += "# le3_crossing_direct: " + num(crossings.direct) + "\n";
    out += "# le3_crossing_zxz: " + num(crossings.zxz) + "\n";
    out += "p,zxz_value,zxz_range,direct_range,le3_direct,le3_zxz\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", num(r.p), num(r.zxz_value), r.zxz_range, r.direct_range,
                           num(r.le3_direct), num(r.le3_zxz));
    }
    return out;
}

std::string cmd_localize(const Json& p) {
    const int n = p.at("n").get<int>();
    if (n < 3 || n > 9) throw DomainError("localize needs 3 <= n <= 9");
    const auto lambdas = p.at("lambda").get<std::vector<double>>();
    if (lambdas.empty()) throw DomainError("need at least one lambda");
    OptimizerConfig cfg;
    cfg.seed = p.at("seed").get<std::uint64_t>();
    cfg.restarts = p.at("restarts").get<int>();
    const auto mode = parse_mode(p.at("mode").get<std::string>());
    const auto format = format_of(p, {"csv", "json"});
    const auto rows = localize_sweep(std::size_t(n), lambdas, mode, cfg);
    if (format == "json") {
        Json jr = Json::array();
        for (const auto& r : rows) {
            const auto& a = r.result.best_angles;
            Json theta = Json::array(), phi = Json::array();
            for (std::size_t i = 0; i < a.size(); ++i) {
                theta.push_back(rounded(a.theta[i]));
                phi.push_back(rounded(a.phi[i]));
            }
            jr.push_back({{"lambda", rounded(r.lambda)}, {"n", r.n}, {"mode", mode_name(r.mode)},
                          {"best_value", rounded(r.result.best_value)},
                          {"theta_rms_deviation_from_pi_over_2", rounded(a.theta_rms_deviation())},
                          {"iterations", r.result.iterations}, {"converged", r.result.converged},
                          {"theta", theta}, {"phi", phi}});
        }
        return dump({{"schema", schema("localize")}, {"rows", jr}});
    }
    std::ostringstream out;
    out << csv_preamble("localize");
    write_sweep_csv(out, rows);
    return out.str();
}

std::string cmd_estimate(const Json& p) {
    format_of(p, {"json"});
    SourceParams source;
    source.p_y = p.at("p").get<double>();
    source.n_photons = p.at("n").get<std::size_t>();
    validate(source);
    const double eta = p.at("eta").get<double>();
    const double epsilon = p.at("epsilon").get<double>();
    const double delta = p.at("delta").get<double>();
    const auto spans = p.at("spans").get<std::vector<int>>();
    ExperimentPlan plan;
    plan.basis_cycle = {"ZXZ"};
    plan.efficiency = eta;
    plan.seed = p.at("seed").get<std::uint64_t>();
    const auto planned = plan_samples(eta, epsilon, delta);
    plan.windows = p.at("windows").is_null() ? planned.windows : p.at("windows").get<std::uint64_t>();

    const auto est = simulate_estimate(source, plan, delta);
    Json reports = Json::array();
    for (const auto& r : certified_report(est, spans)) reports.push_back(io::to_json(r));
    return dump({{"schema", schema("estimate")},
                 {"source", {{"p", rounded(source.p_y)}, {"n_photons", source.n_photons}}},
                 {"eta", rounded(eta)},
                 {"windows", plan.windows},
                 {"planned_windows", planned.windows},
                 {"seed", plan.seed},
                 {"analytic_zxz", rounded(source_zxz(source.p_y))},
                 {"estimate", io::to_json(est)},
                 {"reports", reports}});
}

std::string cmd_plan(const Json& p) {
    format_of(p, {"json"});
    const double eta = p.at("eta").get<double>();
    const double epsilon = p.at("epsilon").get<double>();
    const double delta = p.at("delta").get<double>();
    const auto plan = plan_samples(eta, epsilon, delta);
    return dump({{"schema", schema("plan")},
                 {"eta", rounded(eta)},
                 {"epsilon", rounded(epsilon)},
                 {"delta", rounded(delta)},
                 {"complete_triples", plan.complete_triples},
                 {"windows", plan.windows}});
}

std::string cmd_triplet(const Json& p) {
    format_of(p, {"json"});
    const auto bases_text = p.at("bases").get<std::string>();
    const auto bases = parse_bases(bases_text);
    const std::size_t n = bases.size() + 2;
    const auto triplet = surviving_triplet(n, bases);
    Json elements = Json::array();
    for (const auto& e : triplet) {
        elements.push_back({{"operator", e.op.str()}, {"generators", e.generator_indices}, {"m", e.m}});
    }
    return dump({{"schema", schema("triplet")},
                 {"bases", bases_text},
                 {"n", n},
                 {"elements", elements},
                 {"m_sum", triplet_m_sum(n)}});
}

using Handler = std::function<std::string(const Json&)>;

const std::map<std::string, std::pair<Handler, Json>>& registry() {
    static const std::map<std::string, std::pair<Handler, Json>> r{
        {"thresholds", {cmd_thresholds, {{"max_measured", 20}, {"format", "csv"}}}},
        {"wc-verify", {cmd_wc_verify, {{"n", 6}, {"z", 0.95}, {"format", "json"}}}},
        {"compare",
         {cmd_compare, {{"p_min", 0.0}, {"p_max", 0.1}, {"steps", 30}, {"max_span", 20}, {"format", "csv"}}}},
        {"localize",
         {cmd_localize,
          {{"n", 7},
           {"lambda", {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}},
           {"mode", "postselected"},
           {"seed", 0},
           {"restarts", 20},
           {"format", "csv"}}}},
        {"estimate",
         {cmd_estimate,
          {{"p", 0.0},
           {"n", 8},
           {"eta", 1.0},
           {"windows", nullptr},
           {"epsilon", 0.05},
           {"delta", 0.01},
           {"seed", 0},
           {"spans", {1, 3, 5}},
           {"format", "json"}}}},
        {"plan", {cmd_plan, {{"eta", 0.01}, {"epsilon", 0.01}, {"delta", 0.01}, {"format", "json"}}}},
        {"triplet", {cmd_triplet, {{"bases", "X"}, {"format", "json"}}}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, entry] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

nlohmann::ordered_json default_parameters(const std::string& command) {
    const auto it = registry().find(command);
    if (it == registry().end()) throw DomainError("unknown command '" + command + "'");
    return it->second.second;
}

std::string run_command(const std::string& command, const nlohmann::ordered_json& params) {
    const auto it = registry().find(command);
    if (it == registry().end()) throw DomainError("unknown command '" + command + "'");
    try {
        return it->second.first(params);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad parameters: ") + e.what());
    }
}

}  // namespace clustercert::cli
