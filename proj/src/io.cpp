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

#include "clustercert/io.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <system_error>

#include "clustercert/errors.hpp"

namespace clustercert::io {

namespace {

// JSON numbers are rounded to 12 significant digits; the shortest
// round-trip form then prints at most that many.
double rounded(double v) { return std::stod(num(v)); }

const char* kind_name(SpanKind k) { return k == SpanKind::MeasuredQubits ? "measured_qubits" : "segment_size"; }

}  // namespace

std::string num(double v) { return fmt::format("{:.12g}", v); }

nlohmann::ordered_json ensemble_to_json(const Ensemble& rho) {
    nlohmann::ordered_json j;
    j["n"] = rho.n_qubits();
    auto& branches = j["branches"] = nlohmann::ordered_json::array();
    for (const auto& b : rho.branches()) {
        nlohmann::ordered_json amps = nlohmann::ordered_json::array();
        for (const auto& a : b.state.amplitudes()) amps.push_back({a.real(), a.imag()});
        branches.push_back({{"weight", b.weight}, {"amplitudes", std::move(amps)}});
    }
    return j;
}

Ensemble ensemble_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Branch> branches;
        for (const auto& b : j.at("branches")) {
            std::vector<cplx> amps;
            for (const auto& a : b.at("amplitudes")) amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
            branches.push_back({b.at("weight").get<double>(), PureState(n, std::move(amps))});
        }
        return Ensemble(std::move(branches));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed ensemble JSON: ") + e.what());
    }
}

Ensemble read_ensemble(const std::filesystem::path& path) {
    return ensemble_from_json(nlohmann::json::parse(read_file(path)));
}

nlohmann::ordered_json to_json(const BoundReport& r) {
    return {{"z", rounded(r.z)},
            {"span", r.span},
            {"span_kind", kind_name(r.span_kind)},
            {"segment_size", r.segment_size()},
            {"le_floor", rounded(r.le_floor)},
            {"fidelity_floor", rounded(r.fidelity_floor)},
            {"fef_floor", rounded(r.fef_floor)},
            {"teleport_floor", rounded(r.teleport_floor)},
            {"le_floor_raw", rounded(r.le_floor_raw)},
            {"fidelity_floor_raw", rounded(r.fidelity_floor_raw)},
            {"fef_floor_raw", rounded(r.fef_floor_raw)},
            {"teleport_floor_raw", rounded(r.teleport_floor_raw)}};
}

nlohmann::ordered_json to_json(const CorrelatorEstimate& e) {
    return {{"mean", rounded(e.mean)},
            {"n_complete", e.n_complete},
            {"n_total", e.n_total},
            {"ci_low", rounded(e.ci_low)},
            {"ci_high", rounded(e.ci_high)},
            {"confidence", rounded(e.confidence)},
            {"method", method_name(e.method)},
            {"epsilon", rounded(e.epsilon)},
            {"normal_low", rounded(e.normal_low)},
            {"normal_high", rounded(e.normal_high)}};
}

nlohmann::ordered_json to_json(const CertifiedReport& r) {
    auto j = to_json(r.report);
    j["method"] = method_name(r.method);
    j["confidence"] = rounded(r.confidence);
    return j;
}

std::string bound_reports_csv(std::span<const BoundReport> reports) {
    std::string out =
        "z,span,span_kind,segment_size,le_floor,fidelity_floor,fef_floor,teleport_floor,"
        "le_floor_raw,fidelity_floor_raw,fef_floor_raw,teleport_floor_raw\n";
    for (const auto& r : reports) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", num(r.z), r.span, kind_name(r.span_kind),
                           r.segment_size(), num(r.le_floor), num(r.fidelity_floor), num(r.fef_floor),
                           num(r.teleport_floor), num(r.le_floor_raw), num(r.fidelity_floor_raw),
                           num(r.fef_floor_raw), num(r.teleport_floor_raw));
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) throw Error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot move output into place at " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace clustercert::io
