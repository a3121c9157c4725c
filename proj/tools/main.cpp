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

// clustercert command-line entry point.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "clustercert/errors.hpp"
#include "clustercert/io.hpp"
#include "commands.hpp"
#include "manifest.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace clustercert;

const std::map<std::string, std::string> kHelp{
    {"max_measured", "largest number of measured qubits"},
    {"n", "qubit count (photon count for estimate)"},
    {"z", "generator expectation <ZXZ>"},
    {"lambda", "comma-separated worst-case weights"},
    {"p", "Y-error probability per emission cycle"},
    {"p_min", "smallest error probability"},
    {"p_max", "largest error probability"},
    {"steps", "number of grid points"},
    {"max_span", "largest span in measured qubits"},
    {"mode", "postselected or outcome_averaged"},
    {"seed", "64-bit seed"},
    {"restarts", "optimizer restarts"},
    {"eta", "per-photon detection efficiency"},
    {"windows", "number of three-photon windows (default: planned)"},
    {"epsilon", "Hoeffding epsilon for planning"},
    {"delta", "one minus the confidence level"},
    {"spans", "comma-separated spans in measured qubits"},
    {"bases", "measurement bases over {X,Y} for the inner qubits"},
    {"format", "csv or json"},
};

std::string flag_of(std::string key) {
    for (auto& c : key) {
        if (c == '_') c = '-';
    }
    return "--" + key;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Converts a flag value to the JSON type of the parameter's default.
Json convert(const Json& like, const std::string& text, const std::string& key) {
    try {
        if (like.is_array()) {
            Json arr = Json::array();
            const Json elem = like.empty() ? Json(0.0) : like.front();
            for (const auto& part : split(text)) arr.push_back(convert(elem, part, key));
            return arr;
        }
        std::size_t used = 0;
        Json value;
        if (like.is_number_integer() || like.is_null()) {
            if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
            value = std::stoull(text, &used);
        } else if (like.is_number()) {
            value = std::stod(text, &used);
        } else {
            return text;
        }
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw DomainError("invalid value '" + text + "' for " + flag_of(key));
    }
}

int emit(const std::string& command, const Json& params, const std::string& out) {
    const std::string content = cli::run_command(command, params);
    if (out.empty()) {
        std::cout << content;
        return 0;
    }
    io::write_atomic(out, content);
    cli::RunManifest m;
    m.command = command;
    m.parameters = params;
    m.seed = params.contains("seed") ? params.at("seed").get<std::uint64_t>() : 0;
    m.tool_version = cli::kToolVersion;
    m.outputs.push_back({out, cli::sha256_hex(content)});
    io::write_atomic(cli::manifest_path(out), m.to_json().dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement certification for photonic cluster-state chains"};
    app.require_subcommand(1);
    app.footer("Environment: CLUSTERCERT_DENSE_LIMIT overrides the dense-simulation qubit limit (default 14).\n"
               "Exit codes: 0 success, 1 replay mismatch, 2 domain error, 3 insufficient data, 4 resource limit.");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::string> outs;
    for (const auto& name : cli::command_names()) {
        auto* sub = app.add_subcommand(name);
        const Json defaults = cli::default_parameters(name);
        for (const auto& [key, def] : defaults.items()) {
            std::string help = kHelp.count(key) ? kHelp.at(key) : key;
            if (!def.is_null()) help += " (default " + (def.is_string() ? def.get<std::string>() : def.dump()) + ")";
            sub->add_option(flag_of(key), values[name][key], help);
        }
        sub->add_option("--out", outs[name], "write output here, plus a manifest beside it");
    }
    std::string manifest_file;
    auto* replay = app.add_subcommand("replay", "re-run a manifest and compare output checksums");
    replay->add_option("manifest", manifest_file, "path to a .manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (replay->parsed()) {
            const auto m = cli::RunManifest::from_json(nlohmann::json::parse(io::read_file(manifest_file)));
            const auto r = cli::replay(m);
            if (!r.matches) {
                std::cerr << "replay mismatch: expected " << r.expected << ", got " << r.actual << "\n";
                return 1;
            }
            std::cout << "replay ok: " << r.actual << "\n";
            return 0;
        }
        for (const auto& name : cli::command_names()) {
            if (!app.get_subcommand(name)->parsed()) continue;
            Json params = cli::default_parameters(name);
            for (auto& [key, value] : params.items()) {
                const auto& text = values[name][key];
                if (!text.empty()) value = convert(value, text, key);
            }
            return emit(name, params, outs[name]);
        }
    } catch (const clustercert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
