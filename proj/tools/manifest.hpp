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


#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace clustercert::cli {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

struct OutputChecksum {
    std::string path;
    std::string sha256;
};

/// Everything needed to regenerate an output byte for byte.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json parameters;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::vector<OutputChecksum> outputs;

    nlohmann::ordered_json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

/// <output>.manifest.json
std::filesystem::path manifest_path(const std::filesystem::path& output);

struct ReplayResult {
    bool matches = false;
    std::string expected;
    std::string actual;
};

/// Re-runs the manifest's command and compares the SHA-256 of the new output
/// with the recorded one.
ReplayResult replay(const RunManifest& manifest);

}  // namespace clustercert::cli
