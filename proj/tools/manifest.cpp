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

#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fmt/format.h>
#include <memory>

#include "clustercert/errors.hpp"
#include "commands.hpp"

namespace clustercert::cli {

namespace {

constexpr const char* kManifestSchema = "clustercert.manifest/1";

}  // namespace

std::string sha256_hex(const std::string& data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::string hex;
    for (unsigned i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
    return {{"schema", kManifestSchema}, {"command", command},   {"parameters", parameters},
            {"seed", seed},              {"tool_version", tool_version}, {"outputs", outs}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<std::string>() != kManifestSchema) throw DomainError("unsupported manifest schema");
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.parameters = nlohmann::ordered_json(j.at("parameters"));
        m.seed = j.at("seed").get<std::uint64_t>();
        m.tool_version = j.at("tool_version").get<std::string>();
        for (const auto& o : j.at("outputs")) {
            m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed manifest: ") + e.what());
    }
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
    auto p = output;
    p += ".manifest.json";
    return p;
}

ReplayResult replay(const RunManifest& manifest) {
    if (manifest.outputs.empty()) throw DomainError("manifest records no outputs");
    ReplayResult r;
    r.expected = manifest.outputs.front().sha256;
    r.actual = sha256_hex(run_command(manifest.command, manifest.parameters));
    r.matches = r.expected == r.actual;
    return r;
}

}  // namespace clustercert::cli
