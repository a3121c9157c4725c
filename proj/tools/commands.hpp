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

#include <json.hpp>
#include <string>
#include <vector>

namespace clustercert::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Names of the commands accepted by run_command.
const std::vector<std::string>& command_names();

/// Parameters every command reads, with their defaults filled in.
nlohmann::ordered_json default_parameters(const std::string& command);

/// Runs a command on fully resolved parameters and returns the output text.
/// Library errors propagate with their exit codes.
std::string run_command(const std::string& command, const nlohmann::ordered_json& params);

}  // namespace clustercert::cli
