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
#include <span>
#include <string>

#include "clustercert/bounds.hpp"
#include "clustercert/densesim.hpp"
#include "clustercert/estimation.hpp"

namespace clustercert::io {

/// 12 significant digits, the precision of every emitted number.
std::string num(double v);

/// Ensemble fixtures: {"n": 3, "branches": [{"weight": w, "amplitudes": [[re, im], ...]}]}.
nlohmann::ordered_json ensemble_to_json(const Ensemble& rho);
Ensemble ensemble_from_json(const nlohmann::json& j);
Ensemble read_ensemble(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const CorrelatorEstimate& e);
nlohmann::ordered_json to_json(const CertifiedReport& r);

/// CSV with header z,span,span_kind,segment_size,le_floor,... (no schema line).
std::string bound_reports_csv(std::span<const BoundReport> reports);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace clustercert::io
