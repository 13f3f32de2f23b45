// Copyright 2026 The biphoton-sim authors
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

#ifndef BIPHOTON_IO_HPP
#define BIPHOTON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biphoton/elements.hpp"
#include "biphoton/fock.hpp"
#include "biphoton/harness.hpp"

// Serialization conventions: angles appear in degrees in every document
// (and in the delta column of scan CSVs); the library itself works in
// radians. Amplitudes are stored as [re, im] pairs at full precision.

namespace biphoton {

using json = nlohmann::ordered_json;

json state_to_json(const PureState& state);
PureState state_from_json(const json& doc);

json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& doc);

json scan_spec_to_json(const ScanSpec& spec);
ScanSpec scan_spec_from_json(const json& doc);

/// Run manifest: spec, rate model, seed, integration time, and a timestamp
/// (honours SOURCE_DATE_EPOCH for reproducible output). include_spec = false
/// omits the scan-spec section, for count simulations fed by a bare CSV.
json scan_manifest(const ScanResult& result, bool include_spec = true);

/// CSV with header parameter,probability,rate_hz,counts,sigma_counts.
/// Delta-scan parameters are converted to degrees on the way out and back.
std::string scan_csv(const ScanResult& result);
void write_scan_csv(const std::string& path, const ScanResult& result);
std::vector<ScanPoint> read_scan_csv(const std::string& path, ScanKind kind);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// ISO-8601 UTC time, overridden by SOURCE_DATE_EPOCH when set.
std::string iso_timestamp();

}  // namespace biphoton

#endif  // BIPHOTON_IO_HPP
