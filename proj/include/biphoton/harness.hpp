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

#ifndef BIPHOTON_HARNESS_HPP
#define BIPHOTON_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "biphoton/projection.hpp"

namespace biphoton {

enum class ScanKind { Overlap, Delay, Delta };

std::string_view to_string(ScanKind kind);
ScanKind scan_kind_from_string(const std::string& name);

/// Source of the four-photon input: a named Bell state, or the
/// delta-parameterized second-order SPDC state ("phi2").
struct StateSource {
    std::string name = "psi00";
    double delta = 0.0;  // phi2 phase when delta is not the scanned axis
};

/// One sweep of a single knob with everything else pinned.
///  - overlap: grid holds gamma values in [0, 1]
///  - delay:   grid holds delays d, mapped to gamma = exp(-d^2 / (2 sigma^2))
///  - delta:   grid holds source phases (radians); source must be "phi2"
struct ScanSpec {
    ScanKind kind = ScanKind::Delta;
    std::vector<double> grid;
    ProjectionSetting setting;
    StateSource source;
    double coherence_sigma = 1.0;  // delay scans only

    /// Grid nonempty and strictly monotone; delay width positive;
    /// delta scans restricted to the phi2 source.
    void validate() const;
};

struct ScanPoint {
    double parameter = 0.0;
    double probability = 0.0;
    double rate_hz = 0.0;
    double counts = 0.0;
    double sigma_counts = 0.0;
};

/// Conversion from detection probability to detector rate: mean rate =
/// probability * peak_rate_scale + background_rate. The additive background
/// stands in for generation imperfections and six-photon events.
struct RateModel {
    double peak_rate_scale = 4.89;  // Hz per unit probability; 1/3 -> 1.63 Hz
    double background_rate = 0.0;   // Hz

    void validate() const;
};

struct ScanResult {
    ScanSpec spec;
    std::vector<ScanPoint> points;
    bool has_counts = false;
    RateModel model;
    double integration_seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Evaluates the detection probability at every grid point (exact values,
/// no counts). Point-wise pure: the output is grid-order independent.
ScanResult run_scan(const ScanSpec& spec);

/// Draws Poissonian counts with mean (p * peak + background) * T at each
/// point. Each point uses its own generator seeded from (seed, index), so
/// results do not depend on evaluation order. sigma = sqrt(counts).
ScanResult simulate_counts(const ScanResult& result, const RateModel& model,
                           double integration_seconds, std::uint64_t seed);

struct VisibilityEstimate {
    double visibility = 0.0;
    double uncertainty = 0.0;
    double amplitude = 0.0;  // fitted A in R = A * model + C
    double offset = 0.0;     // fitted C
};

/// Weighted least-squares fit of R(delta) = A * |a4f(theta, delta)|^2 + C to
/// a delta scan (counts when present, probabilities otherwise); visibility is
/// the contrast of the fitted curve with a delta-method uncertainty. Needs at
/// least five points spanning one period; throws FitDegenerate when the model
/// is constant on the grid.
VisibilityEstimate estimate_visibility(const ScanResult& result);

}  // namespace biphoton

#endif  // BIPHOTON_HARNESS_HPP
