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

#include "biphoton/projection.hpp"

#include <cmath>
#include <string>

#include "biphoton/errors.hpp"
#include "biphoton/states.hpp"

namespace biphoton {

namespace {

constexpr double kSingularTangent = 1e-12;

// The projection stage accepts four photons distributed over ports A and B.
void require_source_state(const PureState& state) {
    if (state.total_photons() != 4) {
        throw InvalidState("projection stage expects a four-photon state, got " +
                           std::to_string(state.total_photons()) + " photons");
    }
    for (const auto& [basis, amp] : state.terms()) {
        for (const auto& [mode, count] : basis.occupations()) {
            if (mode.port != Port::A && mode.port != Port::B) {
                throw InvalidState("projection stage expects photons on ports a and b only, "
                                   "found occupation at " + to_string(mode));
            }
        }
    }
}

}  // namespace

void ProjectionSetting::validate() const {
    if (!(overlap >= 0.0 && overlap <= 1.0)) {
        throw InvalidOverlap("temporal overlap " + std::to_string(overlap) +
                             " outside [0, 1]");
    }
    if (!(reflect_h >= 0.0 && reflect_h <= 1.0)) {
        throw InvalidReflectivity("beam-splitter reflectivity " + std::to_string(reflect_h) +
                                  " outside [0, 1]");
    }
}

Complex analytic_a4f(double theta, int n) {
    const double s2 = std::pow(std::sin(4.0 * theta), 2);
    const double c2 = std::pow(std::cos(4.0 * theta), 2);
    return (s2 + 2.0 * tau_power(n) * c2 + tau_power(2 * n) * s2) / std::sqrt(12.0);
}

Complex analytic_a4f_continuous(double theta, double delta) {
    const double s2 = std::pow(std::sin(4.0 * theta), 2);
    const double c2 = std::pow(std::cos(4.0 * theta), 2);
    const Complex phase = std::polar(1.0, delta);
    return (s2 + 2.0 * phase * c2 + phase * phase * s2) / std::sqrt(12.0);
}

double solve_second_angle(double theta1) {
    const double s = std::sin(4.0 * theta1);
    const double c = std::cos(4.0 * theta1);
    if (std::abs(s) < kSingularTangent) {
        throw NoSolution("tan(4 theta1) = 0: the product tan(4 theta1) tan(4 theta2) "
                         "cannot reach 2");
    }
    if (std::abs(c) < kSingularTangent) {
        throw NoSolution("tan(4 theta1) diverges; the singular setting is handled by "
                         "propagation, not by the angle condition");
    }
    double theta2 = std::atan(2.0 * c / s) / 4.0;
    while (theta2 <= 0.0) theta2 += std::numbers::pi / 4.0;  // tan(4t) has period pi/4
    return theta2;
}

double detection_probability(const PureState& state, const ProjectionSetting& setting) {
    setting.validate();
    require_source_state(state);
    const Circuit circuit = projection_circuit(setting.theta1, setting.theta2,
                                               setting.pre_pbs_phase, setting.overlap,
                                               setting.reflect_h);
    const PureState out = apply_circuit(state, circuit);
    return postselect(out, fourfold_pattern()).probability;
}

double detection_probability(const Ensemble& ensemble, const ProjectionSetting& setting) {
    ensemble.validate();
    double total = 0.0;
    for (const auto& [weight, state] : ensemble.components) {
        total += weight * detection_probability(state, setting);
    }
    return total;
}

double family_filter_probability(const PureState& state) {
    require_source_state(state);
    const PureState out = apply_circuit(state, overlap_splitter_circuit(0.0));
    return postselect(out, arm_split_pattern(2, 2)).probability;
}

std::array<std::array<double, 3>, 3> outcome_class_probabilities(
    const PureState& state, const ProjectionSetting& setting) {
    setting.validate();
    require_source_state(state);
    const Circuit circuit = projection_circuit(setting.theta1, setting.theta2,
                                               setting.pre_pbs_phase, setting.overlap,
                                               setting.reflect_h);
    const PureState out = apply_circuit(state, circuit);
    std::array<std::array<double, 3>, 3> grid{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            grid[i][j] = postselect(out, detector_class_pattern(i, j)).probability;
        }
    }
    return grid;
}

}  // namespace biphoton
