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

#ifndef BIPHOTON_PROJECTION_HPP
#define BIPHOTON_PROJECTION_HPP

#include <array>
#include <cmath>
#include <numbers>

#include "biphoton/elements.hpp"
#include "biphoton/fock.hpp"

namespace biphoton {

/// The magic wave-plate angle: tan^2(4 theta) = 2, about 13.68 degrees.
/// Both plates at this angle realize the maximal projection onto |psi_00>.
inline const double kMagicAngle = std::atan(std::numbers::sqrt2) / 4.0;

/// Knobs of the projection stage. theta1/theta2 are the wave-plate angles on
/// the two splitter outputs, pre_pbs_phase is the birefringent offset applied
/// to arm A before the splitter (retargets the projector to |psi_0n>), overlap
/// is the temporal indistinguishability gamma, and reflect_h models splitter
/// leakage for horizontal polarization.
struct ProjectionSetting {
    double theta1 = kMagicAngle;
    double theta2 = kMagicAngle;
    double pre_pbs_phase = 0.0;
    double overlap = 1.0;
    double reflect_h = 0.0;

    void validate() const;
};

/// Equal-angle fourfold amplitude
///   A_4f = (1/sqrt(12)) (sin^2 4t + 2 tau^n cos^2 4t + tau^{2n} sin^2 4t).
Complex analytic_a4f(double theta, int n);

/// Same closed form with the discrete tau^n replaced by exp(i delta).
Complex analytic_a4f_continuous(double theta, double delta);

/// Smallest positive theta2 with tan(4 theta1) tan(4 theta2) = 2. Throws
/// NoSolution at the singular tangents (sin 4 theta1 = 0 or cos 4 theta1 = 0),
/// which the propagated pipeline handles directly instead.
double solve_second_angle(double theta1);

/// Probability of a fourfold coincidence after the full projection stage.
/// The state must be a four-photon state on ports A and B.
double detection_probability(const PureState& state, const ProjectionSetting& setting);

/// Ensemble version: weighted sum of the pure-state probabilities.
double detection_probability(const Ensemble& ensemble, const ProjectionSetting& setting);

/// Probability that the ideal compensated splitter alone leaves two photons
/// in each output arm. Already separates |psi_0n> (1) from the rest (0).
double family_filter_probability(const PureState& state);

/// Probabilities of the nine detector-resolved outcome classes, indexed by
/// the number of photons at Det1 and at Det3 given two photons per arm.
/// Entry [1][1] is the fourfold coincidence.
std::array<std::array<double, 3>, 3> outcome_class_probabilities(
    const PureState& state, const ProjectionSetting& setting);

}  // namespace biphoton

#endif  // BIPHOTON_PROJECTION_HPP
