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

#ifndef BIPHOTON_ELEMENTS_HPP
#define BIPHOTON_ELEMENTS_HPP

#include <array>
#include <string>
#include <vector>

#include "biphoton/fock.hpp"

// Conventions used by every constructor here:
//
//  * Wave-plate angles are measured from the vertical axis. A half-wave
//    plate at angle theta maps
//        h^dag -> -cos(2 theta) h^dag + sin(2 theta) v^dag
//        v^dag ->  sin(2 theta) h^dag + cos(2 theta) v^dag
//    This orientation is pinned by requiring the propagated fourfold
//    amplitude of the full projection stage to match the closed form
//    (1/sqrt(12))(sin^2 4t + 2 tau^n cos^2 4t + tau^2n sin^2 4t).
//
//  * Beam splitters reflect with amplitude i (symmetric convention). The
//    standard projection circuit compensates the reflection phase with a
//    fixed -90 degree birefringent plate on each overlap-splitter output,
//    so the compensated ideal splitter routes a_H->c_H, a_V->d_V,
//    b_H->d_H, b_V->c_V with no residual phase.
//
//  * Every element acts identically on both temporal bins.

namespace biphoton {

/// Half-wave plate on the (H, V) pair of one port. Real, involutive.
ModeTransform half_wave_plate(double theta, Port port);

/// Polarizing beam splitter between two spatial ports. Per polarization p
/// it is a two-port splitter with transmission sqrt(1 - r_p) and reflection
/// i*sqrt(r_p). The ideal element has reflect_h = 0, reflect_v = 1.
ModeTransform polarizing_beam_splitter(Port in_a, Port in_b, Port out_c, Port out_d,
                                       double reflect_h = 0.0, double reflect_v = 1.0);

/// Birefringent phase plate: H -> H, V -> exp(i delta) V on one port.
ModeTransform birefringent_phase(double delta, Port port);

/// Temporal-overlap element modeling path delay: creation operators in bin 0
/// of the port map to gamma*(bin 0) + sqrt(1 - gamma^2)*(bin 1). gamma = 1 is
/// full indistinguishability, gamma = 0 full temporal labeling.
ModeTransform temporal_overlap(double gamma, Port port);

enum class ElementKind { HalfWavePlate, BeamSplitter, Phase, Overlap };

/// One circuit element: the unitary plus the recipe it was built from,
/// so circuits can be serialized by kind and parameters.
struct CircuitElement {
    ElementKind kind = ElementKind::Phase;
    double value = 0.0;  // theta, delta, or gamma
    Port port = Port::A;
    std::array<Port, 4> ports{Port::A, Port::B, Port::C, Port::D};  // splitter routing
    double reflect_h = 0.0;
    double reflect_v = 1.0;
    ModeTransform transform;
};

CircuitElement make_half_wave_plate(double theta, Port port);
CircuitElement make_beam_splitter(Port in_a, Port in_b, Port out_c, Port out_d,
                                  double reflect_h = 0.0, double reflect_v = 1.0);
CircuitElement make_phase(double delta, Port port);
CircuitElement make_overlap(double gamma, Port port);

struct Circuit {
    std::string label;
    std::vector<CircuitElement> elements;
};

/// Applies the elements in order.
PureState apply_circuit(const PureState& state, const Circuit& circuit);

/// Collapses the circuit to a single unitary on the union of all element
/// modes. Relabeling elements are extended with the reverse routing on the
/// otherwise-unreachable directions so the result stays unitary.
ModeTransform compose(const Circuit& circuit);

/// The full projection stage: overlap element and pre-splitter phase on the
/// input arms, overlap splitter with reflection compensation, one wave plate
/// per output arm, then the two analysis splitters feeding ports Det1..Det4.
Circuit projection_circuit(double theta1, double theta2, double pre_pbs_phase = 0.0,
                           double overlap_gamma = 1.0, double reflect_h = 0.0);

/// The compensated overlap splitter alone (ports A, B -> C, D).
Circuit overlap_splitter_circuit(double reflect_h = 0.0);

/// All (polarization, bin) modes of one spatial port.
std::vector<Mode> port_modes(Port port);

/// Fourfold coincidence: exactly one photon at each detector port,
/// temporal bins traced over.
DetectionPattern fourfold_pattern();

/// nc photons anywhere in port C and nd anywhere in port D.
DetectionPattern arm_split_pattern(int nc, int nd);

/// Detector-resolved outcome class: (Det1, Det2) = (nc_h, 2 - nc_h) photons
/// and (Det3, Det4) = (nd_h, 2 - nd_h).
DetectionPattern detector_class_pattern(int nc_h, int nd_h);

}  // namespace biphoton

#endif  // BIPHOTON_ELEMENTS_HPP
