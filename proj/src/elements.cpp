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

#include "biphoton/elements.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

constexpr Complex kI{0.0, 1.0};

// (pol, bin) offset inside a port block, matching the canonical mode order.
int block_index(Pol pol, int bin) { return 2 * static_cast<int>(pol) + bin; }

}  // namespace

std::vector<Mode> port_modes(Port port) {
    std::vector<Mode> modes;
    for (Pol pol : {Pol::H, Pol::V}) {
        for (uint8_t bin = 0; bin < kTemporalBins; ++bin) {
            modes.push_back(Mode{port, pol, bin});
        }
    }
    return modes;
}

ModeTransform half_wave_plate(double theta, Port port) {
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    ModeTransform t;
    t.input_modes = port_modes(port);
    t.output_modes = t.input_modes;
    t.matrix = Eigen::MatrixXcd::Zero(4, 4);
    for (int bin = 0; bin < kTemporalBins; ++bin) {
        const int h = block_index(Pol::H, bin);
        const int v = block_index(Pol::V, bin);
        t.matrix(h, h) = -c;
        t.matrix(v, h) = s;
        t.matrix(h, v) = s;
        t.matrix(v, v) = c;
    }
    t.validate();
    return t;
}

ModeTransform polarizing_beam_splitter(Port in_a, Port in_b, Port out_c, Port out_d,
                                       double reflect_h, double reflect_v) {
    for (double r : {reflect_h, reflect_v}) {
        if (!(r >= 0.0 && r <= 1.0)) {
            throw InvalidReflectivity("beam-splitter reflectivity " + std::to_string(r) +
                                      " outside [0, 1]");
        }
    }
    ModeTransform t;
    t.input_modes = port_modes(in_a);
    for (const Mode& m : port_modes(in_b)) t.input_modes.push_back(m);
    t.output_modes = port_modes(out_c);
    for (const Mode& m : port_modes(out_d)) t.output_modes.push_back(m);
    t.matrix = Eigen::MatrixXcd::Zero(8, 8);
    for (Pol pol : {Pol::H, Pol::V}) {
        const double r = (pol == Pol::H) ? reflect_h : reflect_v;
        const Complex trans{std::sqrt(1.0 - r), 0.0};
        const Complex refl = kI * std::sqrt(r);
        for (int bin = 0; bin < kTemporalBins; ++bin) {
            const int off = block_index(pol, bin);
            t.matrix(off, off) = trans;          // a -> c
            t.matrix(4 + off, off) = refl;       // a -> d
            t.matrix(4 + off, 4 + off) = trans;  // b -> d
            t.matrix(off, 4 + off) = refl;       // b -> c
        }
    }
    t.validate();
    return t;
}

ModeTransform birefringent_phase(double delta, Port port) {
    ModeTransform t;
    for (uint8_t bin = 0; bin < kTemporalBins; ++bin) {
        t.input_modes.push_back(Mode{port, Pol::V, bin});
    }
    t.output_modes = t.input_modes;
    t.matrix = std::polar(1.0, delta) * Eigen::MatrixXcd::Identity(2, 2);
    t.validate();
    return t;
}

ModeTransform temporal_overlap(double gamma, Port port) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw InvalidOverlap("temporal overlap " + std::to_string(gamma) + " outside [0, 1]");
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
    ModeTransform t;
    t.input_modes = port_modes(port);
    t.output_modes = t.input_modes;
    t.matrix = Eigen::MatrixXcd::Zero(4, 4);
    for (Pol pol : {Pol::H, Pol::V}) {
        const int b0 = block_index(pol, 0);
        const int b1 = block_index(pol, 1);
        t.matrix(b0, b0) = gamma;
        t.matrix(b1, b0) = s;
        t.matrix(b0, b1) = -s;
        t.matrix(b1, b1) = gamma;
    }
    t.validate();
    return t;
}

CircuitElement make_half_wave_plate(double theta, Port port) {
    CircuitElement el;
    el.kind = ElementKind::HalfWavePlate;
    el.value = theta;
    el.port = port;
    el.transform = half_wave_plate(theta, port);
    return el;
}

CircuitElement make_beam_splitter(Port in_a, Port in_b, Port out_c, Port out_d,
                                  double reflect_h, double reflect_v) {
    CircuitElement el;
    el.kind = ElementKind::BeamSplitter;
    el.ports = {in_a, in_b, out_c, out_d};
    el.reflect_h = reflect_h;
    el.reflect_v = reflect_v;
    el.transform = polarizing_beam_splitter(in_a, in_b, out_c, out_d, reflect_h, reflect_v);
    return el;
}

CircuitElement make_phase(double delta, Port port) {
    CircuitElement el;
    el.kind = ElementKind::Phase;
    el.value = delta;
    el.port = port;
    el.transform = birefringent_phase(delta, port);
    return el;
}

CircuitElement make_overlap(double gamma, Port port) {
    CircuitElement el;
    el.kind = ElementKind::Overlap;
    el.value = gamma;
    el.port = port;
    el.transform = temporal_overlap(gamma, port);
    return el;
}

PureState apply_circuit(const PureState& state, const Circuit& circuit) {
    PureState current = state;
    for (const CircuitElement& el : circuit.elements) {
        current = apply_transform(current, el.transform);
    }
    return current;
}

ModeTransform compose(const Circuit& circuit) {
    std::set<Mode> universe_set;
    for (const CircuitElement& el : circuit.elements) {
        universe_set.insert(el.transform.input_modes.begin(), el.transform.input_modes.end());
        universe_set.insert(el.transform.output_modes.begin(), el.transform.output_modes.end());
    }
    std::vector<Mode> universe(universe_set.begin(), universe_set.end());
    const int n = static_cast<int>(universe.size());
    std::map<Mode, int> index;
    for (int i = 0; i < n; ++i) index[universe[i]] = i;

    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(n, n);
    for (const CircuitElement& el : circuit.elements) {
        const ModeTransform& u = el.transform;
        Eigen::MatrixXcd step = Eigen::MatrixXcd::Zero(n, n);
        const std::set<Mode> ins(u.input_modes.begin(), u.input_modes.end());
        const std::set<Mode> outs(u.output_modes.begin(), u.output_modes.end());
        for (size_t col = 0; col < u.input_modes.size(); ++col) {
            for (size_t row = 0; row < u.output_modes.size(); ++row) {
                step(index.at(u.output_modes[row]), index.at(u.input_modes[col])) =
                    u.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
            }
        }
        // Modes the element never mentions pass through unchanged. A pure
        // relabeling element (outputs disjoint from inputs) is extended with
        // the reverse routing so the square matrix stays unitary; well-formed
        // circuits never populate those directions.
        std::vector<Mode> orphan_in;   // consumed labels with no image column
        std::vector<Mode> orphan_out;  // fresh labels with no source column
        for (const Mode& m : universe) {
            const bool is_in = ins.count(m) > 0;
            const bool is_out = outs.count(m) > 0;
            if (!is_in && !is_out) {
                step(index.at(m), index.at(m)) = 1.0;
            } else if (is_in && !is_out) {
                orphan_in.push_back(m);
            } else if (!is_in && is_out) {
                orphan_out.push_back(m);
            }
        }
        for (size_t k = 0; k < orphan_out.size(); ++k) {
            step(index.at(orphan_in[k]), index.at(orphan_out[k])) = 1.0;
        }
        total = step * total;
    }

    ModeTransform composed;
    composed.input_modes = universe;
    composed.output_modes = universe;
    composed.matrix = std::move(total);
    composed.validate();
    return composed;
}

Circuit overlap_splitter_circuit(double reflect_h) {
    Circuit circuit;
    circuit.label = "overlap splitter";
    circuit.elements.push_back(make_beam_splitter(Port::A, Port::B, Port::C, Port::D, reflect_h, 1.0));
    circuit.elements.push_back(make_phase(-std::numbers::pi / 2.0, Port::C));
    circuit.elements.push_back(make_phase(-std::numbers::pi / 2.0, Port::D));
    return circuit;
}

Circuit projection_circuit(double theta1, double theta2, double pre_pbs_phase,
                           double overlap_gamma, double reflect_h) {
    Circuit circuit;
    circuit.label = "projection stage";
    circuit.elements.push_back(make_overlap(overlap_gamma, Port::B));
    circuit.elements.push_back(make_phase(pre_pbs_phase, Port::A));
    Circuit splitter = overlap_splitter_circuit(reflect_h);
    for (CircuitElement& el : splitter.elements) {
        circuit.elements.push_back(std::move(el));
    }
    circuit.elements.push_back(make_half_wave_plate(theta1, Port::C));
    circuit.elements.push_back(make_half_wave_plate(theta2, Port::D));
    circuit.elements.push_back(
        make_beam_splitter(Port::C, Port::AuxC, Port::Det1, Port::Det2, reflect_h, 1.0));
    circuit.elements.push_back(
        make_beam_splitter(Port::D, Port::AuxD, Port::Det3, Port::Det4, reflect_h, 1.0));
    return circuit;
}

DetectionPattern fourfold_pattern() {
    DetectionPattern pattern;
    for (Port port : {Port::Det1, Port::Det2, Port::Det3, Port::Det4}) {
        pattern.groups.push_back(DetectorGroup{port_modes(port), 1});
    }
    pattern.validate();
    return pattern;
}

DetectionPattern arm_split_pattern(int nc, int nd) {
    DetectionPattern pattern;
    pattern.groups.push_back(DetectorGroup{port_modes(Port::C), nc});
    pattern.groups.push_back(DetectorGroup{port_modes(Port::D), nd});
    pattern.validate();
    return pattern;
}

DetectionPattern detector_class_pattern(int nc_h, int nd_h) {
    DetectionPattern pattern;
    pattern.groups.push_back(DetectorGroup{port_modes(Port::Det1), nc_h});
    pattern.groups.push_back(DetectorGroup{port_modes(Port::Det2), 2 - nc_h});
    pattern.groups.push_back(DetectorGroup{port_modes(Port::Det3), nd_h});
    pattern.groups.push_back(DetectorGroup{port_modes(Port::Det4), 2 - nd_h});
    pattern.validate();
    return pattern;
}

}  // namespace biphoton
