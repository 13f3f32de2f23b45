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

#include "biphoton/states.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

// One logical qutrit level as a port-local monomial with its 1/sqrt(n!)
// prefactor: |0> = h^2/sqrt(2), |1> = hv, |2> = v^2/sqrt(2).
struct LogicalLevel {
    int n_h;
    int n_v;
    double prefactor;
};

LogicalLevel logical_level(int j) {
    switch (j) {
        case 0: return {2, 0, 1.0 / std::numbers::sqrt2};
        case 1: return {1, 1, 1.0};
        default: return {0, 2, 1.0 / std::numbers::sqrt2};
    }
}

std::map<Mode, int> level_occupation(int j, Port port) {
    const LogicalLevel level = logical_level(j);
    std::map<Mode, int> occ;
    if (level.n_h > 0) occ[Mode{port, Pol::H, 0}] = level.n_h;
    if (level.n_v > 0) occ[Mode{port, Pol::V, 0}] = level.n_v;
    return occ;
}

// Product monomial |j>_a |k>_b as a basis state plus its scalar prefactor.
std::pair<FockBasisState, double> two_port_level(int j, int k) {
    std::map<Mode, int> occ = level_occupation(j, Port::A);
    for (const auto& [mode, count] : level_occupation(k, Port::B)) occ[mode] = count;
    return {FockBasisState(occ), logical_level(j).prefactor * logical_level(k).prefactor};
}

}  // namespace

Complex tau_power(int k) {
    static const Complex tau = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    static const Complex powers[3] = {Complex{1.0, 0.0}, tau, tau * tau};
    int r = k % 3;
    if (r < 0) r += 3;
    return powers[r];
}

PureState biphoton_qutrit(const QutritAmplitudes& amps, Port port) {
    PureState::TermMap terms;
    const Complex alphas[3] = {amps.alpha0, amps.alpha1, amps.alpha2};
    for (int j = 0; j < 3; ++j) {
        if (alphas[j] == Complex{0.0, 0.0}) continue;
        terms[FockBasisState(level_occupation(j, port))] =
            alphas[j] * logical_level(j).prefactor;
    }
    return normalize(PureState(terms));
}

PureState bell_state(BellIndex idx) {
    const double scale = 1.0 / std::sqrt(3.0);
    PureState::TermMap terms;
    for (int j = 0; j < 3; ++j) {
        auto [basis, prefactor] = two_port_level(j, (j + idx.m) % 3);
        terms[basis] = scale * prefactor * tau_power(j * idx.n);
    }
    return PureState(terms);
}

PureState spdc_second_order(double delta) {
    const double scale = 1.0 / std::sqrt(12.0);
    PureState::TermMap terms;
    const Complex phase = std::polar(1.0, delta);
    // Amplitudes (1, 2e^{i delta}, e^{2i delta})/sqrt(12) sit on the bare
    // monomials themselves, not on the 1/sqrt(2)-weighted logical levels.
    const Complex coeffs[3] = {Complex{1.0, 0.0}, 2.0 * phase, phase * phase};
    for (int j = 0; j < 3; ++j) {
        std::map<Mode, int> occ = level_occupation(j, Port::A);
        for (const auto& [mode, count] : level_occupation(j, Port::B)) occ[mode] = count;
        terms[FockBasisState(occ)] = scale * coeffs[j];
    }
    return PureState(terms);
}

PureState named_state(const std::string& name, double delta) {
    if (name == "phi2") return spdc_second_order(delta);
    if (name.size() == 5 && name.compare(0, 3, "psi") == 0 && name[3] >= '0' &&
        name[3] <= '2' && name[4] >= '0' && name[4] <= '2') {
        return bell_state(BellIndex{name[3] - '0', name[4] - '0'});
    }
    throw UnknownState("unknown state name '" + name +
                       "' (expected psi00..psi22 or phi2)");
}

}  // namespace biphoton
