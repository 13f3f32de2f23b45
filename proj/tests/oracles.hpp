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

#ifndef BIPHOTON_TESTS_ORACLES_HPP
#define BIPHOTON_TESTS_ORACLES_HPP

// Test-side reference implementations, deliberately written along different
// lines than the library (orthonormal coefficients instead of monomial
// weights, mode relabeling instead of matrix substitution). They pin down
// derived constants before the library is trusted with them.

#include <cmath>
#include <map>
#include <random>

#include <Eigen/Dense>

#include "biphoton/elements.hpp"
#include "biphoton/fock.hpp"

namespace oracle {

using biphoton::Complex;
using biphoton::FockBasisState;
using biphoton::Mode;
using biphoton::ModeTransform;
using biphoton::Pol;
using biphoton::Port;
using biphoton::PureState;

// Inner product via orthonormal Fock coefficients c = amp * sqrt(prod n!),
// using <n|n> = n <n-1|n-1> recursion for the factorial.
inline double factorial_by_recursion(int n) {
    return n <= 1 ? 1.0 : n * factorial_by_recursion(n - 1);
}

inline Complex inner(const PureState& x, const PureState& y) {
    std::map<FockBasisState, Complex> cx;
    for (const auto& [basis, amp] : x.terms()) {
        double scale = 1.0;
        for (const auto& [mode, count] : basis.occupations()) {
            scale *= factorial_by_recursion(count);
        }
        cx[basis] = amp * std::sqrt(scale);
    }
    Complex sum{0.0, 0.0};
    for (const auto& [basis, amp] : y.terms()) {
        auto it = cx.find(basis);
        if (it == cx.end()) continue;
        double scale = 1.0;
        for (const auto& [mode, count] : basis.occupations()) {
            scale *= factorial_by_recursion(count);
        }
        sum += std::conj(it->second) * amp * std::sqrt(scale);
    }
    return sum;
}

// The compensated ideal splitter is a pure relabeling:
// a_H -> c_H, a_V -> d_V, b_H -> d_H, b_V -> c_V.
inline PureState route_ideal_splitter(const PureState& state) {
    PureState::TermMap routed;
    for (const auto& [basis, amp] : state.terms()) {
        std::map<Mode, int> occ;
        for (const auto& [mode, count] : basis.occupations()) {
            Mode out = mode;
            if (mode.port == Port::A) {
                out.port = mode.pol == Pol::H ? Port::C : Port::D;
            } else if (mode.port == Port::B) {
                out.port = mode.pol == Pol::H ? Port::D : Port::C;
            }
            occ[out] += count;
        }
        routed[FockBasisState(occ)] += amp;
    }
    return PureState(routed);
}

// Probability of a basis predicate, from orthonormal weights directly.
template <typename Predicate>
double pattern_probability(const PureState& state, Predicate&& matches) {
    double hit = 0.0;
    double total = 0.0;
    for (const auto& [basis, amp] : state.terms()) {
        const double weight = std::norm(amp) * basis.norm_squared();
        total += weight;
        if (matches(basis)) hit += weight;
    }
    return total > 0.0 ? hit / total : 0.0;
}

inline int photons_in_port(const FockBasisState& basis, Port port) {
    int count = 0;
    for (const auto& [mode, n] : basis.occupations()) {
        if (mode.port == port) count += n;
    }
    return count;
}

// Haar-ish random unitary for property tests (QR of a Ginibre matrix).
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    // Fix the phase freedom so the distribution does not depend on the
    // QR implementation's sign choices.
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace oracle

#endif  // BIPHOTON_TESTS_ORACLES_HPP
