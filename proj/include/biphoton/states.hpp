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

#ifndef BIPHOTON_STATES_HPP
#define BIPHOTON_STATES_HPP

#include <string>

#include "biphoton/fock.hpp"

namespace biphoton {

/// Coefficients of a biphoton qutrit in the logical basis
/// |0> = h^dag^2/sqrt(2), |1> = h^dag v^dag, |2> = v^dag^2/sqrt(2).
struct QutritAmplitudes {
    Complex alpha0{0.0, 0.0};
    Complex alpha1{0.0, 0.0};
    Complex alpha2{0.0, 0.0};
};

/// Index (m, n) of one of the nine maximally entangled two-qutrit states.
struct BellIndex {
    int m = 0;
    int n = 0;
};

/// tau^k with tau = exp(2 pi i / 3), evaluated once and reduced mod 3.
Complex tau_power(int k);

/// Single-port biphoton qutrit alpha0|0> + alpha1|1> + alpha2|2>.
/// Amplitudes are normalized; an all-zero triple is rejected.
PureState biphoton_qutrit(const QutritAmplitudes& amps, Port port);

/// Maximally entangled state
///   |psi_mn> = (1/sqrt(3)) sum_j tau^{jn} |j>_a |(j+m) mod 3>_b
/// on ports A and B. Unit norm; the nine states are orthonormal.
PureState bell_state(BellIndex idx);

/// Second-order SPDC state with a birefringent phase delta on one arm:
///   (1/sqrt(12)) (a_h^2 b_h^2 + 2 e^{i delta} a_h a_v b_h b_v
///                 + e^{2 i delta} a_v^2 b_v^2) |vac>.
/// Coincides with |psi_0n> at delta = 2 pi n / 3 up to global phase.
PureState spdc_second_order(double delta);

/// CLI lookup: "psi00" .. "psi22" select bell_state, "phi2" selects
/// spdc_second_order(delta). Throws UnknownState for anything else.
PureState named_state(const std::string& name, double delta = 0.0);

}  // namespace biphoton

#endif  // BIPHOTON_STATES_HPP
