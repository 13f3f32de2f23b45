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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "biphoton/elements.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/projection.hpp"
#include "biphoton/states.hpp"
#include "oracles.hpp"

using namespace biphoton;

namespace {

constexpr double kPi = std::numbers::pi;

PureState one_photon(Mode mode) {
    PureState::TermMap terms;
    terms[FockBasisState({{mode, 1}})] = 1.0;
    return PureState(terms);
}

double max_amp_difference(const PureState& x, const PureState& y) {
    double worst = 0.0;
    for (const auto& [basis, amp] : x.terms()) {
        worst = std::max(worst, std::abs(amp - y.amplitude(basis)));
    }
    for (const auto& [basis, amp] : y.terms()) {
        worst = std::max(worst, std::abs(amp - x.amplitude(basis)));
    }
    return worst;
}

}  // namespace

TEST_SUITE("elements") {

TEST_CASE("half-wave plate basics") {
    SUBCASE("every angle gives a unitary (validate already ran)") {
        for (double theta : {0.0, 0.1, kPi / 8, 0.7, kPi / 2, 2.0}) {
            CHECK_NOTHROW(half_wave_plate(theta, Port::A));
        }
    }
    SUBCASE("theta = 0 is diagonal up to sign") {
        ModeTransform t = half_wave_plate(0.0, Port::A);
        for (Eigen::Index i = 0; i < 4; ++i) {
            for (Eigen::Index j = 0; j < 4; ++j) {
                if (i != j) CHECK(std::abs(t.matrix(i, j)) < 1e-15);
            }
            CHECK(std::abs(t.matrix(i, i)) == doctest::Approx(1.0));
        }
    }
    SUBCASE("theta = 22.5 degrees mixes H and V evenly") {
        ModeTransform t = half_wave_plate(kPi / 8, Port::A);
        const Mode h{Port::A, Pol::H, 0};
        PureState out = apply_transform(one_photon(h), t);
        CHECK(std::abs(out.amplitude(FockBasisState({{h, 1}}))) ==
              doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(std::abs(out.amplitude(FockBasisState({{Mode{Port::A, Pol::V, 0}, 1}}))) ==
              doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    SUBCASE("involution: applying twice is the identity") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        for (int trial = 0; trial < 8; ++trial) {
            const double theta = angle(rng);
            ModeTransform t = half_wave_plate(theta, Port::B);
            Eigen::MatrixXcd square = t.matrix * t.matrix;
            CHECK((square - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("theta + 90 degrees flips the global sign only") {
        ModeTransform a = half_wave_plate(0.3, Port::A);
        ModeTransform b = half_wave_plate(0.3 + kPi / 2, Port::A);
        CHECK((a.matrix + b.matrix).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("polarizing beam splitter") {
    SUBCASE("ideal routing with the i reflection phase") {
        ModeTransform t = polarizing_beam_splitter(Port::A, Port::B, Port::C, Port::D);
        const Mode ah{Port::A, Pol::H, 0}, av{Port::A, Pol::V, 0};
        const Mode bh{Port::B, Pol::H, 0}, bv{Port::B, Pol::V, 0};
        const Mode ch{Port::C, Pol::H, 0}, cv{Port::C, Pol::V, 0};
        const Mode dh{Port::D, Pol::H, 0}, dv{Port::D, Pol::V, 0};

        PureState from_ah = apply_transform(one_photon(ah), t);
        CHECK(from_ah.amplitude(FockBasisState({{ch, 1}})).real() == doctest::Approx(1.0));

        PureState from_av = apply_transform(one_photon(av), t);
        CHECK(from_av.amplitude(FockBasisState({{dv, 1}})).imag() == doctest::Approx(1.0));

        PureState from_bh = apply_transform(one_photon(bh), t);
        CHECK(from_bh.amplitude(FockBasisState({{dh, 1}})).real() == doctest::Approx(1.0));

        PureState from_bv = apply_transform(one_photon(bv), t);
        CHECK(from_bv.amplitude(FockBasisState({{cv, 1}})).imag() == doctest::Approx(1.0));
    }
    SUBCASE("non-ideal H splitting ratio") {
        ModeTransform t =
            polarizing_beam_splitter(Port::A, Port::B, Port::C, Port::D, 0.05, 1.0);
        PureState out = apply_transform(one_photon(Mode{Port::A, Pol::H, 0}), t);
        CHECK(std::norm(out.amplitude(FockBasisState({{Mode{Port::C, Pol::H, 0}, 1}}))) ==
              doctest::Approx(0.95));
        CHECK(std::norm(out.amplitude(FockBasisState({{Mode{Port::D, Pol::H, 0}, 1}}))) ==
              doctest::Approx(0.05));
    }
    SUBCASE("reflectivities outside [0,1] rejected") {
        CHECK_THROWS_AS(
            polarizing_beam_splitter(Port::A, Port::B, Port::C, Port::D, -0.1, 1.0),
            InvalidReflectivity);
        CHECK_THROWS_AS(
            polarizing_beam_splitter(Port::A, Port::B, Port::C, Port::D, 0.0, 1.5),
            InvalidReflectivity);
    }
    SUBCASE("swap symmetry of inputs and outputs") {
        ModeTransform fwd =
            polarizing_beam_splitter(Port::A, Port::B, Port::C, Port::D, 0.3, 0.8);
        ModeTransform swapped =
            polarizing_beam_splitter(Port::B, Port::A, Port::D, Port::C, 0.3, 0.8);
        // same physical element: amplitudes between matching mode pairs agree
        for (std::size_t i = 0; i < fwd.input_modes.size(); ++i) {
            for (std::size_t j = 0; j < fwd.output_modes.size(); ++j) {
                const Mode in = fwd.input_modes[i];
                const Mode out = fwd.output_modes[j];
                auto find = [](const std::vector<Mode>& v, const Mode& m) {
                    return std::find(v.begin(), v.end(), m) - v.begin();
                };
                const auto i2 = find(swapped.input_modes, in);
                const auto j2 = find(swapped.output_modes, out);
                CHECK(std::abs(fwd.matrix(static_cast<Eigen::Index>(j),
                                          static_cast<Eigen::Index>(i)) -
                               swapped.matrix(static_cast<Eigen::Index>(j2),
                                              static_cast<Eigen::Index>(i2))) < 1e-15);
            }
        }
    }
}

TEST_CASE("birefringent phase") {
    SUBCASE("delta = 0 is the identity") {
        ModeTransform t = birefringent_phase(0.0, Port::A);
        CHECK((t.matrix - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("acts on V only") {
        ModeTransform t = birefringent_phase(0.7, Port::A);
        PureState h = one_photon(Mode{Port::A, Pol::H, 0});
        CHECK(max_amp_difference(apply_transform(h, t), h) == 0.0);
        PureState v = apply_transform(one_photon(Mode{Port::A, Pol::V, 0}), t);
        const Complex amp = v.amplitude(FockBasisState({{Mode{Port::A, Pol::V, 0}, 1}}));
        CHECK(std::abs(amp - std::polar(1.0, 0.7)) < 1e-15);
    }
}

TEST_CASE("temporal overlap") {
    SUBCASE("gamma = 1 is the identity") {
        ModeTransform t = temporal_overlap(1.0, Port::B);
        CHECK((t.matrix - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("gamma = 0 moves bin 0 to bin 1") {
        ModeTransform t = temporal_overlap(0.0, Port::B);
        PureState out = apply_transform(one_photon(Mode{Port::B, Pol::H, 0}), t);
        CHECK(out.amplitude(FockBasisState({{Mode{Port::B, Pol::H, 1}, 1}})).real() ==
              doctest::Approx(1.0));
    }
    SUBCASE("self-adjoint composition is the identity") {
        ModeTransform t = temporal_overlap(0.37, Port::B);
        CHECK((t.matrix * t.matrix.adjoint() - Eigen::MatrixXcd::Identity(4, 4))
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
    SUBCASE("out-of-range gamma rejected") {
        CHECK_THROWS_AS(temporal_overlap(-0.1, Port::B), InvalidOverlap);
        CHECK_THROWS_AS(temporal_overlap(1.1, Port::B), InvalidOverlap);
    }
}

TEST_CASE("compose") {
    SUBCASE("empty circuit composes to the empty identity") {
        Circuit empty;
        ModeTransform t = compose(empty);
        CHECK(t.input_modes.empty());
        PureState s = one_photon(Mode{Port::A, Pol::H, 0});
        CHECK(max_amp_difference(apply_transform(s, t), s) == 0.0);
    }
    SUBCASE("two half-wave plates cancel") {
        Circuit c;
        c.elements.push_back(make_half_wave_plate(0.45, Port::A));
        c.elements.push_back(make_half_wave_plate(0.45, Port::A));
        ModeTransform t = compose(c);
        CHECK((t.matrix - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("matches sequential application through relabeling elements") {
        Circuit c = projection_circuit(0.21, 0.13, 0.4, 0.77, 0.04);
        PureState in = bell_state(BellIndex{0, 1});
        PureState seq = apply_circuit(in, c);
        PureState once = apply_transform(in, compose(c));
        CHECK(max_amp_difference(seq, once) < 1e-10);
    }
}

TEST_CASE("standard circuits and patterns") {
    SUBCASE("compensated splitter leaves psi0n invariant up to relabeling") {
        // |psi00> routes to the same monomial pattern on c, d with amplitude 1
        PureState in = bell_state(BellIndex{0, 0});
        PureState out = apply_circuit(in, overlap_splitter_circuit(0.0));
        CHECK(max_amp_difference(out, oracle::route_ideal_splitter(in)) < 1e-12);
    }
    SUBCASE("projection circuit at the magic angle reaches 1/3") {
        Circuit c = projection_circuit(kMagicAngle, kMagicAngle, 0.0, 1.0, 0.0);
        PureState out = apply_circuit(bell_state(BellIndex{0, 0}), c);
        CHECK(postselect(out, fourfold_pattern()).probability ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("fourfold pattern requires one photon per detector") {
        DetectionPattern p = fourfold_pattern();
        FockBasisState good({{Mode{Port::Det1, Pol::H, 0}, 1},
                             {Mode{Port::Det2, Pol::H, 1}, 1},
                             {Mode{Port::Det3, Pol::V, 0}, 1},
                             {Mode{Port::Det4, Pol::V, 0}, 1}});
        CHECK(p.matches(good));
        FockBasisState crowded({{Mode{Port::Det1, Pol::H, 0}, 2},
                                {Mode{Port::Det3, Pol::V, 0}, 1},
                                {Mode{Port::Det4, Pol::V, 0}, 1}});
        CHECK_FALSE(p.matches(crowded));
        // a photon left outside the detector groups disqualifies the outcome
        FockBasisState stray({{Mode{Port::Det1, Pol::H, 0}, 1},
                              {Mode{Port::Det2, Pol::H, 0}, 1},
                              {Mode{Port::Det3, Pol::V, 0}, 1},
                              {Mode{Port::C, Pol::H, 0}, 1}});
        CHECK_FALSE(p.matches(stray));
    }
    SUBCASE("arm split pattern counts per spatial port") {
        DetectionPattern p = arm_split_pattern(2, 2);
        FockBasisState balanced({{Mode{Port::C, Pol::H, 0}, 2},
                                 {Mode{Port::D, Pol::V, 0}, 1},
                                 {Mode{Port::D, Pol::H, 0}, 1}});
        CHECK(p.matches(balanced));
        FockBasisState lopsided({{Mode{Port::C, Pol::H, 0}, 3},
                                 {Mode{Port::D, Pol::V, 0}, 1}});
        CHECK_FALSE(p.matches(lopsided));
    }
}

// The magic-angle projection probability must not depend on which temporal
// bin carries the photons, only on the overlap between arms.
TEST_CASE("temporal bins are traced over in detection") {
    Circuit c = projection_circuit(kMagicAngle, kMagicAngle, 0.0, 0.0, 0.0);
    PureState out = apply_circuit(bell_state(BellIndex{0, 0}), c);
    const double p = postselect(out, fourfold_pattern()).probability;
    CHECK(p == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

}  // TEST_SUITE
