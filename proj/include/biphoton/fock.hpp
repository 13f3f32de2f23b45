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

#ifndef BIPHOTON_FOCK_HPP
#define BIPHOTON_FOCK_HPP

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biphoton/errors.hpp"

namespace biphoton {

using Complex = std::complex<double>;

/// Amplitudes with modulus below this are dropped when a state is
/// brought to canonical form.
inline constexpr double kPruneThreshold = 1e-14;

/// Maximum number of distinct occupied modes across all terms of a state.
inline constexpr int kMaxDistinctModes = 16;

/// Maximum total photon number accepted by apply_transform.
inline constexpr int kMaxPhotons = 6;

/// Unitarity tolerance for mode transforms: max |U†U - I| entry.
inline constexpr double kUnitaryTol = 1e-12;

/// Number of temporal bins carried by every optical element.
inline constexpr std::uint8_t kTemporalBins = 2;

/// Spatial port labels. `A` and `B` carry the two input biphotons, `C` and
/// `D` are the outputs of the overlap beam splitter, `AuxC`/`AuxD` are the
/// unused (vacuum) input ports of the two analysis splitters, and
/// `Det1`..`Det4` are the four detector ports.
enum class Port : std::uint8_t {
    A = 0,
    B,
    C,
    D,
    AuxC,
    AuxD,
    Det1,
    Det2,
    Det3,
    Det4,
};

enum class Pol : std::uint8_t { H = 0, V };

std::string_view to_string(Port port);
Port port_from_string(std::string_view name);
char to_char(Pol pol);
Pol pol_from_char(char c);

/// A single bosonic mode: spatial port x polarization x temporal bin.
/// Ordering (and therefore every canonical state layout) is lexicographic
/// in (port, polarization, bin).
struct Mode {
    Port port = Port::A;
    Pol pol = Pol::H;
    std::uint8_t bin = 0;

    auto operator<=>(const Mode&) const = default;
};

std::string to_string(const Mode& mode);

/// One occupation-number basis element, stored as the monomial
///
///     prod_m (a_m^dag)^{n_m} |vac>
///
/// over its occupied modes. The monomial is *not* normalized: its squared
/// norm is prod_m n_m!, which this class reports via norm_squared(). Keeping
/// amplitudes as plain monomial coefficients lets states carry the textbook
/// prefactors (1/sqrt(2) per doubly occupied mode) literally.
class FockBasisState {
  public:
    /// The vacuum |vac>.
    FockBasisState() = default;

    /// Builds the canonical form from (mode, count) pairs. Zero counts are
    /// dropped; duplicates are merged; negative counts are rejected.
    explicit FockBasisState(std::vector<std::pair<Mode, int>> occupations);
    explicit FockBasisState(const std::map<Mode, int>& occupations);
    FockBasisState(std::initializer_list<std::pair<Mode, int>> occupations)
        : FockBasisState(std::vector<std::pair<Mode, int>>(occupations)) {}

    static FockBasisState vacuum() { return FockBasisState{}; }

    int occupation(const Mode& mode) const;
    int total_photons() const;

    /// prod_m n_m! — the squared norm of the stored monomial.
    double norm_squared() const;

    const std::vector<std::pair<Mode, int>>& occupations() const { return occupations_; }
    bool is_vacuum() const { return occupations_.empty(); }

    auto operator<=>(const FockBasisState&) const = default;

  private:
    std::vector<std::pair<Mode, int>> occupations_;  // sorted by Mode, counts > 0
};

std::string to_string(const FockBasisState& basis);

/// A finite superposition of same-photon-number basis monomials.
/// Canonical form: pruned amplitudes, deterministic term order.
class PureState {
  public:
    using TermMap = std::map<FockBasisState, Complex>;

    /// The zero state (no terms). Valid as a postselection result only.
    PureState() = default;

    /// Canonicalizes: prunes amplitudes below kPruneThreshold, rejects mixed
    /// photon numbers and states spanning more than kMaxDistinctModes modes.
    explicit PureState(TermMap terms);

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_photons() const { return photons_; }
    const TermMap& terms() const { return terms_; }

    Complex amplitude(const FockBasisState& basis) const;

    /// sqrt(sum |amp|^2 * norm_squared) over all terms.
    double norm() const;

    int distinct_mode_count() const;

  private:
    TermMap terms_;
    int photons_ = 0;
};

std::string to_string(const PureState& state);

/// A statistical mixture of pure states with fixed weights.
struct Ensemble {
    std::vector<std::pair<double, PureState>> components;

    /// Weights must be non-negative and sum to 1 within 1e-12.
    void validate() const;
};

/// A unitary acting on creation operators of a mode subset:
///
///     in_i^dag  ->  sum_j matrix(j, i) out_j^dag
///
/// Modes not listed are untouched. Input and output mode lists may differ
/// (relabeling elements such as a beam splitter routing a,b to c,d).
struct ModeTransform {
    std::vector<Mode> input_modes;
    std::vector<Mode> output_modes;
    Eigen::MatrixXcd matrix;

    /// Throws ModeMismatch on shape problems or duplicate modes, and
    /// NonUnitaryTransform when max |U†U - I| >= kUnitaryTol.
    void validate() const;
};

/// A postselection predicate: each group of modes must hold exactly
/// `photons` photons in total, and no photon may sit outside all groups.
struct DetectorGroup {
    std::vector<Mode> modes;
    int photons = 1;
};

struct DetectionPattern {
    std::vector<DetectorGroup> groups;

    void validate() const;
    bool matches(const FockBasisState& basis) const;
};

struct PostselectResult {
    double probability = 0.0;
    PureState state;  // renormalized conditional state; empty when probability is 0
};

/// Rescales to unit norm. The global phase is untouched.
/// Throws ZeroState when no term survives.
PureState normalize(const PureState& state);

/// <s1|s2> with bosonic monomial norms (<vac| a^n a^dag^n |vac> = n!).
Complex inner_product(const PureState& s1, const PureState& s2);

/// Substitutes every listed creation operator and expands the resulting
/// polynomial. Norm preserving for any unitary transform. Throws
/// ModeMismatch when the state already occupies a relabeled output mode.
PureState apply_transform(const PureState& state, const ModeTransform& transform);

/// Probability of the detection pattern and the renormalized conditional
/// state. A probability of zero is a valid outcome, not an error.
PostselectResult postselect(const PureState& state, const DetectionPattern& pattern);

/// Compares two states after aligning the global phase on the
/// largest-magnitude amplitude of `reference`.
bool equal_up_to_global_phase(const PureState& reference, const PureState& other,
                              double tolerance = 1e-10);

}  // namespace biphoton

#endif  // BIPHOTON_FOCK_HPP
