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

#include "biphoton/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace biphoton {

namespace {

constexpr std::string_view kPortNames[] = {"a",    "b",    "c",    "d",    "auxc",
                                           "auxd", "det1", "det2", "det3", "det4"};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

std::string_view to_string(Port port) {
    return kPortNames[static_cast<std::size_t>(port)];
}

Port port_from_string(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kPortNames); ++i) {
        if (kPortNames[i] == name) return static_cast<Port>(i);
    }
    throw UsageError("unknown port label: " + std::string(name));
}

char to_char(Pol pol) {
    return pol == Pol::H ? 'H' : 'V';
}

Pol pol_from_char(char c) {
    if (c == 'H' || c == 'h') return Pol::H;
    if (c == 'V' || c == 'v') return Pol::V;
    throw UsageError(std::string("unknown polarization: ") + c);
}

std::string to_string(const Mode& mode) {
    std::string s(to_string(mode.port));
    s += '.';
    s += to_char(mode.pol);
    s += static_cast<char>('0' + mode.bin);
    return s;
}

FockBasisState::FockBasisState(std::vector<std::pair<Mode, int>> occupations) {
    std::map<Mode, int> merged;
    for (const auto& [mode, count] : occupations) {
        if (count < 0) throw InvalidState("negative occupation for mode " + to_string(mode));
        if (count > 0) merged[mode] += count;
    }
    occupations_.assign(merged.begin(), merged.end());
}

FockBasisState::FockBasisState(const std::map<Mode, int>& occupations) {
    occupations_.reserve(occupations.size());
    for (const auto& [mode, count] : occupations) {
        if (count < 0) throw InvalidState("negative occupation for mode " + to_string(mode));
        if (count > 0) occupations_.emplace_back(mode, count);
    }
}

int FockBasisState::occupation(const Mode& mode) const {
    auto it = std::lower_bound(occupations_.begin(), occupations_.end(), mode,
                               [](const auto& entry, const Mode& m) { return entry.first < m; });
    if (it != occupations_.end() && it->first == mode) return it->second;
    return 0;
}

int FockBasisState::total_photons() const {
    int total = 0;
    for (const auto& [mode, count] : occupations_) total += count;
    return total;
}

double FockBasisState::norm_squared() const {
    double n2 = 1.0;
    for (const auto& [mode, count] : occupations_) n2 *= factorial(count);
    return n2;
}

std::string to_string(const FockBasisState& basis) {
    if (basis.is_vacuum()) return "|vac>";
    std::string s = "|";
    bool first = true;
    for (const auto& [mode, count] : basis.occupations()) {
        if (!first) s += ' ';
        first = false;
        s += to_string(mode);
        if (count > 1) {
            s += '^';
            s += static_cast<char>('0' + count);
        }
    }
    s += '>';
    return s;
}

PureState::PureState(TermMap terms) {
    bool have_photons = false;
    for (auto& [basis, amp] : terms) {
        if (std::abs(amp) < kPruneThreshold) continue;
        int n = basis.total_photons();
        if (!have_photons) {
            photons_ = n;
            have_photons = true;
        } else if (n != photons_) {
            throw InvalidState("mixed total photon number in one state");
        }
        terms_.emplace(basis, amp);
    }
    if (terms_.empty()) photons_ = 0;
    if (distinct_mode_count() > kMaxDistinctModes) {
        throw InvalidState("state spans more than the configured mode limit");
    }
}

Complex PureState::amplitude(const FockBasisState& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double PureState::norm() const {
    double n2 = 0.0;
    for (const auto& [basis, amp] : terms_) n2 += std::norm(amp) * basis.norm_squared();
    return std::sqrt(n2);
}

int PureState::distinct_mode_count() const {
    std::set<Mode> modes;
    for (const auto& [basis, amp] : terms_) {
        for (const auto& [mode, count] : basis.occupations()) modes.insert(mode);
    }
    return static_cast<int>(modes.size());
}

std::string to_string(const PureState& state) {
    if (state.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [basis, amp] : state.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << amp.real() << (amp.imag() < 0 ? "" : "+") << amp.imag() << "i)"
            << to_string(basis);
    }
    return out.str();
}

void Ensemble::validate() const {
    double total = 0.0;
    for (const auto& [weight, state] : components) {
        if (weight < 0.0) throw InvalidState("negative ensemble weight");
        total += weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvalidState("ensemble weights do not sum to 1");
}

void ModeTransform::validate() const {
    const auto k = static_cast<Eigen::Index>(input_modes.size());
    if (static_cast<Eigen::Index>(output_modes.size()) != k || matrix.rows() != k ||
        matrix.cols() != k) {
        throw ModeMismatch("transform mode lists and matrix must have matching size");
    }
    std::set<Mode> in(input_modes.begin(), input_modes.end());
    std::set<Mode> out(output_modes.begin(), output_modes.end());
    if (static_cast<Eigen::Index>(in.size()) != k || static_cast<Eigen::Index>(out.size()) != k) {
        throw ModeMismatch("duplicate mode in transform mode list");
    }
    if (k == 0) return;
    Eigen::MatrixXcd defect =
        matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(k, k);
    if (defect.cwiseAbs().maxCoeff() >= kUnitaryTol) {
        throw NonUnitaryTransform("transform matrix is not unitary");
    }
}

void DetectionPattern::validate() const {
    std::set<Mode> seen;
    for (const auto& group : groups) {
        if (group.photons < 0) throw InvalidState("negative detector photon count");
        for (const auto& mode : group.modes) {
            if (!seen.insert(mode).second) {
                throw InvalidState("detector groups overlap on mode " + to_string(mode));
            }
        }
    }
}

bool DetectionPattern::matches(const FockBasisState& basis) const {
    int covered = 0;
    for (const auto& group : groups) {
        int total = 0;
        for (const auto& mode : group.modes) total += basis.occupation(mode);
        if (total != group.photons) return false;
        covered += total;
    }
    // No photon may sit outside the detector groups.
    return covered == basis.total_photons();
}

PureState normalize(const PureState& state) {
    if (state.empty()) throw ZeroState("cannot normalize the zero state");
    double n = state.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw ZeroState("state norm is not positive");
    PureState::TermMap scaled;
    for (const auto& [basis, amp] : state.terms()) scaled.emplace(basis, amp / n);
    return PureState(std::move(scaled));
}

Complex inner_product(const PureState& s1, const PureState& s2) {
    if (s1.empty() || s2.empty()) throw ZeroState("inner product with the zero state");
    Complex result{0.0, 0.0};
    for (const auto& [basis, amp] : s1.terms()) {
        auto it = s2.terms().find(basis);
        if (it == s2.terms().end()) continue;
        result += std::conj(amp) * it->second * basis.norm_squared();
    }
    return result;
}

PureState apply_transform(const PureState& state, const ModeTransform& transform) {
    transform.validate();
    if (state.empty()) return state;
    if (state.total_photons() > kMaxPhotons) {
        throw InvalidState("state exceeds the configured photon limit");
    }

    std::map<Mode, int> column_of;
    for (std::size_t i = 0; i < transform.input_modes.size(); ++i) {
        column_of[transform.input_modes[i]] = static_cast<int>(i);
    }
    std::set<Mode> orphan_outputs(transform.output_modes.begin(), transform.output_modes.end());
    for (const auto& mode : transform.input_modes) orphan_outputs.erase(mode);

    const auto rows = static_cast<int>(transform.output_modes.size());
    PureState::TermMap result;
    for (const auto& [basis, amp] : state.terms()) {
        std::map<Mode, int> passthrough;
        std::vector<std::pair<int, int>> substituted;  // (matrix column, count)
        for (const auto& [mode, count] : basis.occupations()) {
            auto it = column_of.find(mode);
            if (it != column_of.end()) {
                substituted.emplace_back(it->second, count);
            } else if (orphan_outputs.count(mode)) {
                throw ModeMismatch("state occupies relabeled output mode " + to_string(mode));
            } else {
                passthrough[mode] += count;
            }
        }

        // Expand prod_i (sum_j U_ji out_j^dag)^{n_i} one operator at a time.
        std::map<std::map<Mode, int>, Complex> expansion{{passthrough, amp}};
        for (const auto& [column, count] : substituted) {
            for (int k = 0; k < count; ++k) {
                std::map<std::map<Mode, int>, Complex> next;
                for (const auto& [occupation, coeff] : expansion) {
                    for (int j = 0; j < rows; ++j) {
                        Complex u = transform.matrix(j, column);
                        if (u == Complex{0.0, 0.0}) continue;
                        auto bumped = occupation;
                        bumped[transform.output_modes[j]] += 1;
                        next[bumped] += coeff * u;
                    }
                }
                expansion = std::move(next);
            }
        }

        for (const auto& [occupation, coeff] : expansion) {
            result[FockBasisState(occupation)] += coeff;
        }
    }
    return PureState(std::move(result));
}

PostselectResult postselect(const PureState& state, const DetectionPattern& pattern) {
    pattern.validate();
    if (state.empty()) return {};

    double total_weight = 0.0;
    double matched_weight = 0.0;
    PureState::TermMap matched;
    for (const auto& [basis, amp] : state.terms()) {
        double weight = std::norm(amp) * basis.norm_squared();
        total_weight += weight;
        if (pattern.matches(basis)) {
            matched.emplace(basis, amp);
            matched_weight += weight;
        }
    }
    if (matched.empty() || matched_weight <= 0.0) return {};
    return {matched_weight / total_weight, normalize(PureState(std::move(matched)))};
}

bool equal_up_to_global_phase(const PureState& reference, const PureState& other,
                              double tolerance) {
    if (reference.empty() || other.empty()) return reference.empty() == other.empty();
    if (reference.term_count() != other.term_count()) return false;

    const FockBasisState* anchor = nullptr;
    double best = -1.0;
    for (const auto& [basis, amp] : reference.terms()) {
        if (std::abs(amp) > best) {
            best = std::abs(amp);
            anchor = &basis;
        }
    }
    Complex other_amp = other.amplitude(*anchor);
    if (std::abs(other_amp) < kPruneThreshold) return false;
    Complex phase = other_amp / reference.amplitude(*anchor);
    phase /= std::abs(phase);

    for (const auto& [basis, amp] : reference.terms()) {
        if (std::abs(phase * amp - other.amplitude(basis)) > tolerance) return false;
    }
    return true;
}

}  // namespace biphoton
