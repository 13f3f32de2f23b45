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

#include "biphoton/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "biphoton/errors.hpp"
#include "biphoton/states.hpp"

namespace biphoton {

namespace {

// Model curve fitted by estimate_visibility.
double delta_model(double theta, double delta) {
    return std::norm(analytic_a4f_continuous(theta, delta));
}

}  // namespace

std::string_view to_string(ScanKind kind) {
    switch (kind) {
        case ScanKind::Overlap: return "overlap";
        case ScanKind::Delay: return "delay";
        case ScanKind::Delta: return "delta";
    }
    return "delta";
}

ScanKind scan_kind_from_string(const std::string& name) {
    if (name == "overlap") return ScanKind::Overlap;
    if (name == "delay") return ScanKind::Delay;
    if (name == "delta") return ScanKind::Delta;
    throw InvalidGrid("unknown scan kind '" + name + "' (expected overlap, delay, or delta)");
}

void ScanSpec::validate() const {
    if (grid.empty()) throw InvalidGrid("scan grid is empty");
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] <= grid[i - 1]) increasing = false;
        if (grid[i] >= grid[i - 1]) decreasing = false;
    }
    if (grid.size() > 1 && !increasing && !decreasing) {
        throw InvalidGrid("scan grid must be strictly monotone");
    }
    if (kind == ScanKind::Delay && !(coherence_sigma > 0.0)) {
        throw InvalidGrid("delay scans need a positive coherence width");
    }
    if (kind == ScanKind::Delta && source.name != "phi2") {
        throw InvalidGrid("delta scans sweep the phi2 source phase; state '" +
                          source.name + "' has no delta axis");
    }
    ProjectionSetting probe = setting;
    if (kind == ScanKind::Overlap || kind == ScanKind::Delay) {
        probe.overlap = 1.0;  // the scanned slot is replaced per point
    }
    probe.validate();
}

void RateModel::validate() const {
    if (peak_rate_scale < 0.0 || background_rate < 0.0) {
        throw InvalidGrid("rate model parameters must be non-negative");
    }
}

ScanResult run_scan(const ScanSpec& spec) {
    spec.validate();
    ScanResult result;
    result.spec = spec;
    result.points.reserve(spec.grid.size());
    for (double x : spec.grid) {
        ProjectionSetting setting = spec.setting;
        PureState state;
        switch (spec.kind) {
            case ScanKind::Overlap:
                setting.overlap = x;
                state = named_state(spec.source.name, spec.source.delta);
                break;
            case ScanKind::Delay: {
                const double ratio = x / spec.coherence_sigma;
                setting.overlap = std::exp(-0.5 * ratio * ratio);
                state = named_state(spec.source.name, spec.source.delta);
                break;
            }
            case ScanKind::Delta:
                state = spdc_second_order(x);
                break;
        }
        ScanPoint point;
        point.parameter = x;
        point.probability = detection_probability(state, setting);
        result.points.push_back(point);
    }
    return result;
}

ScanResult simulate_counts(const ScanResult& result, const RateModel& model,
                           double integration_seconds, std::uint64_t seed) {
    model.validate();
    if (integration_seconds < 0.0) {
        throw InvalidGrid("integration time must be non-negative");
    }
    ScanResult out = result;
    out.has_counts = true;
    out.model = model;
    out.integration_seconds = integration_seconds;
    out.seed = seed;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        ScanPoint& point = out.points[i];
        point.rate_hz = point.probability * model.peak_rate_scale + model.background_rate;
        const double mean = point.rate_hz * integration_seconds;
        if (mean > 0.0) {
            std::seed_seq sequence{static_cast<std::uint32_t>(seed & 0xffffffffu),
                                   static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(i)};
            std::mt19937_64 rng(sequence);
            std::poisson_distribution<long long> poisson(mean);
            point.counts = static_cast<double>(poisson(rng));
        } else {
            point.counts = 0.0;
        }
        point.sigma_counts = std::sqrt(point.counts);
    }
    return out;
}

VisibilityEstimate estimate_visibility(const ScanResult& result) {
    if (result.spec.kind != ScanKind::Delta) {
        throw InvalidGrid("visibility estimation expects a delta scan");
    }
    const std::vector<ScanPoint>& points = result.points;
    if (points.size() < 5) {
        throw InvalidGrid("visibility fit needs at least five scan points");
    }
    const double theta = result.spec.setting.theta1;

    // |A_4f|^2 oscillates with period pi when only the e^{2i delta} term
    // survives (sin 4 theta = 1) and 2 pi otherwise.
    const double c2 = std::pow(std::cos(4.0 * theta), 2);
    const double period = (c2 < 1e-12) ? std::numbers::pi : 2.0 * std::numbers::pi;
    const double span = std::abs(points.back().parameter - points.front().parameter);
    if (span < period * (1.0 - 1e-9)) {
        throw InvalidGrid("delta grid spans less than one oscillation period of the model");
    }

    double model_min = std::numeric_limits<double>::infinity();
    double model_max = -model_min;
    Eigen::Matrix2d xtwx = Eigen::Matrix2d::Zero();
    Eigen::Vector2d xtwy = Eigen::Vector2d::Zero();
    for (const ScanPoint& point : points) {
        const double m = delta_model(theta, point.parameter);
        model_min = std::min(model_min, m);
        model_max = std::max(model_max, m);
        const double y = result.has_counts ? point.counts : point.probability;
        const double w = result.has_counts ? 1.0 / std::max(point.counts, 1.0) : 1.0;
        xtwx(0, 0) += w * m * m;
        xtwx(0, 1) += w * m;
        xtwx(1, 1) += w;
        xtwy(0) += w * m * y;
        xtwy(1) += w * y;
    }
    xtwx(1, 0) = xtwx(0, 1);
    if (model_max - model_min < 1e-9) {
        throw FitDegenerate("model curve is constant over the grid; amplitude and "
                            "offset cannot be separated");
    }
    const double det = xtwx.determinant();
    if (!(std::abs(det) > 1e-12 * std::max(1.0, xtwx(0, 0) * xtwx(1, 1)))) {
        throw FitDegenerate("normal equations are singular on this grid");
    }
    Eigen::Matrix2d cov = xtwx.inverse();
    const Eigen::Vector2d fit = cov * xtwy;
    const double amp = fit(0);
    const double offset = fit(1);

    // Scale the covariance by the reduced chi-square so probability-space
    // fits (unit weights) report honest uncertainties too.
    double chi2 = 0.0;
    for (const ScanPoint& point : points) {
        const double m = delta_model(theta, point.parameter);
        const double y = result.has_counts ? point.counts : point.probability;
        const double w = result.has_counts ? 1.0 / std::max(point.counts, 1.0) : 1.0;
        const double r = y - (amp * m + offset);
        chi2 += w * r * r;
    }
    cov *= chi2 / static_cast<double>(points.size() - 2);

    // Contrast of the fitted curve over the scanned span.
    const double r_high = amp * (amp >= 0.0 ? model_max : model_min) + offset;
    const double r_low = amp * (amp >= 0.0 ? model_min : model_max) + offset;
    const double sum = r_high + r_low;
    const double diff = r_high - r_low;
    if (std::abs(sum) < 1e-300) {
        throw FitDegenerate("fitted curve has zero mean level");
    }
    const double visibility = diff / sum;

    // Delta method: V = f(A, C) with dV/dA and dV/dC from the extreme model
    // values (independent of which extreme is high).
    const double dV_dA = (model_max - model_min) * (2.0 * offset) / (sum * sum) *
                         (amp >= 0.0 ? 1.0 : -1.0);
    const double dV_dC = -2.0 * diff / (sum * sum);
    Eigen::Vector2d grad(dV_dA, dV_dC);
    const double var = grad.dot(cov * grad);
    VisibilityEstimate estimate;
    estimate.visibility = visibility;
    estimate.uncertainty = std::sqrt(std::max(var, 0.0));
    estimate.amplitude = amp;
    estimate.offset = offset;
    return estimate;
}

}  // namespace biphoton
