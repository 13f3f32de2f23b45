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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "biphoton/errors.hpp"
#include "biphoton/harness.hpp"
#include "biphoton/io.hpp"
#include "biphoton/projection.hpp"
#include "biphoton/states.hpp"

namespace biphoton::cli {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

// Angles are entered in degrees; the token "magic" selects the exact
// tan^2(4 theta) = 2 solution instead of its 13.68-degree rounding.
double parse_angle(const std::string& text) {
    if (text == "magic") return kMagicAngle;
    std::size_t used = 0;
    double degrees = 0.0;
    try {
        degrees = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("bad angle '" + text + "' (expected degrees or 'magic')");
    }
    if (used != text.size()) {
        throw UsageError("bad angle '" + text + "' (expected degrees or 'magic')");
    }
    return degrees / kDegPerRad;
}

// Relative outputs land in SIM_OUTPUT_DIR when it is set (created on demand).
std::string resolve_output(const std::string& path) {
    const char* dir = std::getenv("SIM_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return (std::filesystem::path(dir) / p).string();
}

// The nine-state label a state coincides with (up to global phase), if any.
std::optional<std::string> bell_equivalent(const PureState& state) {
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
            const std::string name = "psi" + std::to_string(m) + std::to_string(n);
            if (equal_up_to_global_phase(bell_state(BellIndex{m, n}), state)) return name;
        }
    }
    return std::nullopt;
}

struct StateArgs {
    std::string name;
    double delta_deg = 0.0;
    std::string output;
};

int cmd_state(const StateArgs& args) {
    const PureState state = named_state(args.name, args.delta_deg / kDegPerRad);
    json doc;
    doc["name"] = args.name;
    if (args.name == "phi2") doc["delta_deg"] = args.delta_deg;
    doc["state"] = state_to_json(state);
    const auto equivalent = bell_equivalent(state);
    doc["equivalent_to"] = equivalent ? json(*equivalent) : json(nullptr);
    const std::string text = doc.dump(2) + "\n";
    if (args.output.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_text_file(resolve_output(args.output), text);
    }
    return kExitOk;
}

struct ProjectArgs {
    std::string state = "psi00";
    double delta_deg = 0.0;
    std::string theta1 = "magic";
    std::string theta2 = "magic";
    double pre_phase_deg = 0.0;
    double gamma = 1.0;
    double reflect_h = 0.0;
};

int cmd_project(const ProjectArgs& args) {
    ProjectionSetting setting;
    setting.theta1 = parse_angle(args.theta1);
    setting.theta2 = parse_angle(args.theta2);
    setting.pre_pbs_phase = args.pre_phase_deg / kDegPerRad;
    setting.overlap = args.gamma;
    setting.reflect_h = args.reflect_h;
    const PureState state = named_state(args.state, args.delta_deg / kDegPerRad);
    const double propagated = detection_probability(state, setting);

    std::printf("state       : %s\n", args.state.c_str());
    if (args.state == "phi2") std::printf("delta       : %.10g deg\n", args.delta_deg);
    std::printf("theta1      : %.10g deg\n", setting.theta1 * kDegPerRad);
    std::printf("theta2      : %.10g deg\n", setting.theta2 * kDegPerRad);
    std::printf("pre_phase   : %.10g deg\n", args.pre_phase_deg);
    std::printf("gamma       : %.10g\n", args.gamma);
    if (args.reflect_h != 0.0) std::printf("reflect_h   : %.10g\n", args.reflect_h);
    std::printf("propagated  : %.15g\n", propagated);

    // The closed form covers equal angles, full overlap, an ideal splitter,
    // and a |psi_0n>/phi2 source; elsewhere propagation is the only oracle.
    const bool analytic_applies =
        std::abs(setting.theta1 - setting.theta2) < 1e-15 && args.gamma == 1.0 &&
        args.reflect_h == 0.0 &&
        (args.state == "phi2" || args.state.compare(0, 4, "psi0") == 0);
    if (analytic_applies) {
        double delta = args.delta_deg / kDegPerRad + setting.pre_pbs_phase;
        if (args.state != "phi2") {
            delta = 2.0 * std::numbers::pi * (args.state[4] - '0') / 3.0 + setting.pre_pbs_phase;
        }
        const double analytic = std::norm(analytic_a4f_continuous(setting.theta1, delta));
        std::printf("analytic    : %.15g\n", analytic);
        std::printf("difference  : %.3g\n", std::abs(analytic - propagated));
    } else {
        std::printf("analytic    : n/a (needs theta1 = theta2, gamma = 1, ideal splitter, "
                    "psi0n or phi2 source)\n");
    }
    return kExitOk;
}

int cmd_angles(const std::string& theta1_text) {
    const double theta1 = parse_angle(theta1_text);
    const double theta2 = solve_second_angle(theta1);
    std::printf("theta1      : %.12g deg\n", theta1 * kDegPerRad);
    std::printf("theta2      : %.12g deg\n", theta2 * kDegPerRad);
    std::printf("theta2_rad  : %.17g\n", theta2);
    std::printf("check       : tan(4 theta1) tan(4 theta2) = %.12g\n",
                std::tan(4.0 * theta1) * std::tan(4.0 * theta2));
    return kExitOk;
}

struct ScanArgs {
    std::string kind = "delta";
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string state;
    double delta_deg = 0.0;
    std::string theta1 = "magic";
    std::string theta2 = "magic";
    double pre_phase_deg = 0.0;
    double gamma = 1.0;
    double sigma = 1.0;
    double reflect_h = 0.0;
    std::string output = "scan";
};

int cmd_scan(const ScanArgs& args) {
    ScanSpec spec;
    spec.kind = scan_kind_from_string(args.kind);
    if (args.steps < 1) throw InvalidGrid("--steps must be at least 1");
    for (int i = 0; i < args.steps; ++i) {
        double x = args.steps == 1
                       ? args.from
                       : args.from + (args.to - args.from) * i / (args.steps - 1);
        if (spec.kind == ScanKind::Delta) x /= kDegPerRad;
        spec.grid.push_back(x);
    }
    spec.setting.theta1 = parse_angle(args.theta1);
    spec.setting.theta2 = parse_angle(args.theta2);
    spec.setting.pre_pbs_phase = args.pre_phase_deg / kDegPerRad;
    spec.setting.overlap = args.gamma;
    spec.setting.reflect_h = args.reflect_h;
    spec.source.name = args.state.empty()
                           ? (spec.kind == ScanKind::Delta ? "phi2" : "psi00")
                           : args.state;
    spec.source.delta = args.delta_deg / kDegPerRad;
    spec.coherence_sigma = args.sigma;

    const ScanResult result = run_scan(spec);
    const std::string base = resolve_output(args.output);
    write_scan_csv(base + ".csv", result);
    write_text_file(base + ".json", scan_manifest(result).dump(2) + "\n");
    std::printf("wrote %s.csv (%zu points) and %s.json\n", base.c_str(),
                result.points.size(), base.c_str());
    return kExitOk;
}

struct MonteCarloArgs {
    std::string scan_file;
    double peak_rate = 4.89;
    double background = 0.0;
    double integration = 600.0;
    unsigned long long seed = kDefaultSeed;
    std::string output = "montecarlo";
};

int cmd_montecarlo(const MonteCarloArgs& args) {
    ScanResult input;
    bool spec_known = false;
    // The companion manifest written by `sim scan` restores the scan spec
    // (and the degree/radian convention of the parameter column).
    std::filesystem::path manifest_path(args.scan_file);
    manifest_path.replace_extension(".json");
    std::error_code probe;
    if (std::filesystem::exists(manifest_path, probe)) {
        const json doc = json::parse(read_text_file(manifest_path.string()), nullptr, false);
        if (!doc.is_discarded() && doc.contains("spec")) {
            input.spec = scan_spec_from_json(doc["spec"]);
            spec_known = true;
        }
    }
    input.points = read_scan_csv(args.scan_file, input.spec.kind);

    RateModel model;
    model.peak_rate_scale = args.peak_rate;
    model.background_rate = args.background;
    const ScanResult result = simulate_counts(input, model, args.integration, args.seed);

    const std::string base = resolve_output(args.output);
    write_scan_csv(base + ".csv", result);
    write_text_file(base + ".json", scan_manifest(result, spec_known).dump(2) + "\n");
    std::printf("wrote %s.csv (%zu points) and %s.json\n", base.c_str(),
                result.points.size(), base.c_str());
    return kExitOk;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"Exact simulator of the biphoton-qutrit Bell-state projection"};
    app.require_subcommand(1);

    StateArgs state_args;
    CLI::App* state = app.add_subcommand(
        "state", "Print one of the named four-photon states as JSON");
    state->add_option("name", state_args.name, "psi00..psi22 or phi2")->required();
    state->add_option("--delta", state_args.delta_deg, "phi2 phase in degrees");
    state->add_option("--output", state_args.output, "write JSON here instead of stdout");

    ProjectArgs project_args;
    CLI::App* project = app.add_subcommand(
        "project", "Fourfold detection probability for one setting");
    project->add_option("--state", project_args.state, "source state")->capture_default_str();
    project->add_option("--delta", project_args.delta_deg, "phi2 phase in degrees");
    project->add_option("--theta1", project_args.theta1, "wave-plate angle in degrees or 'magic'")
        ->capture_default_str();
    project->add_option("--theta2", project_args.theta2, "wave-plate angle in degrees or 'magic'")
        ->capture_default_str();
    project->add_option("--pre-phase", project_args.pre_phase_deg,
                        "birefringent phase before the splitter, degrees");
    project->add_option("--gamma", project_args.gamma, "temporal overlap in [0,1]")
        ->capture_default_str();
    project->add_option("--reflect-h", project_args.reflect_h,
                        "splitter reflectivity for horizontal polarization");

    std::string theta1_text;
    CLI::App* angles = app.add_subcommand(
        "angles", "Solve tan(4 theta1) tan(4 theta2) = 2 for the second angle");
    angles->add_option("--theta1", theta1_text, "first angle in degrees or 'magic'")->required();

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "Sweep one knob and write CSV + manifest");
    scan->add_option("--kind", scan_args.kind, "delta, delay, or overlap")->required();
    scan->add_option("--from", scan_args.from, "first grid value")->required();
    scan->add_option("--to", scan_args.to, "last grid value")->required();
    scan->add_option("--steps", scan_args.steps, "number of grid points")->required();
    scan->add_option("--state", scan_args.state,
                     "source state (defaults to phi2 for delta scans, else psi00)");
    scan->add_option("--delta", scan_args.delta_deg, "fixed phi2 phase in degrees");
    scan->add_option("--theta1", scan_args.theta1, "degrees or 'magic'")->capture_default_str();
    scan->add_option("--theta2", scan_args.theta2, "degrees or 'magic'")->capture_default_str();
    scan->add_option("--pre-phase", scan_args.pre_phase_deg,
                     "birefringent phase before the splitter, degrees");
    scan->add_option("--gamma", scan_args.gamma, "temporal overlap for delta scans")
        ->capture_default_str();
    scan->add_option("--sigma", scan_args.sigma, "coherence width for delay scans")
        ->capture_default_str();
    scan->add_option("--reflect-h", scan_args.reflect_h, "splitter H reflectivity");
    scan->add_option("--output", scan_args.output, "output basename")->capture_default_str();

    MonteCarloArgs mc_args;
    CLI::App* mc = app.add_subcommand(
        "montecarlo", "Draw Poissonian counts for a previously written scan");
    mc->add_option("--scan-file", mc_args.scan_file, "input scan CSV")->required();
    mc->add_option("--peak-rate", mc_args.peak_rate, "Hz per unit probability")
        ->capture_default_str();
    mc->add_option("--background", mc_args.background, "additive background rate, Hz")
        ->capture_default_str();
    mc->add_option("--integration", mc_args.integration, "seconds per point")
        ->capture_default_str();
    mc->add_option("--seed", mc_args.seed, "master seed")->capture_default_str();
    mc->add_option("--output", mc_args.output, "output basename")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Prints help for --help (exit 0) or the parse diagnostic otherwise.
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (state->parsed()) return cmd_state(state_args);
    if (project->parsed()) return cmd_project(project_args);
    if (angles->parsed()) return cmd_angles(theta1_text);
    if (scan->parsed()) return cmd_scan(scan_args);
    return cmd_montecarlo(mc_args);
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const ComputeError& e) {
        std::fprintf(stderr, "computation error: %s\n", e.what());
        return kExitCompute;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "computation error: %s\n", e.what());
        return kExitCompute;
    }
}

}  // namespace biphoton::cli
