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

#include "biphoton/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string format_row(double a, double b, double c, double d, double e) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "%.12g,%.12g,%.12g,%.12g,%.12g", a, b, c, d, e);
    return buffer;
}

json setting_to_json(const ProjectionSetting& s) {
    return json{{"theta1_deg", s.theta1 * kDegPerRad},
                {"theta2_deg", s.theta2 * kDegPerRad},
                {"pre_pbs_phase_deg", s.pre_pbs_phase * kDegPerRad},
                {"overlap", s.overlap},
                {"reflect_h", s.reflect_h}};
}

ProjectionSetting setting_from_json(const json& doc) {
    ProjectionSetting s;
    s.theta1 = doc.at("theta1_deg").get<double>() / kDegPerRad;
    s.theta2 = doc.at("theta2_deg").get<double>() / kDegPerRad;
    s.pre_pbs_phase = doc.value("pre_pbs_phase_deg", 0.0) / kDegPerRad;
    s.overlap = doc.value("overlap", 1.0);
    s.reflect_h = doc.value("reflect_h", 0.0);
    return s;
}

}  // namespace

json state_to_json(const PureState& state) {
    json terms = json::array();
    for (const auto& [basis, amp] : state.terms()) {
        json modes = json::array();
        for (const auto& [mode, count] : basis.occupations()) {
            modes.push_back(json{{"port", std::string(to_string(mode.port))},
                                 {"pol", std::string(1, to_char(mode.pol))},
                                 {"bin", mode.bin},
                                 {"count", count}});
        }
        terms.push_back(json{{"modes", modes}, {"amplitude", {amp.real(), amp.imag()}}});
    }
    return json{{"photons", state.total_photons()},
                {"norm", state.norm()},
                {"terms", terms}};
}

PureState state_from_json(const json& doc) {
    try {
        PureState::TermMap terms;
        for (const json& term : doc.at("terms")) {
            std::map<Mode, int> occ;
            for (const json& entry : term.at("modes")) {
                Mode mode;
                mode.port = port_from_string(entry.at("port").get<std::string>());
                mode.pol = pol_from_char(entry.at("pol").get<std::string>().at(0));
                mode.bin = entry.value("bin", 0);
                occ[mode] += entry.at("count").get<int>();
            }
            const json& amp = term.at("amplitude");
            terms[FockBasisState(occ)] += Complex{amp.at(0).get<double>(),
                                                  amp.at(1).get<double>()};
        }
        return PureState(terms);
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed state document: ") + e.what());
    }
}

json circuit_to_json(const Circuit& circuit) {
    json elements = json::array();
    for (const CircuitElement& el : circuit.elements) {
        switch (el.kind) {
            case ElementKind::HalfWavePlate:
                elements.push_back(json{{"kind", "half_wave_plate"},
                                        {"theta_deg", el.value * kDegPerRad},
                                        {"port", std::string(to_string(el.port))}});
                break;
            case ElementKind::BeamSplitter:
                elements.push_back(
                    json{{"kind", "polarizing_beam_splitter"},
                         {"ports",
                          {std::string(to_string(el.ports[0])), std::string(to_string(el.ports[1])),
                           std::string(to_string(el.ports[2])), std::string(to_string(el.ports[3]))}},
                         {"reflect_h", el.reflect_h},
                         {"reflect_v", el.reflect_v}});
                break;
            case ElementKind::Phase:
                elements.push_back(json{{"kind", "birefringent_phase"},
                                        {"delta_deg", el.value * kDegPerRad},
                                        {"port", std::string(to_string(el.port))}});
                break;
            case ElementKind::Overlap:
                elements.push_back(json{{"kind", "temporal_overlap"},
                                        {"gamma", el.value},
                                        {"port", std::string(to_string(el.port))}});
                break;
        }
    }
    return json{{"label", circuit.label}, {"elements", elements}};
}

Circuit circuit_from_json(const json& doc) {
    try {
        Circuit circuit;
        circuit.label = doc.value("label", "");
        for (const json& el : doc.at("elements")) {
            const std::string kind = el.at("kind").get<std::string>();
            if (kind == "half_wave_plate") {
                circuit.elements.push_back(
                    make_half_wave_plate(el.at("theta_deg").get<double>() / kDegPerRad,
                                         port_from_string(el.at("port").get<std::string>())));
            } else if (kind == "polarizing_beam_splitter") {
                const json& ports = el.at("ports");
                circuit.elements.push_back(
                    make_beam_splitter(port_from_string(ports.at(0).get<std::string>()),
                                       port_from_string(ports.at(1).get<std::string>()),
                                       port_from_string(ports.at(2).get<std::string>()),
                                       port_from_string(ports.at(3).get<std::string>()),
                                       el.value("reflect_h", 0.0), el.value("reflect_v", 1.0)));
            } else if (kind == "birefringent_phase") {
                circuit.elements.push_back(
                    make_phase(el.at("delta_deg").get<double>() / kDegPerRad,
                               port_from_string(el.at("port").get<std::string>())));
            } else if (kind == "temporal_overlap") {
                circuit.elements.push_back(
                    make_overlap(el.at("gamma").get<double>(),
                                 port_from_string(el.at("port").get<std::string>())));
            } else {
                throw IoError("unknown circuit element kind: " + kind);
            }
        }
        return circuit;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed circuit document: ") + e.what());
    }
}

json scan_spec_to_json(const ScanSpec& spec) {
    json grid = json::array();
    for (double x : spec.grid) {
        grid.push_back(spec.kind == ScanKind::Delta ? x * kDegPerRad : x);
    }
    json doc{{"kind", std::string(to_string(spec.kind))},
             {"grid", grid},
             {"setting", setting_to_json(spec.setting)},
             {"source", json{{"name", spec.source.name},
                             {"delta_deg", spec.source.delta * kDegPerRad}}}};
    if (spec.kind == ScanKind::Delay) doc["coherence_sigma"] = spec.coherence_sigma;
    return doc;
}

ScanSpec scan_spec_from_json(const json& doc) {
    try {
        ScanSpec spec;
        spec.kind = scan_kind_from_string(doc.at("kind").get<std::string>());
        for (const json& x : doc.at("grid")) {
            const double value = x.get<double>();
            spec.grid.push_back(spec.kind == ScanKind::Delta ? value / kDegPerRad : value);
        }
        spec.setting = setting_from_json(doc.at("setting"));
        if (doc.contains("source")) {
            spec.source.name = doc["source"].value("name", "psi00");
            spec.source.delta = doc["source"].value("delta_deg", 0.0) / kDegPerRad;
        }
        spec.coherence_sigma = doc.value("coherence_sigma", 1.0);
        return spec;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed scan spec: ") + e.what());
    }
}

json scan_manifest(const ScanResult& result, bool include_spec) {
    json doc{{"generated_at", iso_timestamp()}, {"has_counts", result.has_counts}};
    if (include_spec) doc["spec"] = scan_spec_to_json(result.spec);
    if (result.has_counts) {
        doc["rate_model"] = json{{"peak_rate_scale_hz", result.model.peak_rate_scale},
                                 {"background_rate_hz", result.model.background_rate}};
        doc["integration_seconds"] = result.integration_seconds;
        doc["seed"] = result.seed;
    }
    return doc;
}

std::string scan_csv(const ScanResult& result) {
    std::string out = "parameter,probability,rate_hz,counts,sigma_counts\n";
    for (const ScanPoint& p : result.points) {
        const double parameter =
            result.spec.kind == ScanKind::Delta ? p.parameter * kDegPerRad : p.parameter;
        out += format_row(parameter, p.probability, p.rate_hz, p.counts, p.sigma_counts);
        out += '\n';
    }
    return out;
}

void write_scan_csv(const std::string& path, const ScanResult& result) {
    write_text_file(path, scan_csv(result));
}

std::vector<ScanPoint> read_scan_csv(const std::string& path, ScanKind kind) {
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line) || line.rfind("parameter,", 0) != 0) {
        throw IoError("missing scan CSV header in " + path);
    }
    std::vector<ScanPoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ScanPoint p;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &p.parameter, &p.probability,
                        &p.rate_hz, &p.counts, &p.sigma_counts) != 5) {
            throw IoError("bad scan CSV row at " + path + ":" + std::to_string(line_no));
        }
        if (kind == ScanKind::Delta) p.parameter /= kDegPerRad;
        points.push_back(p);
    }
    if (points.empty()) throw IoError("scan CSV has no data rows: " + path);
    return points;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return buffer.str();
}

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%FT%TZ", &utc);
    return buffer;
}

}  // namespace biphoton
