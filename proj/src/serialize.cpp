// Copyright 2026 The ghznet Authors
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

#include "ghznet/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "ghznet/error.hpp"

namespace ghznet {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string mode_letter(std::size_t mode) {
    return std::string(1, mode_name(mode));
}

std::size_t parse_mode(const Json &j) {
    if (j.is_number_unsigned()) {
        const auto m = j.get<std::size_t>();
        if (m < 3) {
            return m;
        }
    } else if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'C') {
            return static_cast<std::size_t>(s[0] - 'A');
        }
    }
    throw Error(ErrorKind::Config, fmt::format("invalid mode {}; expected \"A\", \"B\", \"C\" or 0-2", j.dump()));
}

template <class T>
T get_or(const Json &j, const char *key, T fallback) {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? fallback : it->get<T>();
}

const Json &require(const Json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw Error(ErrorKind::Config, fmt::format("missing key '{}'", key));
    }
    return *it;
}

std::string csv_number(double v) {
    return fmt::format("{:.12g}", v);
}

}  // namespace

Json parse_json(std::string_view text, std::string_view origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::Config, fmt::format("{}: {}", origin, e.what()));
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Config, fmt::format("cannot open file '{}'", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path);
}

Json covariance_to_json(const CovMatrix &cov, Ordering ordering) {
    Json j;
    j["n_modes"] = cov.n_modes();
    j["ordering"] = ordering == Ordering::Block ? "block" : "interleaved";
    j["data"] = ordering == Ordering::Block ? interleaved_to_block(cov.data(), cov.n_modes())
                                            : std::vector<double>(cov.data().begin(), cov.data().end());
    return j;
}

ValidatedCovariance covariance_from_json(const Json &j) {
    try {
        const auto n_modes = require(j, "n_modes").get<std::size_t>();
        const auto ordering = get_or<std::string>(j, "ordering", "interleaved");
        const Json &data = require(j, "data");
        std::vector<double> values;
        if (!data.empty() && data.front().is_array()) {
            // Row-by-row layout.
            for (const auto &row : data) {
                const auto r = row.get<std::vector<double>>();
                values.insert(values.end(), r.begin(), r.end());
            }
        } else {
            values = data.get<std::vector<double>>();
        }
        const std::size_t dim = 2 * n_modes;
        if (values.size() != dim * dim) {
            throw Error(ErrorKind::Shape,
                        fmt::format("covariance of {} modes needs {} entries, got {}", n_modes, dim * dim, values.size()));
        }
        if (ordering == "block") {
            values = block_to_interleaved(values, n_modes);
        } else if (ordering != "interleaved") {
            throw Error(ErrorKind::Config, fmt::format("unknown ordering '{}'", ordering));
        }
        return validate_covariance(RawMatrix{dim, dim, std::move(values)});
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Config, fmt::format("malformed covariance record: {}", e.what()));
    }
}

Json record_to_json(const MeasurementRecord &record) {
    Json j = Json::object();
    for (std::size_t i = 0; i < MeasurementRecord::kCount; ++i) {
        if (std::isfinite(record.values[i])) {
            j[std::string(MeasurementRecord::kKeys[i])] = record.values[i];
        }
    }
    return j;
}

MeasurementRecord record_from_json(const Json &j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::Config, "measurement record must be an object");
    }
    MeasurementRecord record;
    for (const auto &[key, value] : j.items()) {
        const auto entry = MeasurementRecord::entry_for_key(key);
        if (!entry) {
            throw Error(ErrorKind::Data, fmt::format("unknown measurement '{}'", key));
        }
        if (!value.is_number()) {
            throw Error(ErrorKind::Data, fmt::format("measurement '{}' is not a number", key));
        }
        record.values[*entry] = value.get<double>();
    }
    return record;
}

void to_json(Json &j, const SqueezedModeSpec &spec) {
    j = Json{{"squeeze_db", spec.squeeze_db},
             {"antisqueeze_db", spec.antisqueeze_db},
             {"axis", spec.axis == SqueezeAxis::X ? "x" : "p"}};
}

void from_json(const Json &j, SqueezedModeSpec &spec) {
    if (j.contains("r")) {
        spec = SqueezedModeSpec::pure(j.at("r").get<double>(),
                                      get_or<std::string>(j, "axis", "x") == "p" ? SqueezeAxis::P : SqueezeAxis::X);
        return;
    }
    spec.squeeze_db = get_or(j, "squeeze_db", 0.0);
    spec.antisqueeze_db = get_or(j, "antisqueeze_db", 0.0);
    const auto axis = get_or<std::string>(j, "axis", "x");
    if (axis != "x" && axis != "p") {
        throw Error(ErrorKind::Config, fmt::format("squeeze axis must be \"x\" or \"p\", got '{}'", axis));
    }
    spec.axis = axis == "p" ? SqueezeAxis::P : SqueezeAxis::X;
}

void to_json(Json &j, const NetworkSpec &spec) {
    j = Json{{"t1", spec.t1}, {"t2", spec.t2}};
}

void from_json(const Json &j, NetworkSpec &spec) {
    spec.t1 = get_or(j, "t1", 1.0 / 3.0);
    spec.t2 = get_or(j, "t2", 0.5);
}

void to_json(Json &j, const ChannelSpec &spec) {
    j = Json{{"eta", spec.eta}, {"g_a", spec.g_a}, {"noise_var", spec.noise_var}};
}

void from_json(const Json &j, ChannelSpec &spec) {
    spec.eta = get_or(j, "eta", 1.0);
    spec.g_a = get_or(j, "g_a", 0.0);
    spec.noise_var = get_or(j, "noise_var", 0.0);
}

void to_json(Json &j, const RevivalSpec &spec) {
    j = Json{{"transmissivity", spec.transmissivity}, {"g_b", spec.g_b}};
}

void from_json(const Json &j, RevivalSpec &spec) {
    spec.transmissivity = get_or(j, "transmissivity", 1.0);
    spec.g_b = get_or(j, "g_b", 0.0);
}

void to_json(Json &j, const RevivalStage &stage) {
    j = Json{{"mode", mode_letter(stage.mode)}, {"transmissivity", stage.transmissivity}};
    j["g_b"] = stage.g_b ? Json(*stage.g_b) : Json("tuned");
}

void from_json(const Json &j, RevivalStage &stage) {
    stage.mode = j.contains("mode") ? parse_mode(j.at("mode")) : kModeA;
    stage.transmissivity = get_or(j, "transmissivity", 0.9);
    auto it = j.find("g_b");
    if (it == j.end() || it->is_null() || (it->is_string() && it->get<std::string>() == "tuned")) {
        stage.g_b.reset();
    } else {
        stage.g_b = it->get<double>();
    }
}

Json source_to_json(const StateSource &source) {
    return std::visit(Overloaded{
                          [](const MeasuredSource &) { return Json{{"kind", "measured"}}; },
                          [](const VacuumSource &) { return Json{{"kind", "vacuum"}}; },
                          [](const GhzSource &g) {
                              return Json{{"kind", "ghz"}, {"inputs", g.inputs}, {"network", g.network}};
                          },
                          [](const SymmetricSource &s) {
                              return Json{{"kind", "symmetric"}, {"s", s.s}, {"t", s.t}, {"c", s.c}};
                          },
                          [](const AsymmetricSource &a) {
                              return Json{{"kind", "asymmetric"}, {"s", a.s}, {"t", a.t}, {"c", a.c}, {"c_x", a.c_x}};
                          },
                      },
                      source);
}

StateSource source_from_json(const Json &j) {
    const auto kind = j.is_string() ? j.get<std::string>() : get_or<std::string>(j, "kind", "measured");
    if (kind == "measured") {
        return MeasuredSource{};
    }
    if (kind == "vacuum") {
        return VacuumSource{};
    }
    if (kind == "ghz") {
        GhzSource g;
        if (j.contains("inputs")) {
            const auto &inputs = j.at("inputs");
            if (!inputs.is_array() || inputs.size() != 3) {
                throw Error(ErrorKind::Config, "ghz source needs exactly three inputs");
            }
            for (std::size_t i = 0; i < 3; ++i) {
                g.inputs[i] = inputs[i].get<SqueezedModeSpec>();
            }
        } else {
            const SqueezedModeSpec x{-3.5, 8.5, SqueezeAxis::X};
            g.inputs = {x, SqueezedModeSpec{-3.5, 8.5, SqueezeAxis::P}, x};
        }
        g.network = get_or(j, "network", NetworkSpec{});
        return g;
    }
    if (kind == "symmetric") {
        return SymmetricSource{require(j, "s").get<double>(), require(j, "t").get<double>(),
                               require(j, "c").get<double>()};
    }
    if (kind == "asymmetric") {
        return AsymmetricSource{require(j, "s").get<double>(), require(j, "t").get<double>(),
                                require(j, "c").get<double>(), require(j, "c_x").get<double>()};
    }
    throw Error(ErrorKind::Config, fmt::format("unknown state source '{}'", kind));
}

Json scenario_to_json(const ScenarioSpec &spec) {
    Json j;
    j["id"] = spec.id;
    j["description"] = spec.description;
    j["source"] = source_to_json(spec.source);
    Json channels = Json::object();
    for (std::size_t k = 0; k < 3; ++k) {
        channels[mode_letter(k)] = spec.channels[k];
    }
    j["channels"] = channels;
    j["revival"] = spec.revival ? Json(*spec.revival) : Json(nullptr);
    j["axis"] = to_string(spec.axis);
    Json modes = Json::array();
    for (std::size_t m : spec.swept_modes) {
        modes.push_back(mode_letter(m));
    }
    j["swept_modes"] = modes;
    j["grid"] = spec.grid;
    j["detector_efficiency"] = spec.detector_efficiency;
    return j;
}

ScenarioSpec scenario_from_json(const Json &j) {
    try {
        if (!j.is_object()) {
            throw Error(ErrorKind::Config, "scenario must be an object");
        }
        ScenarioSpec spec;
        spec.id = get_or<std::string>(j, "id", "custom");
        spec.description = get_or<std::string>(j, "description", "");
        if (j.contains("source")) {
            spec.source = source_from_json(j.at("source"));
        }
        if (j.contains("channels")) {
            const auto &ch = j.at("channels");
            if (ch.is_array()) {
                if (ch.size() != 3) {
                    throw Error(ErrorKind::Config, "channels array must have one entry per mode (3)");
                }
                for (std::size_t k = 0; k < 3; ++k) {
                    spec.channels[k] = ch[k].is_null() ? ChannelSpec::identity() : ch[k].get<ChannelSpec>();
                }
            } else {
                for (const auto &[key, value] : ch.items()) {
                    spec.channels[parse_mode(Json(key))] = value.get<ChannelSpec>();
                }
            }
        }
        if (j.contains("revival") && !j.at("revival").is_null()) {
            spec.revival = j.at("revival").get<RevivalStage>();
        }
        const auto axis_name = get_or<std::string>(j, "axis", "eta");
        const auto axis = sweep_axis_from_string(axis_name);
        if (!axis) {
            throw Error(ErrorKind::Config,
                        fmt::format("unknown sweep axis '{}'; expected eta, noise_var or c_x_ratio", axis_name));
        }
        spec.axis = *axis;
        if (j.contains("swept_modes")) {
            spec.swept_modes.clear();
            for (const auto &m : j.at("swept_modes")) {
                spec.swept_modes.push_back(parse_mode(m));
            }
        }
        const auto &grid = require(j, "grid");
        if (grid.is_array()) {
            spec.grid = grid.get<std::vector<double>>();
        } else {
            spec.grid = uniform_grid(require(grid, "from").get<double>(), require(grid, "to").get<double>(),
                                     get_or<std::size_t>(grid, "points", kDefaultGridPoints));
        }
        spec.detector_efficiency = get_or(j, "detector_efficiency", 1.0);
        return spec;
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Config, fmt::format("malformed scenario: {}", e.what()));
    }
}

Json summary_to_json(const SweepSummary &summary) {
    Json j;
    j["scenario"] = summary.scenario_id;
    j["source_ppt"] = {summary.source_ppt.a, summary.source_ppt.b, summary.source_ppt.c};
    Json regions = Json::array();
    for (const auto &r : summary.regions) {
        regions.push_back({{"from", r.from}, {"to", r.to}, {"class", r.label}, {"region", r.region}});
    }
    j["regions"] = regions;
    Json thresholds = Json::array();
    for (const auto &t : summary.thresholds) {
        thresholds.push_back({{"mode", mode_letter(t.mode)}, {"value", t.value}});
    }
    j["thresholds"] = thresholds;
    return j;
}

Json dataset_to_json(const Dataset &data, const Json &config) {
    Json j;
    j["name"] = data.name;
    j["description"] = data.description;
    j["config"] = config;
    Json meta = Json::object();
    for (const auto &[key, value] : data.metadata) {
        meta[key] = value;
    }
    j["metadata"] = meta;
    Json sweeps = Json::array();
    for (const auto &s : data.sweeps) {
        Json entry;
        entry["scenario"] = scenario_to_json(s.spec);
        entry["summary"] = summary_to_json(summarize(s));
        Json records = Json::array();
        for (const auto &r : s.records) {
            records.push_back({{"value", r.value},
                               {"ppt_a", r.ppt.a},
                               {"ppt_b", r.ppt.b},
                               {"ppt_c", r.ppt.c},
                               {"class", r.entanglement.label()},
                               {"region", r.entanglement.region()},
                               {"residual_noise", r.residual_noise},
                               {"source_fingerprint", r.source_fingerprint}});
        }
        entry["records"] = records;
        sweeps.push_back(entry);
    }
    j["sweeps"] = sweeps;
    return j;
}

std::string dataset_to_csv(const Dataset &data) {
    std::string out = "scenario,axis,value,ppt_a,ppt_b,ppt_c,class,region,residual_noise\n";
    for (const auto &s : data.sweeps) {
        for (const auto &r : s.records) {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.scenario_id, to_string(r.axis), csv_number(r.value),
                               csv_number(r.ppt.a), csv_number(r.ppt.b), csv_number(r.ppt.c), r.entanglement.label(),
                               r.entanglement.region(), csv_number(r.residual_noise));
        }
    }
    return out;
}

}  // namespace ghznet
