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

#include <algorithm>

#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/sweep.hpp"

namespace ghznet {

namespace {

constexpr double kFig4NoiseVar = 5.0;
constexpr double kFig5Eta = 0.6;
constexpr double kRevivalT = 0.9;

struct PresetInfo {
    std::string_view name;
    std::string_view description;
};

constexpr PresetInfo kPresets[] = {
    {"fig2a", "measured state, mode A through one lossy channel"},
    {"fig2b", "measured state, modes A and C through equal lossy channels"},
    {"fig2a-ghz", "GHZ state from -3.5/8.5 dB inputs, mode A through one lossy channel"},
    {"fig3a", "asymmetric state c_x/c = 0.8, one lossy channel on A"},
    {"fig3b", "asymmetric state c_x/c = 0.8, equal lossy channels on A and C"},
    {"fig3c", "asymmetric state c_x/c = 0.5, one lossy channel on A"},
    {"fig3d", "asymmetric state c_x/c = 0.5, equal lossy channels on A and C"},
    {"fig3e", "asymmetric state c_x/c = 0.3, one lossy channel on A"},
    {"fig3f", "asymmetric state c_x/c = 0.3, equal lossy channels on A and C"},
    {"fig4a", "measured state, mode A through a noisy channel (g_a = 1, N = 5)"},
    {"fig4a-ghz", "GHZ state from -3.5/8.5 dB inputs, noisy channel on A (g_a = 1, N = 5)"},
    {"fig4b", "noisy channel on A (g_a = 1, N = 5) followed by tuned revival at T = 0.9"},
    {"fig5a", "measured state, noisy channel on A at eta = 0.6, swept noise variance"},
    {"fig5a-ghz", "GHZ state from -3.5/8.5 dB inputs, noisy channel on A at eta = 0.6, swept noise variance"},
    {"fig5b", "as fig5a followed by tuned revival at T = 0.9"},
};

StateSource experimental_ghz() {
    const SqueezedModeSpec x{-3.5, 8.5, SqueezeAxis::X};
    const SqueezedModeSpec p{-3.5, 8.5, SqueezeAxis::P};
    return GhzSource{{x, p, x}, NetworkSpec{}};
}

ScenarioSpec eta_sweep(std::string id, std::string description, StateSource source,
                       std::vector<std::size_t> modes, ChannelSpec base) {
    ScenarioSpec s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.source = std::move(source);
    for (std::size_t m : modes) {
        s.channels[m] = base;
    }
    s.axis = SweepAxis::Eta;
    s.swept_modes = std::move(modes);
    s.grid = uniform_grid(0.0, 1.0, kDefaultGridPoints);
    return s;
}

ScenarioSpec noise_sweep(std::string id, std::string description, StateSource source) {
    ScenarioSpec s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.source = std::move(source);
    s.channels[kModeA] = ChannelSpec::noisy(kFig5Eta, 1.0, 0.0);
    s.axis = SweepAxis::NoiseVar;
    s.swept_modes = {kModeA};
    s.grid = uniform_grid(0.0, 10.0, kDefaultGridPoints);
    return s;
}

StateSource fig3_source(double ratio) {
    const SymmetricParams p = symmetric_projection(measured_state());
    return AsymmetricSource{p.s, p.t, p.c, ratio * p.c};
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto &p : kPresets) {
        names.emplace_back(p.name);
    }
    return names;
}

std::string preset_description(std::string_view name) {
    for (const auto &p : kPresets) {
        if (p.name == name) {
            return std::string(p.description);
        }
    }
    return {};
}

std::vector<ScenarioSpec> preset_scenarios(std::string_view name) {
    const ChannelSpec lossy = ChannelSpec::lossy(1.0);
    const ChannelSpec noisy = ChannelSpec::noisy(1.0, 1.0, kFig4NoiseVar);

    if (name == "fig2a") {
        return {eta_sweep("fig2a", "one lossy channel on A", MeasuredSource{}, {kModeA}, lossy)};
    }
    if (name == "fig2b") {
        return {eta_sweep("fig2b", "equal lossy channels on A and C", MeasuredSource{}, {kModeA, kModeC}, lossy)};
    }
    if (name == "fig2a-ghz") {
        return {eta_sweep("fig2a-ghz", "one lossy channel on A", experimental_ghz(), {kModeA}, lossy)};
    }
    if (name.size() == 5 && name.substr(0, 4) == "fig3" && name[4] >= 'a' && name[4] <= 'f') {
        const char panel = name[4];
        const double ratio = panel <= 'b' ? 0.8 : (panel <= 'd' ? 0.5 : 0.3);
        const bool two_channels = (panel - 'a') % 2 == 1;
        std::vector<std::size_t> modes = two_channels ? std::vector<std::size_t>{kModeA, kModeC}
                                                      : std::vector<std::size_t>{kModeA};
        return {eta_sweep(std::string(name),
                          fmt::format("c_x/c = {}, {}", ratio,
                                      two_channels ? "equal lossy channels on A and C" : "one lossy channel on A"),
                          fig3_source(ratio), std::move(modes), lossy)};
    }
    if (name == "fig4a") {
        return {eta_sweep("fig4a", "noisy channel on A, g_a = 1, N = 5", MeasuredSource{}, {kModeA}, noisy)};
    }
    if (name == "fig4a-ghz") {
        return {eta_sweep("fig4a-ghz", "noisy channel on A, g_a = 1, N = 5", experimental_ghz(), {kModeA}, noisy)};
    }
    if (name == "fig4b") {
        ScenarioSpec revived = eta_sweep("fig4b-revived", "noisy channel on A then tuned revival, T = 0.9",
                                         MeasuredSource{}, {kModeA}, noisy);
        revived.revival = RevivalStage{kModeA, kRevivalT, std::nullopt};
        ScenarioSpec points = revived;
        points.id = "fig4b-points";
        points.description = "tuned revival at the experimental channel efficiencies";
        points.grid = {0.2, 0.4, 0.6, 0.8};
        ScenarioSpec perfect = eta_sweep("fig4b-perfect", "perfect revival: pure loss on A", MeasuredSource{},
                                         {kModeA}, lossy);
        ScenarioSpec scaled = eta_sweep("fig4b-scaled", "noise-free reference: pure loss on A then the T = 0.9 splitter",
                                        MeasuredSource{}, {kModeA}, lossy);
        scaled.revival = RevivalStage{kModeA, kRevivalT, 0.0};
        return {std::move(revived), std::move(points), std::move(perfect), std::move(scaled)};
    }
    if (name == "fig5a") {
        return {noise_sweep("fig5a", "noisy channel on A at eta = 0.6", MeasuredSource{})};
    }
    if (name == "fig5a-ghz") {
        return {noise_sweep("fig5a-ghz", "noisy channel on A at eta = 0.6", experimental_ghz())};
    }
    if (name == "fig5b") {
        ScenarioSpec s = noise_sweep("fig5b", "noisy channel on A at eta = 0.6 then tuned revival, T = 0.9",
                                     MeasuredSource{});
        s.revival = RevivalStage{kModeA, kRevivalT, std::nullopt};
        return {std::move(s)};
    }

    std::string valid;
    for (const auto &p : kPresets) {
        valid += fmt::format(" {}", p.name);
    }
    throw Error(ErrorKind::Spec, fmt::format("unknown preset '{}'; valid presets:{}", name, valid));
}

Dataset run_preset(std::string_view name, unsigned jobs) {
    Dataset data = run_scenarios(std::string(name), preset_description(name), preset_scenarios(name), jobs);
    if (name.substr(0, 4) == "fig3") {
        const SymmetricParams p = symmetric_projection(measured_state());
        data.metadata.emplace_back("symmetric_projection", "pooled");
        data.metadata.emplace_back("s", fmt::format("{:.17g}", p.s));
        data.metadata.emplace_back("t", fmt::format("{:.17g}", p.t));
        data.metadata.emplace_back("c_pooled", fmt::format("{:.17g}", p.c));
        data.metadata.emplace_back("c_x_only", fmt::format("{:.17g}", p.c_x_only));
        data.metadata.emplace_back("c_p_only", fmt::format("{:.17g}", p.c_p_only));
    }
    return data;
}

}  // namespace ghznet
