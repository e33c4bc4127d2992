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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ghznet/channels.hpp"
#include "ghznet/cov_matrix.hpp"
#include "ghznet/state_factory.hpp"
#include "ghznet/symplectic.hpp"

namespace ghznet {

struct MeasuredSource {
    bool operator==(const MeasuredSource &) const = default;
};
struct VacuumSource {
    bool operator==(const VacuumSource &) const = default;
};
struct GhzSource {
    std::array<SqueezedModeSpec, 3> inputs;
    NetworkSpec network;
    bool operator==(const GhzSource &) const = default;
};
struct SymmetricSource {
    double s = 1.0;
    double t = 1.0;
    double c = 0.0;
    bool operator==(const SymmetricSource &) const = default;
};
struct AsymmetricSource {
    double s = 1.0;
    double t = 1.0;
    double c = 0.0;
    double c_x = 0.0;
    bool operator==(const AsymmetricSource &) const = default;
};

using StateSource = std::variant<MeasuredSource, VacuumSource, GhzSource, SymmetricSource, AsymmetricSource>;

/// Builds the three-mode source state. With `c_x_ratio`, symmetric and
/// asymmetric sources get c_x = ratio * c.
CovMatrix build_source(const StateSource &source, std::optional<double> c_x_ratio = std::nullopt);

enum class SweepAxis { Eta, NoiseVar, CxRatio };

std::string_view to_string(SweepAxis axis);
std::optional<SweepAxis> sweep_axis_from_string(std::string_view name);

struct RevivalStage {
    std::size_t mode = kModeA;
    double transmissivity = 0.9;
    /// Ancilla gain; when empty it is tuned to cancel the channel noise at every grid point.
    std::optional<double> g_b;

    bool operator==(const RevivalStage &) const = default;
};

/// One transmission scenario swept along a single axis. Channel parameters
/// in `channels` are the base values; the axis value overrides eta or
/// noise_var on every mode listed in `swept_modes`.
struct ScenarioSpec {
    std::string id;
    std::string description;
    StateSource source = MeasuredSource{};
    std::array<ChannelSpec, 3> channels{};
    std::optional<RevivalStage> revival;
    SweepAxis axis = SweepAxis::Eta;
    std::vector<std::size_t> swept_modes{kModeA};
    std::vector<double> grid;
    /// Extra loss applied to every mode at detection; 1 disables it.
    double detector_efficiency = 1.0;

    bool operator==(const ScenarioSpec &) const = default;
};

void validate(const ScenarioSpec &spec);

/// n uniform points on [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

inline constexpr std::size_t kDefaultGridPoints = 201;

struct SweepRecord {
    SweepAxis axis = SweepAxis::Eta;
    double value = 0.0;
    PptTriple ppt;
    EntanglementClass entanglement;
    /// Excess noise left on the transmitted modes, summed over modes.
    double residual_noise = 0.0;
    std::string scenario_id;
    std::string source_fingerprint;
};

/// The state after the scenario's channels at one axis value.
CovMatrix evaluate_state(const ScenarioSpec &spec, double value);
SweepRecord evaluate_point(const ScenarioSpec &spec, double value);

/// One record per grid point, in grid order. `jobs` > 1 evaluates points on
/// worker threads; the result is identical for every job count.
std::vector<SweepRecord> sweep(const ScenarioSpec &spec, unsigned jobs = 1);

struct Bracket {
    double lo;
    double hi;
};

/// Bisection root of ppt_value(mode) == 1 along the scenario's axis.
double find_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket, double tol);

/// Threshold in eta (|d eta| <= 1e-4). The scenario's axis is forced to Eta.
double find_eta_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket = {0.0, 1.0});

/// Threshold in the noise variance N (|dN| <= 1e-3) at the scenario's fixed eta.
double find_noise_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket);

/// 64-bit FNV-1a of the covariance bytes, as 16 hex digits.
std::string fingerprint(const CovMatrix &cov);

struct SweepResult {
    ScenarioSpec spec;
    std::vector<SweepRecord> records;
};

struct Dataset {
    std::string name;
    std::string description;
    std::vector<SweepResult> sweeps;
    std::vector<std::pair<std::string, std::string>> metadata;
};

std::vector<std::string> preset_names();

/// The scenarios behind a named figure preset; throws Spec listing valid names.
std::vector<ScenarioSpec> preset_scenarios(std::string_view name);
std::string preset_description(std::string_view name);

Dataset run_scenarios(std::string name, std::string description, std::vector<ScenarioSpec> scenarios,
                      unsigned jobs = 1);
Dataset run_preset(std::string_view name, unsigned jobs = 1);

struct ClassRegion {
    double from;
    double to;
    std::string label;
    std::string region;
};

struct ThresholdHit {
    std::size_t mode;
    double value;
};

struct SweepSummary {
    std::string scenario_id;
    PptTriple source_ppt;
    std::vector<ClassRegion> regions;
    std::vector<ThresholdHit> thresholds;
};

/// Class regions along the grid and every PPT = 1 crossing, refined by bisection.
SweepSummary summarize(const SweepResult &result);

}  // namespace ghznet
