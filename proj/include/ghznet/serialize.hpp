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

// Structured-text (JSON) and CSV forms of the library's values. Doubles are
// written with shortest round-trip formatting, so covariance files reload
// bit for bit. CSV values carry 12 significant digits.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ghznet/channels.hpp"
#include "ghznet/cov_matrix.hpp"
#include "ghznet/state_factory.hpp"
#include "ghznet/sweep.hpp"
#include "ghznet/tomography.hpp"

namespace ghznet {

using Json = nlohmann::json;

/// Parses text as JSON, mapping syntax errors to ErrorKind::Config.
Json parse_json(std::string_view text, std::string_view origin = "<input>");
Json load_json_file(const std::string &path);

Json covariance_to_json(const CovMatrix &cov, Ordering ordering = Ordering::Interleaved);
/// Accepts {"n_modes", "ordering": "interleaved" | "block", "data": [...]}.
ValidatedCovariance covariance_from_json(const Json &j);

Json record_to_json(const MeasurementRecord &record);
/// Missing keys stay NaN so that reconstruct() reports them; unknown keys are a data error.
MeasurementRecord record_from_json(const Json &j);

void to_json(Json &j, const SqueezedModeSpec &spec);
void from_json(const Json &j, SqueezedModeSpec &spec);
void to_json(Json &j, const NetworkSpec &spec);
void from_json(const Json &j, NetworkSpec &spec);
void to_json(Json &j, const ChannelSpec &spec);
void from_json(const Json &j, ChannelSpec &spec);
void to_json(Json &j, const RevivalSpec &spec);
void from_json(const Json &j, RevivalSpec &spec);
void to_json(Json &j, const RevivalStage &stage);
void from_json(const Json &j, RevivalStage &stage);

Json source_to_json(const StateSource &source);
StateSource source_from_json(const Json &j);

Json scenario_to_json(const ScenarioSpec &spec);
/// Grid may be an explicit array or {"from", "to", "points"}; channels an
/// array of three or an object keyed by mode letter.
ScenarioSpec scenario_from_json(const Json &j);

Json summary_to_json(const SweepSummary &summary);

/// Dataset with its records, per-sweep summaries and the resolved run
/// configuration embedded under "config".
Json dataset_to_json(const Dataset &data, const Json &config);

/// Header: scenario,axis,value,ppt_a,ppt_b,ppt_c,class,region,residual_noise
std::string dataset_to_csv(const Dataset &data);

}  // namespace ghznet
