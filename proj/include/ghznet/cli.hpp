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

#include <ostream>
#include <string>
#include <vector>

namespace ghznet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitScenario = 3;
inline constexpr int kExitIo = 4;

/// Environment variable naming the default output directory for `run`.
inline constexpr const char *kOutputDirEnv = "GHZNET_OUTPUT_DIR";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Commands: run, inspect, tune, presets.
int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ghznet::cli
