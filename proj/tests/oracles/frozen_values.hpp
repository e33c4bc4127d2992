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

// Values computed by tests/oracles/symplectic_oracle.py (mpmath, 50 digits),
// which diagonalizes i*Omega*sigma directly. Regenerate with
//   python3 tests/oracles/symplectic_oracle.py

namespace ghznet::oracle {

inline constexpr double kMeasuredSpectrum[3] = {1.8773433203137040673, 1.7920821327803550528, 1.7411558480052642925};
inline constexpr double kMeasuredPpt[3] = {0.48245267352681041516, 0.4746547568654743382, 0.47848615748773700644};
inline constexpr double kGhz04Ppt = 0.46694609976416231366;

}  // namespace ghznet::oracle
