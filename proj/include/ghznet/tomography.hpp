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
#include <cstdint>
#include <optional>
#include <string_view>

#include "ghznet/cov_matrix.hpp"

namespace ghznet {

/// The twelve homodyne variances that fix a three-mode covariance with no
/// x-p cross terms: six single quadratures, three x-differences and three
/// p-sums. Entries are in shot-noise units; a missing entry is NaN.
struct MeasurementRecord {
    enum Entry : std::size_t {
        kXA,
        kPA,
        kXB,
        kPB,
        kXC,
        kPC,
        kXAminusXB,
        kXAminusXC,
        kXBminusXC,
        kPAplusPB,
        kPAplusPC,
        kPBplusPC,
        kCount,
    };

    static constexpr std::array<std::string_view, kCount> kKeys{
        "var_xA",          "var_pA",          "var_xB",          "var_pB",         "var_xC",         "var_pC",
        "var_xA_minus_xB", "var_xA_minus_xC", "var_xB_minus_xC", "var_pA_plus_pB", "var_pA_plus_pC", "var_pB_plus_pC",
    };

    std::array<double, kCount> values;

    MeasurementRecord();

    static std::optional<Entry> entry_for_key(std::string_view key);

    double operator[](std::size_t entry) const {
        return values[entry];
    }
    /// All twelve entries present, finite and positive.
    bool complete() const;

    bool operator==(const MeasurementRecord &) const = default;
};

MeasurementRecord simulate_measurements(const CovMatrix &cov);

/// Rebuilds the covariance from the variance identities
/// Cov(a, b) = -(Var(a - b) - Var a - Var b) / 2 and
/// Cov(a, b) = +(Var(a + b) - Var a - Var b) / 2, with x-p cross terms zero.
CovMatrix reconstruct(const MeasurementRecord &record);

/// Replaces each variance by a draw from the normal approximation of its
/// sample-variance distribution, relative spread sqrt(2 / (samples - 1)).
/// Deterministic for a given seed.
MeasurementRecord perturb_record(const MeasurementRecord &record, std::size_t samples, std::uint64_t seed);

struct PptSpread {
    std::array<double, 3> mean{};
    std::array<double, 3> stddev{};
    std::size_t draws = 0;
};

/// Ensemble of `draws` perturbed reconstructions of `cov`'s measurement
/// record; draw i uses seed + i. The per-cut standard deviation is the
/// error-bar analog for a measurement with `samples` samples per variance.
PptSpread ppt_spread(const CovMatrix &cov, std::size_t samples, std::size_t draws, std::uint64_t seed);

}  // namespace ghznet
