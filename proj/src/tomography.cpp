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

#include "ghznet/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/kernels.hpp"
#include "ghznet/symplectic.hpp"

namespace ghznet {

namespace {

struct Combo {
    std::size_t i;
    std::size_t j;
    double sign;  // +1 for a sum, -1 for a difference
};

// Quadrature indices (interleaved) of each joint measurement.
constexpr std::array<Combo, 6> kJoint{{
    {0, 2, -1.0},
    {0, 4, -1.0},
    {2, 4, -1.0},
    {1, 3, +1.0},
    {1, 5, +1.0},
    {3, 5, +1.0},
}};

}  // namespace

MeasurementRecord::MeasurementRecord() {
    values.fill(std::numeric_limits<double>::quiet_NaN());
}

std::optional<MeasurementRecord::Entry> MeasurementRecord::entry_for_key(std::string_view key) {
    for (std::size_t i = 0; i < kCount; ++i) {
        if (kKeys[i] == key) {
            return static_cast<Entry>(i);
        }
    }
    return std::nullopt;
}

bool MeasurementRecord::complete() const {
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

MeasurementRecord simulate_measurements(const CovMatrix &cov) {
    if (cov.n_modes() != 3) {
        throw Error(ErrorKind::Shape, fmt::format("measurement protocol needs 3 modes, got {}", cov.n_modes()));
    }
    MeasurementRecord record;
    for (std::size_t q = 0; q < 6; ++q) {
        record.values[q] = cov(q, q);
    }
    std::vector<double> v(6, 0.0);
    for (std::size_t m = 0; m < kJoint.size(); ++m) {
        std::fill(v.begin(), v.end(), 0.0);
        v[kJoint[m].i] = 1.0;
        v[kJoint[m].j] = kJoint[m].sign;
        record.values[MeasurementRecord::kXAminusXB + m] = kernels::quadratic_form(cov.data(), v, 6);
    }
    return record;
}

CovMatrix reconstruct(const MeasurementRecord &record) {
    if (!record.complete()) {
        std::string missing;
        for (std::size_t i = 0; i < MeasurementRecord::kCount; ++i) {
            if (!(record.values[i] > 0.0) || !std::isfinite(record.values[i])) {
                missing += fmt::format(" {}", MeasurementRecord::kKeys[i]);
            }
        }
        throw Error(ErrorKind::Data, fmt::format("measurement record incomplete or non-positive:{}", missing));
    }
    std::vector<double> m(36, 0.0);
    for (std::size_t q = 0; q < 6; ++q) {
        m[q * 6 + q] = record.values[q];
    }
    for (std::size_t k = 0; k < kJoint.size(); ++k) {
        const auto [i, j, sign] = kJoint[k];
        const double joint = record.values[MeasurementRecord::kXAminusXB + k];
        const double cov = sign * 0.5 * (joint - record.values[i] - record.values[j]);
        m[i * 6 + j] = cov;
        m[j * 6 + i] = cov;
    }
    return CovMatrix(3, std::move(m));
}

MeasurementRecord perturb_record(const MeasurementRecord &record, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) {
        throw Error(ErrorKind::Spec, fmt::format("sample count must be at least 2, got {}", samples));
    }
    if (!record.complete()) {
        throw Error(ErrorKind::Data, "cannot perturb an incomplete measurement record");
    }
    const double spread = std::sqrt(2.0 / static_cast<double>(samples - 1));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    MeasurementRecord out;
    for (std::size_t i = 0; i < MeasurementRecord::kCount; ++i) {
        // Redraw the rare non-positive variance; the tail is negligible at realistic sample counts.
        double draw;
        do {
            draw = record.values[i] * (1.0 + spread * normal(rng));
        } while (!(draw > 0.0));
        out.values[i] = draw;
    }
    return out;
}

PptSpread ppt_spread(const CovMatrix &cov, std::size_t samples, std::size_t draws, std::uint64_t seed) {
    if (draws < 2) {
        throw Error(ErrorKind::Spec, fmt::format("need at least 2 draws for a spread, got {}", draws));
    }
    const MeasurementRecord exact = simulate_measurements(cov);
    std::array<double, 3> sum{};
    std::array<double, 3> sum_sq{};
    for (std::size_t i = 0; i < draws; ++i) {
        const PptTriple ppt = ppt_triple(reconstruct(perturb_record(exact, samples, seed + i)));
        for (std::size_t k = 0; k < 3; ++k) {
            sum[k] += ppt[k];
            sum_sq[k] += ppt[k] * ppt[k];
        }
    }
    PptSpread out;
    out.draws = draws;
    const double n = static_cast<double>(draws);
    for (std::size_t k = 0; k < 3; ++k) {
        out.mean[k] = sum[k] / n;
        out.stddev[k] = std::sqrt(std::max(0.0, (sum_sq[k] - n * out.mean[k] * out.mean[k]) / (n - 1.0)));
    }
    return out;
}

}  // namespace ghznet
