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

#include "ghznet/cov_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/kernels.hpp"
#include "ghznet/symplectic.hpp"

namespace ghznet {

namespace {

double max_abs(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace

CovMatrix::CovMatrix(std::size_t n_modes, std::vector<double> row_major)
    : n_modes_(n_modes), data_(std::move(row_major)) {
    const std::size_t n = 2 * n_modes_;
    if (n_modes_ == 0 || data_.size() != n * n) {
        throw Error(ErrorKind::Shape,
                    fmt::format("covariance of {} modes needs {} entries, got {}", n_modes_, n * n, data_.size()));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::Data, "covariance contains a non-finite entry");
        }
    }
    const double asym = kernels::max_asymmetry(data_, n);
    if (asym > kSymmetryTol * max_abs(data_)) {
        throw Error(ErrorKind::Data, fmt::format("covariance is not symmetric (max |a_ij - a_ji| = {:.3e})", asym));
    }
    if (asym > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double avg = 0.5 * (data_[i * n + j] + data_[j * n + i]);
                data_[i * n + j] = avg;
                data_[j * n + i] = avg;
            }
        }
    }
}

CovMatrix CovMatrix::identity(std::size_t n_modes) {
    const std::size_t n = 2 * n_modes;
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        values[i * n + i] = 1.0;
    }
    return CovMatrix(n_modes, std::move(values));
}

std::vector<double> CovMatrix::block(std::size_t k, std::size_t l) const {
    if (k >= n_modes_ || l >= n_modes_) {
        throw Error(ErrorKind::Index, fmt::format("block ({}, {}) out of range for {} modes", k, l, n_modes_));
    }
    const CovMatrix &s = *this;
    return {s(2 * k, 2 * l), s(2 * k, 2 * l + 1), s(2 * k + 1, 2 * l), s(2 * k + 1, 2 * l + 1)};
}

double max_abs_difference(const CovMatrix &a, const CovMatrix &b) {
    if (a.dim() != b.dim()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

bool is_physical(const CovMatrix &cov) {
    try {
        return symplectic_eigenvalues(cov).back() >= 1.0 - kPhysicalityTol;
    } catch (const Error &) {
        return false;
    }
}

ValidatedCovariance validate_covariance(const RawMatrix &raw) {
    if (raw.rows != raw.cols) {
        throw Error(ErrorKind::Shape, fmt::format("covariance must be square, got {}x{}", raw.rows, raw.cols));
    }
    if (raw.rows == 0 || raw.rows % 2 != 0) {
        throw Error(ErrorKind::Shape, fmt::format("covariance dimension must be even and positive, got {}", raw.rows));
    }
    if (raw.values.size() != raw.rows * raw.cols) {
        throw Error(ErrorKind::Shape,
                    fmt::format("expected {} entries, got {}", raw.rows * raw.cols, raw.values.size()));
    }
    CovMatrix cov(raw.rows / 2, raw.values);
    double min_eig = std::numeric_limits<double>::quiet_NaN();
    try {
        min_eig = symplectic_eigenvalues(cov).back();
    } catch (const Error &) {
    }
    const bool physical = std::isfinite(min_eig) && min_eig >= 1.0 - kPhysicalityTol;
    return {std::move(cov), physical, min_eig};
}

std::vector<double> block_to_interleaved(std::span<const double> values, std::size_t n_modes) {
    const std::size_t n = 2 * n_modes;
    if (values.size() != n * n) {
        throw Error(ErrorKind::Shape, "block-ordered matrix has the wrong number of entries");
    }
    // interleaved index 2k+q <- block index q*N+k
    std::vector<std::size_t> src(n);
    for (std::size_t k = 0; k < n_modes; ++k) {
        src[2 * k] = k;
        src[2 * k + 1] = n_modes + k;
    }
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = values[src[i] * n + src[j]];
        }
    }
    return out;
}

std::vector<double> interleaved_to_block(std::span<const double> values, std::size_t n_modes) {
    const std::size_t n = 2 * n_modes;
    if (values.size() != n * n) {
        throw Error(ErrorKind::Shape, "interleaved matrix has the wrong number of entries");
    }
    std::vector<std::size_t> src(n);
    for (std::size_t k = 0; k < n_modes; ++k) {
        src[k] = 2 * k;
        src[n_modes + k] = 2 * k + 1;
    }
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = values[src[i] * n + src[j]];
        }
    }
    return out;
}

}  // namespace ghznet
