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

#include <cstddef>
#include <span>
#include <vector>

namespace ghznet {

/// Quadrature layout of a flat covariance array.
enum class Ordering {
    Interleaved,  // x1, p1, x2, p2, ...
    Block,        // x1, x2, ..., p1, p2, ...
};

/// An unvalidated rows x cols matrix, row-major, as it comes off disk or the wire.
struct RawMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
};

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kPhysicalityTol = 1e-6;

/// Covariance matrix of an N-mode Gaussian state in shot-noise units (vacuum
/// variance 1 per quadrature), interleaved quadrature order, row-major.
///
/// Immutable once built. Construction checks the dimension and symmetry (to
/// kSymmetryTol relative to the largest entry) and replaces the data by
/// (A + A^T) / 2 so downstream code sees an exactly symmetric matrix.
class CovMatrix {
   public:
    CovMatrix(std::size_t n_modes, std::vector<double> row_major);

    static CovMatrix identity(std::size_t n_modes);

    std::size_t n_modes() const noexcept {
        return n_modes_;
    }
    std::size_t dim() const noexcept {
        return 2 * n_modes_;
    }
    double operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim() + col];
    }
    std::span<const double> data() const noexcept {
        return data_;
    }
    /// Copy of the 2x2 block for modes (k, l).
    std::vector<double> block(std::size_t k, std::size_t l) const;

    bool operator==(const CovMatrix &other) const = default;

   private:
    std::size_t n_modes_;
    std::vector<double> data_;
};

double max_abs_difference(const CovMatrix &a, const CovMatrix &b);

struct ValidatedCovariance {
    CovMatrix cov;
    bool physical;
    double min_symplectic_eigenvalue;
};

/// Shape and symmetry checks, symmetrization and a physicality verdict.
/// Unphysical matrices are returned with physical == false rather than
/// rejected: reconstructed data is routinely a little outside the bound.
ValidatedCovariance validate_covariance(const RawMatrix &raw);

/// True when every symplectic eigenvalue is at least 1 - kPhysicalityTol.
bool is_physical(const CovMatrix &cov);

/// Re-interleaves a block-ordered (all x then all p) flat matrix.
std::vector<double> block_to_interleaved(std::span<const double> values, std::size_t n_modes);
std::vector<double> interleaved_to_block(std::span<const double> values, std::size_t n_modes);

}  // namespace ghznet
