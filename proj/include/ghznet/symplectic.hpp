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
#include <string>
#include <vector>

#include "ghznet/cov_matrix.hpp"

namespace ghznet {

/// Modes of the tripartite state. Mode indices are zero-based throughout.
enum Mode : std::size_t { kModeA = 0, kModeB = 1, kModeC = 2 };

char mode_name(std::size_t mode);

inline constexpr double kClassTol = 1e-9;
/// Relative tolerance for pairing the +/- i mu eigenvalues of Omega * sigma.
inline constexpr double kPairingTol = 1e-7;

/// Block-diagonal symplectic form, blocks [[0, 1], [-1, 0]].
std::vector<double> symplectic_form(std::size_t n_modes);

/// The n_modes symplectic eigenvalues, descending.
std::vector<double> symplectic_eigenvalues(const CovMatrix &cov);

/// T_k cov T_k with T_k flipping the sign of the p quadrature of `mode`.
CovMatrix partial_transpose(const CovMatrix &cov, std::size_t mode);

/// Smallest symplectic eigenvalue of the partial transpose at `mode`. A value
/// below 1 certifies that `mode` is entangled with the rest.
double ppt_value(const CovMatrix &cov, std::size_t mode);

struct PptTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator[](std::size_t mode) const;
};

PptTriple ppt_triple(const CovMatrix &cov);

enum class Separability {
    FullyInseparable,
    OneModeBiseparable,
    FullyPptSeparable,
};

struct EntanglementClass {
    Separability kind = Separability::FullyInseparable;
    /// Separable mode for OneModeBiseparable, unused otherwise.
    std::size_t mode = 0;
    /// Set when two cuts are PPT at once; `mode` is then the larger one.
    bool multi_cut = false;
    PptTriple ppt;

    /// FullyInseparable, OneModeBiseparable(A), FullyPptSeparable.
    std::string label() const;
    /// I, II, III as in the usual region plots.
    std::string region() const;
};

EntanglementClass classify(const PptTriple &ppt);
EntanglementClass classify(const CovMatrix &cov);

}  // namespace ghznet
