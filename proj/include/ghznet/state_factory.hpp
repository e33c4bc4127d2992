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
#include <span>

#include "ghznet/cov_matrix.hpp"

namespace ghznet {

enum class SqueezeAxis { X, P };

/// One squeezed input beam. Levels are noise powers relative to shot noise,
/// in dB: the squeezed quadrature has variance 10^(squeeze_db/10) <= 1, the
/// conjugate 10^(antisqueeze_db/10) >= 1. Pure iff squeeze_db == -antisqueeze_db.
struct SqueezedModeSpec {
    double squeeze_db = 0.0;
    double antisqueeze_db = 0.0;
    SqueezeAxis axis = SqueezeAxis::X;

    /// Pure state with squeezing parameter r (variances e^(-2r), e^(2r)).
    static SqueezedModeSpec pure(double r, SqueezeAxis axis);

    bool operator==(const SqueezedModeSpec &) const = default;
};

/// Two-beam-splitter network that turns three squeezed beams into a GHZ state.
struct NetworkSpec {
    double t1 = 1.0 / 3.0;
    double t2 = 1.0 / 2.0;

    bool operator==(const NetworkSpec &) const = default;
};

/// dB <-> variance ratio, 10^(dB/10).
double db_to_variance(double db);
double variance_to_db(double variance);

CovMatrix squeezed_cov(const SqueezedModeSpec &spec);

/// Direct sum of independent states.
CovMatrix product_state(std::span<const CovMatrix> parts);

/// Beam splitter of transmissivity t on modes (k, l), acting identically on x
/// and p as [[sqrt(1-t), sqrt(t)], [sqrt(t), -sqrt(1-t)]].
CovMatrix apply_beamsplitter(const CovMatrix &cov, std::size_t k, std::size_t l, double t);

/// 180 degree phase-space rotation of one mode (both quadratures negated).
CovMatrix rotate_pi(const CovMatrix &cov, std::size_t mode);

/// Applies an arbitrary 2N x 2N symplectic (or any) matrix: S cov S^T.
CovMatrix transform(const CovMatrix &cov, std::span<const double> s);

/// The 3x3 mode-mixing matrix realized by `net`, row-major, obtained by
/// composing B_23(t2) * R_2(pi) * B_12(t1).
std::array<double, 9> network_matrix(const NetworkSpec &net);

/// Inputs 1 and 3 x-squeezed, input 2 p-squeezed.
bool is_standard_ghz_configuration(const std::array<SqueezedModeSpec, 3> &inputs);

CovMatrix ghz_state(const std::array<SqueezedModeSpec, 3> &inputs, const NetworkSpec &net = {});

/// Pure GHZ state from three inputs sharing squeezing parameter r.
CovMatrix ideal_ghz_state(double r);

/// Balanced tripartite state: variances s (x) and t (p), x-correlations +c,
/// p-correlations -c, no x-p cross terms.
CovMatrix symmetric_state(double s, double t, double c);

/// As symmetric_state, but the x-correlations of mode A with B and C are c_x.
CovMatrix asymmetric_state(double s, double t, double c, double c_x);

/// The reconstructed covariance of the prepared tripartite beams.
CovMatrix measured_state();

/// Symmetric-form parameters extracted from a three-mode state by averaging.
struct SymmetricParams {
    double s = 0.0;
    double t = 0.0;
    /// Mean of |x-correlations| and |p-correlations| pooled.
    double c = 0.0;
    /// Mean of the x-correlations alone.
    double c_x_only = 0.0;
    /// Mean of |p-correlations| alone.
    double c_p_only = 0.0;
};

SymmetricParams symmetric_projection(const CovMatrix &cov);

enum class Quadrature { X, P };

struct QuadratureTerm {
    std::size_t mode;
    Quadrature quadrature;
    double coefficient;
};

/// Variance of sum_i coefficient_i * R_i, i.e. c^T cov c.
double correlation_variance(const CovMatrix &cov, std::span<const QuadratureTerm> combo);

}  // namespace ghznet
