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

#include "ghznet/cov_matrix.hpp"

namespace ghznet {

/// Per-mode transmission channel: loss with transmissivity eta plus excess
/// Gaussian noise of variance noise_var scaled by g_a (phase-insensitive).
/// Pure loss iff g_a * noise_var == 0.
struct ChannelSpec {
    double eta = 1.0;
    double g_a = 0.0;
    double noise_var = 0.0;

    static ChannelSpec identity() {
        return {};
    }
    static ChannelSpec lossy(double eta) {
        return {eta, 0.0, 0.0};
    }
    static ChannelSpec noisy(double eta, double g_a, double noise_var) {
        return {eta, g_a, noise_var};
    }

    bool operator==(const ChannelSpec &) const = default;
};

/// Revival stage: the transmitted beam meets an ancilla (vacuum plus
/// sqrt(g_b) times the same channel noise) on a beam splitter of
/// transmissivity `transmissivity`; the transmitted port is kept.
struct RevivalSpec {
    double transmissivity = 1.0;
    double g_b = 0.0;

    bool operator==(const RevivalSpec &) const = default;
};

void validate(const ChannelSpec &spec);
void validate(const RevivalSpec &spec);

CovMatrix lossy_channel(const CovMatrix &cov, std::size_t mode, double eta);

/// Mode block -> eta*sigma_k + (1-eta)(g_a N + 1) I, blocks touching the mode
/// scaled by sqrt(eta), everything else untouched.
CovMatrix noisy_channel(const CovMatrix &cov, std::size_t mode, const ChannelSpec &spec);

/// One channel per mode; channels on distinct modes commute.
CovMatrix distribute(const CovMatrix &cov, std::span<const ChannelSpec> specs);

/// Ancilla gain that cancels the channel noise on the revived mode:
/// g_b = g_a (1 - eta) T / (1 - T). Throws DivisionByZero for T == 1.
/// Returns 0 for a lossless channel (eta == 1), where no noise enters.
double tuned_gb(double eta, double transmissivity, double g_a);

/// Excess-noise variance left on the revived mode,
/// (sqrt((1-eta) g_a T) - sqrt((1-T) g_b))^2 N. Zero when tuned.
double residual_noise(const ChannelSpec &channel, const RevivalSpec &revival);

/// Noisy channel followed by the revival beam splitter on `mode`.
/// Mode block -> eta T sigma_k + [(1-eta) T + (1-T) + residual] I, blocks
/// touching the mode scaled by sqrt(eta T).
CovMatrix revive(const CovMatrix &cov, std::size_t mode, const ChannelSpec &channel, const RevivalSpec &revival);

struct QuadraturePair {
    double x;
    double p;
};

/// Variances of the discarded reflected port of the revival beam splitter.
/// Diagnostic only; the reflected beam never re-enters the state.
QuadraturePair reflected_variance(const CovMatrix &cov, std::size_t mode, const ChannelSpec &channel,
                                  const RevivalSpec &revival);

}  // namespace ghznet
