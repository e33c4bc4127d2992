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

#include "ghznet/channels.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/kernels.hpp"

namespace ghznet {

namespace {

void check_mode(const CovMatrix &cov, std::size_t mode) {
    if (mode >= cov.n_modes()) {
        throw Error(ErrorKind::Index, fmt::format("channel mode {} out of range for {} modes", mode, cov.n_modes()));
    }
}

/// Per mode k: scales every entry touching k by sqrt(gain[k]) (its own block
/// by gain[k]) and adds added[k] to the two diagonal variances. All modes are
/// handled in one pass so the result does not depend on mode order.
CovMatrix attenuate_all(const CovMatrix &cov, std::span<const double> gain, std::span<const double> added) {
    const std::size_t n = cov.dim();
    std::vector<double> values(cov.data().begin(), cov.data().end());
    std::vector<double> d(n, 1.0);
    for (std::size_t k = 0; k < cov.n_modes(); ++k) {
        d[2 * k] = d[2 * k + 1] = std::sqrt(gain[k]);
    }
    kernels::scale_symmetric(values, d, n);
    for (std::size_t k = 0; k < cov.n_modes(); ++k) {
        // The own block must be exactly gain * sigma_k, not sqrt(gain)^2 * sigma_k.
        for (std::size_t i = 2 * k; i < 2 * k + 2; ++i) {
            for (std::size_t j = 2 * k; j < 2 * k + 2; ++j) {
                values[i * n + j] = gain[k] * cov(i, j);
            }
        }
        values[(2 * k) * n + 2 * k] += added[k];
        values[(2 * k + 1) * n + 2 * k + 1] += added[k];
    }
    return CovMatrix(cov.n_modes(), std::move(values));
}

CovMatrix attenuate(const CovMatrix &cov, std::size_t mode, double gain, double added) {
    std::vector<double> gains(cov.n_modes(), 1.0);
    std::vector<double> adds(cov.n_modes(), 0.0);
    gains[mode] = gain;
    adds[mode] = added;
    return attenuate_all(cov, gains, adds);
}

}  // namespace

void validate(const ChannelSpec &spec) {
    if (!(spec.eta >= 0.0 && spec.eta <= 1.0)) {
        throw Error(ErrorKind::Spec, fmt::format("channel transmissivity eta must lie in [0, 1], got {}", spec.eta));
    }
    if (!(spec.g_a >= 0.0) || !std::isfinite(spec.g_a)) {
        throw Error(ErrorKind::Spec, fmt::format("noise magnitude g_a must be >= 0, got {}", spec.g_a));
    }
    if (!(spec.noise_var >= 0.0) || !std::isfinite(spec.noise_var)) {
        throw Error(ErrorKind::Spec, fmt::format("noise variance N must be >= 0, got {}", spec.noise_var));
    }
}

void validate(const RevivalSpec &spec) {
    if (!(spec.transmissivity > 0.0 && spec.transmissivity <= 1.0)) {
        throw Error(ErrorKind::Spec,
                    fmt::format("revival transmissivity T must lie in (0, 1], got {}", spec.transmissivity));
    }
    if (!(spec.g_b >= 0.0) || !std::isfinite(spec.g_b)) {
        throw Error(ErrorKind::Spec, fmt::format("ancilla gain g_b must be >= 0, got {}", spec.g_b));
    }
}

CovMatrix lossy_channel(const CovMatrix &cov, std::size_t mode, double eta) {
    return noisy_channel(cov, mode, ChannelSpec::lossy(eta));
}

CovMatrix noisy_channel(const CovMatrix &cov, std::size_t mode, const ChannelSpec &spec) {
    validate(spec);
    check_mode(cov, mode);
    const double loss = 1.0 - spec.eta;
    return attenuate(cov, mode, spec.eta, loss + loss * spec.g_a * spec.noise_var);
}

CovMatrix distribute(const CovMatrix &cov, std::span<const ChannelSpec> specs) {
    if (specs.size() != cov.n_modes()) {
        throw Error(ErrorKind::Shape,
                    fmt::format("need one channel per mode: {} modes, {} channels", cov.n_modes(), specs.size()));
    }
    std::vector<double> gains(specs.size());
    std::vector<double> adds(specs.size());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        validate(specs[k]);
        const double loss = 1.0 - specs[k].eta;
        gains[k] = specs[k].eta;
        adds[k] = loss + loss * specs[k].g_a * specs[k].noise_var;
    }
    return attenuate_all(cov, gains, adds);
}

double tuned_gb(double eta, double transmissivity, double g_a) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::Spec, fmt::format("eta must lie in [0, 1], got {}", eta));
    }
    if (!(g_a >= 0.0)) {
        throw Error(ErrorKind::Spec, fmt::format("g_a must be >= 0, got {}", g_a));
    }
    if (transmissivity == 1.0) {
        throw Error(ErrorKind::DivisionByZero,
                    "revival transmissivity T = 1 leaves no reflected path to inject the correlated noise");
    }
    if (!(transmissivity > 0.0 && transmissivity < 1.0)) {
        throw Error(ErrorKind::Spec, fmt::format("revival transmissivity T must lie in (0, 1), got {}", transmissivity));
    }
    if (eta == 1.0) {
        return 0.0;
    }
    return g_a * (1.0 - eta) * transmissivity / (1.0 - transmissivity);
}

double residual_noise(const ChannelSpec &channel, const RevivalSpec &revival) {
    validate(channel);
    validate(revival);
    const double t = revival.transmissivity;
    const double through = (1.0 - channel.eta) * channel.g_a * t;
    const double injected = (1.0 - t) * revival.g_b;
    if (injected == 0.0) {
        return through * channel.noise_var;
    }
    const double amplitude = std::sqrt(through) - std::sqrt(injected);
    return amplitude * amplitude * channel.noise_var;
}

CovMatrix revive(const CovMatrix &cov, std::size_t mode, const ChannelSpec &channel, const RevivalSpec &revival) {
    check_mode(cov, mode);
    const double residual = residual_noise(channel, revival);
    const double t = revival.transmissivity;
    const double added = (1.0 - channel.eta) * t + (1.0 - t) + residual;
    return attenuate(cov, mode, channel.eta * t, added);
}

QuadraturePair reflected_variance(const CovMatrix &cov, std::size_t mode, const ChannelSpec &channel,
                                  const RevivalSpec &revival) {
    check_mode(cov, mode);
    validate(channel);
    validate(revival);
    const double t = revival.transmissivity;
    const double eta = channel.eta;
    const double noise_amp = std::sqrt((1.0 - eta) * (1.0 - t) * channel.g_a) + std::sqrt(t * revival.g_b);
    const double common = (1.0 - eta) * (1.0 - t) + t + noise_amp * noise_amp * channel.noise_var;
    return {eta * (1.0 - t) * cov(2 * mode, 2 * mode) + common,
            eta * (1.0 - t) * cov(2 * mode + 1, 2 * mode + 1) + common};
}

}  // namespace ghznet
