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

// Test-only mode-operator bookkeeping. Every output quadrature is carried as
// an explicit linear combination of independent sources (the input state's
// quadratures plus any vacuum, ancilla or noise quadratures introduced along
// the way), and the covariance is formed only at the end as C Sigma C^T. The
// channel and revival expressions are written here term by term, exactly as
// the mode transforms read, with no knowledge of the block-scaling formulas
// used by the library.

#include <cmath>
#include <cstddef>
#include <vector>

namespace ghznet::oracle {

class LinearModes {
   public:
    /// Starts from an input state of n_modes with covariance `sigma` (row-major, interleaved).
    LinearModes(std::vector<double> sigma, std::size_t n_modes) : n_state_(2 * n_modes), sigma_(std::move(sigma)) {
        rows_.assign(n_state_, std::vector<double>(n_state_, 0.0));
        for (std::size_t i = 0; i < n_state_; ++i) {
            rows_[i][i] = 1.0;
        }
    }

    /// Adds an independent single-mode source whose two quadratures each have
    /// variance `variance`. Returns its id.
    std::size_t add_source(double variance) {
        const std::size_t id = extra_var_.size() / 2;
        extra_var_.push_back(variance);
        extra_var_.push_back(variance);
        for (auto &row : rows_) {
            row.resize(row.size() + 2, 0.0);
        }
        return id;
    }

    using Combo = std::vector<double>;

    /// Quadrature q (0 = x, 1 = p) of the current output mode k.
    Combo mode(std::size_t k, std::size_t q) const {
        return rows_[2 * k + q];
    }

    /// Quadrature q of an extra source.
    Combo source(std::size_t id, std::size_t q) const {
        Combo c(width(), 0.0);
        c[n_state_ + 2 * id + q] = 1.0;
        return c;
    }

    void set_mode(std::size_t k, std::size_t q, Combo c) {
        rows_[2 * k + q] = std::move(c);
    }

    std::size_t width() const {
        return n_state_ + extra_var_.size();
    }

    /// Covariance of the current output modes.
    std::vector<double> covariance() const {
        const std::size_t n = n_state_;
        std::vector<double> out(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out[i * n + j] = covariance_of(rows_[i], rows_[j]);
            }
        }
        return out;
    }

    double covariance_of(const Combo &a, const Combo &b) const {
        double acc = 0.0;
        for (std::size_t u = 0; u < n_state_; ++u) {
            for (std::size_t v = 0; v < n_state_; ++v) {
                acc += a[u] * sigma_[u * n_state_ + v] * b[v];
            }
        }
        for (std::size_t e = 0; e < extra_var_.size(); ++e) {
            acc += a[n_state_ + e] * extra_var_[e] * b[n_state_ + e];
        }
        return acc;
    }

   private:
    std::size_t n_state_;
    std::vector<double> sigma_;
    std::vector<double> extra_var_;
    std::vector<Combo> rows_;
};

inline LinearModes::Combo axpy(double a, const LinearModes::Combo &x, const LinearModes::Combo &y) {
    LinearModes::Combo out(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] += a * x[i];
    }
    return out;
}

inline LinearModes::Combo scaled(double a, const LinearModes::Combo &x) {
    LinearModes::Combo out(x.size(), 0.0);
    return axpy(a, x, out);
}

struct NoisyChannelTerms {
    std::size_t vacuum;
    std::size_t noise;
};

/// A_N = sqrt(eta) A + sqrt(1-eta) v + sqrt((1-eta) g_a) N_hat, with N_hat of variance `noise_var`.
inline NoisyChannelTerms noisy_channel(LinearModes &m, std::size_t k, double eta, double g_a, double noise_var) {
    const std::size_t v = m.add_source(1.0);
    const std::size_t nz = m.add_source(noise_var);
    for (std::size_t q = 0; q < 2; ++q) {
        auto c = scaled(std::sqrt(eta), m.mode(k, q));
        c = axpy(std::sqrt(1.0 - eta), m.source(v, q), c);
        c = axpy(std::sqrt((1.0 - eta) * g_a), m.source(nz, q), c);
        m.set_mode(k, q, c);
    }
    return {v, nz};
}

/// Revival after a noisy channel on mode k: ancilla a' = a_an + sqrt(g_b) N_hat
/// (same noise source), kept port A_R = sqrt(T) A_N - sqrt(1-T) a'. Returns
/// the reflected-port combos D = sqrt(1-T) A_N + sqrt(T) a' for both quadratures.
inline std::vector<LinearModes::Combo> revive(LinearModes &m, std::size_t k, const NoisyChannelTerms &channel,
                                              double transmissivity, double g_b) {
    const std::size_t ancilla = m.add_source(1.0);
    std::vector<LinearModes::Combo> reflected;
    for (std::size_t q = 0; q < 2; ++q) {
        auto a_prime = axpy(std::sqrt(g_b), m.source(channel.noise, q), m.source(ancilla, q));
        const auto a_n = m.mode(k, q);
        auto kept = axpy(-std::sqrt(1.0 - transmissivity), a_prime, scaled(std::sqrt(transmissivity), a_n));
        reflected.push_back(axpy(std::sqrt(transmissivity), a_prime, scaled(std::sqrt(1.0 - transmissivity), a_n)));
        m.set_mode(k, q, kept);
    }
    return reflected;
}

}  // namespace ghznet::oracle
