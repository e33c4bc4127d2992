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

// Test-only, long-double route to symplectic spectra that shares nothing with
// the library's eigen-decomposition path: for positive-definite sigma the
// squared symplectic eigenvalues are the eigenvalues of K^T K with
// K = sigma^{1/2} Omega sigma^{1/2}, and every symmetric eigenproblem here is
// solved by cyclic Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace ghznet::oracle {

using LMat = std::vector<long double>;

inline LMat lmul(const LMat &a, const LMat &b, std::size_t n) {
    LMat c(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        }
    }
    return c;
}

inline LMat ltranspose(const LMat &a, std::size_t n) {
    LMat t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t[j * n + i] = a[i * n + j];
        }
    }
    return t;
}

/// Eigenvalues (and eigenvectors as columns of `vecs`) of a symmetric matrix.
inline std::vector<long double> jacobi_eigen(LMat a, std::size_t n, LMat *vecs = nullptr) {
    LMat v(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0L;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if (off < 1e-40L) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const long double apq = a[p * n + q];
                if (std::fabs(apq) < 1e-300L) {
                    continue;
                }
                const long double theta = (a[q * n + q] - a[p * n + p]) / (2.0L * apq);
                const long double t = (theta >= 0 ? 1.0L : -1.0L) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0L));
                const long double c = 1.0L / std::sqrt(t * t + 1.0L);
                const long double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const long double akp = a[k * n + p];
                    const long double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const long double apk = a[p * n + k];
                    const long double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const long double vkp = v[k * n + p];
                    const long double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<long double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = a[i * n + i];
    }
    if (vecs != nullptr) {
        *vecs = v;
    }
    return vals;
}

/// Symplectic eigenvalues, descending. sigma must be positive definite.
inline std::vector<long double> symplectic_spectrum(const std::vector<double> &sigma, std::size_t n_modes) {
    const std::size_t n = 2 * n_modes;
    LMat s(sigma.begin(), sigma.end());
    LMat vecs;
    const auto vals = jacobi_eigen(s, n, &vecs);
    LMat root(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long double acc = 0.0L;
            for (std::size_t k = 0; k < n; ++k) {
                acc += vecs[i * n + k] * std::sqrt(vals[k]) * vecs[j * n + k];
            }
            root[i * n + j] = acc;
        }
    }
    LMat omega(n * n, 0.0L);
    for (std::size_t k = 0; k < n_modes; ++k) {
        omega[(2 * k) * n + 2 * k + 1] = 1.0L;
        omega[(2 * k + 1) * n + 2 * k] = -1.0L;
    }
    const LMat k = lmul(lmul(root, omega, n), root, n);
    const auto squared = jacobi_eigen(lmul(ltranspose(k, n), k, n), n);
    std::vector<long double> sorted(squared.begin(), squared.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<long double> out(n_modes);
    for (std::size_t i = 0; i < n_modes; ++i) {
        out[i] = std::sqrt(0.5L * (sorted[2 * i] + sorted[2 * i + 1]));
    }
    return out;
}

/// Random symplectic matrix on n_modes: alternating layers of phase
/// rotations, two-mode mixers and single-mode squeezers.
inline LMat random_symplectic(std::size_t n_modes, std::mt19937_64 &rng, int layers = 4, double max_r = 0.8) {
    const std::size_t n = 2 * n_modes;
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> squeeze(-max_r, max_r);
    LMat s(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        s[i * n + i] = 1.0L;
    }
    auto identity = [n] {
        LMat m(n * n, 0.0L);
        for (std::size_t i = 0; i < n; ++i) {
            m[i * n + i] = 1.0L;
        }
        return m;
    };
    for (int layer = 0; layer < layers; ++layer) {
        for (std::size_t k = 0; k < n_modes; ++k) {
            LMat rot = identity();
            const long double phi = angle(rng);
            rot[(2 * k) * n + 2 * k] = std::cos(phi);
            rot[(2 * k) * n + 2 * k + 1] = std::sin(phi);
            rot[(2 * k + 1) * n + 2 * k] = -std::sin(phi);
            rot[(2 * k + 1) * n + 2 * k + 1] = std::cos(phi);
            s = lmul(rot, s, n);
            LMat sq = identity();
            const long double r = squeeze(rng);
            sq[(2 * k) * n + 2 * k] = std::exp(-r);
            sq[(2 * k + 1) * n + 2 * k + 1] = std::exp(r);
            s = lmul(sq, s, n);
        }
        for (std::size_t k = 0; k + 1 < n_modes; ++k) {
            LMat mix = identity();
            const long double th = angle(rng);
            for (std::size_t q = 0; q < 2; ++q) {
                const std::size_t a = 2 * k + q;
                const std::size_t b = 2 * (k + 1) + q;
                mix[a * n + a] = std::cos(th);
                mix[a * n + b] = std::sin(th);
                mix[b * n + a] = -std::sin(th);
                mix[b * n + b] = std::cos(th);
            }
            s = lmul(mix, s, n);
        }
    }
    return s;
}

/// S diag(nu_1, nu_1, nu_2, nu_2, ...) S^T: a state with known symplectic spectrum.
inline std::vector<double> williamson_state(const std::vector<double> &nu, const LMat &s) {
    const std::size_t n = 2 * nu.size();
    LMat d(n * n, 0.0L);
    for (std::size_t k = 0; k < nu.size(); ++k) {
        d[(2 * k) * n + 2 * k] = nu[k];
        d[(2 * k + 1) * n + 2 * k + 1] = nu[k];
    }
    const LMat m = lmul(lmul(s, d, n), ltranspose(s, n), n);
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = static_cast<double>(0.5L * (m[i * n + j] + m[j * n + i]));
        }
    }
    return out;
}

}  // namespace ghznet::oracle
