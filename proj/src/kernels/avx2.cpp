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

// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ghznet/kernels.hpp"

namespace ghznet::kernels::avx2 {

namespace {

inline double horizontal_sum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline double dot(const double *x, const double *y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k), acc);
    }
    double total = horizontal_sum(acc);
    for (; k < n; ++k) {
        total = std::fma(x[k], y[k], total);
    }
    return total;
}

}  // namespace

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double *row = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; ++k) {
                acc = _mm256_fmadd_pd(_mm256_set1_pd(a[i * n + k]), _mm256_loadu_pd(b.data() + k * n + j), acc);
            }
            _mm256_storeu_pd(row + j, acc);
        }
        for (; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc = std::fma(a[i * n + k], b[k * n + j], acc);
            }
            row[j] = acc;
        }
    }
}

void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n) {
    std::vector<double> tmp(n * n);
    multiply(s, a, tmp, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = dot(tmp.data() + i * n, s.data() + j * n, n);
        }
    }
}

double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total = std::fma(v[i], dot(a.data() + i * n, v.data(), n), total);
    }
    return total;
}

void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d di = _mm256_set1_pd(d[i]);
        double *row = a.data() + i * n;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            const __m256d factor = _mm256_mul_pd(di, _mm256_loadu_pd(d.data() + j));
            _mm256_storeu_pd(row + j, _mm256_mul_pd(_mm256_loadu_pd(row + j), factor));
        }
        for (; j < n; ++j) {
            row[j] *= d[i] * d[j];
        }
    }
}

double max_asymmetry(std::span<const double> a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d worst = _mm256_setzero_pd();
    double tail = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            const __m256d upper = _mm256_loadu_pd(a.data() + i * n + j);
            const __m256d lower =
                _mm256_set_pd(a[(j + 3) * n + i], a[(j + 2) * n + i], a[(j + 1) * n + i], a[j * n + i]);
            worst = _mm256_max_pd(worst, _mm256_andnot_pd(sign, _mm256_sub_pd(upper, lower)));
        }
        for (; j < n; ++j) {
            tail = std::max(tail, std::abs(a[i * n + j] - a[j * n + i]));
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, worst);
    return std::max({tail, lanes[0], lanes[1], lanes[2], lanes[3]});
}

}  // namespace ghznet::kernels::avx2
