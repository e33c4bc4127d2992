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

#include <algorithm>
#include <cmath>
#include <vector>

#include "ghznet/kernels.hpp"

namespace ghznet::kernels::scalar {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double *row = out.data() + i * n;
        std::fill(row, row + n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            const double *brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                row[j] += aik * brow[j];
            }
        }
    }
}

void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n) {
    std::vector<double> tmp(n * n);
    multiply(s, a, tmp, n);
    // out_ij = sum_k tmp_ik s_jk
    for (std::size_t i = 0; i < n; ++i) {
        const double *trow = tmp.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double *srow = s.data() + j * n;
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += trow[k] * srow[k];
            }
            out[i * n + j] = acc;
        }
    }
}

double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double *row = a.data() + i * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += row[j] * v[j];
        }
        total += v[i] * acc;
    }
    return total;
}

void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] *= d[i] * d[j];
        }
    }
}

double max_asymmetry(std::span<const double> a, std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            worst = std::max(worst, std::abs(a[i * n + j] - a[j * n + i]));
        }
    }
    return worst;
}

}  // namespace ghznet::kernels::scalar
