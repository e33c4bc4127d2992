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

// Dense row-major kernels used by every covariance transform. Each kernel has
// a scalar reference implementation and, on x86-64, an AVX2/FMA variant. The
// dispatching entry points pick the variant once per process from the CPU
// feature bits; setting GHZNET_KERNELS=scalar in the environment pins the
// reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace ghznet::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the AVX2 variants were compiled in and the running CPU has AVX2 and FMA.
bool avx2_available();

/// The variant the dispatching entry points use.
Isa active_isa();

// All matrices are n x n, row-major, and must not alias the output.

namespace scalar {
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n);
void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n);
double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n);
void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n);
double max_asymmetry(std::span<const double> a, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n);
void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n);
double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n);
void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n);
double max_asymmetry(std::span<const double> a, std::size_t n);
}  // namespace avx2
#endif

/// out = a * b.
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n);

/// out = s * a * s^T.
void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n);

/// v^T a v.
double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n);

/// a_ij <- a_ij * d_i * d_j, in place. Equivalent to D a D with D = diag(d).
void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n);

/// max_ij |a_ij - a_ji|.
double max_asymmetry(std::span<const double> a, std::size_t n);

}  // namespace ghznet::kernels
