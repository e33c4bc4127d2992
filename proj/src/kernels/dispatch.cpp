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

#include <cstdlib>
#include <cstring>

#include "ghznet/kernels.hpp"

namespace ghznet::kernels {

namespace {

struct Table {
    Isa isa;
    void (*multiply)(std::span<const double>, std::span<const double>, std::span<double>, std::size_t);
    void (*congruence)(std::span<const double>, std::span<const double>, std::span<double>, std::size_t);
    double (*quadratic_form)(std::span<const double>, std::span<const double>, std::size_t);
    void (*scale_symmetric)(std::span<double>, std::span<const double>, std::size_t);
    double (*max_asymmetry)(std::span<const double>, std::size_t);
};

constexpr Table kScalar{Isa::Scalar,           scalar::multiply,        scalar::congruence,
                        scalar::quadratic_form, scalar::scale_symmetric, scalar::max_asymmetry};

#if defined(GHZNET_HAVE_AVX2)
constexpr Table kAvx2{Isa::Avx2,           avx2::multiply,        avx2::congruence,
                      avx2::quadratic_form, avx2::scale_symmetric, avx2::max_asymmetry};
#endif

bool scalar_forced() {
    const char *env = std::getenv("GHZNET_KERNELS");
    return env != nullptr && std::strcmp(env, "scalar") == 0;
}

const Table &table() {
    static const Table &chosen = []() -> const Table & {
#if defined(GHZNET_HAVE_AVX2)
        if (!scalar_forced() && avx2_available()) {
            return kAvx2;
        }
#endif
        return kScalar;
    }();
    return chosen;
}

}  // namespace

std::string_view to_string(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool avx2_available() {
#if defined(GHZNET_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() {
    return table().isa;
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out, std::size_t n) {
    table().multiply(a, b, out, n);
}

void congruence(std::span<const double> s, std::span<const double> a, std::span<double> out, std::size_t n) {
    table().congruence(s, a, out, n);
}

double quadratic_form(std::span<const double> a, std::span<const double> v, std::size_t n) {
    return table().quadratic_form(a, v, n);
}

void scale_symmetric(std::span<double> a, std::span<const double> d, std::size_t n) {
    table().scale_symmetric(a, d, n);
}

double max_asymmetry(std::span<const double> a, std::size_t n) {
    return table().max_asymmetry(a, n);
}

}  // namespace ghznet::kernels
