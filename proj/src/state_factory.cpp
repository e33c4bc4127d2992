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

#include "ghznet/state_factory.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/kernels.hpp"

namespace ghznet {

namespace {

void check_mode(const CovMatrix &cov, std::size_t mode) {
    if (mode >= cov.n_modes()) {
        throw Error(ErrorKind::Index, fmt::format("mode {} out of range for {} modes", mode, cov.n_modes()));
    }
}

void check_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorKind::Spec, fmt::format("{} must be positive and finite, got {}", name, v));
    }
}

}  // namespace

double db_to_variance(double db) {
    return std::pow(10.0, db / 10.0);
}

double variance_to_db(double variance) {
    return 10.0 * std::log10(variance);
}

SqueezedModeSpec SqueezedModeSpec::pure(double r, SqueezeAxis axis) {
    const double db = variance_to_db(std::exp(2.0 * r));
    return {-db, db, axis};
}

CovMatrix squeezed_cov(const SqueezedModeSpec &spec) {
    if (!(spec.squeeze_db <= 0.0) || !(spec.antisqueeze_db >= 0.0)) {
        throw Error(ErrorKind::Spec, fmt::format("squeeze level must be <= 0 dB and anti-squeeze >= 0 dB, got {} / {}",
                                                 spec.squeeze_db, spec.antisqueeze_db));
    }
    const double v_sq = db_to_variance(spec.squeeze_db);
    const double v_anti = db_to_variance(spec.antisqueeze_db);
    if (spec.axis == SqueezeAxis::X) {
        return CovMatrix(1, {v_sq, 0.0, 0.0, v_anti});
    }
    return CovMatrix(1, {v_anti, 0.0, 0.0, v_sq});
}

CovMatrix product_state(std::span<const CovMatrix> parts) {
    std::size_t modes = 0;
    for (const auto &p : parts) {
        modes += p.n_modes();
    }
    const std::size_t n = 2 * modes;
    std::vector<double> values(n * n, 0.0);
    std::size_t offset = 0;
    for (const auto &p : parts) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                values[(offset + i) * n + offset + j] = p(i, j);
            }
        }
        offset += p.dim();
    }
    return CovMatrix(modes, std::move(values));
}

CovMatrix transform(const CovMatrix &cov, std::span<const double> s) {
    const std::size_t n = cov.dim();
    if (s.size() != n * n) {
        throw Error(ErrorKind::Shape, fmt::format("transform needs a {}x{} matrix", n, n));
    }
    std::vector<double> out(n * n);
    kernels::congruence(s, cov.data(), out, n);
    return CovMatrix(cov.n_modes(), std::move(out));
}

CovMatrix apply_beamsplitter(const CovMatrix &cov, std::size_t k, std::size_t l, double t) {
    check_mode(cov, k);
    check_mode(cov, l);
    if (k == l) {
        throw Error(ErrorKind::Index, "beam splitter needs two distinct modes");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorKind::Spec, fmt::format("beam splitter transmissivity must lie in [0, 1], got {}", t));
    }
    const std::size_t n = cov.dim();
    const double r = std::sqrt(1.0 - t);
    const double q = std::sqrt(t);
    std::vector<double> s(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        s[i * n + i] = 1.0;
    }
    for (std::size_t quad = 0; quad < 2; ++quad) {
        const std::size_t ik = 2 * k + quad;
        const std::size_t il = 2 * l + quad;
        s[ik * n + ik] = r;
        s[ik * n + il] = q;
        s[il * n + ik] = q;
        s[il * n + il] = -r;
    }
    return transform(cov, s);
}

CovMatrix rotate_pi(const CovMatrix &cov, std::size_t mode) {
    check_mode(cov, mode);
    std::vector<double> values(cov.data().begin(), cov.data().end());
    std::vector<double> signs(cov.dim(), 1.0);
    signs[2 * mode] = -1.0;
    signs[2 * mode + 1] = -1.0;
    kernels::scale_symmetric(values, signs, cov.dim());
    return CovMatrix(cov.n_modes(), std::move(values));
}

std::array<double, 9> network_matrix(const NetworkSpec &net) {
    // Track how the three input amplitudes feed each output by pushing the
    // 3x3 identity through the same element sequence ghz_state applies.
    auto bs = [](std::array<double, 9> m, std::size_t k, std::size_t l, double t) {
        const double r = std::sqrt(1.0 - t);
        const double q = std::sqrt(t);
        for (std::size_t c = 0; c < 3; ++c) {
            const double mk = m[k * 3 + c];
            const double ml = m[l * 3 + c];
            m[k * 3 + c] = r * mk + q * ml;
            m[l * 3 + c] = q * mk - r * ml;
        }
        return m;
    };
    std::array<double, 9> u{1, 0, 0, 0, 1, 0, 0, 0, 1};
    u = bs(u, 0, 1, net.t1);
    for (std::size_t c = 0; c < 3; ++c) {
        u[3 + c] = -u[3 + c];
    }
    return bs(u, 1, 2, net.t2);
}

bool is_standard_ghz_configuration(const std::array<SqueezedModeSpec, 3> &inputs) {
    return inputs[0].axis == SqueezeAxis::X && inputs[1].axis == SqueezeAxis::P && inputs[2].axis == SqueezeAxis::X;
}

CovMatrix ghz_state(const std::array<SqueezedModeSpec, 3> &inputs, const NetworkSpec &net) {
    for (double t : {net.t1, net.t2}) {
        if (!(t > 0.0 && t < 1.0)) {
            throw Error(ErrorKind::Spec, fmt::format("network transmissivities must lie in (0, 1), got {}", t));
        }
    }
    const std::array<CovMatrix, 3> parts{squeezed_cov(inputs[0]), squeezed_cov(inputs[1]), squeezed_cov(inputs[2])};
    CovMatrix cov = product_state(parts);
    cov = apply_beamsplitter(cov, 0, 1, net.t1);
    cov = rotate_pi(cov, 1);
    return apply_beamsplitter(cov, 1, 2, net.t2);
}

CovMatrix ideal_ghz_state(double r) {
    return ghz_state({SqueezedModeSpec::pure(r, SqueezeAxis::X), SqueezedModeSpec::pure(r, SqueezeAxis::P),
                      SqueezedModeSpec::pure(r, SqueezeAxis::X)});
}

CovMatrix symmetric_state(double s, double t, double c) {
    return asymmetric_state(s, t, c, c);
}

CovMatrix asymmetric_state(double s, double t, double c, double c_x) {
    check_positive(s, "s");
    check_positive(t, "t");
    std::vector<double> m(36, 0.0);
    auto set = [&m](std::size_t i, std::size_t j, double v) {
        m[i * 6 + j] = v;
        m[j * 6 + i] = v;
    };
    for (std::size_t k = 0; k < 3; ++k) {
        set(2 * k, 2 * k, s);
        set(2 * k + 1, 2 * k + 1, t);
    }
    set(0, 2, c_x);
    set(0, 4, c_x);
    set(2, 4, c);
    set(1, 3, -c);
    set(1, 5, -c);
    set(3, 5, -c);
    return CovMatrix(3, std::move(m));
}

CovMatrix measured_state() {
    return CovMatrix(3, {
                            2.76, 0,     2.32, 0,     2.27, 0,      //
                            0,    5.05,  0,    -2.23, 0,    -2.27,  //
                            2.32, 0,     2.78, 0,     2.29, 0,      //
                            0,    -2.23, 0,    4.81,  0,    -2.14,  //
                            2.27, 0,     2.29, 0,     2.69, 0,      //
                            0,    -2.27, 0,    -2.14, 0,    4.80,   //
                        });
}

SymmetricParams symmetric_projection(const CovMatrix &cov) {
    if (cov.n_modes() != 3) {
        throw Error(ErrorKind::Shape, "symmetric projection needs a 3-mode state");
    }
    SymmetricParams p;
    p.s = (cov(0, 0) + cov(2, 2) + cov(4, 4)) / 3.0;
    p.t = (cov(1, 1) + cov(3, 3) + cov(5, 5)) / 3.0;
    const double x_sum = cov(0, 2) + cov(0, 4) + cov(2, 4);
    const double p_abs = std::abs(cov(1, 3)) + std::abs(cov(1, 5)) + std::abs(cov(3, 5));
    const double x_abs = std::abs(cov(0, 2)) + std::abs(cov(0, 4)) + std::abs(cov(2, 4));
    p.c = (x_abs + p_abs) / 6.0;
    p.c_x_only = x_sum / 3.0;
    p.c_p_only = p_abs / 3.0;
    return p;
}

double correlation_variance(const CovMatrix &cov, std::span<const QuadratureTerm> combo) {
    if (combo.empty()) {
        throw Error(ErrorKind::Spec, "quadrature combination is empty");
    }
    std::vector<double> v(cov.dim(), 0.0);
    for (const auto &term : combo) {
        check_mode(cov, term.mode);
        v[2 * term.mode + (term.quadrature == Quadrature::P ? 1 : 0)] += term.coefficient;
    }
    return kernels::quadratic_form(cov.data(), v, cov.dim());
}

}  // namespace ghznet
