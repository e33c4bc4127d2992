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

#include "ghznet/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "ghznet/error.hpp"
#include "ghznet/kernels.hpp"

namespace ghznet {

char mode_name(std::size_t mode) {
    return static_cast<char>('A' + mode);
}

std::vector<double> symplectic_form(std::size_t n_modes) {
    const std::size_t n = 2 * n_modes;
    std::vector<double> omega(n * n, 0.0);
    for (std::size_t k = 0; k < n_modes; ++k) {
        omega[(2 * k) * n + 2 * k + 1] = 1.0;
        omega[(2 * k + 1) * n + 2 * k] = -1.0;
    }
    return omega;
}

std::vector<double> symplectic_eigenvalues(const CovMatrix &cov) {
    const std::size_t n = cov.dim();
    // Omega * sigma: row 2k is sigma's row 2k+1, row 2k+1 is minus sigma's row 2k.
    Eigen::MatrixXd m(n, n);
    for (std::size_t k = 0; k < cov.n_modes(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            m(2 * k, j) = cov(2 * k + 1, j);
            m(2 * k + 1, j) = -cov(2 * k, j);
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Numerical, "eigen-decomposition of Omega*sigma did not converge");
    }
    std::vector<double> moduli(n);
    for (std::size_t i = 0; i < n; ++i) {
        moduli[i] = std::abs(solver.eigenvalues()[static_cast<Eigen::Index>(i)]);
    }
    std::sort(moduli.begin(), moduli.end(), std::greater<>());

    double frobenius = 0.0;
    for (double v : cov.data()) {
        frobenius += v * v;
    }
    const double tol = kPairingTol * std::sqrt(frobenius);

    std::vector<double> out(cov.n_modes());
    for (std::size_t k = 0; k < cov.n_modes(); ++k) {
        const double hi = moduli[2 * k];
        const double lo = moduli[2 * k + 1];
        if (hi - lo > tol) {
            std::string listing;
            for (double v : moduli) {
                listing += fmt::format(" {:.12g}", v);
            }
            throw Error(ErrorKind::Numerical,
                        fmt::format("symplectic eigenvalue pairing failed at pair {} (|{:.12g} - {:.12g}| > {:.3e});"
                                    " moduli:{}",
                                    k, hi, lo, tol, listing));
        }
        out[k] = 0.5 * (hi + lo);
    }
    return out;
}

CovMatrix partial_transpose(const CovMatrix &cov, std::size_t mode) {
    if (mode >= cov.n_modes()) {
        throw Error(ErrorKind::Index,
                    fmt::format("partial transpose mode {} out of range for {} modes", mode, cov.n_modes()));
    }
    std::vector<double> values(cov.data().begin(), cov.data().end());
    std::vector<double> signs(cov.dim(), 1.0);
    signs[2 * mode + 1] = -1.0;
    kernels::scale_symmetric(values, signs, cov.dim());
    return CovMatrix(cov.n_modes(), std::move(values));
}

double ppt_value(const CovMatrix &cov, std::size_t mode) {
    return symplectic_eigenvalues(partial_transpose(cov, mode)).back();
}

double PptTriple::operator[](std::size_t mode) const {
    switch (mode) {
        case kModeA:
            return a;
        case kModeB:
            return b;
        case kModeC:
            return c;
        default:
            throw Error(ErrorKind::Index, fmt::format("PPT triple has no mode {}", mode));
    }
}

PptTriple ppt_triple(const CovMatrix &cov) {
    if (cov.n_modes() != 3) {
        throw Error(ErrorKind::Shape, fmt::format("PPT triple needs 3 modes, got {}", cov.n_modes()));
    }
    return {ppt_value(cov, kModeA), ppt_value(cov, kModeB), ppt_value(cov, kModeC)};
}

EntanglementClass classify(const PptTriple &ppt) {
    EntanglementClass out;
    out.ppt = ppt;
    std::array<bool, 3> separable{};
    std::size_t count = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        separable[k] = ppt[k] >= 1.0 - kClassTol;
        count += separable[k] ? 1 : 0;
    }
    if (count == 0) {
        out.kind = Separability::FullyInseparable;
    } else if (count == 3) {
        out.kind = Separability::FullyPptSeparable;
    } else {
        out.kind = Separability::OneModeBiseparable;
        out.multi_cut = count == 2;
        std::size_t best = 3;
        for (std::size_t k = 0; k < 3; ++k) {
            if (separable[k] && (best == 3 || ppt[k] > ppt[best])) {
                best = k;
            }
        }
        out.mode = best;
    }
    return out;
}

EntanglementClass classify(const CovMatrix &cov) {
    return classify(ppt_triple(cov));
}

std::string EntanglementClass::label() const {
    switch (kind) {
        case Separability::FullyInseparable:
            return "FullyInseparable";
        case Separability::OneModeBiseparable:
            return fmt::format("OneModeBiseparable({}){}", mode_name(mode), multi_cut ? "+multi" : "");
        case Separability::FullyPptSeparable:
            return "FullyPptSeparable";
    }
    return "?";
}

std::string EntanglementClass::region() const {
    switch (kind) {
        case Separability::FullyInseparable:
            return "I";
        case Separability::OneModeBiseparable:
            return "II";
        case Separability::FullyPptSeparable:
            return "III";
    }
    return "?";
}

}  // namespace ghznet
