#!/usr/bin/env python3
# Copyright 2026 The ghznet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""High-precision oracle for symplectic spectra.

Diagonalizes i*Omega*sigma with mpmath at 50 digits and prints the values
frozen into tests/oracles/frozen_values.hpp. Independent of the C++ code.
"""

import mpmath as mp

mp.mp.dps = 50

MEASURED = [
    [2.76, 0, 2.32, 0, 2.27, 0],
    [0, 5.05, 0, -2.23, 0, -2.27],
    [2.32, 0, 2.78, 0, 2.29, 0],
    [0, -2.23, 0, 4.81, 0, -2.14],
    [2.27, 0, 2.29, 0, 2.69, 0],
    [0, -2.27, 0, -2.14, 0, 4.80],
]


def omega(n):
    w = mp.zeros(2 * n, 2 * n)
    for k in range(n):
        w[2 * k, 2 * k + 1] = 1
        w[2 * k + 1, 2 * k] = -1
    return w


def spectrum(sigma):
    n = sigma.rows // 2
    m = mp.mpc(0, 1) * omega(n) * sigma
    ev = mp.eig(m, left=False, right=False)
    vals = sorted((abs(mp.re(e)) for e in ev), reverse=True)
    return vals[::2]


def transpose_mode(sigma, k):
    t = mp.eye(sigma.rows)
    t[2 * k + 1, 2 * k + 1] = -1
    return t * sigma * t


def ghz_pure(r):
    s2, s3 = mp.sqrt(mp.mpf(2) / 3), mp.sqrt(mp.mpf(1) / 3)
    s6, h = mp.sqrt(mp.mpf(1) / 6), mp.sqrt(mp.mpf(1) / 2)
    u = mp.matrix([[s2, s3, 0], [-s6, s3, h], [-s6, s3, -h]])
    lo, hi = mp.e ** (-2 * r), mp.e ** (2 * r)
    inp = mp.diag([lo, hi, hi, lo, lo, hi])
    s = mp.zeros(6, 6)
    for i in range(3):
        for j in range(3):
            s[2 * i, 2 * j] = u[i, j]
            s[2 * i + 1, 2 * j + 1] = u[i, j]
    return s * inp * s.T


def show(name, vals):
    print(name, ", ".join(mp.nstr(v, 20) for v in vals))


def main():
    sigma = mp.matrix([[mp.mpf(str(x)) for x in row] for row in MEASURED])
    show("measured_spectrum", spectrum(sigma))
    show("measured_ppt", [min(spectrum(transpose_mode(sigma, k))) for k in range(3)])
    g = ghz_pure(mp.mpf("0.4"))
    show("ghz04_spectrum", spectrum(g))
    show("ghz04_ppt", [min(spectrum(transpose_mode(g, k))) for k in range(3)])


if __name__ == "__main__":
    main()
