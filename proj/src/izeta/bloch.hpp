/*
 *     Copyright 2026 The izeta Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <span>

#include "izeta/kernel.hpp"

namespace izeta {

inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }
inline std::complex<double> to_complex(double x) { return {x, 0.0}; }

/// Bloch symbol M(k)(i, j) = sum_v coef(i, j, v) exp(i k.v) of a kernel.
template <class T, class Conv>
Eigen::MatrixXcd bloch_symbol(const Kernel<T>& kernel, std::span<const double> k, Conv to_c) {
    const int n = kernel.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [v, b] : kernel.blocks()) {
        double phase = 0;
        for (std::size_t a = 0; a < v.size(); ++a) phase += k[a] * v[a];
        const std::complex<double> e(std::cos(phase), std::sin(phase));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b(i, j) != T(0)) m(i, j) += to_c(b(i, j)) * e;
    }
    return m;
}

/// Visits the n^d tensor grid k_a = 2 pi j_a / n.
template <class Fn>
void for_each_grid_point(int rank, int n, Fn&& fn) {
    std::vector<int> idx(rank, 0);
    std::vector<double> k(rank, 0.0);
    const double h = 2 * M_PI / n;
    while (true) {
        for (int a = 0; a < rank; ++a) k[a] = h * idx[a];
        fn(std::span<const double>(k));
        int a = rank - 1;
        while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
        if (a < 0) break;
    }
}

} // namespace izeta
