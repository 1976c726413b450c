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

#include <complex>
#include <cstdint>
#include <vector>

#include "izeta/det_gamma.hpp"
#include "izeta/instance.hpp"

namespace izeta {

/// u avoids the circle |u|^2 = 1/q and the real segments 1/q <= |x| <= 1.
bool omega_contains(Complex u, int q, double tolerance = 1e-9);

/// Distance from u to the part of the plane removed from Omega.
double omega_margin(Complex u, int q);

/// Zeta of a (q+1)-regular instance, evaluated anywhere the spectral hull of
/// Delta(u) misses 0 (finite instances directly, periodic ones by quadrature).
class RegularZetaContext {
public:
    /// Raises NotRegular unless every vertex has degree q + 1 >= 2.
    explicit RegularZetaContext(const Instance& inst, DetOptions opts = {});

    int q() const { return q_; }
    int vb() const { return vb_; }
    int chi() const { return chi_; }
    const Instance& instance() const { return *inst_; }

    Complex det_gamma(Complex u) const;
    Complex zeta(Complex u) const;

private:
    const Instance* inst_;
    DetOptions opts_;
    int q_ = 0;
    int vb_ = 0;
    int chi_ = 0;
};

struct Completions {
    Complex zeta;
    Complex lambda;
    Complex xi;
    Complex big_xi;
};

/// Raises OutsideOmega for u outside Omega.
Completions completions(const RegularZetaContext& ctx, Complex u);

/// Residual |a - b| / max(1, |a|).
double mixed_residual(Complex a, Complex b);

struct FunctionalResiduals {
    Complex u;
    Complex reflected;  ///< 1/(qu)
    Completions at_u;
    Completions at_reflected;
    /// Sign s with Lambda(u) = s Lambda(1/(qu)): (-1)^{|VB|} under principal
    /// square roots off the real axis.
    int lambda_sign = -1;
    double lambda = 0;
    double xi = 0;
    double big_xi = 0;
    /// Residual of Lambda(u) + Lambda(1/(qu)), the sign stated for odd |VB|.
    double lambda_minus = 0;
};

/// Raises OutsideOmega unless u and 1/(qu) both lie in Omega.
FunctionalResiduals check_functional_equations(const RegularZetaContext& ctx, Complex u);

struct ReflectionCheck {
    Complex lhs;  ///< det_Gamma(Delta(1/(qu))) (qu^2)^{|VB|}
    Complex rhs;  ///< det_Gamma(Delta(u))
    double residual = 0;
};

ReflectionCheck reflection_check(const RegularZetaContext& ctx, Complex u);

/// Seeded points u with u and 1/(qu) both at distance >= margin from the
/// removed set and from the real axis, and 0.05 <= |u| <= 1.5.
std::vector<Complex> sample_omega_pairs(int q, int count, std::uint64_t seed, double margin = 0.05);

} // namespace izeta
