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

#include "izeta/functional_eq.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace izeta {

namespace {

std::string show(Complex u) {
    return "(" + std::to_string(u.real()) + (u.imag() < 0 ? "" : "+") + std::to_string(u.imag()) + "i)";
}

Complex principal_pow(Complex base, double exponent) {
    if (exponent == std::floor(exponent)) return std::pow(base, static_cast<int>(exponent));
    return std::exp(exponent * std::log(base));
}

} // namespace

bool omega_contains(Complex u, int q, double tolerance) {
    if (q < 1) fail(ErrorCode::InvalidArgument, "q must be at least 1");
    if (std::abs(std::norm(u) - 1.0 / q) <= tolerance) return false;
    const double x = std::abs(u.real());
    if (std::abs(u.imag()) <= tolerance && x >= 1.0 / q - tolerance && x <= 1 + tolerance) return false;
    return true;
}

double omega_margin(Complex u, int q) {
    const double circle = std::abs(std::abs(u) - 1 / std::sqrt(static_cast<double>(q)));
    const double x = std::abs(u.real());
    const double gap = std::max({1.0 / q - x, 0.0, x - 1.0});
    const double segment = std::hypot(gap, u.imag());
    return std::min(circle, segment);
}

RegularZetaContext::RegularZetaContext(const Instance& inst, DetOptions opts) : inst_(&inst), opts_(opts) {
    const auto q = inst.regular_q();
    if (!q || *q < 1) fail(ErrorCode::NotRegular, "functional equations need a (q+1)-regular graph with q >= 1");
    q_ = *q;
    vb_ = inst.quotient().vb;
    chi_ = inst.quotient().chi;
}

Complex RegularZetaContext::det_gamma(Complex u) const {
    return det_gamma_bloch(*inst_, u, opts_).value;
}

Complex RegularZetaContext::zeta(Complex u) const {
    return 1.0 / (euler_factor(chi_, u) * det_gamma(u));
}

Completions completions(const RegularZetaContext& ctx, Complex u) {
    const int q = ctx.q();
    if (!omega_contains(u, q)) fail(ErrorCode::OutsideOmega, "u = " + show(u) + " lies outside Omega");
    const double v = ctx.vb();
    const Complex pre = euler_factor(ctx.chi(), u);
    Completions c;
    c.zeta = ctx.zeta(u);
    c.lambda = pre * principal_pow(1.0 - u * u, v / 2) * principal_pow(1.0 - double(q * q) * u * u, v / 2) * c.zeta;
    c.xi = pre * principal_pow(1.0 - u, v) * principal_pow(1.0 - double(q) * u, v) * c.zeta;
    c.big_xi = pre * principal_pow(1.0 + double(q) * u * u, v) * c.zeta;
    return c;
}

double mixed_residual(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::abs(a));
}

FunctionalResiduals check_functional_equations(const RegularZetaContext& ctx, Complex u) {
    if (u == Complex(0)) fail(ErrorCode::OutsideOmega, "u = 0 has no reflection");
    FunctionalResiduals r;
    r.u = u;
    r.reflected = 1.0 / (double(ctx.q()) * u);
    if (!omega_contains(r.reflected, ctx.q()))
        fail(ErrorCode::OutsideOmega, "1/(qu) = " + show(r.reflected) + " lies outside Omega");
    r.at_u = completions(ctx, u);
    r.at_reflected = completions(ctx, r.reflected);
    r.lambda_sign = ctx.vb() % 2 == 0 ? 1 : -1;
    r.lambda = mixed_residual(r.at_u.lambda, double(r.lambda_sign) * r.at_reflected.lambda);
    r.lambda_minus = mixed_residual(r.at_u.lambda, -r.at_reflected.lambda);
    r.xi = mixed_residual(r.at_u.xi, r.at_reflected.xi);
    r.big_xi = mixed_residual(r.at_u.big_xi, r.at_reflected.big_xi);
    return r;
}

ReflectionCheck reflection_check(const RegularZetaContext& ctx, Complex u) {
    const int q = ctx.q();
    if (u == Complex(0) || !omega_contains(u, q)) fail(ErrorCode::OutsideOmega, "u = " + show(u) + " lies outside Omega");
    const Complex reflected = 1.0 / (double(q) * u);
    ReflectionCheck r;
    r.lhs = ctx.det_gamma(reflected) * std::pow(double(q) * u * u, ctx.vb());
    r.rhs = ctx.det_gamma(u);
    r.residual = mixed_residual(r.rhs, r.lhs);
    return r;
}

std::vector<Complex> sample_omega_pairs(int q, int count, std::uint64_t seed, double margin) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    std::vector<Complex> out;
    const double qd = q;
    while (static_cast<int>(out.size()) < count) {
        const Complex u(coord(rng), coord(rng));
        const double r = std::abs(u);
        if (r < 0.05 || r > 1.5) continue;
        const Complex w = 1.0 / (qd * u);
        if (std::abs(w) > 1.5 || std::abs(w) < 0.05) continue;
        if (omega_margin(u, q) < margin || omega_margin(w, q) < margin) continue;
        // Half-integer powers jump across the real axis; stay off it.
        if (std::abs(u.imag()) < margin || std::abs(w.imag()) < margin) continue;
        out.push_back(u);
    }
    return out;
}

} // namespace izeta
