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

#include "izeta/analytic_det.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "izeta/error.hpp"

namespace izeta {

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

Complex closest_on_segment(Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0) return a;
    const double t = std::clamp(-(std::conj(ab) * a).real() / len2, 0.0, 1.0);
    return a + t * ab;
}

double wrap_pi(double x) {
    return std::remainder(x, 2 * M_PI);
}

} // namespace

std::vector<Complex> convex_hull(std::span<const Complex> points) {
    std::vector<Complex> p(points.begin(), points.end());
    auto less = [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    };
    std::sort(p.begin(), p.end(), less);
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;
    std::vector<Complex> h(2 * p.size());
    std::size_t k = 0;
    for (const auto& x : p) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], x) <= 0) --k;
        h[k++] = x;
    }
    for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

HullInfo hull_info(std::span<const Complex> points) {
    if (points.empty()) fail(ErrorCode::InvalidArgument, "empty spectrum");
    HullInfo info;
    for (const auto& z : points) info.spectral_radius = std::max(info.spectral_radius, std::abs(z));
    const auto hull = convex_hull(points);

    bool inside = hull.size() >= 3;
    info.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        if (hull.size() >= 3 && cross(a, b, Complex(0, 0)) <= 0) inside = false;
        const Complex c = hull.size() == 1 ? a : closest_on_segment(a, b);
        if (std::abs(c) < info.distance) {
            info.distance = std::abs(c);
            info.nearest = c;
        }
    }
    if (inside) info.distance = 0;
    if (info.spectral_radius == 0 || info.distance <= 1e-9 * info.spectral_radius)
        fail(ErrorCode::HullContainsZero, "0 lies in the convex hull of the spectrum");

    const double centre = std::arg(info.nearest);
    double lo = 0, hi = 0;
    for (const auto& z : hull) {
        const double d = wrap_pi(std::arg(z) - centre);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    info.arg_lo = centre + lo;
    info.arg_hi = centre + hi;
    return info;
}

bool CutRange::admits(double theta) const {
    // Shift theta into [lo, lo + 2 pi).
    const double t = lo + std::fmod(std::fmod(theta - lo, 2 * M_PI) + 2 * M_PI, 2 * M_PI);
    return t > lo && t < hi;
}

CutRange admissible_cut_range(const HullInfo& hull) {
    return {hull.arg_hi, hull.arg_lo + 2 * M_PI};
}

Complex branch_log(Complex z, double cut_angle) {
    const double shift = cut_angle - M_PI;
    return Complex(0, shift) + std::log(std::polar(1.0, -shift) * z);
}

AnalyticDet analytic_det_spectrum(std::span<const Complex> eigenvalues, double weight,
                                  std::optional<double> cut_angle) {
    const HullInfo hull = hull_info(eigenvalues);
    AnalyticDet out;
    if (cut_angle) {
        if (!admissible_cut_range(hull).admits(*cut_angle))
            fail(ErrorCode::BranchObstruction, "requested branch cut meets the spectral hull");
        out.cut_angle = *cut_angle;
    } else {
        out.cut_angle = std::arg(hull.nearest) + M_PI;
    }
    Complex sum = 0;
    for (const auto& z : eigenvalues) sum += branch_log(z, out.cut_angle);
    out.log_value = weight * sum;
    out.value = std::exp(out.log_value);
    return out;
}

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::InvalidArgument, "matrix must be square");
    if (a.rows() == 1) return {a(0, 0)};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    if (solver.info() != Eigen::Success) fail(ErrorCode::InvalidArgument, "eigenvalue solver failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

AnalyticDet analytic_det_matrix(const Eigen::MatrixXcd& a, double weight, std::optional<double> cut_angle) {
    const auto ev = eigenvalues(a);
    return analytic_det_spectrum(ev, weight, cut_angle);
}

ScalingCheck scaling_property_check(const Eigen::MatrixXcd& a, Complex z, double weight) {
    if (z == Complex(0)) fail(ErrorCode::InvalidArgument, "scaling factor must be nonzero");
    const AnalyticDet base = analytic_det_matrix(a, weight);
    const AnalyticDet scaled = analytic_det_matrix(z * a, weight);
    const double tau_identity = weight * static_cast<double>(a.rows());
    const double turn = scaled.cut_angle - base.cut_angle;
    ScalingCheck out;
    out.lhs = scaled.value;
    out.rhs = std::exp(tau_identity * Complex(std::log(std::abs(z)), turn)) * base.value;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

PolarCheck polar_factorization_check(const Eigen::MatrixXcd& a, double weight) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram(a.adjoint() * a);
    if (gram.info() != Eigen::Success || gram.eigenvalues().minCoeff() <= 0)
        fail(ErrorCode::InvalidArgument, "polar factorization needs an invertible matrix");
    const Eigen::VectorXd s = gram.eigenvalues().cwiseSqrt();
    const Eigen::MatrixXcd& v = gram.eigenvectors();
    const Eigen::MatrixXcd unitary = a * (v * s.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint());

    PolarCheck out;
    out.det_a = analytic_det_matrix(a, weight).value;
    out.det_unitary = analytic_det_matrix(unitary, weight).value;
    std::vector<Complex> spectrum_h(s.data(), s.data() + s.size());
    out.det_positive = analytic_det_spectrum(spectrum_h, weight).value;
    out.residual = std::abs(out.det_a - out.det_unitary * out.det_positive);
    return out;
}

} // namespace izeta
