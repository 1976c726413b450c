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

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace izeta {

using Complex = std::complex<double>;

/// Convex hull of a finite point set, counter-clockwise, collinear points
/// dropped. One or two points for degenerate input.
std::vector<Complex> convex_hull(std::span<const Complex> points);

struct HullInfo {
    /// Distance from 0 to the hull; 0 when 0 lies inside.
    double distance = 0;
    /// Hull point closest to 0.
    Complex nearest;
    /// max |lambda|
    double spectral_radius = 0;
    /// Directions of the hull seen from 0 lie in [arg_lo, arg_hi].
    double arg_lo = 0;
    double arg_hi = 0;
};

/// Raises HullContainsZero when 0 is within 1e-9 * spectral radius of the hull.
HullInfo hull_info(std::span<const Complex> points);

/// Cut directions theta for which the ray e^{i theta} R_+ misses the hull:
/// the open interval (lo, hi) with hi - lo > pi.
struct CutRange {
    double lo = 0;
    double hi = 0;
    double preferred() const { return 0.5 * (lo + hi); }
    bool admits(double theta) const;
};
CutRange admissible_cut_range(const HullInfo& hull);

/// Log with the cut along the ray e^{i theta} R_+:
/// i(theta - pi) + Log(e^{-i(theta - pi)} z).
Complex branch_log(Complex z, double cut_angle);

struct AnalyticDet {
    Complex value;
    /// tau(log A)
    Complex log_value;
    double cut_angle = 0;
};

/// exp(weight * sum_j log lambda_j) over the given spectrum, with the cut
/// opposite the hull point nearest 0 unless one is supplied. An inadmissible
/// supplied cut raises BranchObstruction.
AnalyticDet analytic_det_spectrum(std::span<const Complex> eigenvalues, double weight,
                                  std::optional<double> cut_angle = std::nullopt);

/// det_tau(A) = exp tau(log A) for tau = weight * Tr.
AnalyticDet analytic_det_matrix(const Eigen::MatrixXcd& a, double weight,
                                std::optional<double> cut_angle = std::nullopt);

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& a);

struct ScalingCheck {
    Complex lhs;   ///< det_tau(zA)
    Complex rhs;   ///< z^{tau(I)} det_tau(A)
    double residual = 0;
};

/// det_tau(zA) against z^{tau(I)} det_tau(A), with z^{tau(I)} taken along the
/// rotation that carries the cut used for A onto the cut used for zA.
ScalingCheck scaling_property_check(const Eigen::MatrixXcd& a, Complex z, double weight);

struct PolarCheck {
    Complex det_a;
    Complex det_unitary;
    Complex det_positive;
    double residual = 0;
};

/// For invertible normal A = UH, compares det_tau(A) with det_tau(U) det_tau(H).
PolarCheck polar_factorization_check(const Eigen::MatrixXcd& a, double weight);

} // namespace izeta
