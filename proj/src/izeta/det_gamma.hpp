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
#include <vector>

#include "izeta/instance.hpp"
#include "izeta/series.hpp"

namespace izeta {

using Complex = std::complex<double>;

struct DetOptions {
    /// Target bound on the truncated tail of Tr_Gamma log Delta(u).
    double series_tolerance = 1e-13;
    int max_series_order = 400;
    /// First grid size per dimension; doubled until the value settles.
    int quadrature_start = 16;
    int quadrature_cap = 4096;
    double quadrature_tolerance = 1e-10;
};

/// Exact coefficients of Tr_Gamma log Delta(u) = -sum_n Tr_Gamma(f^n) / n with
/// f = Au - Qu^2, through order M.
ExactSeries trace_log_delta_series(const Instance& inst, int order);

struct SeriesValue {
    Complex value;
    Complex log_value;
    int order = 0;
    /// Bound on |sum_{m > order} L_m u^m|.
    double tail_bound = 0;
};

/// det_Gamma(Delta(u)) from the trace-log series, truncated where the tail
/// bound from N_m <= d(d-1)^{m-1}|F| drops below tolerance. Coefficients are
/// cached across calls, so one evaluator serves many points.
class DetGammaSeries {
public:
    explicit DetGammaSeries(const Instance& inst);

    /// Raises DomainError outside |u| < min(1, 1/(d-1)), TruncationNotConverged
    /// if the needed order exceeds the cap.
    SeriesValue evaluate(Complex u, const DetOptions& opts = {});
    /// Radius within which the series is certified.
    double radius() const;
    const ExactSeries& coefficients(int order);

private:
    double tail_bound(double r, int order) const;

    const Instance* inst_;
    ExactSeries exact_;
    std::vector<Complex> coef_;
};

SeriesValue det_gamma_series(const Instance& inst, Complex u, const DetOptions& opts = {});

struct QuadratureValue {
    Complex value;
    Complex log_value;
    /// Grid size per dimension at convergence (1 for finite instances).
    int quadrature_n = 1;
    double last_change = 0;
    double cut_angle = 0;
    double hull_distance = 0;
};

/// exp of the torus average of tr log Delta(u, k), one branch for the whole
/// sampled spectrum, trapezoid grid doubled until the relative change drops
/// below tolerance. Finite instances go through det_gamma_direct.
/// Raises BranchObstruction or QuadratureNotConverged.
QuadratureValue det_gamma_bloch(const Instance& inst, Complex u, const DetOptions& opts = {});

/// Finite instances: exp((1/|Gamma|) Tr log Delta(u)); the plain determinant
/// when the action is trivial.
QuadratureValue det_gamma_direct(const Instance& inst, Complex u);

enum class DetMethod { Series, Bloch };

struct FormulaValue {
    /// (1 - u^2)^{-chi} det_Gamma(Delta(u))
    Complex inverse_zeta;
    Complex zeta;
    Complex det_gamma;
    DetMethod method = DetMethod::Series;
    int order = 0;
    int quadrature_n = 0;
};

/// 1/Z(u) in value mode. Raises DomainError naming 1/alpha when |u| >= 1/alpha.
FormulaValue determinant_formula_value(const Instance& inst, Complex u, DetMethod method,
                                       const DetOptions& opts = {});

/// (1 - u^2)^{-chi} with the principal branch.
Complex euler_factor(int chi, Complex u);

struct SeriesComparison {
    ExactSeries lhs;
    ExactSeries rhs;
    /// First order where the two sides differ, or -1.
    int first_mismatch = -1;
    bool holds() const { return first_mismatch < 0; }
};

/// lhs: (1 - u^2)^{-chi} exp(Tr_Gamma log Delta(u)); rhs: 1 / Z from N_m.
SeriesComparison determinant_formula_series(const Instance& inst, int order);

/// lhs: -d/du Tr_Gamma log(I - f); rhs: Tr_Gamma(f' (I - f)^{-1}); order M - 1.
SeriesComparison log_derivative_trace_check(const Instance& inst, int order);

/// lhs: sum_{m>=1} Tr_Gamma(B_m) u^m; rhs: -u d/du Tr_Gamma log Delta(u).
SeriesComparison b_trace_check(const Instance& inst, int order);

/// Exact polynomial det(I - Au + Qu^2) for a finite instance (Bareiss
/// elimination over Z[u]), as a series of order 2|V|.
ExactSeries finite_delta_determinant(const Instance& inst);

} // namespace izeta
