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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "izeta/det_gamma.hpp"
#include "izeta/instance.hpp"

namespace izeta {

/// Text tables, JSON lines (one object per line with a "record" key), or CSV
/// for the trace table.
enum class Format { Text, Jsonl, Csv };

Format parse_format(std::string_view name);

/// "a+bi", each part in shortest round-trip form.
std::string format_complex(Complex z);
/// Accepts "0.3", "-2", "0.3+0.2i", "0.3-0.2i", "0.2i", "-i", "1e-2+3e-1i".
Complex parse_complex(std::string_view text);

/// Radius of the N_m series: 1/(d-1) for d >= 2, else 1.
double series_radius(const Instance& inst);
/// exp(sum_{m>=1} N_m u^m / m) over the given counts; DomainError names
/// 1/(d-1) outside series_radius.
Complex zeta_from_counts(const std::vector<Integer>& n, Complex u, const Instance& inst);

std::string report_cycles(const Instance& inst, int max_len, Format format);
std::string report_traces(const Instance& inst, int order, Format format);
std::string report_zeta_series(const Instance& inst, int order, bool decimal, Format format);

enum ZetaMethod : unsigned {
    kMethodEuler = 1,
    kMethodTraces = 2,
    kMethodDetSeries = 4,
    kMethodDetBloch = 8,
    kMethodAll = 15,
};

struct ZetaValueRequest {
    std::vector<Complex> points;
    unsigned methods = kMethodAll;
    /// Longest prime cycle in the Euler product.
    int euler_len = 10;
    /// Last N_m in exp(sum N_m u^m / m).
    int trace_order = 24;
    DetOptions det;
};

/// Z(u) by every requested method with deltas against the first one listed.
std::string report_zeta_values(const Instance& inst, const ZetaValueRequest& req, Format format);

struct DetFormulaRequest {
    std::vector<Complex> points;
    /// Positive: exact series mode through this order; points are ignored.
    int series_order = 0;
    bool use_series = true;
    bool use_bloch = false;
    DetOptions det;
};

std::string report_det_formula(const Instance& inst, const DetFormulaRequest& req, Format format);

struct FunctionalRequest {
    int points = 0;
    std::uint64_t seed = 0;
    double margin = 0.05;
    DetOptions det;
};

std::string report_functional_eq(const Instance& inst, const FunctionalRequest& req, Format format);

struct VerifyConfig {
    int order = 0;
    int quadrature = 0;
    int points = 0;
    std::uint64_t seed = 0;
};

struct VerifyOutcome {
    std::string report;
    bool passed = false;
    int failures = 0;
};

/// Runs the invariant suite; every parameter must be set explicitly.
VerifyOutcome run_verify(const Instance& inst, const VerifyConfig& cfg, Format format);

} // namespace izeta
