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

#include "izeta/series.hpp"

namespace izeta {

ExactSeries binomial_series(const Rational& exponent, int power, const Rational& coef, int order) {
    if (power < 1) fail(ErrorCode::InvalidArgument, "binomial series needs a positive power");
    ExactSeries s(order);
    Rational term = 1;
    for (int k = 0; k * power <= order; ++k) {
        s[k * power] = term;
        // binom(r, k+1) c^{k+1} = binom(r, k) c^k (r - k) c / (k + 1)
        term = term * (exponent - k) * coef / (k + 1);
    }
    return s;
}

ExactSeries zeta_series(const std::vector<Integer>& n, int order) {
    if (static_cast<int>(n.size()) < order + 1)
        fail(ErrorCode::InvalidArgument, "zeta_series needs N_1..N_M");
    ExactSeries log_z(order);
    for (int m = 1; m <= order; ++m) log_z[m] = Rational(n[m]) / m;
    return series_exp(log_z);
}

LogDerivativeCheck log_derivative_check(const ExactSeries& z, const std::vector<Integer>& n) {
    const ExactSeries log_z = series_log(z);
    LogDerivativeCheck out;
    out.recovered.assign(z.order() + 1, 0);
    for (int m = 1; m <= z.order(); ++m) {
        out.recovered[m] = log_z[m] * m;
        const Rational expected = m < static_cast<int>(n.size()) ? Rational(n[m]) : Rational(0);
        if (out.first_mismatch < 0 && out.recovered[m] != expected) out.first_mismatch = m;
    }
    return out;
}

ComplexSeries to_complex(const ExactSeries& s) {
    ComplexSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) r[i] = s[i].get_d();
    return r;
}

} // namespace izeta
