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

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "izeta/error.hpp"

namespace izeta {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_zero_coef(const Rational& x) { return x == 0; }
inline bool is_zero_coef(const std::complex<double>& x) { return std::abs(x) <= 1e-12; }
inline bool is_one_coef(const Rational& x) { return x == 1; }
inline bool is_one_coef(const std::complex<double>& x) { return std::abs(x - 1.0) <= 1e-12; }

} // namespace detail

/// Power series c_0 + c_1 u + ... + c_M u^M, everything beyond u^M dropped.
/// T is Rational for exact work or std::complex<double> for floating work.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c_(order + 1, T(0)) {
        if (order < 0) fail(ErrorCode::InvalidArgument, "series order must be nonnegative");
    }
    TruncatedSeries(int order, const std::vector<T>& coeffs) : TruncatedSeries(order) {
        for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) c_[i] = coeffs[i];
    }

    static TruncatedSeries constant(int order, const T& value) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int i) const { return c_[i]; }
    T& operator[](int i) { return c_[i]; }
    const std::vector<T>& coefficients() const { return c_; }

    TruncatedSeries truncated(int order) const { return TruncatedSeries(order, c_); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncatedSeries& operator*=(const T& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int m = std::min(a.order(), b.order());
        TruncatedSeries r(m);
        for (int i = 0; i <= m; ++i) {
            if (a.c_[i] == T(0)) continue;
            for (int j = 0; i + j <= m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// Horner evaluation of the truncated polynomial.
    template <class U>
    U evaluate(const U& u) const {
        U acc(0);
        for (int i = order(); i >= 0; --i) acc = acc * u + convert<U>(c_[i]);
        return acc;
    }

private:
    template <class U>
    static U convert(const Rational& x) { return U(x.get_d()); }
    template <class U>
    static U convert(const std::complex<double>& x) { return U(x); }

    void shrink_to(int order) {
        if (order < this->order()) c_.resize(order + 1);
    }

    std::vector<T> c_;
};

using ExactSeries = TruncatedSeries<Rational>;
using ComplexSeries = TruncatedSeries<std::complex<double>>;

/// d/du, order M-1.
template <class T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& s) {
    const int m = std::max(0, s.order() - 1);
    TruncatedSeries<T> r(m);
    for (int i = 1; i <= s.order(); ++i) r[i - 1] = s[i] * T(i);
    return r;
}

/// Antiderivative with zero constant term, order M+1.
template <class T>
TruncatedSeries<T> integral(const TruncatedSeries<T>& s) {
    TruncatedSeries<T> r(s.order() + 1);
    for (int i = 0; i <= s.order(); ++i) r[i + 1] = s[i] / T(i + 1);
    return r;
}

/// exp(s), requires s_0 = 0.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& s) {
    if (!detail::is_zero_coef(s[0])) fail(ErrorCode::BadConstantTerm, "series_exp needs constant term 0");
    const int m = s.order();
    TruncatedSeries<T> e(m);
    e[0] = T(1);
    // n e_n = sum_{k=1}^n k s_k e_{n-k}
    for (int n = 1; n <= m; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += T(k) * s[k] * e[n - k];
        e[n] = acc / T(n);
    }
    return e;
}

/// log(s), requires s_0 = 1.
template <class T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& s) {
    if (!detail::is_one_coef(s[0])) fail(ErrorCode::BadConstantTerm, "series_log needs constant term 1");
    const int m = s.order();
    TruncatedSeries<T> l(m);
    // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
    for (int n = 1; n <= m; ++n) {
        T acc = T(n) * s[n];
        for (int k = 1; k < n; ++k) acc -= T(k) * l[k] * s[n - k];
        l[n] = acc / T(n);
    }
    return l;
}

/// 1/s, requires s_0 != 0.
template <class T>
TruncatedSeries<T> series_inverse(const TruncatedSeries<T>& s) {
    if (detail::is_zero_coef(s[0])) fail(ErrorCode::BadConstantTerm, "series_inverse needs nonzero constant term");
    const int m = s.order();
    TruncatedSeries<T> r(m);
    r[0] = T(1) / s[0];
    for (int n = 1; n <= m; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
        r[n] = -acc / s[0];
    }
    return r;
}

/// s^k for integer k (negative k inverts first).
template <class T>
TruncatedSeries<T> series_pow(const TruncatedSeries<T>& s, int k) {
    TruncatedSeries<T> base = k < 0 ? series_inverse(s) : s;
    TruncatedSeries<T> r = TruncatedSeries<T>::constant(s.order(), T(1));
    for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

/// (1 + c u^p)^r = sum_k binom(r, k) c^k u^{pk} with exact rational exponent.
ExactSeries binomial_series(const Rational& exponent, int power, const Rational& coef, int order);

/// Z(u) = exp(sum_{m=1}^M N_m u^m / m), with n[m] = N_m (n[0] ignored).
ExactSeries zeta_series(const std::vector<Integer>& n, int order);

struct LogDerivativeCheck {
    /// Coefficients of u Z'/Z, index m = 1..M.
    std::vector<Rational> recovered;
    /// First m with recovered[m] != N_m, or -1.
    int first_mismatch = -1;
    bool exact() const { return first_mismatch < 0; }
};

LogDerivativeCheck log_derivative_check(const ExactSeries& z, const std::vector<Integer>& n);

ComplexSeries to_complex(const ExactSeries& s);

} // namespace izeta
