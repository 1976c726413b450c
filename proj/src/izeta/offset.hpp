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

#include <cstdlib>
#include <vector>

namespace izeta {

/// Lattice offset in Z^d. Rank-0 (finite) objects use the empty offset.
using Offset = std::vector<int>;

inline Offset operator+(const Offset& a, const Offset& b) {
    Offset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Offset operator-(const Offset& a) {
    Offset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Offset operator-(const Offset& a, const Offset& b) { return a + (-b); }

inline bool is_zero(const Offset& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

/// First nonzero coordinate is positive.
inline bool lex_positive(const Offset& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

inline int l1_norm(const Offset& v) {
    int s = 0;
    for (int x : v) s += std::abs(x);
    return s;
}

inline int linf_norm(const Offset& v) {
    int s = 0;
    for (int x : v) s = std::max(s, std::abs(x));
    return s;
}

} // namespace izeta
