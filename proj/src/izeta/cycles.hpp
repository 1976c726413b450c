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

#include "izeta/instance.hpp"

namespace izeta {

/// Closed walks without backtracking at one basepoint, split into those with
/// a tail (v_1 = v_{m-1}) and the reduced ones.
struct PathCounts {
    std::int64_t proper = 0;
    std::int64_t tailed = 0;
    std::int64_t reduced = 0;
};

PathCounts classify_paths(const SimpleGraph& g, int basepoint, int length);
/// Entry m holds the counts for length m, m = 0..max_len, from a single DFS.
std::vector<PathCounts> classify_paths_upto(const SimpleGraph& g, int basepoint, int max_len);

/// Reduced closed paths of length m with origin in the fundamental domain.
/// Periodic instances are unrolled with radius m.
std::int64_t n_m_oracle(const Instance& inst, int length);
/// Raises RadiusTooSmall when the window cannot hold every path of length m.
std::int64_t n_m_oracle(const Window& window, int length);
/// N_0..N_L and t_0..t_L in one enumeration.
struct OracleCounts {
    std::vector<std::int64_t> n;
    std::vector<std::int64_t> t;
};
OracleCounts oracle_counts(const Instance& inst, int max_len);

/// Gamma-class of reduced cycles.
struct CycleClass {
    /// Canonical representative: least sequence over rotations and group
    /// images. Vertex ids for finite graphs, cell ids for periodic ones.
    std::vector<int> vertices;
    /// Lattice coordinates of each vertex relative to the first (periodic).
    std::vector<Offset> coords;
    int length = 0;
    /// Length of the primitive cycle this one repeats.
    int period = 0;
    bool prime = false;
    int stabilizer_order = 1;
    /// nu(C) = period / |Gamma_C|; also the number of closed paths with
    /// origin in the domain that represent the class.
    int nu = 0;
    /// |Gamma| / |Gamma_C| for finite actions, 0 (infinite) for translations.
    std::int64_t orbit_size = 0;
};

/// All reduced cycle classes with length <= max_len, sorted by length then
/// representative.
std::vector<CycleClass> gamma_classes(const Instance& inst, int max_len);
std::vector<CycleClass> gamma_classes(const Window& window, int max_len);

/// pi_n for n = 0..max_len.
std::vector<std::int64_t> prime_counts(const std::vector<CycleClass>& classes, int max_len);

/// Product over prime classes with length <= max_len of
/// (1 - u^|C|)^(-1/|Gamma_C|). Raises DomainError for |u| >= 1/(d-1).
std::complex<double> euler_product_truncated(const std::vector<CycleClass>& classes, std::complex<double> u,
                                             int max_len, int max_degree);

} // namespace izeta
