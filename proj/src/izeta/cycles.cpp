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

#include "izeta/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace izeta {

namespace {

/// Depth-first enumeration of closed walks without backtracking at `base`;
/// calls visit(path, m) with path[0..m], path[m] == base, for m <= max_len.
template <class Visitor>
void walk_closed(const SimpleGraph& g, int base, int max_len, Visitor&& visit) {
    if (max_len < 1) return;
    std::vector<int> path(max_len + 1);
    std::vector<std::size_t> next(max_len + 1, 0);
    path[0] = base;
    int depth = 0;
    while (depth >= 0) {
        const auto& nb = g.neighbors(path[depth]);
        if (next[depth] == nb.size()) {
            --depth;
            continue;
        }
        const int w = nb[next[depth]++];
        if (depth >= 1 && w == path[depth - 1]) continue;
        path[depth + 1] = w;
        if (w == base) visit(path, depth + 1);
        if (depth + 1 < max_len) {
            ++depth;
            next[depth] = 0;
        }
    }
}

/// Tail: v_j = v_{m-j} for j = 1..k with 1 <= k <= [m/2] - 1. Checking k = 1
/// suffices since any longer tail starts with it.
bool has_tail(const std::vector<int>& path, int m) {
    return m / 2 - 1 >= 1 && path[1] == path[m - 1];
}

int primitive_period(const std::vector<int>& seq) {
    const int m = static_cast<int>(seq.size());
    for (int p = 1; p < m; ++p) {
        if (m % p) continue;
        bool same = true;
        for (int j = 0; j < m && same; ++j) same = seq[j] == seq[(j + p) % m];
        if (same) return p;
    }
    return m;
}

/// Canonical form and stabilizer for a finite permutation group.
struct FiniteSymmetry {
    const std::vector<Permutation>& elements;

    std::vector<int> canonical(const std::vector<int>& seq) const {
        const int m = static_cast<int>(seq.size());
        std::vector<int> best, cand(m);
        for (const auto& g : elements)
            for (int r = 0; r < m; ++r) {
                for (int j = 0; j < m; ++j) cand[j] = g[seq[(j + r) % m]];
                if (best.empty() || cand < best) best = cand;
            }
        return best;
    }

    int stabilizer(const std::vector<int>& seq) const {
        const int m = static_cast<int>(seq.size());
        int count = 0;
        for (const auto& g : elements) {
            bool fixes = false;
            for (int r = 0; r < m && !fixes; ++r) {
                bool match = true;
                for (int j = 0; j < m && match; ++j) match = g[seq[j]] == seq[(j + r) % m];
                fixes = match;
            }
            if (fixes) ++count;
        }
        return count;
    }
};

/// Canonical form and stabilizer for translations of a window.
struct TranslationSymmetry {
    const Window& window;

    std::vector<int> normalized(const std::vector<int>& seq, int r) const {
        const int m = static_cast<int>(seq.size());
        const Offset& base = window.coord_of[seq[r]];
        std::vector<int> key;
        key.reserve(m * (1 + window.rank));
        for (int j = 0; j < m; ++j) {
            const int v = seq[(j + r) % m];
            key.push_back(window.cell_of[v]);
            const Offset rel = window.coord_of[v] - base;
            key.insert(key.end(), rel.begin(), rel.end());
        }
        return key;
    }

    std::vector<int> canonical(const std::vector<int>& seq) const {
        std::vector<int> best;
        for (int r = 0; r < static_cast<int>(seq.size()); ++r) {
            auto cand = normalized(seq, r);
            if (best.empty() || cand < best) best = std::move(cand);
        }
        return best;
    }

    int stabilizer(const std::vector<int>& seq) const {
        const int m = static_cast<int>(seq.size());
        const auto ref = normalized(seq, 0);
        int matches = 0;
        for (int r = 0; r < m; ++r)
            if (normalized(seq, r) == ref) ++matches;
        // Rotations that fix the sequence pointwise map to the identity.
        return matches / (m / primitive_period(seq));
    }
};

struct ClassAccumulator {
    CycleClass cls;
    int hits = 0;
};

template <class Symmetry>
std::vector<CycleClass> collect_classes(const SimpleGraph& g, std::span<const int> basepoints, int max_len,
                                        const Symmetry& sym, int group_order,
                                        const Window* window) {
    std::map<std::pair<int, std::vector<int>>, ClassAccumulator> found;
    for (int base : basepoints) {
        walk_closed(g, base, max_len, [&](const std::vector<int>& path, int m) {
            if (has_tail(path, m)) return;
            std::vector<int> seq(path.begin(), path.begin() + m);
            auto key = sym.canonical(seq);
            auto [it, inserted] = found.try_emplace({m, key});
            ++it->second.hits;
            if (!inserted) return;
            CycleClass& c = it->second.cls;
            c.length = m;
            c.period = primitive_period(seq);
            c.prime = c.period == m;
            c.stabilizer_order = sym.stabilizer(seq);
            if (c.period % c.stabilizer_order != 0)
                throw std::logic_error("stabilizer order does not divide the cycle length");
            c.nu = c.period / c.stabilizer_order;
            c.orbit_size = group_order > 0 ? group_order / c.stabilizer_order : 0;
            if (window) {
                const int stride = 1 + window->rank;
                for (int j = 0; j < m; ++j) {
                    c.vertices.push_back(key[j * stride]);
                    c.coords.emplace_back(key.begin() + j * stride + 1, key.begin() + (j + 1) * stride);
                }
            } else {
                c.vertices = key;
            }
        });
    }
    std::vector<CycleClass> out;
    out.reserve(found.size());
    for (auto& [key, acc] : found) {
        if (acc.hits != acc.cls.nu)
            throw std::logic_error("class representative count differs from nu(C)");
        out.push_back(std::move(acc.cls));
    }
    return out;
}

void require_radius(const Window& window, int length) {
    if (window.radius < length)
        fail(ErrorCode::RadiusTooSmall, "window radius " + std::to_string(window.radius) +
                                            " cannot hold paths of length " + std::to_string(length));
}

} // namespace

std::vector<PathCounts> classify_paths_upto(const SimpleGraph& g, int basepoint, int max_len) {
    if (max_len < 1) fail(ErrorCode::InvalidArgument, "path length must be >= 1");
    if (basepoint < 0 || basepoint >= g.vertex_count())
        fail(ErrorCode::InvalidArgument, "basepoint out of range");
    std::vector<PathCounts> counts(max_len + 1);
    walk_closed(g, basepoint, max_len, [&](const std::vector<int>& path, int m) {
        ++counts[m].proper;
        if (has_tail(path, m))
            ++counts[m].tailed;
        else
            ++counts[m].reduced;
    });
    return counts;
}

PathCounts classify_paths(const SimpleGraph& g, int basepoint, int length) {
    return classify_paths_upto(g, basepoint, length)[length];
}

std::int64_t n_m_oracle(const Window& window, int length) {
    require_radius(window, length);
    std::int64_t total = 0;
    for (int x : window.central) total += classify_paths(window.graph, x, length).reduced;
    return total;
}

std::int64_t n_m_oracle(const Instance& inst, int length) {
    if (inst.is_periodic()) return n_m_oracle(unroll(inst.periodic_graph(), length), length);
    std::int64_t total = 0;
    for (int x : inst.trace_domain()) total += classify_paths(inst.graph(), x, length).reduced;
    return total;
}

OracleCounts oracle_counts(const Instance& inst, int max_len) {
    OracleCounts out;
    out.n.assign(max_len + 1, 0);
    out.t.assign(max_len + 1, 0);
    if (max_len < 1) return out;
    Window window;
    const SimpleGraph* g = &inst.graph();
    std::vector<int> bases(inst.trace_domain().begin(), inst.trace_domain().end());
    if (inst.is_periodic()) {
        window = unroll(inst.periodic_graph(), max_len);
        g = &window.graph;
        bases = window.central;
    }
    for (int x : bases) {
        const auto counts = classify_paths_upto(*g, x, max_len);
        for (int m = 1; m <= max_len; ++m) {
            out.n[m] += counts[m].reduced;
            out.t[m] += counts[m].tailed;
        }
    }
    return out;
}

std::vector<CycleClass> gamma_classes(const Window& window, int max_len) {
    require_radius(window, max_len);
    return collect_classes(window.graph, window.central, max_len, TranslationSymmetry{window}, 0, &window);
}

std::vector<CycleClass> gamma_classes(const Instance& inst, int max_len) {
    if (max_len < 1) return {};
    if (inst.is_periodic()) return gamma_classes(unroll(inst.periodic_graph(), max_len), max_len);
    return collect_classes(inst.graph(), inst.trace_domain(), max_len, FiniteSymmetry{inst.action().elements()},
                           inst.action().order(), nullptr);
}

std::vector<std::int64_t> prime_counts(const std::vector<CycleClass>& classes, int max_len) {
    std::vector<std::int64_t> pi(max_len + 1, 0);
    for (const auto& c : classes)
        if (c.prime && c.length <= max_len) ++pi[c.length];
    return pi;
}

std::complex<double> euler_product_truncated(const std::vector<CycleClass>& classes, std::complex<double> u,
                                             int max_len, int max_degree) {
    if (max_degree >= 2 && std::abs(u) * (max_degree - 1) >= 1)
        fail(ErrorCode::DomainError, "|u| must be below 1/(d-1) = " + std::to_string(1.0 / (max_degree - 1)));
    // Principal log is safe: Re(1 - u^l) > 0 whenever |u| < 1.
    std::complex<double> log_sum = 0;
    for (const auto& c : classes) {
        if (!c.prime || c.length > max_len) continue;
        log_sum -= std::log(1.0 - std::pow(u, c.length)) / static_cast<double>(c.stabilizer_order);
    }
    return std::exp(log_sum);
}

} // namespace izeta
