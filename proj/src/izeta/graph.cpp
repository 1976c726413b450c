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

#include "izeta/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "izeta/error.hpp"

namespace izeta {

namespace {

std::string edge_str(int u, int v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::string offset_str(const Offset& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

bool is_permutation(const Permutation& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a o b)(x) = a(b(x))
    Permutation r(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

} // namespace

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n <= 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
    SimpleGraph g;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::InvalidArgument, "edge " + edge_str(u, v) + " references a missing vertex");
        if (u == v) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail(ErrorCode::DuplicateEdge, "edge " + edge_str(key.first, key.second) + " listed twice");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

SimpleGraph SimpleGraph::from_adjacency(int n, std::span<const int> adjacency) {
    if (n <= 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
    if (static_cast<int>(adjacency.size()) != n * n)
        fail(ErrorCode::InvalidArgument, "adjacency matrix must have n*n entries");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int a = adjacency[i * n + j];
            if (a != 0 && a != 1)
                fail(ErrorCode::DuplicateEdge, "adjacency entry " + std::to_string(a) + " at " +
                                                   edge_str(i, j) + " is not 0/1");
            if (a != adjacency[j * n + i])
                fail(ErrorCode::AsymmetricEdge, "A(" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") != A(" + std::to_string(j) + "," +
                                                    std::to_string(i) + ")");
            if (a && i == j) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(i));
            if (a && i < j) edges.emplace_back(i, j);
        }
    }
    return from_edges(n, edges);
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int SimpleGraph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

PeriodicGraph PeriodicGraph::create(int rank, int cell_size, std::vector<CellEdge> edges) {
    if (rank < 0) fail(ErrorCode::InvalidArgument, "rank must be nonnegative");
    if (cell_size <= 0) fail(ErrorCode::EmptyGraph, "fundamental cell is empty");
    PeriodicGraph pg;
    pg.rank_ = rank;
    pg.arcs_.assign(cell_size, {});
    std::set<CellEdge> seen;
    for (auto e : edges) {
        if (static_cast<int>(e.offset.size()) != rank)
            fail(ErrorCode::InvalidArgument, "edge offset " + offset_str(e.offset) + " has wrong rank");
        if (e.i < 0 || e.j < 0 || e.i >= cell_size || e.j >= cell_size)
            fail(ErrorCode::InvalidArgument, "edge references a missing cell vertex");
        if (e.i == e.j && is_zero(e.offset))
            fail(ErrorCode::SelfLoop, "self-loop at cell vertex " + std::to_string(e.i));
        if (e.i > e.j || (e.i == e.j && !lex_positive(e.offset))) {
            std::swap(e.i, e.j);
            e.offset = -e.offset;
        }
        if (!seen.insert(e).second)
            fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                               "," + offset_str(e.offset) + ") listed twice");
    }
    pg.edges_.assign(seen.begin(), seen.end());
    for (const auto& e : pg.edges_) {
        pg.arcs_[e.i].push_back({e.j, e.offset});
        pg.arcs_[e.j].push_back({e.i, -e.offset});
    }
    return pg;
}

int PeriodicGraph::max_degree() const {
    int d = 0;
    for (const auto& a : arcs_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int PeriodicGraph::min_degree() const {
    int d = static_cast<int>(arcs_[0].size());
    for (const auto& a : arcs_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

int PeriodicGraph::max_step() const {
    int s = rank_ > 0 ? 1 : 0;
    for (const auto& e : edges_) s = std::max(s, linf_norm(e.offset));
    return s;
}

GroupAction GroupAction::trivial(int vertex_count) {
    GroupAction a;
    a.kind_ = Kind::Trivial;
    Permutation id(vertex_count);
    for (int i = 0; i < vertex_count; ++i) id[i] = i;
    a.elements_.push_back(std::move(id));
    return a;
}

GroupAction GroupAction::permutations(const SimpleGraph& g, std::vector<Permutation> generators) {
    const int n = g.vertex_count();
    for (const auto& p : generators) {
        if (!is_permutation(p, n))
            fail(ErrorCode::InvalidAction, "generator is not a permutation of " + std::to_string(n) +
                                               " vertices");
        for (auto [u, v] : g.edges())
            if (!g.has_edge(p[u], p[v]))
                fail(ErrorCode::InvalidAction, "generator does not preserve edge " + edge_str(u, v));
    }
    GroupAction a = trivial(n);
    a.kind_ = Kind::FinitePermutation;
    a.generators_ = generators;
    std::set<Permutation> seen(a.elements_.begin(), a.elements_.end());
    for (std::size_t k = 0; k < a.elements_.size(); ++k) {
        for (const auto& gen : generators) {
            Permutation next = compose(gen, a.elements_[k]);
            if (seen.insert(next).second) a.elements_.push_back(std::move(next));
        }
    }
    return a;
}

GroupAction GroupAction::translation(int rank) {
    GroupAction a;
    a.kind_ = Kind::Translation;
    a.rank_ = rank;
    return a;
}

namespace {

void check_free(const SimpleGraph& g, const GroupAction& action) {
    const auto& els = action.elements();
    for (std::size_t k = 1; k < els.size(); ++k) {
        const auto& p = els[k];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (p[v] == v)
                fail(ErrorCode::NotFree, "group element " + std::to_string(k) + " fixes vertex " +
                                             std::to_string(v));
        for (auto [u, v] : g.edges())
            if (p[u] == v && p[v] == u)
                fail(ErrorCode::NotFree, "group element " + std::to_string(k) + " inverts edge " +
                                             edge_str(u, v));
    }
}

QuotientData finish_quotient(const SimpleGraph& g, const GroupAction& action, std::vector<int> domain) {
    QuotientData qd;
    const int order = action.order();
    qd.vb = static_cast<int>(domain.size());
    // Free on vertices and edges: every edge orbit has exactly |G| members.
    qd.eb = g.edge_count() / order;
    qd.chi = qd.vb - qd.eb;
    Rational tr = 0;
    for (int x : domain) tr += g.degree(x) - 2;
    qd.chi2 = -tr / 2;
    qd.fundamental_domain = std::move(domain);
    return qd;
}

} // namespace

QuotientData quotient(const SimpleGraph& g, const GroupAction& action) {
    if (action.kind() == GroupAction::Kind::Translation)
        fail(ErrorCode::ActionMismatch, "translation action needs a periodic graph");
    check_free(g, action);
    std::vector<int> domain;
    std::vector<char> covered(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (covered[v]) continue;
        domain.push_back(v);
        for (const auto& p : action.elements()) covered[p[v]] = 1;
    }
    return finish_quotient(g, action, std::move(domain));
}

QuotientData quotient(const SimpleGraph& g, const GroupAction& action, std::vector<int> domain) {
    if (action.kind() == GroupAction::Kind::Translation)
        fail(ErrorCode::ActionMismatch, "translation action needs a periodic graph");
    check_free(g, action);
    std::vector<int> orbit_hits(g.vertex_count(), 0);
    for (int x : domain) {
        if (x < 0 || x >= g.vertex_count())
            fail(ErrorCode::InvalidArgument, "domain vertex out of range");
        for (const auto& p : action.elements()) ++orbit_hits[p[x]];
    }
    // Free action: each vertex is hit once per representative of its orbit.
    for (int v = 0; v < g.vertex_count(); ++v)
        if (orbit_hits[v] != 1)
            fail(ErrorCode::InvalidArgument, "domain is not a transversal of the vertex orbits");
    return finish_quotient(g, action, std::move(domain));
}

QuotientData quotient(const PeriodicGraph& pg) {
    QuotientData qd;
    for (int i = 0; i < pg.cell_size(); ++i) qd.fundamental_domain.push_back(i);
    qd.vb = pg.cell_size();
    qd.eb = static_cast<int>(pg.edges().size());
    qd.chi = qd.vb - qd.eb;
    Rational tr = 0;
    for (int i = 0; i < pg.cell_size(); ++i) tr += pg.cell_degree(i) - 2;
    qd.chi2 = -tr / 2;
    return qd;
}

namespace {

void degree_warnings(ValidationReport& r, const std::vector<int>& degrees) {
    int isolated = 0, leaves = 0;
    for (int d : degrees) {
        if (d == 0) ++isolated;
        if (d == 1) ++leaves;
    }
    if (isolated)
        r.warnings.push_back(std::to_string(isolated) +
                             " isolated vertices; zeta computations need minimum degree >= 1");
    if (leaves)
        r.warnings.push_back(std::to_string(leaves) + " vertices of degree 1 (Q - I has negative entries)");
}

} // namespace

ValidationReport validate(const SimpleGraph& g) {
    ValidationReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.max_degree = g.max_degree();
    r.min_degree = g.min_degree();
    r.regular = r.max_degree == r.min_degree;
    r.q = r.regular ? r.max_degree - 1 : 0;
    std::vector<int> deg;
    for (int v = 0; v < g.vertex_count(); ++v) deg.push_back(g.degree(v));
    degree_warnings(r, deg);
    return r;
}

ValidationReport validate(const PeriodicGraph& pg) {
    ValidationReport r;
    r.vertex_count = pg.cell_size();
    r.edge_count = static_cast<int>(pg.edges().size());
    r.max_degree = pg.max_degree();
    r.min_degree = pg.min_degree();
    r.regular = r.max_degree == r.min_degree;
    r.q = r.regular ? r.max_degree - 1 : 0;
    std::vector<int> deg;
    for (int i = 0; i < pg.cell_size(); ++i) deg.push_back(pg.cell_degree(i));
    degree_warnings(r, deg);
    return r;
}

int Window::index_of(int cell, const Offset& coord) const {
    const int side = 2 * half_width + 1;
    int idx = 0;
    for (int x : coord) {
        if (x < -half_width || x > half_width) return -1;
        idx = idx * side + (x + half_width);
    }
    return idx * cell_size + cell;
}

Window unroll(const PeriodicGraph& pg, int radius) {
    if (radius < 0) fail(ErrorCode::InvalidArgument, "radius must be nonnegative");
    Window w;
    w.radius = radius;
    w.rank = pg.rank();
    w.cell_size = pg.cell_size();
    w.half_width = radius * pg.max_step();
    const int side = 2 * w.half_width + 1;
    long long cells = 1;
    for (int k = 0; k < pg.rank(); ++k) cells *= side;
    if (cells * pg.cell_size() > 50'000'000)
        fail(ErrorCode::InvalidArgument, "window too large to unroll");
    const int n = static_cast<int>(cells) * pg.cell_size();
    w.cell_of.resize(n);
    w.coord_of.resize(n);
    for (int c = 0; c < cells; ++c) {
        Offset coord(pg.rank());
        int rem = c;
        for (int k = pg.rank() - 1; k >= 0; --k) {
            coord[k] = rem % side - w.half_width;
            rem /= side;
        }
        for (int i = 0; i < pg.cell_size(); ++i) {
            w.cell_of[c * pg.cell_size() + i] = i;
            w.coord_of[c * pg.cell_size() + i] = coord;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (const auto& e : pg.edges()) {
            if (w.cell_of[v] != e.i) continue;
            int t = w.index_of(e.j, w.coord_of[v] + e.offset);
            if (t >= 0) edges.emplace_back(v, t);
        }
    }
    w.graph = SimpleGraph::from_edges(n, edges);
    const Offset origin(pg.rank(), 0);
    for (int i = 0; i < pg.cell_size(); ++i) w.central.push_back(w.index_of(i, origin));
    return w;
}

} // namespace izeta
