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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "izeta/offset.hpp"

namespace izeta {

using Rational = mpq_class;
using Integer = mpz_class;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
/// the factories reject self-loops, repeated edges and empty vertex sets.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    /// Row-major 0/1 matrix. Raises AsymmetricEdge if A(i,j) != A(j,i).
    static SimpleGraph from_adjacency(int n, std::span<const int> adjacency);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges as (u, v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;
    int euler_characteristic() const { return vertex_count() - edge_count(); }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size();
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Edge between (i, 0) and (j, offset) of a Z^d-periodic graph. Stored with
/// i < j, or i == j and offset lexicographically positive.
struct CellEdge {
    int i = 0;
    int j = 0;
    Offset offset;

    friend auto operator<=>(const CellEdge&, const CellEdge&) = default;
};

/// One arc out of a cell vertex: target cell index plus lattice offset.
struct CellArc {
    int target = 0;
    Offset offset;
};

/// Z^d-periodic graph given by a fundamental cell and offset edges.
class PeriodicGraph {
public:
    PeriodicGraph() = default;

    /// Canonicalizes orientation; raises SelfLoop for (i, i, 0) and
    /// DuplicateEdge when two triples describe the same edge.
    static PeriodicGraph create(int rank, int cell_size, std::vector<CellEdge> edges);

    int rank() const { return rank_; }
    int cell_size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<CellEdge>& edges() const { return edges_; }
    const std::vector<CellArc>& arcs(int i) const { return arcs_[i]; }
    int cell_degree(int i) const { return static_cast<int>(arcs_[i].size()); }
    int max_degree() const;
    int min_degree() const;
    /// Largest sup-norm of an edge offset (at least 1 when rank > 0).
    int max_step() const;

    friend bool operator==(const PeriodicGraph& a, const PeriodicGraph& b) {
        return a.rank_ == b.rank_ && a.edges_ == b.edges_ && a.arcs_.size() == b.arcs_.size();
    }

private:
    int rank_ = 0;
    std::vector<CellEdge> edges_;
    std::vector<std::vector<CellArc>> arcs_;
};

using Permutation = std::vector<int>;

/// Group acting on the graph: trivial, a finite permutation group of a
/// SimpleGraph, or the Z^d translations of a PeriodicGraph.
class GroupAction {
public:
    enum class Kind { Trivial, FinitePermutation, Translation };

    static GroupAction trivial(int vertex_count);
    /// Closes the generators into a group. Raises InvalidAction when a
    /// generator is not a permutation or not a graph automorphism.
    /// Freeness is checked by quotient().
    static GroupAction permutations(const SimpleGraph& g, std::vector<Permutation> generators);
    static GroupAction translation(int rank);

    Kind kind() const { return kind_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    /// All group elements, identity first. Empty for Translation.
    const std::vector<Permutation>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int rank() const { return rank_; }

private:
    Kind kind_ = Kind::Trivial;
    int rank_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

struct QuotientData {
    std::vector<int> fundamental_domain;
    int vb = 0;
    int eb = 0;
    int chi = 0;
    /// -1/2 Tr_Gamma(Q - I), computed from the degrees over the domain.
    Rational chi2;
};

/// Lowest-index representative per orbit. Raises NotFree if a non-identity
/// element fixes a vertex or inverts an edge.
QuotientData quotient(const SimpleGraph& g, const GroupAction& action);
/// Same, with a caller-chosen transversal (one vertex per orbit).
QuotientData quotient(const SimpleGraph& g, const GroupAction& action, std::vector<int> domain);
QuotientData quotient(const PeriodicGraph& pg);

struct ValidationReport {
    int vertex_count = 0;
    int edge_count = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool regular = false;
    /// degree - 1 when regular.
    int q = 0;
    std::vector<std::string> warnings;
};

ValidationReport validate(const SimpleGraph& g);
ValidationReport validate(const PeriodicGraph& pg);

/// Finite window F x [-h, h]^d of a periodic graph with h = radius * max_step,
/// so every path of length <= radius from the central cell stays inside.
struct Window {
    SimpleGraph graph;
    int radius = 0;
    int half_width = 0;
    int rank = 0;
    int cell_size = 0;
    std::vector<int> cell_of;
    std::vector<Offset> coord_of;
    /// Window indices of the central copy of F, in cell order.
    std::vector<int> central;

    /// -1 when (cell, coord) lies outside the window.
    int index_of(int cell, const Offset& coord) const;
};

Window unroll(const PeriodicGraph& pg, int radius);

} // namespace izeta
