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

#include <doctest.h>

#include <algorithm>

#include "izeta/graph.hpp"
#include "izeta/instance.hpp"
#include "oracles.hpp"

using namespace izeta;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an izeta::Error");
    return ErrorCode::InvalidArgument;
}

SimpleGraph hexagon() {
    auto e = oracle::cycle_edges(6);
    return SimpleGraph::from_edges(6, e);
}

} // namespace

TEST_CASE("simple graph construction") {
    const auto k4 = oracle::complete_edges(4);
    SimpleGraph g = SimpleGraph::from_edges(4, k4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 3);
    CHECK(g.euler_characteristic() == -2);
    CHECK(g.has_edge(2, 1));

    std::vector<std::pair<int, int>> reversed{{1, 0}, {2, 1}, {0, 2}};
    SimpleGraph t = SimpleGraph::from_edges(3, reversed);
    CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("simple graph rejects malformed input") {
    std::vector<std::pair<int, int>> loop{{0, 0}};
    CHECK(code_of([&] { SimpleGraph::from_edges(2, loop); }) == ErrorCode::SelfLoop);
    std::vector<std::pair<int, int>> twice{{0, 1}, {1, 0}};
    CHECK(code_of([&] { SimpleGraph::from_edges(2, twice); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([&] { SimpleGraph::from_edges(0, {}); }) == ErrorCode::EmptyGraph);

    std::vector<int> asym{0, 1, 0, 0};
    CHECK(code_of([&] { SimpleGraph::from_adjacency(2, asym); }) == ErrorCode::AsymmetricEdge);
    std::vector<int> diag{1, 0, 0, 0};
    CHECK(code_of([&] { SimpleGraph::from_adjacency(2, diag); }) == ErrorCode::SelfLoop);
    std::vector<int> sym{0, 1, 1, 0};
    CHECK(SimpleGraph::from_adjacency(2, sym).edge_count() == 1);
}

TEST_CASE("periodic graph canonical orientation") {
    PeriodicGraph a = PeriodicGraph::create(1, 1, {{0, 0, {1}}});
    PeriodicGraph b = PeriodicGraph::create(1, 1, {{0, 0, {-1}}});
    CHECK(a == b);
    CHECK(a.cell_degree(0) == 2);
    CHECK(a.max_step() == 1);

    CHECK(code_of([] { PeriodicGraph::create(1, 1, {{0, 0, {0}}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { PeriodicGraph::create(1, 1, {{0, 0, {1}}, {0, 0, {-1}}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { PeriodicGraph::create(2, 2, {{0, 1, {0, 0}}, {1, 0, {0, 0}}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { PeriodicGraph::create(2, 1, {{0, 0, {1}}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("group closure and freeness") {
    SimpleGraph c6 = hexagon();
    GroupAction z3 = GroupAction::permutations(c6, {{2, 3, 4, 5, 0, 1}});
    CHECK(z3.order() == 3);
    CHECK(z3.elements().front() == Permutation{0, 1, 2, 3, 4, 5});

    GroupAction z6 = GroupAction::permutations(c6, {{1, 2, 3, 4, 5, 0}});
    CHECK(z6.order() == 6);

    CHECK(code_of([&] { GroupAction::permutations(c6, {{0, 0, 1, 2, 3, 4}}); }) == ErrorCode::InvalidAction);
    CHECK(code_of([&] { GroupAction::permutations(c6, {{1, 0, 2, 3, 4, 5}}); }) == ErrorCode::InvalidAction);

    // a reflection through two opposite vertices fixes them
    GroupAction mirror = GroupAction::permutations(c6, {{0, 5, 4, 3, 2, 1}});
    CHECK(code_of([&] { quotient(c6, mirror); }) == ErrorCode::NotFree);
    // swapping the ends of a lone edge fixes no vertex but inverts the edge
    std::vector<std::pair<int, int>> edge{{0, 1}};
    SimpleGraph k2 = SimpleGraph::from_edges(2, edge);
    GroupAction flip = GroupAction::permutations(k2, {{1, 0}});
    CHECK(code_of([&] { quotient(k2, flip); }) == ErrorCode::NotFree);
}

TEST_CASE("quotient data matches orbit counting") {
    SimpleGraph c6 = hexagon();
    GroupAction z3 = GroupAction::permutations(c6, {{2, 3, 4, 5, 0, 1}});
    QuotientData q = quotient(c6, z3);
    CHECK(q.vb == 2);
    CHECK(q.eb == 2);
    CHECK(q.chi == 0);
    CHECK(q.chi2 == 0);
    CHECK(q.fundamental_domain.size() == 2);

    SimpleGraph k4 = SimpleGraph::from_edges(4, oracle::complete_edges(4));
    QuotientData t = quotient(k4, GroupAction::trivial(4));
    CHECK(t.vb == 4);
    CHECK(t.eb == 6);
    CHECK(t.chi == -2);
    CHECK(t.chi2 == -2);

    PeriodicGraph honey = PeriodicGraph::create(2, 2, {{0, 1, {0, 0}}, {0, 1, {-1, 0}}, {0, 1, {0, -1}}});
    QuotientData h = quotient(honey);
    CHECK(h.vb == 2);
    CHECK(h.eb == 3);
    CHECK(h.chi == -1);
    CHECK(h.chi2 == -1);

    CHECK(code_of([&] { quotient(c6, z3, {0, 2}); }) == ErrorCode::InvalidArgument);
    CHECK(quotient(c6, z3, {3, 0}).vb == 2);
}

TEST_CASE("chi equals minus half the trace of Q - I over the corpus") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& edges : oracle::connected_min_degree_two(n)) {
            SimpleGraph g = SimpleGraph::from_edges(n, edges);
            QuotientData q = quotient(g, GroupAction::trivial(n));
            int trace = 0;
            for (int v = 0; v < n; ++v) trace += g.degree(v) - 2;
            CHECK(q.chi2 * -2 == trace);
            CHECK(q.chi == n - static_cast<int>(edges.size()));
        }
}

TEST_CASE("validation report") {
    std::vector<std::pair<int, int>> paw{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    ValidationReport r = validate(SimpleGraph::from_edges(4, paw));
    CHECK_FALSE(r.regular);
    CHECK(r.min_degree == 1);
    CHECK_FALSE(r.warnings.empty());

    ValidationReport c = validate(hexagon());
    CHECK(c.regular);
    CHECK(c.q == 1);
}

TEST_CASE("window unrolling agrees with an independent box") {
    PeriodicGraph z2 = PeriodicGraph::create(2, 1, {{0, 0, {1, 0}}, {0, 0, {0, 1}}});
    Window w = unroll(z2, 3);
    auto box = oracle::lattice_window(2, 1, {{0, 0, {1, 0}}, {0, 0, {0, 1}}}, w.half_width);
    CHECK(w.graph.vertex_count() == static_cast<int>(box.adj.size()));
    int edges = 0;
    for (const auto& nb : box.adj) edges += static_cast<int>(nb.size());
    CHECK(w.graph.edge_count() * 2 == edges);
    REQUIRE(w.central.size() == 1);
    CHECK(w.graph.degree(w.central[0]) == 4);
    CHECK(w.index_of(0, {w.half_width + 1, 0}) == -1);
}

TEST_CASE("instance kernels") {
    Instance z = Instance::periodic(PeriodicGraph::create(1, 1, {{0, 0, {1}}}));
    CHECK(z.is_periodic());
    CHECK(z.rank() == 1);
    CHECK(z.block_size() == 1);
    CHECK(z.adjacency().coef(0, 0, {1}) == 1);
    CHECK(z.adjacency().coef(0, 0, {-1}) == 1);
    CHECK(z.adjacency().is_symmetric());
    CHECK(z.q_operator().coef(0, 0, {0}) == 1);
    CHECK(z.regular_q() == 1);
    CHECK(z.group_order() == 0);

    Instance c6 = Instance::finite(hexagon(), GroupAction::permutations(hexagon(), {{2, 3, 4, 5, 0, 1}}));
    CHECK(c6.group_order() == 3);
    CHECK(c6.tau_identity() == 2);
    CHECK(trace_gamma(c6, c6.identity()) == 2);

    std::vector<std::pair<int, int>> paw{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    Instance p = Instance::finite(SimpleGraph::from_edges(4, paw));
    CHECK_FALSE(p.regular_q().has_value());
    CHECK(code_of([&] { trace_gamma(p, z.adjacency()); }) == ErrorCode::ActionMismatch);
}

TEST_CASE("kernel algebra") {
    Instance z = Instance::periodic(PeriodicGraph::create(1, 1, {{0, 0, {1}}}));
    IntKernel a2 = z.adjacency() * z.adjacency();
    CHECK(a2.coef(0, 0, {0}) == 2);
    CHECK(a2.coef(0, 0, {2}) == 1);
    CHECK((a2 - a2).is_zero());
    CHECK(z.adjacency().scaled(3).coef(0, 0, {1}) == 3);

    Instance k4 = Instance::finite(SimpleGraph::from_edges(4, oracle::complete_edges(4)));
    CHECK(code_of([&] { (void)(k4.adjacency() * z.adjacency()); }) == ErrorCode::ActionMismatch);
}

TEST_CASE("growth constant") {
    CHECK(alpha_bound(4) == doctest::Approx(2.0 + std::sqrt(8.0)));
    CHECK(alpha_bound(2) == doctest::Approx(1.0 + std::sqrt(3.0)));
}
