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

#include "izeta/graph_io.hpp"
#include "izeta/operators.hpp"
#include "oracles.hpp"

using namespace izeta;

namespace {

Instance load(const char* name) {
    return read_graph_file(std::string(IZETA_TEST_DATA) + "/" + name + ".graph").instance();
}

std::vector<int> all_vertices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

TEST_CASE("A_m counts non-backtracking walks on finite graphs") {
    for (int n = 4; n <= 5; ++n)
        for (const auto& edges : oracle::connected_min_degree_two(n)) {
            Instance inst = Instance::finite(SimpleGraph::from_edges(n, edges));
            auto adj = oracle::adjacency_lists(n, edges);
            auto seq = a_m_sequence(inst, 7);
            for (int m = 0; m <= 7; ++m)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        CHECK(seq[m].coef(x, y, {}) == oracle::proper_walks(adj, x, y, m));
        }
}

TEST_CASE("A_m counts non-backtracking walks on the square lattice") {
    Instance z2 = load("z2");
    auto seq = a_m_sequence(z2, 6);
    auto w = oracle::lattice_window(2, 1, {{0, 0, {1, 0}}, {0, 0, {0, 1}}}, 7);
    const int side = 15;
    auto id = [&](int x, int y) { return (x + 7) * side + (y + 7); };
    for (int m = 0; m <= 6; ++m)
        for (int x = -m; x <= m; ++x)
            for (int y = -m; y <= m; ++y)
                CHECK(seq[m].coef(0, 0, {x, y}) == oracle::proper_walks(w.adj, id(0, 0), id(x, y), m));
}

TEST_CASE("trace ledger reproduces brute-force reduced counts") {
    for (const char* name : {"k4", "petersen", "c5", "c6_z3", "paw"}) {
        CAPTURE(name);
        Instance inst = load(name);
        const int n = inst.graph().vertex_count();
        auto adj = oracle::adjacency_lists(n, inst.graph().edges());
        TraceLedger ledger = trace_ledger(inst, 10);
        auto from_traces = n_m_from_traces(inst, 10);
        for (int m = 1; m <= 10; ++m) {
            CAPTURE(m);
            // counts over all vertices divided by the group order give the domain count
            const auto all = oracle::closed_counts(adj, all_vertices(n), m).reduced;
            CHECK(ledger.n[m] * inst.group_order() == all);
            CHECK(from_traces[m] == ledger.n[m]);
            CHECK(ledger.n[m] == ledger.tr_a[m] - ledger.t[m]);
        }
    }
}

TEST_CASE("tail recursion equals its closed form") {
    for (const char* name : {"k4", "paw", "z2", "honeycomb", "c6_z3"}) {
        Instance inst = load(name);
        auto seq = a_m_sequence(inst, 12);
        CHECK(t_m_sequence(inst, seq, 12) == t_m_closed_form(inst, seq, 12));
    }
}

TEST_CASE("A_m generating-function identities") {
    for (const char* name : {"k4", "paw", "z", "z2", "honeycomb", "c6_z3"}) {
        CAPTURE(name);
        Instance inst = load(name);
        auto seq = a_m_sequence(inst, 10);
        CHECK(resolvent_identity_failure(inst, seq) == -1);
        CHECK(cumulative_identity_failure(inst, seq) == -1);
    }
    Instance k4 = load("k4");
    auto broken = a_m_sequence(k4, 6);
    broken[4] = broken[4] + k4.identity();
    CHECK(resolvent_identity_failure(k4, broken) == 4);
}

TEST_CASE("B traces differ from N_m by the even-order correction") {
    for (const char* name : {"k4", "paw", "z2"}) {
        Instance inst = load(name);
        TraceLedger l = trace_ledger(inst, 10);
        for (int m = 1; m <= 10; ++m) {
            const Integer correction = m % 2 == 0 ? l.tr_q_minus_i : Integer(0);
            CHECK(l.tr_b[m] == l.n[m] - correction);
        }
    }
}

TEST_CASE("operator norm and count bounds") {
    for (const char* name : {"k4", "petersen", "paw", "z", "z2", "honeycomb"}) {
        CAPTURE(name);
        Instance inst = load(name);
        auto seq = a_m_sequence(inst, 12);
        NormCertificate cert = norm_certificate(inst, seq, 24);
        CHECK(cert.holds);
        CHECK(cert.worst_ratio <= 1.0 + 1e-12);
        const int d = inst.max_degree();
        auto n = n_m_from_traces(inst, 12);
        Integer bound = d * inst.tau_identity();
        for (int m = 1; m <= 12; ++m) {
            CHECK(n[m] <= bound);
            bound *= d - 1;
        }
    }
}

TEST_CASE("known trace values") {
    Instance z2 = load("z2");
    auto n = n_m_from_traces(z2, 8);
    CHECK(n[4] == 8);
    CHECK(n[6] == 24);
    CHECK(n[8] == 216);
    for (int m = 1; m <= 8; m += 2) CHECK(n[m] == 0);

    Instance z = load("z");
    auto nz = n_m_from_traces(z, 10);
    for (int m = 1; m <= 10; ++m) CHECK(nz[m] == 0);
}
