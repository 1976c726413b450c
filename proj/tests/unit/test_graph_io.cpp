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
#include <random>
#include <set>
#include <string>

#include "izeta/graph_io.hpp"

using namespace izeta;

namespace {

struct Failure {
    ErrorCode code;
    std::string message;
};

Failure parse_failure(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        return {e.code(), e.what()};
    }
    FAIL("text parsed but should not have: " << text);
    return {};
}

GraphDocument random_finite(std::mt19937_64& rng) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) edges.emplace_back(i, j);
    if (edges.empty()) edges.emplace_back(0, 1);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
        if (rng() % 2) std::swap(e.first, e.second);
    GraphDocument doc;
    doc.name = "g" + std::to_string(rng() % 1000);
    doc.graph = SimpleGraph::from_edges(n, edges);
    return doc;
}

GraphDocument random_periodic(std::mt19937_64& rng) {
    const int rank = std::uniform_int_distribution<int>(1, 3)(rng);
    const int cells = std::uniform_int_distribution<int>(1, 3)(rng);
    std::set<CellEdge> seen;
    std::vector<CellEdge> edges;
    for (int k = 0; k < 6; ++k) {
        CellEdge e{static_cast<int>(rng() % cells), static_cast<int>(rng() % cells), Offset(rank)};
        for (int& x : e.offset) x = std::uniform_int_distribution<int>(-2, 2)(rng);
        if (e.i == e.j && is_zero(e.offset)) continue;
        CellEdge canon = e;
        if (canon.i > canon.j || (canon.i == canon.j && !lex_positive(canon.offset)))
            canon = {e.j, e.i, -e.offset};
        if (!seen.insert(canon).second) continue;
        edges.push_back(e);
    }
    if (edges.empty()) edges.push_back({0, 0, Offset(rank, 1)});
    GraphDocument doc;
    doc.periodic = true;
    doc.lattice = PeriodicGraph::create(rank, cells, edges);
    return doc;
}

} // namespace

TEST_CASE("bundled graph files load") {
    for (const char* name : {"k4", "petersen", "c5", "c6_z3", "paw", "z", "z2", "honeycomb"}) {
        CAPTURE(name);
        GraphDocument doc = read_graph_file(std::string(IZETA_TEST_DATA) + "/" + name + ".graph");
        CHECK_FALSE(doc.name.empty());
        CHECK_NOTHROW(doc.instance());
    }
    GraphDocument c6 = read_graph_file(std::string(IZETA_TEST_DATA) + "/c6_z3.graph");
    CHECK(c6.generators.size() == 1);
    CHECK(c6.instance().group_order() == 3);
}

TEST_CASE("comments, blank lines and spacing are ignored") {
    GraphDocument doc = parse_graph(
        "# leading comment\n\n"
        "type:   finite   # trailing\n"
        "vertices: 3\n"
        "edges:\n"
        "\t0 1\n"
        "   1    2  \n"
        "\n"
        "2 0\n");
    CHECK(doc.graph.edge_count() == 3);
    CHECK(doc.name.empty());
}

TEST_CASE("parse errors carry line numbers") {
    auto f = parse_failure("type: finite\nvertices: 3\nedges:\n  0 1\n  1 q\n");
    CHECK(f.code == ErrorCode::Parse);
    CHECK(f.message.find("line 5") != std::string::npos);

    f = parse_failure("type: finite\nvertices: 3\ncolour: red\nedges:\n  0 1\n");
    CHECK(f.code == ErrorCode::Parse);
    CHECK(f.message.find("line 3") != std::string::npos);

    f = parse_failure("type: finite\nvertices: 3\nvertices: 4\nedges:\n  0 1\n");
    CHECK(f.message.find("line 3") != std::string::npos);

    f = parse_failure("type: finite\nvertices: 3\nedges:\n  0 3\n");
    CHECK(f.code == ErrorCode::Parse);
    CHECK(f.message.find("line 4") != std::string::npos);

    f = parse_failure("type: finite\nvertices: 3\nedges:\n  0 1 2\n");
    CHECK(f.message.find("line 4") != std::string::npos);

    f = parse_failure("0 1\ntype: finite\n");
    CHECK(f.message.find("line 1") != std::string::npos);

    CHECK(parse_failure("type: mixed\nedges:\n 0 1\n").code == ErrorCode::Parse);
    CHECK(parse_failure("vertices: 2\nedges:\n 0 1\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: finite\nvertices: 2\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: finite\nvertices: 2\nedges: 0 1\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: finite\nvertices: 0\nedges:\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: finite\nvertices: 2\nrank: 1\nedges:\n 0 1\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: periodic\nrank: 1\ncell_size: 1\nvertices: 1\nedges:\n 0 0 1\n").code ==
          ErrorCode::Parse);
    CHECK(parse_failure("type: periodic\nrank: 1\ncell_size: 1\nedges:\n 0 0 1 1\n").code == ErrorCode::Parse);
    CHECK(parse_failure("type: periodic\ncell_size: 1\nedges:\n 0 0 1\n").code == ErrorCode::Parse);
}

TEST_CASE("edge-level errors keep their own codes") {
    auto f = parse_failure("type: finite\nvertices: 3\nedges:\n  0 1\n  2 2\n");
    CHECK(f.code == ErrorCode::SelfLoop);
    CHECK(f.message.find("line 5") != std::string::npos);

    f = parse_failure("type: finite\nvertices: 3\nedges:\n  0 1\n  1 0\n");
    CHECK(f.code == ErrorCode::DuplicateEdge);
    CHECK(f.message.find("line 5") != std::string::npos);

    f = parse_failure("type: periodic\nrank: 1\ncell_size: 1\nedges:\n  0 0 1\n  0 0 -1\n");
    CHECK(f.code == ErrorCode::DuplicateEdge);
    CHECK(parse_failure("type: periodic\nrank: 1\ncell_size: 1\nedges:\n  0 0 0\n").code == ErrorCode::SelfLoop);

    // not an automorphism of the path 0-1-2
    CHECK(parse_failure("type: finite\nvertices: 3\nedges:\n 0 1\n 1 2\naction:\n 1 0 2\n").code ==
          ErrorCode::InvalidAction);
    CHECK(parse_failure("type: finite\nvertices: 3\nedges:\n 0 1\n 1 2\naction:\n 0 0 2\n").code ==
          ErrorCode::InvalidAction);
}

TEST_CASE("a non-free action parses but the instance is rejected") {
    GraphDocument doc = parse_graph("type: finite\nvertices: 3\nedges:\n 0 1\n 1 2\naction:\n 2 1 0\n");
    try {
        doc.instance();
        FAIL("expected NotFree");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFree);
    }
}

TEST_CASE("serialization round-trips finite documents") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 200; ++trial) {
        GraphDocument doc = random_finite(rng);
        const std::string text = serialize_graph(doc);
        GraphDocument back = parse_graph(text);
        CHECK(back == doc);
        CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("serialization round-trips periodic documents") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        GraphDocument doc = random_periodic(rng);
        const std::string text = serialize_graph(doc);
        GraphDocument back = parse_graph(text);
        CHECK(back == doc);
        CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("serialization keeps generators and names") {
    GraphDocument doc = read_graph_file(std::string(IZETA_TEST_DATA) + "/c6_z3.graph");
    GraphDocument back = parse_graph(serialize_graph(doc));
    CHECK(back == doc);
    CHECK(back.name == "C6/Z3");
}

TEST_CASE("missing file") {
    try {
        read_graph_file(std::string(IZETA_TEST_DATA) + "/does-not-exist.graph");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
    }
}
