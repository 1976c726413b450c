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

#include <string>
#include <string_view>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/instance.hpp"

namespace izeta {

/// Parsed graph file: a finite graph with optional permutation generators,
/// or a periodic cell description.
struct GraphDocument {
    std::string name;
    bool periodic = false;
    SimpleGraph graph;
    PeriodicGraph lattice;
    std::vector<Permutation> generators;

    Instance instance() const;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Raises ParseError with a line number for malformed text, SelfLoop or
/// DuplicateEdge for bad edges, InvalidAction for bad generators.
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

/// Canonical text: fixed field order, sorted canonical edges.
std::string serialize_graph(const GraphDocument& doc);

} // namespace izeta
