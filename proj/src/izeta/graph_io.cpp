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

#include "izeta/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace izeta {

namespace {

struct Line {
    int number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg, ErrorCode code = ErrorCode::Parse) {
    fail(code, "line " + std::to_string(line) + ": " + msg);
}

std::vector<int> integers(const Line& line) {
    std::vector<int> out;
    std::string_view s = line.text;
    while (true) {
        s = trim(s);
        if (s.empty()) break;
        auto end = s.find_first_of(" \t");
        std::string_view tok = s.substr(0, end);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            parse_fail(line.number, "expected an integer, got '" + std::string(tok) + "'");
        out.push_back(value);
        if (end == std::string_view::npos) break;
        s = s.substr(end);
    }
    return out;
}

int single_integer(const Line& line, std::string_view value, const char* field, int min) {
    const auto v = integers({line.number, value});
    if (v.size() != 1) parse_fail(line.number, std::string(field) + " takes one integer");
    if (v[0] < min) parse_fail(line.number, std::string(field) + " must be at least " + std::to_string(min));
    return v[0];
}

struct Field {
    int line = 0;
    std::string value;
    std::vector<Line> items;
};

const std::set<std::string, std::less<>> kKnown = {"type", "name", "vertices", "rank", "cell_size", "edges", "action"};
const std::set<std::string, std::less<>> kBlocks = {"edges", "action"};

} // namespace

GraphDocument parse_graph(std::string_view text) {
    std::map<std::string, Field, std::less<>> fields;
    Field* block = nullptr;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            if (!block) parse_fail(number, "entry outside an edges: or action: block");
            block->items.push_back({number, line});
            continue;
        }
        const std::string key(trim(line.substr(0, colon)));
        const std::string value(trim(line.substr(colon + 1)));
        if (!kKnown.count(key)) parse_fail(number, "unknown field '" + key + "'");
        if (fields.count(key)) parse_fail(number, "duplicate field '" + key + "'");
        Field& f = fields[key];
        f.line = number;
        f.value = value;
        if (kBlocks.count(key)) {
            if (!value.empty()) parse_fail(number, "'" + key + ":' starts a block; put entries on following lines");
            block = &f;
        } else {
            if (value.empty()) parse_fail(number, "field '" + key + "' needs a value");
            block = nullptr;
        }
    }

    auto it = fields.find("type");
    if (it == fields.end()) parse_fail(1, "missing field 'type'");
    const Field& type = it->second;
    if (type.value != "finite" && type.value != "periodic")
        parse_fail(type.line, "type must be 'finite' or 'periodic'");
    auto edges_it = fields.find("edges");
    if (edges_it == fields.end()) parse_fail(number, "missing field 'edges'");
    const Field& edges = edges_it->second;

    GraphDocument doc;
    doc.periodic = type.value == "periodic";
    if (auto n = fields.find("name"); n != fields.end()) doc.name = n->second.value;

    auto forbid = [&](const char* key, const char* why) {
        if (auto f = fields.find(key); f != fields.end()) parse_fail(f->second.line, std::string("field '") + key + "' " + why);
    };

    if (!doc.periodic) {
        forbid("rank", "only applies to periodic graphs");
        forbid("cell_size", "only applies to periodic graphs");
        auto v = fields.find("vertices");
        if (v == fields.end()) parse_fail(type.line, "finite graphs need 'vertices'");
        const int n = single_integer({v->second.line, {}}, v->second.value, "vertices", 1);
        std::vector<std::pair<int, int>> list;
        std::set<std::pair<int, int>> seen;
        for (const auto& item : edges.items) {
            const auto e = integers(item);
            if (e.size() != 2) parse_fail(item.number, "finite edge needs two vertex ids");
            for (int x : e)
                if (x < 0 || x >= n) parse_fail(item.number, "vertex " + std::to_string(x) + " out of range");
            if (e[0] == e[1]) parse_fail(item.number, "self-loop at vertex " + std::to_string(e[0]), ErrorCode::SelfLoop);
            const auto key = std::minmax(e[0], e[1]);
            if (!seen.insert(key).second)
                parse_fail(item.number, "repeated edge " + std::to_string(key.first) + " " + std::to_string(key.second),
                           ErrorCode::DuplicateEdge);
            list.emplace_back(e[0], e[1]);
        }
        doc.graph = SimpleGraph::from_edges(n, list);
        if (auto a = fields.find("action"); a != fields.end()) {
            for (const auto& item : a->second.items) {
                const auto p = integers(item);
                if (static_cast<int>(p.size()) != n)
                    parse_fail(item.number, "permutation needs " + std::to_string(n) + " entries");
                std::vector<bool> hit(n, false);
                for (int x : p) {
                    if (x < 0 || x >= n || hit[x]) parse_fail(item.number, "not a permutation", ErrorCode::InvalidAction);
                    hit[x] = true;
                }
                doc.generators.push_back(p);
            }
            try {
                (void)GroupAction::permutations(doc.graph, doc.generators);
            } catch (const Error& e) {
                parse_fail(a->second.line, e.what(), e.code());
            }
        }
    } else {
        forbid("vertices", "only applies to finite graphs");
        forbid("action", "does not apply: periodic graphs carry the translation action");
        auto r = fields.find("rank");
        auto c = fields.find("cell_size");
        if (r == fields.end()) parse_fail(type.line, "periodic graphs need 'rank'");
        if (c == fields.end()) parse_fail(type.line, "periodic graphs need 'cell_size'");
        const int rank = single_integer({r->second.line, {}}, r->second.value, "rank", 1);
        const int cells = single_integer({c->second.line, {}}, c->second.value, "cell_size", 1);
        std::vector<CellEdge> list;
        std::set<CellEdge> seen;
        for (const auto& item : edges.items) {
            const auto e = integers(item);
            if (static_cast<int>(e.size()) != 2 + rank)
                parse_fail(item.number, "periodic edge needs i j and " + std::to_string(rank) + " offset entries");
            for (int k = 0; k < 2; ++k)
                if (e[k] < 0 || e[k] >= cells) parse_fail(item.number, "cell vertex " + std::to_string(e[k]) + " out of range");
            CellEdge ce{e[0], e[1], Offset(e.begin() + 2, e.end())};
            if (ce.i == ce.j && is_zero(ce.offset))
                parse_fail(item.number, "self-loop at cell vertex " + std::to_string(ce.i), ErrorCode::SelfLoop);
            if (ce.i > ce.j || (ce.i == ce.j && !lex_positive(ce.offset))) ce = {ce.j, ce.i, -ce.offset};
            if (!seen.insert(ce).second) parse_fail(item.number, "repeated edge", ErrorCode::DuplicateEdge);
            list.push_back(ce);
        }
        doc.lattice = PeriodicGraph::create(rank, cells, std::move(list));
    }
    return doc;
}

GraphDocument read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const GraphDocument& doc) {
    std::ostringstream out;
    out << "type: " << (doc.periodic ? "periodic" : "finite") << "\n";
    if (!doc.name.empty()) out << "name: " << doc.name << "\n";
    if (!doc.periodic) {
        out << "vertices: " << doc.graph.vertex_count() << "\nedges:\n";
        for (const auto& [u, v] : doc.graph.edges()) out << "  " << u << " " << v << "\n";
        if (!doc.generators.empty()) {
            out << "action:\n";
            for (const auto& p : doc.generators) {
                out << " ";
                for (int x : p) out << " " << x;
                out << "\n";
            }
        }
    } else {
        out << "rank: " << doc.lattice.rank() << "\ncell_size: " << doc.lattice.cell_size() << "\nedges:\n";
        for (const auto& e : doc.lattice.edges()) {
            out << "  " << e.i << " " << e.j;
            for (int x : e.offset) out << " " << x;
            out << "\n";
        }
    }
    return out.str();
}

Instance GraphDocument::instance() const {
    Instance inst = periodic ? Instance::periodic(lattice)
                    : generators.empty() ? Instance::finite(graph)
                                         : Instance::finite(graph, GroupAction::permutations(graph, generators));
    inst.label = name;
    return inst;
}

} // namespace izeta
