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
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = true) {
    const std::string cmd = std::string(IZETA_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string graph(const char* name) { return std::string(IZETA_TEST_DATA) + "/" + name + ".graph"; }

std::vector<json> records(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

} // namespace

TEST_CASE("help lists the subcommands") {
    Run r = run("--help");
    CHECK(r.status == 0);
    for (const char* sub : {"cycles", "zeta", "det-formula", "functional-eq", "verify", "traces"})
        CHECK(r.out.find(sub) != std::string::npos);
}

TEST_CASE("cycles") {
    Run r = run("cycles --graph " + graph("c6_z3") + " --max-len 6 --format jsonl", false);
    REQUIRE(r.status == 0);
    int classes = 0;
    for (const auto& rec : records(r.out))
        if (rec["record"] == "class") {
            ++classes;
            CHECK(rec["stabilizer"] == 3);
            CHECK(rec["nu"] == 2);
        }
    CHECK(classes == 2);

    Run t = run("cycles --graph " + graph("k4") + " --max-len 4");
    CHECK(t.status == 0);
    CHECK(t.out.rfind("# cycles", 0) == 0);
}

TEST_CASE("exact series for K4") {
    Run r = run("det-formula --graph " + graph("k4") + " --series 12 --format jsonl", false);
    REQUIRE(r.status == 0);
    const std::vector<int> expected{1, 0, 0, -8, -6, 0, 16, 24, -3, -16, -24, 0, 16};
    auto recs = records(r.out);
    CHECK(recs[0]["agree"] == true);
    int seen = 0;
    for (const auto& rec : recs)
        if (rec["record"] == "coefficient") {
            const int m = rec["m"];
            CHECK(rec["from_determinant"] == expected[m]);
            CHECK(rec["from_traces"] == expected[m]);
            ++seen;
        }
    CHECK(seen == 13);
}

TEST_CASE("zeta values and the series domain") {
    Run ok = run("zeta --graph " + graph("z2") + " --at 0.1+0.05i --at -0.1 --method series --method bloch --format jsonl",
                 false);
    REQUIRE(ok.status == 0);
    int values = 0;
    for (const auto& rec : records(ok.out))
        if (rec["record"] == "value") {
            ++values;
            CHECK(rec["delta"].get<double>() < 1e-9);
        }
    CHECK(values == 4);

    Run far = run("zeta --graph " + graph("k4") + " --at 0.9 --method series");
    CHECK(far.status == 2);
    CHECK(far.out.find("DomainError") != std::string::npos);
    CHECK(far.out.find("1/alpha") != std::string::npos);

    Run series = run("zeta --graph " + graph("k4") + " --series 8 --format csv");
    CHECK(series.status != 0);
    CHECK(series.out.find("csv") != std::string::npos);
}

TEST_CASE("functional equations") {
    Run r = run("functional-eq --graph " + graph("z2") + " --points 3 --seed 9 --format jsonl", false);
    REQUIRE(r.status == 0);
    auto recs = records(r.out);
    CHECK(recs[0]["max_residual"].get<double>() < 1e-8);
    CHECK(recs[0]["seed"] == 9);

    Run irregular = run("functional-eq --graph " + graph("paw") + " --points 3 --seed 9");
    CHECK(irregular.status == 2);
    CHECK(irregular.out.find("NotRegular") != std::string::npos);
}

TEST_CASE("traces as csv") {
    Run r = run("traces --graph " + graph("z2") + " --order 8 --format csv", false);
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\n8,") != std::string::npos);
}

TEST_CASE("verify") {
    Run r = run("verify --graph " + graph("honeycomb") + " --order 10 --quad 16 --points 4 --seed 3 --format jsonl",
                false);
    CHECK(r.status == 0);
    auto recs = records(r.out);
    CHECK(recs[0]["passed"] == true);

    Run missing = run("verify --graph " + graph("k4") + " --order 10");
    CHECK(missing.status != 0);
}

TEST_CASE("bad input files") {
    Run corrupt = run("cycles --graph " + std::string(IZETA_TEST_DATA) + "/../tests/data/corrupt.graph --max-len 4");
    CHECK(corrupt.status == 2);
    CHECK(corrupt.out.find("Parse") != std::string::npos);
    CHECK(corrupt.out.find("line 6") != std::string::npos);

    const std::string path = std::string(IZETA_SCRATCH_DIR) + "/truncated.graph";
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("type: periodic\nrank: 2\ncell_size: 1\nedges:\n  0 0 1\n", f);
    std::fclose(f);
    Run truncated = run("traces --graph " + path + " --order 4");
    CHECK(truncated.status == 2);
    CHECK(truncated.out.find("line 5") != std::string::npos);

    Run missing = run("traces --graph /nonexistent/file.graph --order 4");
    CHECK(missing.status == 2);
}
