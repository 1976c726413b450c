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

#include <functional>
#include <random>
#include <sstream>

#include "izeta/graph_io.hpp"
#include "izeta/operators.hpp"
#include "izeta/reports.hpp"

using namespace izeta;
using nlohmann::json;

namespace {

Instance load(const char* name) {
    return read_graph_file(std::string(IZETA_TEST_DATA) + "/" + name + ".graph").instance();
}

std::vector<json> records(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Parse;
}

} // namespace

TEST_CASE("complex numbers survive formatting") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-10, 10);
    for (int k = 0; k < 500; ++k) {
        const Complex z(d(rng) * std::pow(10.0, k % 7 - 3), d(rng));
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(parse_complex("0.3") == Complex(0.3, 0));
    CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
    CHECK(parse_complex("0.3-0.2i") == Complex(0.3, -0.2));
    CHECK(parse_complex("0.2i") == Complex(0, 0.2));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("1e-2+3e-1i") == Complex(0.01, 0.3));
    CHECK(parse_complex("-2") == Complex(-2, 0));
    for (const char* bad : {"", "abc", "0.3+", "1+2", "i2", "0.3+0.2j", "0.3i+0.2"})
        CHECK(code_of([&] { parse_complex(bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("jsonl") == Format::Jsonl);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(code_of([] { parse_format("xml"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("trace table in three formats") {
    Instance k4 = load("k4");
    auto recs = records(report_traces(k4, 8, Format::Jsonl));
    REQUIRE(recs.size() == 10);
    CHECK(recs[0]["record"] == "header");
    CHECK(recs[0]["graph"] == "K4");
    TraceLedger ledger = trace_ledger(k4, 8);
    for (int m = 0; m <= 8; ++m) {
        const json& r = recs[m + 1];
        CHECK(r["record"] == "trace");
        CHECK(r["m"] == m);
        CHECK(r["n"].get<long>() == ledger.n[m].get_si());
        CHECK(r["tr_a"].get<long>() == ledger.tr_a[m].get_si());
    }

    const std::string csv = report_traces(k4, 4, Format::Csv);
    CHECK(csv.find("m,tr_a,t,n,tr_b\n") != std::string::npos);
    CHECK(csv.find("\n3,24,0,24,24\n") != std::string::npos);

    const std::string text = report_traces(k4, 4, Format::Text);
    CHECK(text.rfind("# traces", 0) == 0);
}

TEST_CASE("csv is reserved for traces") {
    Instance k4 = load("k4");
    CHECK(code_of([&] { report_cycles(k4, 4, Format::Csv); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cycle report") {
    auto recs = records(report_cycles(load("c6_z3"), 6, Format::Jsonl));
    int classes = 0;
    for (const auto& r : recs)
        if (r["record"] == "class") {
            ++classes;
            CHECK(r["stabilizer"] == 3);
            CHECK(r["nu"] == 2);
            CHECK(r["prime"] == true);
        }
    CHECK(classes == 2);
}

TEST_CASE("zeta series report is exact") {
    auto recs = records(report_zeta_series(load("k4"), 12, false, Format::Jsonl));
    const std::vector<int> inverse{1, 0, 0, -8, -6, 0, 16, 24, -3, -16, -24, 0, 16};
    int seen = 0;
    for (const auto& r : recs)
        if (r["record"] == "coefficient") {
            const int m = r["m"];
            // exact values are written as integers or "p/q" strings
            if (r["inverse_zeta"].is_number_integer()) CHECK(r["inverse_zeta"] == inverse[m]);
            else CHECK(r["inverse_zeta"].get<std::string>() == std::to_string(inverse[m]));
            ++seen;
        }
    CHECK(seen == 13);
}

TEST_CASE("zeta values by every method agree") {
    ZetaValueRequest req;
    req.points = {Complex(0.1, 0.05), Complex(-0.08)};
    auto recs = records(report_zeta_values(load("z2"), req, Format::Jsonl));
    int values = 0;
    for (const auto& r : recs)
        if (r["record"] == "value") {
            ++values;
            CHECK(r["delta"].get<double>() < 1e-6);
            if (r["method"] != "euler") CHECK(r["delta"].get<double>() < 1e-12);
        }
    CHECK(values == 8);

    req.points = {Complex(0.4)};
    req.methods = kMethodTraces;
    CHECK(code_of([&] { report_zeta_values(load("z2"), req, Format::Text); }) == ErrorCode::DomainError);
}

TEST_CASE("determinant formula report") {
    DetFormulaRequest req;
    req.series_order = 12;
    auto recs = records(report_det_formula(load("c6_z3"), req, Format::Jsonl));
    REQUIRE_FALSE(recs.empty());
    CHECK(recs[0]["agree"] == true);

    DetFormulaRequest values;
    values.points = {Complex(0.1, 0.1)};
    values.use_bloch = true;
    auto vr = records(report_det_formula(load("z2"), values, Format::Jsonl));
    CHECK(vr.size() >= 3);
}

TEST_CASE("functional equation report") {
    FunctionalRequest req;
    req.points = 5;
    req.seed = 4;
    auto recs = records(report_functional_eq(load("honeycomb"), req, Format::Jsonl));
    REQUIRE(recs.size() == 6);
    CHECK(recs[0]["lambda_sign"] == 1);
    CHECK(recs[0]["max_residual"].get<double>() < 1e-8);
    CHECK(code_of([&] { report_functional_eq(load("paw"), req, Format::Text); }) == ErrorCode::NotRegular);
}

TEST_CASE("verify passes on the bundled graphs") {
    VerifyConfig cfg{10, 16, 4, 42};
    for (const char* name : {"k4", "c6_z3", "paw", "z", "z2"}) {
        CAPTURE(name);
        VerifyOutcome v = run_verify(load(name), cfg, Format::Jsonl);
        CHECK(v.passed);
        CHECK(v.failures == 0);
        auto recs = records(v.report);
        CHECK(recs[0]["passed"] == true);
        for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i]["passed"] == true);
    }
    CHECK(code_of([&] { run_verify(load("k4"), VerifyConfig{}, Format::Text); }) == ErrorCode::InvalidArgument);
}
