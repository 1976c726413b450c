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

// Command-line front end. Talks to the library only through izeta.h.

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "izeta/izeta.h"

namespace {

struct Failure {
    izeta_status status;
};

void check(izeta_status s) {
    if (s != IZETA_OK) throw Failure{s};
}

struct Instance {
    izeta_instance* ptr = nullptr;
    explicit Instance(const std::string& path) { check(izeta_load_file(path.c_str(), &ptr)); }
    ~Instance() { izeta_free(ptr); }
    Instance(const Instance&) = delete;
    Instance& operator=(const Instance&) = delete;
};

void emit(char* text) {
    std::fputs(text, stdout);
    izeta_string_free(text);
}

izeta_format format_of(const std::string& name) {
    static const std::map<std::string, izeta_format> m{
        {"text", IZETA_FORMAT_TEXT}, {"jsonl", IZETA_FORMAT_JSONL}, {"csv", IZETA_FORMAT_CSV}};
    return m.at(name);
}

std::vector<izeta_complex> points_of(const std::vector<std::string>& texts) {
    std::vector<izeta_complex> out;
    for (const auto& t : texts) {
        izeta_complex z;
        check(izeta_parse_complex(t.c_str(), &z));
        out.push_back(z);
    }
    return out;
}

void add_format(CLI::App* cmd, std::string& format, bool csv = false) {
    std::vector<std::string> allowed{"text", "jsonl"};
    if (csv) allowed.push_back("csv");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ihara zeta functions of finite, quotient and periodic graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(izeta_version()));

    std::string graph, format = "text";
    izeta_options opts;
    izeta_options_default(&opts);

    auto* cycles = app.add_subcommand("cycles", "Reduced cycle classes and prime counts");
    int max_len = 0;
    cycles->add_option("--graph", graph, "Graph file")->required();
    cycles->add_option("--max-len", max_len, "Longest cycle length")->required()->check(CLI::PositiveNumber);
    add_format(cycles, format);

    auto* traces = app.add_subcommand("traces", "Operator trace table: Tr A_m, t_m, N_m, Tr B_m");
    int order = 0;
    traces->add_option("--graph", graph, "Graph file")->required();
    traces->add_option("--order", order, "Largest m")->required()->check(CLI::PositiveNumber);
    add_format(traces, format, true);

    auto* zeta = app.add_subcommand("zeta", "Zeta series coefficients or values");
    int series = 0;
    bool decimal = false;
    std::vector<std::string> at;
    std::vector<std::string> methods{"all"};
    zeta->add_option("--graph", graph, "Graph file")->required();
    auto* zseries = zeta->add_option("--series", series, "Exact coefficients through this order")
                        ->check(CLI::PositiveNumber);
    zeta->add_flag("--decimal", decimal, "Decimal rather than exact coefficients");
    auto* zat = zeta->add_option("--at", at, "Evaluation point, e.g. 0.1 or 0.3+0.2i (repeatable)");
    zseries->excludes(zat);
    zeta->add_option("--method", methods, "euler, traces, series, bloch or all (repeatable)")
        ->check(CLI::IsMember({"euler", "traces", "series", "bloch", "all"}))
        ->capture_default_str();
    zeta->add_option("--max-len", opts.euler_len, "Longest prime cycle in the Euler product")->capture_default_str();
    zeta->add_option("--order", opts.trace_order, "Last N_m in the trace series")->capture_default_str();
    zeta->add_option("--quad", opts.quadrature_start, "Initial quadrature points per dimension")
        ->capture_default_str();
    add_format(zeta, format);

    auto* det = app.add_subcommand("det-formula", "Determinant formula in value or exact series mode");
    std::string det_method = "series";
    det->add_option("--graph", graph, "Graph file")->required();
    auto* dat = det->add_option("--at", at, "Evaluation point (repeatable)");
    auto* dseries = det->add_option("--series", series, "Exact series through this order")->check(CLI::PositiveNumber);
    dseries->excludes(dat);
    det->add_option("--method", det_method, "series, bloch or both")
        ->check(CLI::IsMember({"series", "bloch", "both"}))
        ->capture_default_str();
    det->add_option("--quad", opts.quadrature_start, "Initial quadrature points per dimension")
        ->capture_default_str();
    add_format(det, format);

    auto* fe = app.add_subcommand("functional-eq", "Residuals of the functional equations on sampled points");
    int points = 0;
    std::uint64_t seed = 0;
    fe->add_option("--graph", graph, "Graph file")->required();
    fe->add_option("--points", points, "Number of sample points")->required()->check(CLI::PositiveNumber);
    fe->add_option("--seed", seed, "Sampling seed")->required();
    fe->add_option("--quad", opts.quadrature_start, "Initial quadrature points per dimension")
        ->capture_default_str();
    add_format(fe, format);

    auto* verify = app.add_subcommand("verify", "Run the full invariant suite; exit 1 on any failure");
    int quad = 0;
    verify->add_option("--graph", graph, "Graph file")->required();
    verify->add_option("--order", order, "Truncation order")->required()->check(CLI::PositiveNumber);
    verify->add_option("--quad", quad, "Initial quadrature points per dimension")->required()->check(CLI::PositiveNumber);
    verify->add_option("--points", points, "Sample points per check")->required()->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Sampling seed")->required();
    add_format(verify, format);

    CLI11_PARSE(app, argc, argv);

    try {
        const Instance inst(graph);
        const izeta_format fmt = format_of(format);
        char* out = nullptr;
        if (cycles->parsed()) {
            check(izeta_report_cycles(inst.ptr, max_len, fmt, &out));
        } else if (traces->parsed()) {
            check(izeta_report_traces(inst.ptr, order, fmt, &out));
        } else if (zeta->parsed()) {
            if (series > 0) {
                check(izeta_report_zeta_series(inst.ptr, series, decimal ? 1 : 0, fmt, &out));
            } else {
                if (at.empty()) throw CLI::RequiredError("zeta needs --series or --at");
                unsigned mask = 0;
                for (const auto& m : methods)
                    mask |= m == "euler"    ? IZETA_METHOD_EULER
                            : m == "traces" ? IZETA_METHOD_TRACES
                            : m == "series" ? IZETA_METHOD_DET_SERIES
                            : m == "bloch"  ? IZETA_METHOD_DET_BLOCH
                                            : IZETA_METHOD_ALL;
                const auto pts = points_of(at);
                check(izeta_report_zeta_values(inst.ptr, pts.data(), static_cast<int>(pts.size()), mask, &opts, fmt,
                                               &out));
            }
        } else if (det->parsed()) {
            if (series <= 0 && at.empty()) throw CLI::RequiredError("det-formula needs --series or --at");
            const auto pts = points_of(at);
            check(izeta_report_det_formula(inst.ptr, pts.data(), static_cast<int>(pts.size()), series,
                                           det_method != "bloch", det_method != "series", &opts, fmt, &out));
        } else if (fe->parsed()) {
            check(izeta_report_functional_eq(inst.ptr, points, seed, &opts, fmt, &out));
        } else if (verify->parsed()) {
            int passed = 0;
            check(izeta_report_verify(inst.ptr, order, quad, points, seed, fmt, &out, &passed));
            emit(out);
            return passed ? 0 : 1;
        }
        emit(out);
        return 0;
    } catch (const Failure& f) {
        std::fprintf(stderr, "izeta: error: %s: %s\n", izeta_status_name(f.status), izeta_last_error());
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
}
