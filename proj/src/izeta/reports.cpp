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

#include "izeta/reports.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "izeta/analytic_det.hpp"
#include "izeta/cycles.hpp"
#include "izeta/functional_eq.hpp"
#include "izeta/operators.hpp"
#include "izeta/series.hpp"

namespace izeta {

using json = nlohmann::ordered_json;

namespace {

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return json(static_cast<long long>(x.get_si()));
    return json(x.get_str());
}

json rational_json(const Rational& x, bool decimal) {
    if (decimal) return json(x.get_d());
    if (x.get_den() == 1) return integer_json(x.get_num());
    return json(x.get_str());
}

std::string text_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    if (v.is_object() && v.contains("re")) return format_complex({v["re"].get<double>(), v["im"].get<double>()});
    return v.dump();
}

/// Collects header fields and tables, then renders one of the formats.
class Emitter {
public:
    Emitter(Format format, std::string command) : format_(format), command_(std::move(command)) {}

    void meta(const std::string& key, json value) { meta_[key] = std::move(value); }

    void table(const std::string& name, std::vector<std::string> columns) {
        tables_.push_back({name, std::move(columns), {}});
    }

    void row(std::vector<json> values) { tables_.back().rows.push_back(std::move(values)); }

    std::string str() const {
        std::ostringstream out;
        if (format_ == Format::Jsonl) {
            json head{{"record", "header"}, {"command", command_}};
            for (const auto& [k, v] : meta_.items()) head[k] = v;
            out << head.dump() << "\n";
            for (const auto& t : tables_)
                for (const auto& r : t.rows) {
                    json rec{{"record", t.name}};
                    for (std::size_t i = 0; i < r.size(); ++i) rec[t.columns[i]] = r[i];
                    out << rec.dump() << "\n";
                }
            return out.str();
        }
        out << "# " << command_;
        for (const auto& [k, v] : meta_.items()) out << "  " << k << "=" << text_of(v);
        out << "\n";
        for (const auto& t : tables_) {
            if (format_ == Format::Csv) {
                for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
                out << "\n";
                for (const auto& r : t.rows) {
                    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << text_of(r[i]);
                    out << "\n";
                }
                continue;
            }
            std::vector<std::size_t> width(t.columns.size());
            std::vector<std::vector<std::string>> cells;
            for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
            for (const auto& r : t.rows) {
                cells.emplace_back();
                for (std::size_t i = 0; i < r.size(); ++i) {
                    cells.back().push_back(text_of(r[i]));
                    width[i] = std::max(width[i], cells.back().back().size());
                }
            }
            out << "\n[" << t.name << "]\n";
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << t.columns[i];
            out << "\n";
            for (const auto& r : cells) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << r[i];
                out << "\n";
            }
        }
        return out.str();
    }

private:
    struct Table {
        std::string name;
        std::vector<std::string> columns;
        std::vector<std::vector<json>> rows;
    };

    Format format_;
    std::string command_;
    json meta_ = json::object();
    std::vector<Table> tables_;
};

void describe(Emitter& e, const Instance& inst) {
    if (!inst.label.empty()) e.meta("graph", inst.label);
    e.meta("kind", inst.is_periodic() ? "periodic" : "finite");
    if (inst.is_periodic()) {
        e.meta("rank", inst.rank());
        e.meta("cell_size", inst.block_size());
    } else {
        e.meta("vertices", inst.block_size());
        e.meta("group_order", inst.group_order());
    }
    e.meta("max_degree", inst.max_degree());
}

void require_positive(int value, const char* what) {
    if (value < 1) fail(ErrorCode::InvalidArgument, std::string(what) + " must be at least 1");
}

std::string representative(const CycleClass& c) {
    std::ostringstream s;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) s << " ";
        s << c.vertices[i];
        if (!c.coords.empty()) {
            s << "@(";
            for (std::size_t a = 0; a < c.coords[i].size(); ++a) s << (a ? "," : "") << c.coords[i][a];
            s << ")";
        }
    }
    return s.str();
}

} // namespace

double series_radius(const Instance& inst) {
    const int d = inst.max_degree();
    return d >= 2 ? 1.0 / (d - 1) : 1.0;
}

Complex zeta_from_counts(const std::vector<Integer>& n, Complex u, const Instance& inst) {
    if (std::abs(u) >= series_radius(inst))
        fail(ErrorCode::DomainError, "|u| = " + std::to_string(std::abs(u)) +
                                         " is outside the zeta series region |u| < 1/(d-1) = " +
                                         std::to_string(series_radius(inst)));
    Complex acc = 0;
    for (int m = static_cast<int>(n.size()) - 1; m >= 1; --m) acc = (acc + n[m].get_d() / m) * u;
    return std::exp(acc);
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "jsonl") return Format::Jsonl;
    if (name == "csv") return Format::Csv;
    fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (text, jsonl, csv)");
}

std::string format_complex(Complex z) {
    auto shortest = [](double x) {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, p);
    };
    const bool negative = std::signbit(z.imag());
    return shortest(z.real()) + (negative ? "-" : "+") + shortest(std::abs(z.imag())) + "i";
}

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    auto bad = [&] { fail(ErrorCode::InvalidArgument, "cannot read complex number '" + std::string(text) + "'"); };
    if (s.empty()) bad();
    auto number = [&](std::string_view part, bool imaginary) -> double {
        if (imaginary && (part.empty() || part == "+" || part == "-")) return part == "-" ? -1.0 : 1.0;
        double v = 0;
        const char* b = part.data();
        if (!part.empty() && part[0] == '+') ++b;
        auto [p, ec] = std::from_chars(b, part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size()) bad();
        return v;
    };
    if (s.back() != 'i') return {number(s, false), 0.0};
    s.pop_back();
    // Split at the last sign that is not an exponent sign or the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string::npos) return {0.0, number(s, true)};
    return {number(std::string_view(s).substr(0, split), false), number(std::string_view(s).substr(split), true)};
}

std::string report_cycles(const Instance& inst, int max_len, Format format) {
    require_positive(max_len, "max_len");
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");
    Emitter e(format, "cycles");
    describe(e, inst);
    e.meta("max_len", max_len);
    const auto classes = gamma_classes(inst, max_len);
    e.table("class", {"length", "period", "prime", "stabilizer", "nu", "orbit", "representative"});
    for (const auto& c : classes)
        e.row({c.length, c.period, c.prime, c.stabilizer_order, c.nu,
               c.orbit_size > 0 ? json(c.orbit_size) : json("infinite"), representative(c)});
    const auto pi = prime_counts(classes, max_len);
    e.table("prime_count", {"n", "pi"});
    for (int n = 1; n <= max_len; ++n) e.row({n, pi[n]});
    return e.str();
}

std::string report_traces(const Instance& inst, int order, Format format) {
    require_positive(order, "order");
    Emitter e(format, "traces");
    describe(e, inst);
    e.meta("order", order);
    const TraceLedger t = trace_ledger(inst, order);
    e.meta("tr_q_minus_i", integer_json(t.tr_q_minus_i));
    e.table("trace", {"m", "tr_a", "t", "n", "tr_b"});
    for (int m = 0; m <= order; ++m)
        e.row({m, integer_json(t.tr_a[m]), integer_json(t.t[m]), integer_json(t.n[m]), integer_json(t.tr_b[m])});
    return e.str();
}

std::string report_zeta_series(const Instance& inst, int order, bool decimal, Format format) {
    require_positive(order, "order");
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");
    Emitter e(format, "zeta-series");
    describe(e, inst);
    e.meta("order", order);
    e.meta("coefficients", decimal ? "decimal" : "exact");
    const auto n = n_m_from_traces(inst, order);
    const ExactSeries z = zeta_series(n, order);
    const ExactSeries inv = series_inverse(z);
    e.table("coefficient", {"m", "n", "zeta", "inverse_zeta"});
    for (int m = 0; m <= order; ++m)
        e.row({m, integer_json(n[m]), rational_json(z[m], decimal), rational_json(inv[m], decimal)});
    return e.str();
}

std::string report_zeta_values(const Instance& inst, const ZetaValueRequest& req, Format format) {
    if (req.points.empty()) fail(ErrorCode::InvalidArgument, "no evaluation points");
    if ((req.methods & kMethodAll) == 0) fail(ErrorCode::InvalidArgument, "no method selected");
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");
    Emitter e(format, "zeta");
    describe(e, inst);
    e.meta("alpha", alpha_bound(inst.max_degree()));
    if (req.methods & kMethodEuler) e.meta("euler_len", req.euler_len);
    if (req.methods & kMethodTraces) e.meta("trace_order", req.trace_order);

    std::vector<CycleClass> classes;
    std::vector<Integer> n;
    if (req.methods & kMethodEuler) {
        require_positive(req.euler_len, "euler_len");
        classes = gamma_classes(inst, req.euler_len);
    }
    if (req.methods & kMethodTraces) {
        require_positive(req.trace_order, "trace_order");
        n = n_m_from_traces(inst, req.trace_order);
    }
    DetGammaSeries series(inst);

    e.table("value", {"u", "method", "zeta", "delta"});
    for (const Complex u : req.points) {
        std::vector<std::pair<std::string, Complex>> values;
        if (req.methods & kMethodDetSeries) {
            const double alpha = alpha_bound(inst.max_degree());
            if (inst.max_degree() > 0 && std::abs(u) >= 1 / alpha)
                fail(ErrorCode::DomainError, "|u| = " + std::to_string(std::abs(u)) +
                                                 " is outside the determinant-formula region |u| < 1/alpha = " +
                                                 std::to_string(1 / alpha));
            const Complex det = series.evaluate(u, req.det).value;
            values.emplace_back("det-series", 1.0 / (euler_factor(inst.quotient().chi, u) * det));
        }
        if (req.methods & kMethodDetBloch)
            values.emplace_back("det-bloch", determinant_formula_value(inst, u, DetMethod::Bloch, req.det).zeta);
        if (req.methods & kMethodTraces) values.emplace_back("traces", zeta_from_counts(n, u, inst));
        if (req.methods & kMethodEuler)
            values.emplace_back("euler", euler_product_truncated(classes, u, req.euler_len, inst.max_degree()));
        for (const auto& [name, z] : values)
            e.row({complex_json(u), name, complex_json(z), std::abs(z - values.front().second)});
    }
    return e.str();
}

std::string report_det_formula(const Instance& inst, const DetFormulaRequest& req, Format format) {
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");
    Emitter e(format, "det-formula");
    describe(e, inst);
    e.meta("chi", inst.quotient().chi);
    if (req.series_order > 0) {
        const SeriesComparison c = determinant_formula_series(inst, req.series_order);
        const ExactSeries det = series_exp(trace_log_delta_series(inst, req.series_order));
        e.meta("mode", "series");
        e.meta("order", req.series_order);
        e.meta("agree", c.holds());
        if (!c.holds()) e.meta("first_mismatch", c.first_mismatch);
        e.table("coefficient", {"m", "det_gamma", "from_determinant", "from_traces"});
        for (int m = 0; m <= req.series_order; ++m)
            e.row({m, rational_json(det[m], false), rational_json(c.lhs[m], false), rational_json(c.rhs[m], false)});
        return e.str();
    }
    if (req.points.empty()) fail(ErrorCode::InvalidArgument, "no evaluation points");
    if (!req.use_series && !req.use_bloch) fail(ErrorCode::InvalidArgument, "no method selected");
    e.meta("mode", "value");
    e.meta("inverse_alpha", 1 / alpha_bound(inst.max_degree()));
    e.table("value", {"u", "method", "det_gamma", "inverse_zeta", "order", "quadrature_n", "delta"});
    for (const Complex u : req.points) {
        std::vector<FormulaValue> vals;
        if (req.use_series) vals.push_back(determinant_formula_value(inst, u, DetMethod::Series, req.det));
        if (req.use_bloch) vals.push_back(determinant_formula_value(inst, u, DetMethod::Bloch, req.det));
        for (const auto& v : vals)
            e.row({complex_json(u), v.method == DetMethod::Series ? "series" : "bloch", complex_json(v.det_gamma),
                   complex_json(v.inverse_zeta), v.order, v.quadrature_n,
                   std::abs(v.det_gamma - vals.front().det_gamma)});
    }
    return e.str();
}

std::string report_functional_eq(const Instance& inst, const FunctionalRequest& req, Format format) {
    require_positive(req.points, "points");
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");
    const RegularZetaContext ctx(inst, req.det);
    Emitter e(format, "functional-eq");
    describe(e, inst);
    e.meta("q", ctx.q());
    e.meta("vb", ctx.vb());
    e.meta("chi", ctx.chi());
    e.meta("seed", req.seed);
    e.meta("points", req.points);
    e.meta("margin", req.margin);
    e.meta("lambda_sign", ctx.vb() % 2 == 0 ? 1 : -1);
    e.table("residual", {"u", "reflected", "lambda", "xi", "big_xi", "reflection"});
    double worst = 0, worst_reflection = 0;
    for (const Complex u : sample_omega_pairs(ctx.q(), req.points, req.seed, req.margin)) {
        const FunctionalResiduals r = check_functional_equations(ctx, u);
        const ReflectionCheck rc = reflection_check(ctx, u);
        worst = std::max({worst, r.lambda, r.xi, r.big_xi});
        worst_reflection = std::max(worst_reflection, rc.residual);
        e.row({complex_json(u), complex_json(r.reflected), r.lambda, r.xi, r.big_xi, rc.residual});
    }
    e.meta("max_residual", worst);
    e.meta("max_reflection_residual", worst_reflection);
    return e.str();
}

namespace {

struct Check {
    std::string name;
    bool passed = true;
    double residual = 0;
    double tolerance = 0;
    std::string detail;
};

template <class Fn>
Check guarded(const std::string& name, Fn&& fn) {
    try {
        Check c = fn();
        c.name = name;
        return c;
    } catch (const std::exception& ex) {
        Check c;
        c.name = name;
        c.passed = false;
        c.residual = std::numeric_limits<double>::quiet_NaN();
        c.detail = ex.what();
        return c;
    }
}

Check exact_check(bool ok, std::string detail) {
    Check c;
    c.passed = ok;
    c.detail = std::move(detail);
    return c;
}

Check numeric_check(double residual, double tolerance, std::string detail = {}) {
    Check c;
    c.residual = residual;
    c.tolerance = tolerance;
    c.passed = residual <= tolerance;
    c.detail = std::move(detail);
    return c;
}

} // namespace

VerifyOutcome run_verify(const Instance& inst, const VerifyConfig& cfg, Format format) {
    require_positive(cfg.order, "order");
    require_positive(cfg.quadrature, "quadrature size");
    require_positive(cfg.points, "points");
    if (format == Format::Csv) fail(ErrorCode::InvalidArgument, "csv output is only offered for trace tables");

    const int d = inst.max_degree();
    const int oracle_len = std::min(cfg.order, inst.is_periodic() ? 10 : 12);
    const double alpha = alpha_bound(d);
    DetOptions det;
    det.quadrature_start = cfg.quadrature;

    Emitter e(format, "verify");
    describe(e, inst);
    e.meta("order", cfg.order);
    e.meta("oracle_len", oracle_len);
    e.meta("quadrature_start", cfg.quadrature);
    e.meta("quadrature_cap", det.quadrature_cap);
    e.meta("quadrature_tolerance", det.quadrature_tolerance);
    e.meta("points", cfg.points);
    e.meta("seed", cfg.seed);

    std::vector<Check> checks;
    std::vector<Integer> n;

    checks.push_back(guarded("trace-ledger", [&] {
        const TraceLedger t = trace_ledger(inst, cfg.order);
        n = t.n;
        return exact_check(true, "B_m traces and t_m closed form consistent");
    }));
    checks.push_back(guarded("oracle-equals-traces", [&] {
        const OracleCounts oc = oracle_counts(inst, oracle_len);
        const auto nt = n_m_from_traces(inst, oracle_len);
        for (int m = 1; m <= oracle_len; ++m)
            if (Integer(static_cast<long>(oc.n[m])) != nt[m])
                return exact_check(false, "N_" + std::to_string(m) + " differs: oracle " + std::to_string(oc.n[m]) +
                                              ", traces " + nt[m].get_str());
        return exact_check(true, "m <= " + std::to_string(oracle_len));
    }));
    checks.push_back(guarded("operator-identities", [&] {
        const auto a = a_m_sequence(inst, cfg.order);
        const int r = resolvent_identity_failure(inst, a);
        const int c = cumulative_identity_failure(inst, a);
        return exact_check(r < 0 && c < 0, r >= 0   ? "resolvent identity fails at order " + std::to_string(r)
                                            : c >= 0 ? "cumulative identity fails at order " + std::to_string(c)
                                                     : "");
    }));
    checks.push_back(guarded("norm-bound", [&] {
        const auto a = a_m_sequence(inst, cfg.order);
        const NormCertificate cert = norm_certificate(inst, a);
        return numeric_check(cert.worst_ratio, 1.0 + 1e-9, "max ||A_m|| / alpha^m");
    }));
    checks.push_back(guarded("n-bound", [&] {
        const auto nt = n_m_from_traces(inst, cfg.order);
        Integer bound = Integer(d) * inst.tau_identity();
        for (int m = 1; m <= cfg.order; ++m) {
            if (nt[m] > bound) return exact_check(false, "N_" + std::to_string(m) + " exceeds d(d-1)^{m-1}|F|");
            bound *= std::max(d - 1, 0);
        }
        return exact_check(true, "N_m <= d(d-1)^{m-1}|F|");
    }));
    checks.push_back(guarded("log-derivative", [&] {
        const auto nt = n_m_from_traces(inst, cfg.order);
        const auto r = log_derivative_check(zeta_series(nt, cfg.order), nt);
        return exact_check(r.exact(), r.exact() ? "" : "mismatch at m = " + std::to_string(r.first_mismatch));
    }));
    checks.push_back(guarded("trace-log-derivative", [&] {
        const auto c = log_derivative_trace_check(inst, cfg.order);
        return exact_check(c.holds(), c.holds() ? "" : "mismatch at order " + std::to_string(c.first_mismatch));
    }));
    checks.push_back(guarded("b-trace-series", [&] {
        const auto c = b_trace_check(inst, cfg.order);
        return exact_check(c.holds(), c.holds() ? "" : "mismatch at order " + std::to_string(c.first_mismatch));
    }));
    checks.push_back(guarded("determinant-formula-series", [&] {
        const auto c = determinant_formula_series(inst, cfg.order);
        return exact_check(c.holds(), c.holds() ? "exact through order " + std::to_string(cfg.order)
                                                : "mismatch at order " + std::to_string(c.first_mismatch));
    }));
    checks.push_back(guarded("euler-product", [&] {
        const double u = 0.25 * series_radius(inst);
        const auto classes = gamma_classes(inst, oracle_len);
        const Complex euler = euler_product_truncated(classes, u, oracle_len, d);
        const auto nt = n_m_from_traces(inst, oracle_len);
        const Complex traces = zeta_from_counts(nt, u, inst);
        return numeric_check(std::abs(euler - traces), 1e-6, "u = " + std::to_string(u));
    }));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> inner;
    for (int i = 0; i < cfg.points; ++i)
        inner.push_back(std::polar(0.9 / alpha * std::sqrt(unit(rng)), 2 * M_PI * unit(rng)));

    checks.push_back(guarded("dual-method", [&] {
        DetGammaSeries series(inst);
        double worst = 0;
        for (const Complex u : inner)
            worst = std::max(worst, std::abs(series.evaluate(u, det).value - det_gamma_bloch(inst, u, det).value));
        return numeric_check(worst, 1e-9, "series against " + std::string(inst.is_periodic() ? "Bloch quadrature" : "direct determinant"));
    }));
    checks.push_back(guarded("determinant-formula-value", [&] {
        const double u = 0.25 / alpha;
        const FormulaValue v = determinant_formula_value(inst, u, DetMethod::Series, det);
        const auto nt = n_m_from_traces(inst, cfg.order);
        const Complex from_traces = 1.0 / zeta_from_counts(nt, u, inst);
        // Tail of the truncated N_m series at this u.
        const double g = std::max(d - 1, 1) * u;
        const double tail = d * inst.tau_identity() * std::pow(g, cfg.order + 1) / ((cfg.order + 1) * (1 - g));
        return numeric_check(mixed_residual(v.inverse_zeta, from_traces), 1e-9 + 2 * tail, "u = " + std::to_string(u));
    }));

    if (const auto q = inst.regular_q(); q && *q >= 1) {
        checks.push_back(guarded("euler-characteristic", [&] {
            const int vb = inst.quotient().vb;
            const bool ok = 2 * inst.quotient().chi == vb * (1 - *q);
            return exact_check(ok, "chi = |VB|(1-q)/2");
        }));
        const RegularZetaContext ctx(inst, det);
        const auto pts = sample_omega_pairs(*q, cfg.points, cfg.seed);
        checks.push_back(guarded("functional-equations", [&] {
            double worst = 0;
            for (const Complex u : pts) {
                const auto r = check_functional_equations(ctx, u);
                worst = std::max({worst, r.lambda, r.xi, r.big_xi});
            }
            return numeric_check(worst, 1e-8, "Lambda sign (-1)^|VB|");
        }));
        checks.push_back(guarded("reflection", [&] {
            double worst = 0;
            for (const Complex u : pts) worst = std::max(worst, reflection_check(ctx, u).residual);
            return numeric_check(worst, 1e-9);
        }));
    }

    VerifyOutcome out;
    e.table("check", {"name", "passed", "residual", "tolerance", "detail"});
    for (const auto& c : checks) {
        if (!c.passed) ++out.failures;
        e.row({c.name, c.passed, std::isnan(c.residual) ? json(nullptr) : json(c.residual),
               c.tolerance > 0 ? json(c.tolerance) : json(nullptr), c.detail});
    }
    out.passed = out.failures == 0;
    e.meta("passed", out.passed);
    e.meta("failures", out.failures);
    out.report = e.str();
    return out;
}

} // namespace izeta
