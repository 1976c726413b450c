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

#include "izeta/izeta.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "izeta/cycles.hpp"
#include "izeta/det_gamma.hpp"
#include "izeta/functional_eq.hpp"
#include "izeta/graph_io.hpp"
#include "izeta/operators.hpp"
#include "izeta/reports.hpp"

struct izeta_instance {
    izeta::GraphDocument doc;
    izeta::Instance inst;
    std::unique_ptr<izeta::DetGammaSeries> series;

    izeta::DetGammaSeries& det_series() {
        if (!series) series = std::make_unique<izeta::DetGammaSeries>(inst);
        return *series;
    }
};

namespace {

thread_local std::string g_last_error;

static_assert(static_cast<int>(izeta::ErrorCode::InvalidArgument) == IZETA_INVALID_ARGUMENT,
              "status codes must mirror ErrorCode");

template <class Fn>
izeta_status guard(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return IZETA_OK;
    } catch (const izeta::Error& e) {
        g_last_error = e.what();
        return static_cast<izeta_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return IZETA_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IZETA_INTERNAL_ERROR;
    }
}

void require(bool ok, const char* what) {
    if (!ok) izeta::fail(izeta::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

izeta::DetOptions det_options(const izeta_options* opts) {
    izeta::DetOptions d;
    if (!opts) return d;
    d.quadrature_start = opts->quadrature_start;
    d.quadrature_cap = opts->quadrature_cap;
    d.quadrature_tolerance = opts->quadrature_tolerance;
    d.series_tolerance = opts->series_tolerance;
    d.max_series_order = opts->max_series_order;
    return d;
}

izeta_options effective(const izeta_options* opts) {
    izeta_options o;
    izeta_options_default(&o);
    return opts ? *opts : o;
}

izeta::Format format_of(izeta_format f) {
    switch (f) {
    case IZETA_FORMAT_TEXT: return izeta::Format::Text;
    case IZETA_FORMAT_JSONL: return izeta::Format::Jsonl;
    case IZETA_FORMAT_CSV: return izeta::Format::Csv;
    }
    izeta::fail(izeta::ErrorCode::InvalidArgument, "unknown output format");
}

izeta::Complex to_cpp(izeta_complex z) { return {z.re, z.im}; }
izeta_complex to_c(izeta::Complex z) { return {z.real(), z.imag()}; }

izeta_status adopt(izeta::GraphDocument doc, izeta_instance** out) {
    require(out != nullptr, "output pointer is null");
    auto inst = doc.instance();
    *out = new izeta_instance{std::move(doc), std::move(inst), nullptr};
    return IZETA_OK;
}

izeta::Complex det_value(izeta_instance& h, izeta::Complex u, izeta_method method, const izeta_options* opts) {
    const auto d = det_options(opts);
    if (method == IZETA_METHOD_DET_SERIES) return h.det_series().evaluate(u, d).value;
    if (method == IZETA_METHOD_DET_BLOCH) return izeta::det_gamma_bloch(h.inst, u, d).value;
    izeta::fail(izeta::ErrorCode::InvalidArgument, "det_gamma takes the series or Bloch method");
}

} // namespace

extern "C" {

const char* izeta_version(void) { return "1.0.0"; }

const char* izeta_status_name(izeta_status status) {
    switch (status) {
    case IZETA_OK: return "Ok";
    case IZETA_INTERNAL_ERROR: return "InternalError";
    default:
        if (status >= IZETA_PARSE_ERROR && status <= IZETA_INVALID_ARGUMENT)
            return izeta::error_code_name(static_cast<izeta::ErrorCode>(status)).data();
        return "Unknown";
    }
}

const char* izeta_last_error(void) { return g_last_error.c_str(); }

void izeta_options_default(izeta_options* opts) {
    if (!opts) return;
    const izeta::DetOptions d;
    opts->quadrature_start = d.quadrature_start;
    opts->quadrature_cap = d.quadrature_cap;
    opts->quadrature_tolerance = d.quadrature_tolerance;
    opts->series_tolerance = d.series_tolerance;
    opts->max_series_order = d.max_series_order;
    opts->euler_len = 10;
    opts->trace_order = 24;
}

void izeta_string_free(char* s) { std::free(s); }

izeta_status izeta_load_file(const char* path, izeta_instance** out) {
    if (out) *out = nullptr;
    return guard([&] {
        require(path != nullptr, "path is null");
        adopt(izeta::read_graph_file(path), out);
    });
}

izeta_status izeta_load_text(const char* text, izeta_instance** out) {
    if (out) *out = nullptr;
    return guard([&] {
        require(text != nullptr, "text is null");
        adopt(izeta::parse_graph(text), out);
    });
}

izeta_status izeta_load_adjacency(int n, const int* adjacency, izeta_instance** out) {
    return izeta_load_quotient(n, adjacency, 0, nullptr, out);
}

izeta_status izeta_load_quotient(int n, const int* adjacency, int generator_count, const int* generators,
                                 izeta_instance** out) {
    if (out) *out = nullptr;
    return guard([&] {
        require(n > 0 && adjacency != nullptr, "adjacency matrix missing");
        require(generator_count >= 0 && (generator_count == 0 || generators != nullptr), "generators missing");
        izeta::GraphDocument doc;
        doc.graph = izeta::SimpleGraph::from_adjacency(
            n, std::span<const int>(adjacency, static_cast<std::size_t>(n) * n));
        for (int g = 0; g < generator_count; ++g)
            doc.generators.emplace_back(generators + static_cast<std::size_t>(g) * n,
                                        generators + static_cast<std::size_t>(g + 1) * n);
        if (!doc.generators.empty()) (void)izeta::GroupAction::permutations(doc.graph, doc.generators);
        adopt(std::move(doc), out);
    });
}

izeta_status izeta_load_periodic(int rank, int cell_size, int edge_count, const int* edges, izeta_instance** out) {
    if (out) *out = nullptr;
    return guard([&] {
        require(rank >= 1 && edge_count >= 0 && (edge_count == 0 || edges != nullptr), "bad periodic description");
        std::vector<izeta::CellEdge> list;
        for (int k = 0; k < edge_count; ++k) {
            const int* r = edges + static_cast<std::size_t>(k) * (2 + rank);
            list.push_back({r[0], r[1], izeta::Offset(r + 2, r + 2 + rank)});
        }
        izeta::GraphDocument doc;
        doc.periodic = true;
        doc.lattice = izeta::PeriodicGraph::create(rank, cell_size, std::move(list));
        adopt(std::move(doc), out);
    });
}

void izeta_free(izeta_instance* inst) { delete inst; }

izeta_status izeta_get_info(const izeta_instance* h, izeta_info* out) {
    return guard([&] {
        require(h && out, "null argument");
        const auto& inst = h->inst;
        const auto& rep = inst.report();
        out->periodic = inst.is_periodic();
        out->vertex_count = rep.vertex_count;
        out->edge_count = rep.edge_count;
        out->rank = inst.rank();
        out->group_order = inst.group_order();
        out->max_degree = rep.max_degree;
        out->min_degree = rep.min_degree;
        out->regular = rep.regular;
        out->q = rep.regular ? rep.q : -1;
        out->vb = inst.quotient().vb;
        out->eb = inst.quotient().eb;
        out->chi = inst.quotient().chi;
    });
}

izeta_status izeta_serialize(const izeta_instance* h, char** out) {
    return guard([&] {
        require(h && out, "null argument");
        *out = copy_string(izeta::serialize_graph(h->doc));
    });
}

izeta_status izeta_reduced_counts(const izeta_instance* h, int max_order, int64_t* out) {
    return guard([&] {
        require(h && out && max_order >= 0, "bad argument");
        const auto n = izeta::n_m_from_traces(h->inst, max_order);
        for (int m = 0; m <= max_order; ++m) {
            require(n[m].fits_slong_p(), "count exceeds 64 bits");
            out[m] = n[m].get_si();
        }
    });
}

izeta_status izeta_oracle_counts(const izeta_instance* h, int max_len, int64_t* out) {
    return guard([&] {
        require(h && out && max_len >= 0, "bad argument");
        const auto c = izeta::oracle_counts(h->inst, max_len);
        for (int m = 0; m <= max_len; ++m) out[m] = c.n[m];
    });
}

izeta_status izeta_zeta_at(const izeta_instance* ch, izeta_complex cu, izeta_method method, const izeta_options* opts,
                           izeta_complex* out) {
    return guard([&] {
        require(ch && out, "null argument");
        auto& h = const_cast<izeta_instance&>(*ch);
        const auto u = to_cpp(cu);
        const izeta_options o = effective(opts);
        izeta::Complex z;
        switch (method) {
        case IZETA_METHOD_EULER: {
            const auto classes = izeta::gamma_classes(h.inst, o.euler_len);
            z = izeta::euler_product_truncated(classes, u, o.euler_len, h.inst.max_degree());
            break;
        }
        case IZETA_METHOD_TRACES:
            z = izeta::zeta_from_counts(izeta::n_m_from_traces(h.inst, o.trace_order), u, h.inst);
            break;
        case IZETA_METHOD_DET_SERIES:
        case IZETA_METHOD_DET_BLOCH: {
            const double alpha = izeta::alpha_bound(h.inst.max_degree());
            if (h.inst.max_degree() > 0 && std::abs(u) >= 1 / alpha)
                izeta::fail(izeta::ErrorCode::DomainError,
                            "|u| = " + std::to_string(std::abs(u)) +
                                " is outside the determinant-formula region |u| < 1/alpha = " + std::to_string(1 / alpha));
            z = 1.0 / (izeta::euler_factor(h.inst.quotient().chi, u) * det_value(h, u, method, opts));
            break;
        }
        default: izeta::fail(izeta::ErrorCode::InvalidArgument, "pick exactly one method");
        }
        *out = to_c(z);
    });
}

izeta_status izeta_det_gamma(const izeta_instance* ch, izeta_complex u, izeta_method method,
                             const izeta_options* opts, izeta_complex* out) {
    return guard([&] {
        require(ch && out, "null argument");
        *out = to_c(det_value(const_cast<izeta_instance&>(*ch), to_cpp(u), method, opts));
    });
}

int izeta_omega_contains(izeta_complex u, int q) {
    if (q < 1) return 0;
    return izeta::omega_contains(to_cpp(u), q) ? 1 : 0;
}

izeta_status izeta_functional_residuals(const izeta_instance* h, izeta_complex u, const izeta_options* opts,
                                        double* out) {
    return guard([&] {
        require(h && out, "null argument");
        const izeta::RegularZetaContext ctx(h->inst, det_options(opts));
        const auto r = izeta::check_functional_equations(ctx, to_cpp(u));
        out[0] = r.lambda;
        out[1] = r.xi;
        out[2] = r.big_xi;
        out[3] = izeta::reflection_check(ctx, to_cpp(u)).residual;
    });
}

izeta_status izeta_parse_complex(const char* text, izeta_complex* out) {
    return guard([&] {
        require(text && out, "null argument");
        *out = to_c(izeta::parse_complex(text));
    });
}

izeta_status izeta_report_cycles(const izeta_instance* h, int max_len, izeta_format format, char** out) {
    return guard([&] {
        require(h && out, "null argument");
        *out = copy_string(izeta::report_cycles(h->inst, max_len, format_of(format)));
    });
}

izeta_status izeta_report_traces(const izeta_instance* h, int order, izeta_format format, char** out) {
    return guard([&] {
        require(h && out, "null argument");
        *out = copy_string(izeta::report_traces(h->inst, order, format_of(format)));
    });
}

izeta_status izeta_report_zeta_series(const izeta_instance* h, int order, int decimal, izeta_format format,
                                      char** out) {
    return guard([&] {
        require(h && out, "null argument");
        *out = copy_string(izeta::report_zeta_series(h->inst, order, decimal != 0, format_of(format)));
    });
}

izeta_status izeta_report_zeta_values(const izeta_instance* h, const izeta_complex* points, int count,
                                      unsigned methods, const izeta_options* opts, izeta_format format, char** out) {
    return guard([&] {
        require(h && out && (count == 0 || points), "null argument");
        const izeta_options o = effective(opts);
        izeta::ZetaValueRequest req;
        for (int i = 0; i < count; ++i) req.points.push_back(to_cpp(points[i]));
        req.methods = methods;
        req.euler_len = o.euler_len;
        req.trace_order = o.trace_order;
        req.det = det_options(&o);
        *out = copy_string(izeta::report_zeta_values(h->inst, req, format_of(format)));
    });
}

izeta_status izeta_report_det_formula(const izeta_instance* h, const izeta_complex* points, int count,
                                      int series_order, int use_series, int use_bloch, const izeta_options* opts,
                                      izeta_format format, char** out) {
    return guard([&] {
        require(h && out && (count == 0 || points), "null argument");
        izeta::DetFormulaRequest req;
        for (int i = 0; i < count; ++i) req.points.push_back(to_cpp(points[i]));
        req.series_order = series_order;
        req.use_series = use_series != 0;
        req.use_bloch = use_bloch != 0;
        req.det = det_options(opts);
        *out = copy_string(izeta::report_det_formula(h->inst, req, format_of(format)));
    });
}

izeta_status izeta_report_functional_eq(const izeta_instance* h, int points, uint64_t seed, const izeta_options* opts,
                                        izeta_format format, char** out) {
    return guard([&] {
        require(h && out, "null argument");
        izeta::FunctionalRequest req;
        req.points = points;
        req.seed = seed;
        req.det = det_options(opts);
        *out = copy_string(izeta::report_functional_eq(h->inst, req, format_of(format)));
    });
}

izeta_status izeta_report_verify(const izeta_instance* h, int order, int quadrature, int points, uint64_t seed,
                                 izeta_format format, char** out, int* passed) {
    return guard([&] {
        require(h && out && passed, "null argument");
        izeta::VerifyConfig cfg{order, quadrature, points, seed};
        const auto r = izeta::run_verify(h->inst, cfg, format_of(format));
        *passed = r.passed ? 1 : 0;
        *out = copy_string(r.report);
    });
}

} // extern "C"
