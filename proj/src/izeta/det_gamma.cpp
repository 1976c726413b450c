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

#include "izeta/det_gamma.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "izeta/analytic_det.hpp"
#include "izeta/operators.hpp"

namespace izeta {

namespace {

/// Runs the power expansion of f = u(A - uQ) once and returns the trace-log
/// coefficients and, when requested, the kernel series sum_n f^n.
struct PowerExpansion {
    ExactSeries trace_log;
    std::vector<IntKernel> resolvent;  // coefficient kernels of (I - f)^{-1}
};

PowerExpansion expand_powers(const Instance& inst, int order, bool want_resolvent) {
    if (order < 0) fail(ErrorCode::InvalidArgument, "series order must be nonnegative");
    const IntKernel& a = inst.adjacency();
    const IntKernel& q = inst.q_operator();
    const int step = inst.step_l1();

    PowerExpansion out{ExactSeries(order), {}};
    if (want_resolvent) {
        out.resolvent.assign(order + 1, IntKernel(inst.rank(), inst.block_size()));
        out.resolvent[0] = inst.identity();
    }

    // poly[j] holds the u^j coefficient of (A - uQ)^n.
    std::vector<IntKernel> poly{inst.identity()};
    for (int n = 1; n <= order; ++n) {
        const int top = order - n;
        std::vector<IntKernel> next(top + 1, IntKernel(inst.rank(), inst.block_size()));
        for (int j = 0; j < static_cast<int>(poly.size()) && j <= top; ++j) {
            next[j] += poly[j] * a;
            if (j + 1 <= top) next[j + 1] -= poly[j] * q;
        }
        for (int j = 0; j <= top; ++j) {
            // Offsets that cannot return to 0 within the remaining steps never
            // reach a trace.
            const int reach = (top - j) * step;
            if (inst.rank() > 0)
                next[j] = next[j].pruned([&](const Offset& v) { return l1_norm(v) <= std::max(reach, step); });
            const Integer tr = trace_gamma(inst, next[j]);
            if (tr != 0) out.trace_log[n + j] -= Rational(tr) / n;
            if (want_resolvent && n + j <= order) out.resolvent[n + j] += next[j];
        }
        poly = std::move(next);
    }
    return out;
}

/// Same coefficients as the power expansion, L_m = -Tr_Gamma(B_m) / m, but
/// streamed from A_m = A_{m-1}A - A_{m-2}Q with two kernels alive at a time.
/// Much cheaper at high order; only the offset-0 diagonal is ever read.
ExactSeries trace_log_from_b(const Instance& inst, int order) {
    const IntKernel& a = inst.adjacency();
    const IntKernel& q = inst.q_operator();
    const IntKernel id = inst.identity();
    const Offset zero(inst.rank(), 0);
    const auto domain = inst.trace_domain();
    const int step = inst.step_l1();
    auto prune = [&](IntKernel k, int m) {
        if (inst.rank() == 0) return k;
        const int reach = std::max((order - m) * step, step);
        return k.pruned([&](const Offset& v) { return l1_norm(v) <= reach; });
    };
    // Tr_Gamma((Q - I) A_m)
    auto weighted_trace = [&](const IntKernel& k) {
        Integer s = 0;
        for (int x : domain) s += (q.coef(x, x, zero) - 1) * k.coef(x, x, zero);
        return s;
    };

    ExactSeries out(order);
    IntKernel older = id;
    IntKernel prev = prune(a, 1);
    // cumulative[m] = Tr_Gamma((Q - I) sum_{k=1}^{[m/2]} A_{m-2k})
    std::vector<Integer> s{weighted_trace(older), weighted_trace(prev)};
    std::vector<Integer> cumulative{0, 0};
    if (order >= 1) out[1] = -Rational(trace_gamma(inst, prev));
    for (int m = 2; m <= order; ++m) {
        IntKernel cur = prev * a - older * q;
        if (m == 2) cur -= id;
        cur = prune(std::move(cur), m);
        cumulative.push_back(cumulative[m - 2] + s[m - 2]);
        s.push_back(weighted_trace(cur));
        out[m] = -Rational(trace_gamma(inst, cur) - cumulative[m]) / m;
        older = std::move(prev);
        prev = std::move(cur);
    }
    return out;
}

} // namespace

ExactSeries trace_log_delta_series(const Instance& inst, int order) {
    return expand_powers(inst, order, false).trace_log;
}

DetGammaSeries::DetGammaSeries(const Instance& inst) : inst_(&inst), exact_(0) {}

double DetGammaSeries::radius() const {
    const int d = inst_->max_degree();
    return d >= 2 ? 1.0 / (d - 1) : 1.0;
}

double DetGammaSeries::tail_bound(double r, int order) const {
    // |L_m| = |Tr B_m| / m <= (d(d-1)^{m-1}|F| + |Tr(Q - I)|) / m.
    const double d = inst_->max_degree();
    const double f = inst_->tau_identity();
    const double trq = std::abs(2.0 * inst_->quotient().chi2.get_d());
    const double m1 = order + 1;
    double bound = trq * std::pow(r, m1) / (m1 * (1 - r));
    if (d >= 2) {
        const double g = (d - 1) * r;
        bound += d * f / (d - 1) * std::pow(g, m1) / (m1 * (1 - g));
    }
    return bound;
}

const ExactSeries& DetGammaSeries::coefficients(int order) {
    if (exact_.order() < order || coef_.empty()) {
        const int grown = std::max(order, coef_.empty() ? order : exact_.order() + exact_.order() / 2);
        exact_ = trace_log_from_b(*inst_, grown);
        coef_.resize(grown + 1);
        for (int m = 0; m <= grown; ++m) coef_[m] = exact_[m].get_d();
    }
    return exact_;
}

SeriesValue DetGammaSeries::evaluate(Complex u, const DetOptions& opts) {
    const double r = std::abs(u);
    if (r >= radius())
        fail(ErrorCode::DomainError, "|u| = " + std::to_string(r) +
                                         " is outside the trace-log series region |u| < " +
                                         (inst_->max_degree() >= 2 ? "1/(d-1) = " : "") +
                                         std::to_string(radius()));
    int order = 8;
    while (tail_bound(r, order) > opts.series_tolerance) {
        if (order >= opts.max_series_order)
            fail(ErrorCode::TruncationNotConverged,
                 "trace-log series needs order beyond " + std::to_string(opts.max_series_order) +
                     " at |u| = " + std::to_string(r));
        order = std::min(opts.max_series_order, order + 8);
    }
    coefficients(order);
    SeriesValue out;
    out.order = order;
    out.tail_bound = tail_bound(r, order);
    Complex acc = 0;
    for (int m = order; m >= 1; --m) acc = (acc + coef_[m]) * u;
    out.log_value = acc;
    out.value = std::exp(acc);
    return out;
}

SeriesValue det_gamma_series(const Instance& inst, Complex u, const DetOptions& opts) {
    DetGammaSeries s(inst);
    return s.evaluate(u, opts);
}

QuadratureValue det_gamma_direct(const Instance& inst, Complex u) {
    if (inst.is_periodic()) fail(ErrorCode::InvalidArgument, "direct determinant needs a finite instance");
    const int n = inst.block_size();
    Eigen::MatrixXcd delta = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& [v, b] : inst.adjacency().blocks())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b(i, j) != 0) delta(i, j) -= u * b(i, j).get_d();
    for (int i = 0; i < n; ++i) delta(i, i) += u * u * inst.q_operator().coef(i, i, {}).get_d();

    QuadratureValue out;
    out.quadrature_n = 1;
    const int order = inst.group_order();
    if (order == 1) {
        out.value = delta.partialPivLu().determinant();
        out.log_value = std::log(out.value);
        return out;
    }
    try {
        const AnalyticDet det = analytic_det_matrix(delta, 1.0 / order);
        out.value = det.value;
        out.log_value = det.log_value;
        out.cut_angle = det.cut_angle;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HullContainsZero) throw;
        fail(ErrorCode::BranchObstruction, std::string("Delta(u) has 0 in its spectral hull: ") + e.what());
    }
    return out;
}

namespace {

/// Delta(u, k) = I + u^2 Q - u A(k) assembled from precomputed twiddles.
class BlochDelta {
public:
    BlochDelta(const Instance& inst, Complex u) : size_(inst.block_size()), rank_(inst.rank()), u_(u) {
        for (const auto& [v, b] : inst.adjacency().blocks())
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j)
                    if (b(i, j) != 0) entries_.push_back({i, j, v, -u * b(i, j).get_d()});
        diag_.resize(size_);
        for (int i = 0; i < size_; ++i)
            diag_[i] = 1.0 + u * u * inst.q_operator().coef(i, i, Offset(rank_, 0)).get_d();
    }

    void set_grid(int n) {
        n_ = n;
        twiddle_.resize(n);
        for (int j = 0; j < n; ++j) twiddle_[j] = std::polar(1.0, 2 * M_PI * j / n);
    }

    /// Eigenvalues of Delta at grid index idx, appended to out.
    void eigenvalues_at(const std::vector<int>& idx, std::vector<Complex>& out) {
        if (size_ == 1) {
            Complex s = diag_[0];
            for (const auto& e : entries_) s += e.coef * phase(idx, e.offset);
            out.push_back(s);
            return;
        }
        m_ = Eigen::MatrixXcd::Zero(size_, size_);
        for (int i = 0; i < size_; ++i) m_(i, i) = diag_[i];
        for (const auto& e : entries_) m_(e.i, e.j) += e.coef * phase(idx, e.offset);
        solver_.compute(m_, false);
        if (solver_.info() != Eigen::Success) fail(ErrorCode::BranchObstruction, "eigenvalue solver failed");
        for (int i = 0; i < size_; ++i) out.push_back(solver_.eigenvalues()[i]);
    }

    int rank() const { return rank_; }
    int size() const { return size_; }

private:
    struct Entry {
        int i, j;
        Offset offset;
        Complex coef;
    };

    Complex phase(const std::vector<int>& idx, const Offset& v) const {
        Complex p = 1;
        for (int a = 0; a < rank_; ++a) {
            const long t = (static_cast<long>(idx[a]) * v[a]) % n_;
            p *= twiddle_[t < 0 ? t + n_ : t];
        }
        return p;
    }

    int size_;
    int rank_;
    Complex u_;
    int n_ = 1;
    std::vector<Entry> entries_;
    std::vector<Complex> diag_;
    std::vector<Complex> twiddle_;
    Eigen::MatrixXcd m_;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver_;
};

/// Visits grid indices; with skip_coarse, only points absent from the grid of
/// half the size.
template <class Fn>
void visit_grid(int rank, int n, bool skip_coarse, Fn&& fn) {
    std::vector<int> idx(rank, 0);
    while (true) {
        bool coarse = skip_coarse;
        if (skip_coarse)
            for (int a = 0; a < rank && coarse; ++a) coarse = idx[a] % 2 == 0;
        if (!coarse) fn(idx);
        int a = rank - 1;
        while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
        if (a < 0) break;
    }
}

struct Branch {
    double cut = 0;
    Complex direction;  // unit vector toward the nearest hull point
    double margin = 0;
    double distance = 0;
};

Branch choose_branch(BlochDelta& delta, int n) {
    std::vector<Complex> hull, buffer;
    std::vector<Complex> ev;
    delta.set_grid(n);
    auto flush = [&] {
        buffer.insert(buffer.end(), hull.begin(), hull.end());
        hull = convex_hull(buffer);
        buffer.clear();
    };
    visit_grid(delta.rank(), n, false, [&](const std::vector<int>& idx) {
        ev.clear();
        delta.eigenvalues_at(idx, ev);
        buffer.insert(buffer.end(), ev.begin(), ev.end());
        if (buffer.size() > 8192) flush();
    });
    flush();
    HullInfo info;
    try {
        info = hull_info(hull);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HullContainsZero) throw;
        fail(ErrorCode::BranchObstruction, "0 lies in the convex hull of the sampled spectrum of Delta(u)");
    }
    Branch b;
    b.cut = std::arg(info.nearest) + M_PI;
    b.direction = info.nearest / std::abs(info.nearest);
    b.margin = 1e-9 * info.spectral_radius;
    b.distance = info.distance;
    return b;
}

/// Sum of tr log over the selected grid points; false if a point leaves the
/// half-plane that certifies the branch.
bool sum_logs(BlochDelta& delta, int n, bool skip_coarse, const Branch& b, Complex& sum) {
    std::vector<Complex> ev;
    bool ok = true;
    delta.set_grid(n);
    visit_grid(delta.rank(), n, skip_coarse, [&](const std::vector<int>& idx) {
        if (!ok) return;
        ev.clear();
        delta.eigenvalues_at(idx, ev);
        for (const auto& z : ev) {
            if ((std::conj(b.direction) * z).real() <= b.margin) {
                ok = false;
                return;
            }
            sum += branch_log(z, b.cut);
        }
    });
    return ok;
}

} // namespace

QuadratureValue det_gamma_bloch(const Instance& inst, Complex u, const DetOptions& opts) {
    if (!inst.is_periodic()) return det_gamma_direct(inst, u);
    const int rank = inst.rank();
    if (opts.quadrature_start < 1 || opts.quadrature_cap < opts.quadrature_start)
        fail(ErrorCode::InvalidArgument, "bad quadrature size");
    BlochDelta delta(inst, u);

    int n = opts.quadrature_start;
    Branch branch = choose_branch(delta, n);
    Complex sum = 0;
    if (!sum_logs(delta, n, false, branch, sum))
        fail(ErrorCode::BranchObstruction, "spectrum of Delta(u) straddles the chosen branch");
    auto mean = [&](int size) { return sum / std::pow(static_cast<double>(size), rank); };
    Complex prev = std::exp(mean(n));

    QuadratureValue out;
    while (true) {
        const int n2 = 2 * n;
        if (n2 > opts.quadrature_cap || std::pow(static_cast<double>(n2), rank) > 6.8e7)
            fail(ErrorCode::QuadratureNotConverged,
                 "quadrature did not settle below " + std::to_string(opts.quadrature_tolerance) +
                     " by n = " + std::to_string(n) + " per dimension");
        Complex extended = sum;
        if (!sum_logs(delta, n2, true, branch, extended)) {
            // New points fell outside the certified half-plane: rebuild the
            // branch from the finer spectrum and start this level afresh.
            branch = choose_branch(delta, n2);
            extended = 0;
            if (!sum_logs(delta, n2, false, branch, extended))
                fail(ErrorCode::BranchObstruction, "spectrum of Delta(u) straddles the chosen branch");
        }
        sum = extended;
        n = n2;
        const Complex value = std::exp(mean(n));
        const double change = std::abs(value - prev) / std::max(std::abs(value), 1e-300);
        prev = value;
        if (change < opts.quadrature_tolerance) {
            out.value = value;
            out.log_value = mean(n);
            out.quadrature_n = n;
            out.last_change = change;
            out.cut_angle = branch.cut;
            out.hull_distance = branch.distance;
            return out;
        }
    }
}

Complex euler_factor(int chi, Complex u) {
    if (chi == 0) return 1;
    return std::exp(-static_cast<double>(chi) * std::log(1.0 - u * u));
}

FormulaValue determinant_formula_value(const Instance& inst, Complex u, DetMethod method, const DetOptions& opts) {
    const double alpha = alpha_bound(inst.max_degree());
    if (inst.max_degree() > 0 && std::abs(u) >= 1 / alpha)
        fail(ErrorCode::DomainError, "|u| = " + std::to_string(std::abs(u)) +
                                         " is outside the determinant-formula region |u| < 1/alpha = " +
                                         std::to_string(1 / alpha));
    FormulaValue out;
    out.method = method;
    if (method == DetMethod::Series) {
        const SeriesValue s = det_gamma_series(inst, u, opts);
        out.det_gamma = s.value;
        out.order = s.order;
    } else {
        const QuadratureValue q = det_gamma_bloch(inst, u, opts);
        out.det_gamma = q.value;
        out.quadrature_n = q.quadrature_n;
    }
    out.inverse_zeta = euler_factor(inst.quotient().chi, u) * out.det_gamma;
    out.zeta = 1.0 / out.inverse_zeta;
    return out;
}

namespace {

void compare_into(SeriesComparison& c) {
    const int m = std::min(c.lhs.order(), c.rhs.order());
    for (int i = 0; i <= m; ++i)
        if (c.lhs[i] != c.rhs[i]) {
            c.first_mismatch = i;
            break;
        }
}

} // namespace

SeriesComparison determinant_formula_series(const Instance& inst, int order) {
    SeriesComparison c;
    const ExactSeries log_det = trace_log_delta_series(inst, order);
    const ExactSeries prefactor = binomial_series(Rational(-inst.quotient().chi), 2, Rational(-1), order);
    c.lhs = prefactor * series_exp(log_det);
    c.rhs = series_inverse(zeta_series(n_m_from_traces(inst, order), order));
    compare_into(c);
    return c;
}

SeriesComparison log_derivative_trace_check(const Instance& inst, int order) {
    if (order < 1) fail(ErrorCode::InvalidArgument, "order must be at least 1");
    const PowerExpansion pe = expand_powers(inst, order, true);
    SeriesComparison c;
    c.lhs = derivative(pe.trace_log) * Rational(-1);
    c.rhs = ExactSeries(order - 1);
    const IntKernel& a = inst.adjacency();
    const IntKernel q2 = inst.q_operator().scaled(Integer(2));
    for (int m = 0; m <= order - 1; ++m) {
        Integer t = trace_gamma(inst, a * pe.resolvent[m]);
        if (m >= 1) t -= trace_gamma(inst, q2 * pe.resolvent[m - 1]);
        c.rhs[m] = t;
    }
    compare_into(c);
    return c;
}

SeriesComparison b_trace_check(const Instance& inst, int order) {
    const auto a_seq = a_m_sequence(inst, order);
    const BSequence b = b_m_sequence(inst, a_seq, order);
    const ExactSeries log_det = trace_log_delta_series(inst, order);
    SeriesComparison c;
    c.lhs = ExactSeries(order);
    c.rhs = ExactSeries(order);
    for (int m = 1; m <= order; ++m) {
        c.lhs[m] = b.traces[m];
        c.rhs[m] = log_det[m] * (-m);
    }
    compare_into(c);
    return c;
}

namespace {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const int n = static_cast<int>(m.size());
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

ExactSeries finite_delta_determinant(const Instance& inst) {
    if (inst.is_periodic()) fail(ErrorCode::InvalidArgument, "polynomial determinant needs a finite instance");
    const int n = inst.block_size();
    const int degree = 2 * n;
    const IntKernel& a = inst.adjacency();
    const IntKernel& q = inst.q_operator();
    // Values at u = 0..degree, then Newton interpolation over Q.
    std::vector<Rational> xs(degree + 1), ys(degree + 1);
    for (int s = 0; s <= degree; ++s) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer e = -s * a.coef(i, j, {});
                if (i == j) e += 1 + s * s * q.coef(i, i, {});
                m[i][j] = e;
            }
        xs[s] = s;
        ys[s] = bareiss_determinant(std::move(m));
    }
    for (int j = 1; j <= degree; ++j)
        for (int i = degree; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    ExactSeries poly(degree);
    for (int i = degree; i >= 0; --i) {
        // poly = poly * (u - x_i) + c_i
        ExactSeries next(degree);
        for (int k = degree; k >= 0; --k) {
            Rational v = -xs[i] * poly[k];
            if (k > 0) v += poly[k - 1];
            next[k] = v;
        }
        next[0] += ys[i];
        poly = next;
    }
    return poly;
}

} // namespace izeta
