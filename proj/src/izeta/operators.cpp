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

#include "izeta/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "izeta/bloch.hpp"

namespace izeta {

std::vector<IntKernel> a_m_sequence(const IntKernel& a, const IntKernel& q, int max_order) {
    if (max_order < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
    const IntKernel id = IntKernel::identity(a.rank(), a.size());
    std::vector<IntKernel> seq;
    seq.reserve(max_order + 1);
    seq.push_back(id);
    if (max_order >= 1) seq.push_back(a);
    if (max_order >= 2) seq.push_back(a * a - q - id);
    for (int m = 3; m <= max_order; ++m) seq.push_back(seq[m - 1] * a - seq[m - 2] * q);
    return seq;
}

std::vector<IntKernel> a_m_sequence(const Instance& inst, int max_order) {
    return a_m_sequence(inst.adjacency(), inst.q_operator(), max_order);
}

namespace {

IntKernel q_minus_i(const Instance& inst) { return inst.q_operator() - inst.identity(); }

void require_length(const std::vector<IntKernel>& a_seq, int needed) {
    if (static_cast<int>(a_seq.size()) < needed + 1)
        fail(ErrorCode::InvalidArgument, "A_m sequence too short: need order " + std::to_string(needed));
}

} // namespace

std::vector<Integer> t_m_closed_form(const Instance& inst, const std::vector<IntKernel>& a_seq,
                                     int max_order) {
    require_length(a_seq, std::max(0, max_order - 2));
    const IntKernel qi = q_minus_i(inst);
    std::vector<Integer> t(max_order + 1, 0);
    for (int m = 3; m <= max_order; ++m) {
        IntKernel sum(inst.rank(), inst.block_size());
        for (int j = 1; j <= (m - 1) / 2; ++j) sum += a_seq[m - 2 * j];
        t[m] = trace_gamma(inst, qi * sum);
    }
    return t;
}

std::vector<Integer> t_m_sequence(const Instance& inst, const std::vector<IntKernel>& a_seq, int max_order) {
    require_length(a_seq, std::max(0, max_order - 2));
    const IntKernel qi = q_minus_i(inst);
    std::vector<Integer> t(max_order + 1, 0);
    for (int m = 3; m <= max_order; ++m) t[m] = trace_gamma(inst, qi * a_seq[m - 2]) + t[m - 2];
    if (t != t_m_closed_form(inst, a_seq, max_order))
        throw std::logic_error("tail recursion disagrees with its closed form");
    return t;
}

BSequence b_m_sequence(const Instance& inst, const std::vector<IntKernel>& a_seq, int max_order) {
    require_length(a_seq, max_order);
    const IntKernel qi = q_minus_i(inst);
    BSequence out;
    // cumulative[m] = sum_{k=1}^{[m/2]} A_{m-2k}
    std::vector<IntKernel> cumulative(max_order + 1, IntKernel(inst.rank(), inst.block_size()));
    for (int m = 0; m <= max_order; ++m) {
        if (m >= 2) cumulative[m] = a_seq[m - 2] + cumulative[m - 2];
        IntKernel b = a_seq[m] - qi * cumulative[m];
        out.traces.push_back(trace_gamma(inst, b));
        out.kernels.push_back(std::move(b));
    }
    return out;
}

TraceLedger trace_ledger(const Instance& inst, int max_order) {
    const auto a_seq = a_m_sequence(inst, max_order);
    TraceLedger ledger;
    ledger.alpha = alpha_bound(inst.max_degree());
    ledger.tr_q_minus_i = trace_gamma(inst, q_minus_i(inst));
    ledger.t = t_m_sequence(inst, a_seq, max_order);
    ledger.tr_b = b_m_sequence(inst, a_seq, max_order).traces;
    for (int m = 0; m <= max_order; ++m) {
        ledger.tr_a.push_back(trace_gamma(inst, a_seq[m]));
        ledger.n.push_back(m == 0 ? Integer(0) : Integer(ledger.tr_a[m] - ledger.t[m]));
        if (ledger.n[m] < 0) throw std::logic_error("negative reduced cycle count at m=" + std::to_string(m));
        if (m >= 1) {
            Integer expected = ledger.n[m] - (m % 2 == 0 ? ledger.tr_q_minus_i : Integer(0));
            if (ledger.tr_b[m] != expected)
                throw std::logic_error("Tr B_m identity fails at m=" + std::to_string(m));
        }
    }
    return ledger;
}

std::vector<Integer> n_m_from_traces(const Instance& inst, int max_order) {
    const auto a_seq = a_m_sequence(inst, max_order);
    const auto t = t_m_sequence(inst, a_seq, max_order);
    std::vector<Integer> n(max_order + 1, 0);
    for (int m = 1; m <= max_order; ++m) n[m] = trace_gamma(inst, a_seq[m]) - t[m];
    return n;
}

NormCertificate norm_certificate(const Instance& inst, const std::vector<IntKernel>& a_seq,
                                 int samples_per_dim) {
    NormCertificate cert;
    const double alpha = alpha_bound(inst.max_degree());
    const auto to_c = [](const Integer& x) { return std::complex<double>(x.get_d(), 0.0); };
    cert.samples_per_dim = inst.rank() > 0 ? samples_per_dim : 0;
    for (std::size_t m = 0; m < a_seq.size(); ++m) {
        double norm = 0;
        const auto measure = [&](std::span<const double> k) {
            Eigen::MatrixXcd sym = bloch_symbol(a_seq[m], k, to_c);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
            norm = std::max(norm, es.eigenvalues().cwiseAbs().maxCoeff());
        };
        if (inst.rank() == 0)
            measure({});
        else
            for_each_grid_point(inst.rank(), samples_per_dim, measure);
        const double bound = std::pow(alpha, static_cast<double>(m));
        cert.norms.push_back(norm);
        cert.bounds.push_back(bound);
        cert.worst_ratio = std::max(cert.worst_ratio, norm / bound);
        if (norm > bound * (1 + 1e-12)) cert.holds = false;
    }
    return cert;
}

int resolvent_identity_failure(const Instance& inst, const std::vector<IntKernel>& a_seq) {
    const IntKernel& a = inst.adjacency();
    const IntKernel& q = inst.q_operator();
    const IntKernel id = inst.identity();
    const IntKernel zero(inst.rank(), inst.block_size());
    for (int m = 0; m < static_cast<int>(a_seq.size()); ++m) {
        IntKernel c = a_seq[m];
        if (m >= 1) c -= a_seq[m - 1] * a;
        if (m >= 2) c += a_seq[m - 2] * q;
        const IntKernel expected = m == 0 ? id : (m == 2 ? zero - id : zero);
        if (!(c == expected)) return m;
    }
    return -1;
}

int cumulative_identity_failure(const Instance& inst, const std::vector<IntKernel>& a_seq) {
    const IntKernel& a = inst.adjacency();
    const IntKernel& q = inst.q_operator();
    const IntKernel id = inst.identity();
    const IntKernel zero(inst.rank(), inst.block_size());
    std::vector<IntKernel> cum;
    for (int m = 0; m < static_cast<int>(a_seq.size()); ++m) {
        cum.push_back(m >= 2 ? a_seq[m] + cum[m - 2] : a_seq[m]);
        IntKernel c = cum[m];
        if (m >= 1) c -= cum[m - 1] * a;
        if (m >= 2) c += cum[m - 2] * q;
        if (!(c == (m == 0 ? id : zero))) return m;
    }
    return -1;
}

} // namespace izeta
