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

#include <vector>

#include "izeta/instance.hpp"

namespace izeta {

/// A_0 = I, A_1 = A, A_2 = A^2 - Q - I, A_m = A_{m-1} A - A_{m-2} Q.
/// Entry (x, y) of A_m counts proper paths of length m from x to y.
std::vector<IntKernel> a_m_sequence(const IntKernel& a, const IntKernel& q, int max_order);
std::vector<IntKernel> a_m_sequence(const Instance& inst, int max_order);

/// Tail counts t_0..t_M from t_m = Tr((Q - I) A_{m-2}) + t_{m-2}; throws
/// std::logic_error if the recursion disagrees with the closed form.
std::vector<Integer> t_m_sequence(const Instance& inst, const std::vector<IntKernel>& a_seq, int max_order);
/// t_m = Tr((Q - I) sum_{j=1}^{[(m-1)/2]} A_{m-2j})
std::vector<Integer> t_m_closed_form(const Instance& inst, const std::vector<IntKernel>& a_seq, int max_order);

struct BSequence {
    std::vector<IntKernel> kernels;
    std::vector<Integer> traces;
};

/// B_m = A_m - (Q - I) sum_{k=1}^{[m/2]} A_{m-2k}.
BSequence b_m_sequence(const Instance& inst, const std::vector<IntKernel>& a_seq, int max_order);

struct TraceLedger {
    std::vector<Integer> tr_a;
    std::vector<Integer> t;
    std::vector<Integer> n;
    std::vector<Integer> tr_b;
    /// Tr_Gamma(Q - I)
    Integer tr_q_minus_i;
    double alpha = 0;
};

/// Traces for m = 0..M. Throws std::logic_error if N_m < 0 or the B_m trace
/// identity fails, either of which means a broken recursion.
TraceLedger trace_ledger(const Instance& inst, int max_order);

/// Reduced closed-path counts N_0..N_M (N_0 = 0) from the operator traces.
std::vector<Integer> n_m_from_traces(const Instance& inst, int max_order);

struct NormCertificate {
    std::vector<double> norms;
    std::vector<double> bounds;
    double worst_ratio = 0;
    bool holds = true;
    /// k-points per dimension used for periodic instances.
    int samples_per_dim = 0;
};

/// ||A_m|| <= alpha^m. Finite instances use the exact spectral norm;
/// periodic ones the sup of the Bloch symbol norm over a k-grid.
NormCertificate norm_certificate(const Instance& inst, const std::vector<IntKernel>& a_seq,
                                 int samples_per_dim = 32);

/// First order at which the identity fails, or -1.
/// (sum A_m u^m)(I - Au + Qu^2) = (1 - u^2) I through order M.
int resolvent_identity_failure(const Instance& inst, const std::vector<IntKernel>& a_seq);
/// (sum_m sum_{k<=m/2} A_{m-2k} u^m)(I - Au + Qu^2) = I through order M.
int cumulative_identity_failure(const Instance& inst, const std::vector<IntKernel>& a_seq);

} // namespace izeta
