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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/kernel.hpp"

namespace izeta {

using IntKernel = Kernel<Integer>;

/// A graph together with the free group acting on it: the unit every
/// computation in the library takes. Holds the quotient data and the
/// integer kernels A and Q on the trace domain.
class Instance {
public:
    enum class Kind { Finite, Periodic };

    /// Raises NotFree for non-free actions.
    static Instance finite(SimpleGraph g, GroupAction action);
    /// Uses a caller-chosen fundamental domain for Tr_Gamma.
    static Instance finite(SimpleGraph g, GroupAction action, std::vector<int> domain);
    static Instance finite(SimpleGraph g);
    static Instance periodic(PeriodicGraph pg);

    Kind kind() const { return kind_; }
    bool is_periodic() const { return kind_ == Kind::Periodic; }
    const SimpleGraph& graph() const { return graph_; }
    const GroupAction& action() const { return action_; }
    const PeriodicGraph& periodic_graph() const { return periodic_; }
    const QuotientData& quotient() const { return quotient_; }
    const ValidationReport& report() const { return report_; }

    int max_degree() const { return report_.max_degree; }
    std::optional<int> regular_q() const;

    /// Lattice rank of the kernels (0 for finite graphs).
    int rank() const { return adjacency_.rank(); }
    /// Block dimension: |V| for finite graphs, |F| for periodic ones.
    int block_size() const { return adjacency_.size(); }
    std::span<const int> trace_domain() const { return quotient_.fundamental_domain; }

    const IntKernel& adjacency() const { return adjacency_; }
    /// diag(deg(v) - 1)
    const IntKernel& q_operator() const { return q_; }
    IntKernel identity() const { return IntKernel::identity(rank(), block_size()); }

    /// Largest l1 norm of an adjacency offset (0 for finite graphs).
    int step_l1() const { return step_l1_; }
    /// Tr_Gamma(I) = |VB|.
    int tau_identity() const { return quotient_.vb; }
    /// |Gamma| for finite actions, 0 for translations.
    int group_order() const;

    std::string label;

private:
    void build_kernels();

    Kind kind_ = Kind::Finite;
    SimpleGraph graph_;
    GroupAction action_;
    PeriodicGraph periodic_;
    QuotientData quotient_;
    ValidationReport report_;
    IntKernel adjacency_;
    IntKernel q_;
    int step_l1_ = 0;
};

/// Tr_Gamma over the instance's fundamental domain.
template <class T>
T trace_gamma(const Instance& inst, const Kernel<T>& k) {
    if (k.rank() != inst.rank() || k.size() != inst.block_size())
        fail(ErrorCode::ActionMismatch, "kernel does not belong to this instance");
    return k.trace_over(inst.trace_domain());
}

/// (d + sqrt(d^2 + 4d)) / 2
double alpha_bound(int max_degree);

} // namespace izeta
