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

#include "izeta/instance.hpp"

#include <cmath>

namespace izeta {

Instance Instance::finite(SimpleGraph g, GroupAction action) {
    Instance inst;
    inst.kind_ = Kind::Finite;
    inst.quotient_ = izeta::quotient(g, action);
    inst.report_ = validate(g);
    inst.graph_ = std::move(g);
    inst.action_ = std::move(action);
    inst.build_kernels();
    return inst;
}

Instance Instance::finite(SimpleGraph g, GroupAction action, std::vector<int> domain) {
    Instance inst;
    inst.kind_ = Kind::Finite;
    inst.quotient_ = izeta::quotient(g, action, std::move(domain));
    inst.report_ = validate(g);
    inst.graph_ = std::move(g);
    inst.action_ = std::move(action);
    inst.build_kernels();
    return inst;
}

Instance Instance::finite(SimpleGraph g) {
    auto action = GroupAction::trivial(g.vertex_count());
    return finite(std::move(g), std::move(action));
}

Instance Instance::periodic(PeriodicGraph pg) {
    Instance inst;
    inst.kind_ = Kind::Periodic;
    inst.quotient_ = izeta::quotient(pg);
    inst.report_ = validate(pg);
    inst.action_ = GroupAction::translation(pg.rank());
    inst.periodic_ = std::move(pg);
    inst.build_kernels();
    return inst;
}

std::optional<int> Instance::regular_q() const {
    if (!report_.regular || report_.max_degree < 2) return std::nullopt;
    return report_.q;
}

int Instance::group_order() const {
    return kind_ == Kind::Finite ? action_.order() : 0;
}

void Instance::build_kernels() {
    if (kind_ == Kind::Finite) {
        const int n = graph_.vertex_count();
        adjacency_ = IntKernel(0, n);
        std::vector<Integer> qdiag(n);
        for (auto [u, v] : graph_.edges()) {
            adjacency_.add(u, v, {}, 1);
            adjacency_.add(v, u, {}, 1);
        }
        for (int v = 0; v < n; ++v) qdiag[v] = graph_.degree(v) - 1;
        q_ = IntKernel::diagonal(0, qdiag);
        step_l1_ = 0;
        return;
    }
    const int d = periodic_.rank();
    const int f = periodic_.cell_size();
    adjacency_ = IntKernel(d, f);
    std::vector<Integer> qdiag(f);
    for (int i = 0; i < f; ++i) {
        for (const auto& arc : periodic_.arcs(i)) {
            adjacency_.add(i, arc.target, arc.offset, 1);
            step_l1_ = std::max(step_l1_, l1_norm(arc.offset));
        }
        qdiag[i] = periodic_.cell_degree(i) - 1;
    }
    q_ = IntKernel::diagonal(d, qdiag);
}

double alpha_bound(int max_degree) {
    const double d = max_degree;
    return (d + std::sqrt(d * d + 4 * d)) / 2;
}

} // namespace izeta
