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

#include <functional>

#include "izeta/functional_eq.hpp"
#include "izeta/graph_io.hpp"
#include "oracles.hpp"

using namespace izeta;

namespace {

Instance load(const char* name) {
    return read_graph_file(std::string(IZETA_TEST_DATA) + "/" + name + ".graph").instance();
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

/// Completions of K4 (q = 2, |VB| = 4, chi = -2) from the determinant alone;
/// every exponent is an integer, so no branch choice enters.
struct K4Oracle {
    oracle::Adj adj = oracle::adjacency_lists(4, oracle::complete_edges(4));
    Complex det(Complex u) const { return oracle::delta_det(adj, u); }
    Complex lambda(Complex u) const {
        return std::pow(1.0 - u * u, 2) * std::pow(1.0 - 4.0 * u * u, 2) / det(u);
    }
    Complex xi(Complex u) const { return std::pow(1.0 - u, 4) * std::pow(1.0 - 2.0 * u, 4) / det(u); }
    Complex big_xi(Complex u) const { return std::pow(1.0 + 2.0 * u * u, 4) / det(u); }
};

} // namespace

TEST_CASE("membership in the holomorphy domain") {
    CHECK(omega_contains(0.1, 2));
    CHECK_FALSE(omega_contains(1 / std::sqrt(2.0), 2));
    CHECK_FALSE(omega_contains(Complex(0, 1 / std::sqrt(2.0)), 2));
    CHECK_FALSE(omega_contains(0.7, 2));
    CHECK_FALSE(omega_contains(-0.6, 2));
    CHECK_FALSE(omega_contains(1.0, 2));
    CHECK(omega_contains(Complex(0.9, 0.1), 2));
    CHECK(omega_contains(2.0, 2));
    CHECK(omega_contains(-0.4, 2));
    CHECK_FALSE(omega_contains(0.5, 3));
    CHECK(omega_contains(0.3, 3));
    CHECK_FALSE(omega_contains(1.0, 1));
    CHECK(omega_margin(0.1, 2) == doctest::Approx(0.4));
    CHECK(omega_margin(Complex(0.9, 0.1), 2) == doctest::Approx(0.1));
    CHECK(omega_margin(0.0, 4) == doctest::Approx(0.25));
}

TEST_CASE("K4 completions agree with the determinant oracle") {
    Instance k4 = load("k4");
    RegularZetaContext ctx(k4);
    CHECK(ctx.q() == 2);
    CHECK(ctx.vb() == 4);
    CHECK(ctx.chi() == -2);
    K4Oracle ref;
    for (Complex u : {Complex(0.2, 0.1), Complex(-0.3, 0.4), Complex(1.1, -0.6)}) {
        Completions c = completions(ctx, u);
        CHECK(std::abs(c.lambda - ref.lambda(u)) < 1e-10 * std::max(1.0, std::abs(c.lambda)));
        CHECK(std::abs(c.xi - ref.xi(u)) < 1e-10 * std::max(1.0, std::abs(c.xi)));
        CHECK(std::abs(c.big_xi - ref.big_xi(u)) < 1e-10 * std::max(1.0, std::abs(c.big_xi)));
    }
}

TEST_CASE("K4 satisfies the equations with an even sign") {
    Instance k4 = load("k4");
    RegularZetaContext ctx(k4);
    K4Oracle ref;
    for (Complex u : sample_omega_pairs(2, 20, 99)) {
        FunctionalResiduals r = check_functional_equations(ctx, u);
        CHECK(r.lambda_sign == 1);
        CHECK(r.lambda < 1e-10);
        CHECK(r.xi < 1e-10);
        CHECK(r.big_xi < 1e-10);
        // the oracle confirms Lambda(u) = +Lambda(1/(qu)) independently
        CHECK(mixed_residual(ref.lambda(u), ref.lambda(1.0 / (2.0 * u))) < 1e-10);
    }
    // with four vertices in the quotient the minus sign does not hold
    FunctionalResiduals r = check_functional_equations(ctx, Complex(0.2, 0.3));
    CHECK(r.lambda_minus > 1e-3);
}

TEST_CASE("odd quotients carry the minus sign") {
    Instance c5 = load("c5");
    RegularZetaContext ctx(c5);
    for (Complex u : sample_omega_pairs(1, 10, 5)) {
        FunctionalResiduals r = check_functional_equations(ctx, u);
        CHECK(r.lambda_sign == -1);
        CHECK(r.lambda < 1e-10);
        CHECK(r.lambda_minus < 1e-10);
        CHECK(r.xi < 1e-10);
        CHECK(r.big_xi < 1e-10);
    }
}

TEST_CASE("lattices") {
    for (const char* name : {"z2", "honeycomb"}) {
        CAPTURE(name);
        Instance inst = load(name);
        RegularZetaContext ctx(inst);
        for (Complex u : sample_omega_pairs(ctx.q(), 4, 3)) {
            FunctionalResiduals r = check_functional_equations(ctx, u);
            CHECK(r.lambda_sign == (ctx.vb() % 2 ? -1 : 1));
            CHECK(r.lambda < 1e-8);
            CHECK(r.xi < 1e-8);
            CHECK(r.big_xi < 1e-8);
            CHECK(reflection_check(ctx, u).residual < 1e-9);
        }
    }
}

TEST_CASE("reflection identity against the oracle") {
    Instance k4 = load("k4");
    RegularZetaContext ctx(k4);
    K4Oracle ref;
    const Complex u(0.3, 0.25);
    ReflectionCheck c = reflection_check(ctx, u);
    CHECK(std::abs(c.rhs - ref.det(u)) < 1e-12);
    CHECK(std::abs(c.lhs - ref.det(1.0 / (2.0 * u)) * std::pow(2.0 * u * u, 4)) < 1e-12);
    CHECK(c.residual < 1e-12);
}

TEST_CASE("preconditions") {
    Instance paw = load("paw");
    CHECK(code_of([&] { RegularZetaContext ctx(paw); }) == ErrorCode::NotRegular);
    Instance k4 = load("k4");
    RegularZetaContext ctx(k4);
    CHECK(code_of([&] { completions(ctx, 1 / std::sqrt(2.0)); }) == ErrorCode::OutsideOmega);
    CHECK(code_of([&] { check_functional_equations(ctx, 0.75); }) == ErrorCode::OutsideOmega);
}

TEST_CASE("seeded sampling") {
    auto a = sample_omega_pairs(3, 50, 12345);
    auto b = sample_omega_pairs(3, 50, 12345);
    auto c = sample_omega_pairs(3, 50, 12346);
    CHECK(a == b);
    CHECK(a != c);
    REQUIRE(a.size() == 50);
    for (Complex u : a) {
        const Complex v = 1.0 / (3.0 * u);
        CHECK(std::abs(u) >= 0.05);
        CHECK(std::abs(u) <= 1.5);
        CHECK(omega_margin(u, 3) >= 0.05);
        CHECK(omega_margin(v, 3) >= 0.05);
        CHECK(std::abs(u.imag()) >= 0.05);
        CHECK(std::abs(v.imag()) >= 0.05);
    }
}

TEST_CASE("mixed residual") {
    CHECK(mixed_residual(0.0, 1e-3) == doctest::Approx(1e-3));
    CHECK(mixed_residual(100.0, 101.0) == doctest::Approx(0.01));
}
