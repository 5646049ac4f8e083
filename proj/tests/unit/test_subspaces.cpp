/*
   Copyright 2026 The qsing Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qsing/planes.hpp"
#include "qsing/points.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("a hyperplane of P^5 over F_3 has 121 points") {
    const Field F = Field::prime(3);
    const auto f = parse_polynomial<Zp>(F, 6, "x0 + x1 - x5");
    CHECK(enumerate_points(f, 1'000'000).size() == 121);
    CHECK(projective_point_count(3, 6) == 364);
    CHECK_THROWS_AS(enumerate_points(f, 100), BudgetExceeded);
}

TEST_CASE("table evaluator matches term-by-term evaluation") {
    std::mt19937_64 rng(83);
    for (std::uint32_t p : {3u, 7u, 101u, 65537u}) {
        const Field F = Field::prime(p);
        const auto f = random_form(F, 5, 4, rng);
        FpFormEvaluator ev(f);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint32_t> x(5);
            for (auto& v : x) v = rng() % p;
            ev.load(x);
            const auto z = to_zp(p, x);
            CHECK(ev.value() == f.evaluate(z).value());
            for (std::size_t i = 0; i < 5; ++i) CHECK(ev.partial(i) == f.partial_derivative(i).evaluate(z).value());
        }
    }
}

TEST_CASE("enumerated and singular points match a naive scan") {
    std::mt19937_64 rng(89);
    const Field F = Field::prime(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_form(F, 4, 3, rng, 0.4) + parse_polynomial<Zp>(F, 4, "x0^2*x1");
        std::size_t on = 0, sing = 0;
        for_each_projective_point(5, 4, [&](const std::vector<std::uint32_t>& x) {
            const auto z = to_zp(5, x);
            if (!f.evaluate(z).is_zero()) return true;
            ++on;
            bool s = true;
            for (std::size_t i = 0; i < 4; ++i) s = s && f.partial_derivative(i).evaluate(z).is_zero();
            sing += s;
            return true;
        });
        CHECK(enumerate_points(f, 1'000'000).size() == on);
        CHECK(singular_points(f, 1'000'000).size() == sing);
    }
}

TEST_CASE("subspace helpers") {
    const auto s = span_of(5, {{1, 2, 0, 0}, {2, 4, 0, 0}, {0, 0, 1, 1}});
    CHECK(s.dim() == 2);
    const auto a = annihilator(s, 4);
    CHECK(a.dim() == 2);
    for (const auto& u : s.basis)
        for (const auto& v : a.basis) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < 4; ++i) dot += u[i] * v[i];
            CHECK(dot % 5 == 0);
        }
}

TEST_CASE("plane search matches the Grassmannian scan over F_3") {
    std::mt19937_64 rng(97);
    const Field F = Field::prime(3);
    int with_plane = 0;
    for (int trial = 0; trial < 6; ++trial) {
        Polynomial<Zp> f = random_form(F, 6, 5, rng, 0.3);
        if (trial % 2 == 0) {
            // x0 A + x1 B + x2 C contains the plane x0 = x1 = x2 = 0.
            f = parse_polynomial<Zp>(F, 6, "x0") * random_form(F, 6, 4, rng, 0.2) +
                parse_polynomial<Zp>(F, 6, "x1") * random_form(F, 6, 4, rng, 0.2) +
                parse_polynomial<Zp>(F, 6, "x2") * random_form(F, 6, 4, rng, 0.2);
        }
        if (f.is_zero()) continue;
        const auto fast = check_no_planes_M5(f);
        const auto naive = naive_plane_on(f);
        CAPTURE(f.to_string());
        CHECK(fast.no_planes == !naive.has_value());
        if (fast.witness) {
            CHECK(fast.witness->dim() == 3);
            CHECK(restrict_to(f, *fast.witness).is_zero());
            ++with_plane;
        }
    }
    CHECK(with_plane >= 3);
}

TEST_CASE("singular-line search matches the line x 3-space scan over F_3") {
    std::mt19937_64 rng(101);
    const Field F = Field::prime(3);
    int with_line = 0;
    for (int trial = 0; trial < 6; ++trial) {
        Polynomial<Zp> f = random_form(F, 6, 5, rng, 0.3);
        if (trial % 2 == 0) {
            // On Pi = {x4 = x5 = 0} the form lies in (x2, x3)^2, so the line
            // x2 = x3 = x4 = x5 = 0 is singular on F cap Pi.
            const auto x4 = parse_polynomial<Zp>(F, 6, "x4");
            const auto x5 = parse_polynomial<Zp>(F, 6, "x5");
            const auto sq = parse_polynomial<Zp>(F, 6, "x2^2 + x2*x3 - x3^2");
            f = x4 * random_form(F, 6, 4, rng, 0.2) + x5 * random_form(F, 6, 4, rng, 0.2) +
                sq * random_form(F, 6, 3, rng, 0.2);
        }
        if (f.is_zero()) continue;
        const auto fast = check_no_singular_line_in_3space_M5(f);
        const auto naive = naive_singular_line(f);
        CAPTURE(f.to_string());
        CHECK(fast.no_singular_line == !naive.has_value());
        if (!fast.no_singular_line) {
            REQUIRE(fast.line.has_value());
            REQUIRE(fast.three_space.has_value());
            CHECK(restrict_to(f, *fast.line).is_zero());
            // Complete the witness line to the witness 3-space and apply the
            // oracle's criterion.
            FpSubspace W{3, {}};
            for (const auto& v : fast.three_space->basis) {
                auto all = fast.line->basis;
                all.insert(all.end(), W.basis.begin(), W.basis.end());
                all.push_back(v);
                if (span_of(3, all).dim() == all.size()) W.basis.push_back(v);
            }
            REQUIRE(W.dim() == 2);
            CHECK(singular_along(f, *fast.line, W));
            ++with_line;
        }
    }
    CHECK(with_line >= 3);
}

TEST_CASE("subspace checks need a quintic in six variables") {
    const Field F = Field::prime(3);
    CHECK_THROWS_AS(check_no_planes_M5(parse_polynomial<Zp>(F, 5, "x0^5")), PreconditionError);
    CHECK_THROWS_AS(check_no_singular_line_in_3space_M5(parse_polynomial<Zp>(F, 6, "x0^4")), PreconditionError);
}
