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
#include "qsing/groebner.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

GroebnerOptions engine(GroebnerAlgorithm a) {
    GroebnerOptions o;
    o.algorithm = a;
    return o;
}

}  // namespace

TEST_CASE("F4 and Buchberger return the same reduced basis over F_p") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {7u, 101u, 32003u}) {
        const Field F = Field::prime(p);
        for (int trial = 0; trial < 8; ++trial) {
            const std::size_t n = 3 + trial % 3;
            std::vector<Polynomial<Zp>> gens;
            for (std::size_t k = 0; k + 1 < n; ++k) gens.push_back(random_form(F, n, 2 + (k + trial) % 2, rng, 0.5));
            if (trial % 2) gens.push_back(random_form(F, n, 1, rng) + random_form(F, n, 2, rng, 0.3));
            const auto b = groebner_basis<Zp>(gens, engine(GroebnerAlgorithm::Buchberger));
            const auto f4 = groebner_basis<Zp>(gens, engine(GroebnerAlgorithm::F4));
            CHECK(b == f4);
            for (const auto& g : gens) CHECK(normal_form(g, std::span<const Polynomial<Zp>>(b)).is_zero());
            for (const auto& g : b) CHECK(g.leading_coefficient().is_one());
        }
    }
}

TEST_CASE("Groebner edge cases") {
    const Field F = Field::prime(7);
    std::vector<Polynomial<Zp>> none;
    CHECK(groebner_basis<Zp>(none).empty());
    std::vector<Polynomial<Zp>> unit{parse_polynomial<Zp>(F, 2, "x0 + 1"), parse_polynomial<Zp>(F, 2, "x0")};
    const auto b = groebner_basis<Zp>(unit);
    REQUIRE(b.size() == 1);
    CHECK(b[0].is_constant());
    GroebnerOptions tiny;
    tiny.step_budget = 3;
    std::mt19937_64 rng(1);
    std::vector<Polynomial<Zp>> hard;
    for (int k = 0; k < 4; ++k) hard.push_back(random_form(F, 5, 3, rng));
    CHECK_THROWS_AS(groebner_basis<Zp>(hard, tiny), BudgetExceeded);
    const std::vector<Polynomial<Rational>> over_q{parse_polynomial<Rational>(Field::rationals(), 2, "x0*x1")};
    CHECK_THROWS_AS(groebner_basis<Rational>(over_q, engine(GroebnerAlgorithm::F4)), PreconditionError);
}

TEST_CASE("ideal dimension agrees with F_p / F_{p^2} point growth (nvars <= 4)") {
    std::mt19937_64 rng(23);
    struct Shape {
        std::uint32_t p;
        std::size_t n;
        std::vector<unsigned> degrees;
    };
    // Degree products stay below p so the point-growth constant does not
    // round into the next power, and zero-dimensional projective parts have
    // degree <= 2 so every point is rational over F_{p^2}.
    const std::vector<Shape> shapes{{11, 2, {1}},    {11, 2, {2}},    {11, 3, {2}},    {11, 3, {1, 2}},
                                    {11, 2, {1, 1}}, {11, 3, {1, 1}}, {11, 3, {3}},    {7, 4, {1, 1}},
                                    {7, 4, {2}},     {7, 4, {1, 2}},  {7, 4, {1, 3}},  {7, 4, {1, 1, 2}},
                                    {7, 4, {1, 1, 1, 1}}, {11, 3, {1, 1, 1}}};
    int compared = 0;
    for (const auto& s : shapes) {
        const Field F = Field::prime(s.p);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Polynomial<Zp>> gens;
            for (auto d : s.degrees) gens.push_back(random_form(F, s.n, d, rng));
            const auto dim = ideal_dimension<Zp>(gens, s.n, true);
            CAPTURE(s.p);
            CAPTURE(s.n);
            CHECK(dim.affine_dim == point_growth_dimension(gens, s.n));
            ++compared;
        }
    }
    // Affine (non-homogeneous) ideals: a hyperbola and a point.
    const Field F = Field::prime(11);
    std::vector<Polynomial<Zp>> hyperbola{parse_polynomial<Zp>(F, 2, "x0*x1 - 1")};
    CHECK(ideal_dimension<Zp>(hyperbola, 2, false).affine_dim == 1);
    CHECK(point_growth_dimension(hyperbola, 2) == 1);
    std::vector<Polynomial<Zp>> point{parse_polynomial<Zp>(F, 3, "x0 - 2"), parse_polynomial<Zp>(F, 3, "x1 + 1"),
                                      parse_polynomial<Zp>(F, 3, "x2")};
    CHECK(ideal_dimension<Zp>(point, 3, false).affine_dim == 0);
    CHECK(point_growth_dimension(point, 3) == 0);
    CHECK(compared == 42);
}

TEST_CASE("regular sequences: generic pass, shared factors fail") {
    std::mt19937_64 rng(29);
    const Field F = Field::prime(7);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial<Zp>> gens{random_form(F, 5, 2, rng), random_form(F, 5, 3, rng), random_form(F, 5, 4, rng)};
        const auto ok = is_regular_sequence<Zp>(gens, 5, true);
        CHECK(ok.regular);
        CHECK(ok.actual_dim == 2);
        // q3 = q2 * l: the second generator adds nothing.
        gens[1] = gens[0] * random_form(F, 5, 1, rng);
        const auto bad = is_regular_sequence<Zp>(gens, 5, true);
        CHECK_FALSE(bad.regular);
        CHECK(bad.actual_dim == 3);
        // Dropping the redundant generator lets a section settle it; the full basis agrees.
        CHECK(bad.method == DimensionMethod::LinearSection);
        CHECK(ideal_dimension<Zp>(gens, 5, true).affine_dim == 3);
    }
}

TEST_CASE("a certifying linear section bounds the dimension") {
    std::mt19937_64 rng(31);
    const Field F = Field::prime(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial<Zp>> gens{random_form(F, 4, 2, rng), random_form(F, 4, 2, rng)};
        const int dim = ideal_dimension<Zp>(gens, 4, true).affine_dim;
        CHECK(dim == 2);
        CHECK(linear_section_certifies<Zp>(gens, 4, 2));
        CHECK_FALSE(linear_section_certifies<Zp>(gens, 4, 1));
    }
}
