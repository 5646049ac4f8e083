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
#include "qsing/blowup.hpp"
#include "qsing/enumerate.hpp"
#include "qsing/singularity.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

std::vector<ProjectivePoint<Zp>> all_points(std::uint32_t p, std::size_t n) {
    std::vector<ProjectivePoint<Zp>> out;
    for_each_projective_point(p, n, [&](const std::vector<std::uint32_t>& x) {
        out.emplace_back(to_zp(p, x));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("formula and direct blow-up agree on random local models") {
    std::mt19937_64 rng(71);
    int points = 0;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const Field F = Field::prime(p);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t a = 3 + trial % 3;
            const std::size_t N = a + 1 + trial % 3;
            const auto model = random_local_model(F, a, N, rng);
            for (const auto& pt : all_points(p, N - a)) {
                const auto direct = rank_after_blowup_direct(model, pt);
                const auto formula = rank_after_blowup_formula(model, pt);
                CAPTURE(p);
                CAPTURE(pt.to_string());
                CHECK(direct.status == formula.status);
                CHECK(direct.rank == formula.rank);
                ++points;
            }
        }
    }
    CHECK(points > 100);
}

TEST_CASE("engineered kernel points hit every status") {
    // g2 = u0^2 + u1^2 + u2^2, kernel u3, u4; C = u3^2*u4 is singular at (0:1).
    const Field F = Field::prime(7);
    std::vector<Zp> diag(3, Zp::one(F));
    const auto g3 = parse_polynomial<Zp>(F, 5, "x3^2*x4 + x0*x3*x4");
    const auto with_h = LocalModel<Zp>::diagonal_model(diag, g3, parse_polynomial<Zp>(F, 5, "x4^4"));
    const auto without_h = LocalModel<Zp>::diagonal_model(diag, g3, parse_polynomial<Zp>(F, 5, "x3^4"));
    const ProjectivePoint<Zp> sing(parse_point<Zp>(F, "0:1"));
    const ProjectivePoint<Zp> smooth(parse_point<Zp>(F, "1:0"));
    const ProjectivePoint<Zp> off(parse_point<Zp>(F, "1:1"));
    CHECK(rank_after_blowup_direct(with_h, sing).status == BlowupStatus::RankAplus1);
    // h = 4 q4 - (u3 u4)^2 on the kernel, so h(0:1) = 4 q4(0:1).
    CHECK(rank_after_blowup_direct(without_h, sing).status == BlowupStatus::RankA);
    CHECK(rank_after_blowup_direct(with_h, smooth).status == BlowupStatus::RankAplus2);
    CHECK(rank_after_blowup_direct(with_h, off).status == BlowupStatus::NotOnQ);
    CHECK(exceptional_sing_locus(with_h).projective_dim == 0);
}

TEST_CASE("characteristic 3 blow-up") {
    std::mt19937_64 rng(73);
    const Field F = Field::prime(3);
    int on_q = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto model = random_local_model(F, 3, 6, rng);
        for (const auto& pt : all_points(3, 3)) {
            const auto d = rank_after_blowup_direct(model, pt);
            CHECK(d.status == rank_after_blowup_formula(model, pt).status);
            on_q += d.status != BlowupStatus::NotOnQ;
        }
    }
    CHECK(on_q > 0);
}

TEST_CASE("(G) coherence: h != 0 exactly where the direct path gives a+1") {
    std::mt19937_64 rng(79);
    int singular_points = 0, promoted = 0;
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const Field F = Field::prime(p);
        for (int trial = 0; trial < 8; ++trial) {
            const unsigned M = 5 + trial % 2;
            const auto f = rank3_form(F, M, rng, true);
            const auto rep = blow_up_rank3_point(f, basis_point<Zp>(F, M + 1, 0));
            const auto& g = rep.condition_G;
            CHECK(rep.paths_agree);
            for (const auto& w : all_points(p, M - 3)) {
                const auto c = w.coords();
                bool singular = g.restricted_cubic.evaluate(c).is_zero();
                for (std::size_t i = 0; singular && i < M - 3; ++i)
                    singular = g.restricted_cubic.partial_derivative(i).evaluate(c).is_zero();
                if (!singular) continue;
                ++singular_points;
                const bool h_nonzero = !g.h.evaluate(c).is_zero();
                const auto d = rank_after_blowup_direct(rep.model, w);
                CHECK(h_nonzero == (d.status == BlowupStatus::RankAplus1));
                promoted += h_nonzero;
            }
            CHECK(rep.consistent_with_G);
        }
    }
    CHECK(singular_points >= 24);
    CHECK(promoted > 0);
    CHECK(promoted < singular_points);
}

TEST_CASE("blow-up preconditions") {
    const Field F = Field::prime(7);
    std::vector<Zp> two(2, Zp::one(F));
    CHECK_THROWS_AS(LocalModel<Zp>::diagonal_model(two, Polynomial<Zp>(F, 4), Polynomial<Zp>(F, 4)), PreconditionError);
    const auto rank4 = load_fixture<Zp>("rank4_R3_fails_F11.txt");
    CHECK_THROWS_AS(blow_up_rank3_point(rank4.f, basis_point<Zp>(rank4.f.field(), 6, 0)), PreconditionError);
    const auto fermat = load_fixture<Rational>("fermat_quintic_Q.txt");
    const ProjectivePoint<Rational> on(parse_point<Rational>(Field::rationals(), "1:-1:0:0:0:0"));
    CHECK_THROWS_AS(blow_up_rank3_point(fermat.f, on), PreconditionError);
}
