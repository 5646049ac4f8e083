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

#include "doctest.h"
#include "qsing/codim.hpp"

using namespace qsing;

namespace {

// Independent evaluations in exact rationals, written from the closed
// forms rather than through the library's integer helpers.
mpq_class h_oracle(long M, long b) {
    const mpq_class t(b);
    return (t * t * t + mpq_class(1 - 2 * M) * t * t + mpq_class(M * M + M) * t + 2) / 2;
}

mpq_class cross_oracle(long M, long b) {
    const mpq_class conditions = mpq_class(b) * (mpq_class(M) + mpq_class((M - b + 2) * (M - b - 1)) / 2) + (M - b);
    const mpq_class grassmannian = (b + 1) * (M - 1 - b);
    return conditions - grassmannian;
}

long choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("gamma table") {
    const long expected[] = {6, 9, 15, 22, 29, 37};
    for (unsigned M = 5; M <= 10; ++M) CHECK(gamma(M) == expected[M - 5]);
    for (unsigned M = 8; M <= 30; ++M) CHECK(gamma(M) == choose(M - 1, 2) + 1);
    CHECK_THROWS_AS(gamma(4), PreconditionError);
    CHECK(parameter_space_dim(5) == 252);
}

TEST_CASE("h closed forms and cross-derivation") {
    for (long M = 7; M <= 30; ++M) {
        CHECK(mpq_class(h_value(M, M - 2)) == M * (M - 1) - 1);
        CHECK(mpq_class(h_value(M, M - 1)) == M * (M - 1) + 1);
        CHECK(2 * mpq_class(h_value(M, 3)) == 3 * M * (M - 5) + 38);
        for (long b = 3; b <= M - 1; ++b) {
            CHECK(mpq_class(h_poly(M, b)) == h_oracle(M, b));
            if (M <= 20) CHECK(mpq_class(h_cross_derivation(M, b)) == cross_oracle(M, b));
        }
    }
    CHECK_THROWS_AS(h_poly(9, 2), PreconditionError);
    CHECK_THROWS_AS(h_poly(9, 9), PreconditionError);
}

TEST_CASE("h minimum over integers lies in {3, M-2, M-1}") {
    for (unsigned M = 7; M <= 30; ++M) {
        const auto a = analyze_h(M);
        mpq_class best = h_oracle(M, 3);
        for (long b = 4; b <= long(M) - 1; ++b) best = std::min(best, h_oracle(M, b));
        CHECK(mpq_class(a.minimum) == best);
        for (auto b : a.minimizers) {
            CHECK(h_oracle(M, b) == best);
            CHECK((b == 3 || b == M - 2 || b == M - 1));
        }
        CHECK(a.closed_forms_hold);
        // h(3) - h(M-2) = (M-5)(M-8)/2 decides between the two candidates.
        CHECK(h_oracle(M, 3) - h_oracle(M, M - 2) == mpq_class((long(M) - 5) * (long(M) - 8)) / 2);
    }
    CHECK(analyze_h(8).minimizers == std::vector<unsigned>{3, 6});
}

TEST_CASE("the codimension inequalities hold for M = 5..30") {
    for (unsigned M = 5; M <= 30; ++M) {
        const auto v = verify_theorem_03(M);
        CAPTURE(M);
        CHECK(v.holds);
        CHECK(v.target == gamma(M) + M - 1);
        for (const auto& c : v.checks) CHECK(c.holds == (c.strict ? c.lhs > c.rhs : c.lhs >= c.rhs));
    }
    const auto v8 = verify_theorem_03(8);
    bool binding = false;
    for (const auto& c : v8.checks)
        if (c.name.rfind("rank<=2", 0) == 0) binding = c.equality && c.lhs == 22 && c.rhs == 22;
    CHECK(binding);
}

TEST_CASE("bound assembly") {
    CHECK(bound_B2(7) == choose(12, 5) + 7);
    const auto b1 = bound_B1(8);
    REQUIRE(b1.per_a.size() == 3);
    CHECK(b1.per_a.front().value == choose(12, 6));
    CHECK(b1.minimum == choose(12, 8));
    const auto b3 = bound_B3(6);
    CHECK(b3.per_a.front().value == choose(7, 3) + 6);
    CHECK(bound_BG(9).value == 9 + choose(7, 2) + 9 + 1);
    CHECK_FALSE(bound_BG(7).derived);
    CHECK_THROWS_AS(bound_B2(6), PreconditionError);
    const auto r = codim_report(7);
    CHECK(r.gamma == 15);
    CHECK(r.h.minimum == 40);
    CHECK_FALSE(r.h.claim_holds);
}
