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
#include "qsing/membership.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

const ConditionEntry* entry(const std::vector<ConditionEntry>& v, const std::string& name) {
    for (const auto& e : v)
        if (e.condition == name) return &e;
    return nullptr;
}

template <FieldElement K>
MembershipOptions<K> all_points() {
    MembershipOptions<K> o;
    o.all_Fp_points = true;
    return o;
}

}  // namespace

TEST_CASE("smooth Fermat quintic over F_11: every point checked") {
    const auto fx = load_fixture<Zp>("fermat_quintic_F11.txt");
    const auto r = check_membership(fx.f, all_points<Zp>());
    CHECK(r.verdict == MembershipVerdict::ConditionsVerified);
    CHECK(r.singular_locus_dim == -1);
    CHECK(r.enumerated_points == r.enumerated_nonsingular);
    CHECK(r.points.empty());
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("rank-3 fixture with (G) and (R3)") {
    const auto fx = load_fixture<Zp>("rank3_G_holds_F11.txt");
    const auto r = check_membership(fx.f, all_points<Zp>());
    CHECK(r.verdict == MembershipVerdict::ConditionsVerified);
    REQUIRE_FALSE(r.points.empty());
    int rank3 = 0;
    for (const auto& p : r.points) rank3 += p.kind == PointKind::QuadraticRank && p.rank == 3;
    CHECK(rank3 == 1);
    CHECK(entry(r.conditions, "G")->status == CheckStatus::Pass);
    CHECK(entry(r.conditions, "R3")->status == CheckStatus::Pass);
}

TEST_CASE("(G)-violating fixture yields a witness at the rank-3 point") {
    const auto fx = load_fixture<Zp>("rank3_G_fails_F11.txt");
    const auto r = check_membership(fx.f, all_points<Zp>());
    CHECK(r.verdict == MembershipVerdict::ConditionViolated);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness->point.has_value());
    CHECK(r.witness->point->to_string() == "(1:0:0:0:0:0)");
    CHECK(r.witness->condition == "G");
}

TEST_CASE("(R3)-violating fixture reports the dimension excess") {
    const auto fx = load_fixture<Zp>("rank4_R3_fails_F11.txt");
    const auto r = check_membership(fx.f, all_points<Zp>());
    CHECK(r.verdict == MembershipVerdict::ConditionViolated);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->condition == "R3");
    CHECK(r.witness->detail.find("by 1") != std::string::npos);
}

TEST_CASE("over Q only the supplied points are checked") {
    const auto fx = load_fixture<Rational>("rank3_G_holds_Q.txt");
    MembershipOptions<Rational> o;
    o.points.push_back(basis_point<Rational>(Field::rationals(), 6, 0));
    const auto r = check_membership(fx.f, o);
    CHECK(r.verdict == MembershipVerdict::ConditionsVerified);
    CHECK(r.singular_locus_dim_is_bound);
    bool stated = false;
    for (const auto& l : r.ledger) stated |= l.find("supplied") != std::string::npos;
    CHECK(stated);
}

TEST_CASE("budgets turn into Inconclusive, never a silent pass") {
    const auto fx = load_fixture<Zp>("rank3_G_holds_F11.txt");
    auto o = all_points<Zp>();
    o.enumeration_budget = 1000;
    CHECK(check_membership(fx.f, o).verdict == MembershipVerdict::Inconclusive);
    auto g = all_points<Zp>();
    g.groebner.step_budget = 10;
    CHECK(check_membership(fx.f, g).verdict == MembershipVerdict::Inconclusive);
}

TEST_CASE("subspace checks for M = 5") {
    const auto fx = load_fixture<Rational>("fermat_quintic_Q.txt");
    MembershipOptions<Rational> o;
    o.planes = true;
    o.singular_lines = true;
    o.reduction_prime = 3;
    const auto r = check_membership(fx.f, o);
    // The Fermat quintic contains planes such as x0+x1 = x2+x3 = x4+x5 = 0.
    CHECK(r.verdict == MembershipVerdict::ConditionViolated);
    CHECK(entry(r.conditions, "planes")->status == CheckStatus::Fail);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subspaces.size() == 1);
}

TEST_CASE("membership preconditions") {
    const Field F = Field::prime(7);
    CHECK_THROWS_AS(check_membership(parse_polynomial<Zp>(F, 5, "x0^4 + x1^4")), PreconditionError);
    CHECK_THROWS_AS(check_membership(parse_polynomial<Zp>(F, 7, "x0^5")), PreconditionError);
    const auto fx = load_fixture<Zp>("fermat_quintic_F11.txt");
    MembershipOptions<Zp> o;
    o.points.push_back(basis_point<Zp>(fx.f.field(), 6, 0));
    CHECK_THROWS_AS(check_membership(fx.f, o), PreconditionError);
}
