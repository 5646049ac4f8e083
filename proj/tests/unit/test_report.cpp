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
#include "report.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

// Each record must parse back into a value that serialises identically.

TEST_CASE("membership record round-trips") {
    for (const char* name : {"rank3_G_holds_F11.txt", "rank3_G_fails_F11.txt", "rank4_R3_fails_F11.txt"}) {
        const auto fx = load_fixture<Zp>(name);
        MembershipOptions<Zp> o;
        o.all_Fp_points = true;
        const auto r = check_membership(fx.f, o);
        const auto j = report::to_json(r);
        const auto back = report::membership_report_from_json<Zp>(j);
        CHECK(report::to_json(back) == j);
        CHECK(back.verdict == r.verdict);
        CHECK(back.conditions == r.conditions);
        CHECK(back.points.size() == r.points.size());
        CHECK(report::json::parse(j.dump()) == j);
    }
}

TEST_CASE("point record over Q round-trips") {
    const auto fx = load_fixture<Rational>("rank3_G_holds_Q.txt");
    const auto o = basis_point<Rational>(Field::rationals(), 6, 0);
    const auto r = classify_point(fx.f, o);
    const auto j = report::to_json(r);
    const auto back = report::point_report_from_json<Rational>(j, Field::rationals());
    CHECK(report::to_json(back) == j);
    CHECK(back.point == r.point);
}

TEST_CASE("blow-up record round-trips") {
    const auto fx = load_fixture<Zp>("rank3_G_holds_F11.txt");
    const auto r = blow_up_rank3_point(fx.f, basis_point<Zp>(fx.f.field(), 6, 0));
    const auto j = report::to_json(r);
    const auto back = report::blowup_report_from_json<Zp>(j);
    CHECK(report::to_json(back) == j);
    CHECK(back.model.g3 == r.model.g3);
    CHECK(back.verdicts.size() == r.verdicts.size());
}

TEST_CASE("codim record round-trips") {
    for (unsigned M : {5u, 6u, 7u, 8u, 13u}) {
        const auto j = report::to_json(codim_report(M));
        CHECK(report::to_json(report::codim_report_from_json(j)) == j);
    }
}

TEST_CASE("census record round-trips") {
    CensusConfig c;
    c.sample_count = 8;
    c.seed = 4;
    c.threads = 2;
    const auto r = run_census(c);
    for (bool per_sample : {false, true}) {
        const auto j = report::to_json(r, per_sample);
        CHECK(report::to_json(report::census_report_from_json(j), per_sample) == j);
    }
}
