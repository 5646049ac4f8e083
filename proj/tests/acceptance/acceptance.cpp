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

// Acceptance checks AC1..AC10. Prints one [PASS]/[FAIL] line per criterion
// followed by indented evidence; exits non-zero if any selected criterion
// fails. `--criterion ACn` runs a single one.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsing/blowup.hpp"
#include "qsing/census.hpp"
#include "qsing/codim.hpp"
#include "qsing/membership.hpp"
#include "qsing/points.hpp"
#include "qsing/regularity.hpp"
#include "qsing/singularity.hpp"
#include "report.hpp"
#include "support.hpp"

namespace {

using namespace qsing;
using namespace qsing::testing;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream log;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            log << "    violated: " << what << '\n';
        }
    }
};

std::vector<ProjectivePoint<Zp>> all_points(std::uint32_t p, std::size_t n) {
    std::vector<ProjectivePoint<Zp>> out;
    for_each_projective_point(p, n, [&](const std::vector<std::uint32_t>& x) {
        out.emplace_back(to_zp(p, x));
        return true;
    });
    return out;
}

void ac1(Outcome& o) {
    const long expected[] = {6, 9, 15, 22, 29, 37};
    const auto t0 = Clock::now();
    std::vector<mpz_class> got;
    for (unsigned M = 5; M <= 10; ++M) got.push_back(gamma(M));
    const double t = seconds_since(t0);
    for (unsigned M = 5; M <= 10; ++M)
        o.require(got[M - 5] == expected[M - 5], "gamma(" + std::to_string(M) + ") = " + got[M - 5].get_str());
    o.require(t < 1e-3, "runtime " + std::to_string(t) + " s >= 1 ms");
    o.log << "    gamma(5..10) = 6 9 15 22 29 37 in " << t * 1e6 << " us\n";
}

void ac2(Outcome& o) {
    const auto t0 = Clock::now();
    std::ostringstream mismatches;
    int identity_failures = 0;
    for (long M = 7; M <= 30; ++M) {
        identity_failures += h_value(M, M - 2) != M * (M - 1) - 1;
        identity_failures += h_value(M, M - 1) != M * (M - 1) + 1;
        identity_failures += 2 * h_value(M, 3) != 3 * M * (M - 5) + 38;
        const auto a = analyze_h(M);
        const unsigned claimed = M == 7 ? 5 : 3;
        const bool reported = std::find(a.minimizers.begin(), a.minimizers.end(), claimed) != a.minimizers.end();
        if (!reported) {
            mismatches << " M=" << M << ": min h = " << a.minimum << " at b=" << a.minimizers.front() << ", h("
                       << claimed << ") = " << h_value(M, claimed) << ";";
        }
        o.require(reported, "claimed minimizer b=" + std::to_string(claimed) + " for M=" + std::to_string(M));
    }
    const double t = seconds_since(t0);
    o.require(identity_failures == 0, std::to_string(identity_failures) + " closed-form identity failures");
    o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
    o.log << "    closed forms h(M-2), h(M-1), h(3): " << (identity_failures ? "FAIL" : "exact for M=7..30") << '\n';
    if (!mismatches.str().empty())
        o.log << "    minimizer claim disagrees with exact evaluation:" << mismatches.str() << '\n'
              << "    (h(3) - h(M-2) = (M-5)(M-8)/2, so h(3) is smaller only for M=7 and larger for M>=9)\n";
    o.log << "    runtime " << t << " s\n";
}

void ac3(Outcome& o) {
    int checked = 0;
    for (long M = 7; M <= 20; ++M)
        for (long b = 3; b <= M - 1; ++b) {
            // The cross-derivation as stated, in exact rationals.
            const mpq_class direct = mpq_class(b) * (mpq_class(M) + mpq_class((M - b + 2) * (M - b - 1)) / 2) + (M - b) -
                                     mpq_class((b + 1) * (M - 1 - b));
            o.require(mpq_class(h_poly(M, b)) == direct && h_cross_derivation(M, b) == h_poly(M, b),
                      "M=" + std::to_string(M) + " b=" + std::to_string(b));
            ++checked;
        }
    o.log << "    " << checked << " (M, b) pairs equal\n";
}

void ac4(Outcome& o) {
    for (unsigned M = 5; M <= 30; ++M) {
        const auto v = verify_theorem_03(M);
        o.require(v.holds, "inequalities fail at M=" + std::to_string(M));
    }
    bool equality = false;
    for (const auto& c : verify_theorem_03(8).checks)
        if (c.name.rfind("rank<=2", 0) == 0) equality = c.equality && c.lhs == 22 && c.rhs == gamma(8u);
    o.require(equality, "M=8 binding case binom(7,2)+1 = gamma(8) = 22 not reported as equality");
    o.log << "    all inequalities hold for M=5..30; M=8: binom(7,2)+1 = 22 = gamma(8) reported as equality\n";
}

void ac5(Outcome& o) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20260501);
    std::size_t models = 0, points = 0, agree = 0;
    for (std::uint32_t p : {5u, 7u, 11u, 13u})
        for (std::size_t a : {3u, 4u, 5u})
            for (int k = 0; k < 20; ++k) {
                const std::size_t N = std::min<std::size_t>(8, a + 1 + k % 3);
                const auto model = random_local_model(Field::prime(p), a, N, rng);
                ++models;
                for (const auto& pt : all_points(p, N - a)) {
                    const auto f = rank_after_blowup_formula(model, pt);
                    const auto d = rank_after_blowup_direct(model, pt);
                    ++points;
                    agree += f.status == d.status && f.rank == d.rank;
                }
            }
    const double t = seconds_since(t0);
    o.require(models >= 200, "only " + std::to_string(models) + " models");
    o.require(agree == points, std::to_string(points - agree) + " disagreements");
    o.require(t < 300, "runtime " + std::to_string(t) + " s");
    o.log << "    " << models << " models, " << points << " kernel points, " << agree << " agree (" << t << " s)\n";
}

void ac6(Outcome& o) {
    std::mt19937_64 rng(20260502);
    std::size_t fixtures = 0, singular = 0, agree = 0, promoted = 0;
    for (std::uint32_t p : {5u, 7u, 11u, 13u})
        for (int k = 0; k < 15; ++k) {
            const unsigned M = 5 + k % 2;
            const Field F = Field::prime(p);
            const auto f = rank3_form(F, M, rng, true);
            const auto g = check_condition_G(f, basis_point<Zp>(F, M + 1, 0));
            const auto model = LocalModel<Zp>::from_expansion(expand_at(f, basis_point<Zp>(F, M + 1, 0)));
            ++fixtures;
            for (const auto& w : all_points(p, M - 3)) {
                const auto c = w.coords();
                bool sing = g.restricted_cubic.evaluate(c).is_zero();
                for (std::size_t i = 0; sing && i < M - 3; ++i)
                    sing = g.restricted_cubic.partial_derivative(i).evaluate(c).is_zero();
                if (!sing) continue;
                ++singular;
                const bool h_nonzero = !g.h.evaluate(c).is_zero();
                const bool aplus1 = rank_after_blowup_direct(model, w).status == BlowupStatus::RankAplus1;
                agree += h_nonzero == aplus1;
                promoted += aplus1;
            }
        }
    o.require(fixtures >= 50, "only " + std::to_string(fixtures) + " fixtures");
    o.require(singular > 0 && agree == singular, std::to_string(singular - agree) + " disagreements");
    o.log << "    " << fixtures << " rank-3 fixtures, " << singular << " singular points of the kernel cubic, "
          << agree << " agree (" << promoted << " promoted to a+1, " << singular - promoted << " stay at a)\n";
}

void ac7(Outcome& o) {
    const Field F = Field::prime(7);
    std::mt19937_64 rng(20260503);
    auto quadric = [&](unsigned M, unsigned rank) {
        Polynomial<Zp> q(F, M);
        for (unsigned i = 0; i < rank; ++i) q += Polynomial<Zp>::term(F, M, Monomial::variable(i, 2), random_unit(F, rng));
        return q;
    };
    auto at_origin = [&](unsigned M, const std::vector<Polynomial<Zp>>& pieces) {
        return expand_at(form_from_pieces<Zp>(F, M, pieces), basis_point<Zp>(F, M + 1, 0));
    };
    int generic = 0, engineered = 0;
    for (unsigned M : {5u, 6u, 7u}) {
        // (R3) at ranks 3..6.
        for (unsigned rank = 3; rank <= std::min(6u, M); ++rank) {
            std::vector<Polynomial<Zp>> pieces{quadric(M, rank)};
            for (unsigned i = 3; i <= M; ++i) pieces.push_back(random_form(F, M, i, rng));
            const auto v = check_R3(at_origin(M, pieces));
            o.require(v.pass && v.actual_dim == 1, "R3 generic M=" + std::to_string(M));
            pieces[1] = pieces[0] * random_form(F, M, 1, rng);
            o.require(!check_R3(at_origin(M, pieces)).pass, "R3 engineered M=" + std::to_string(M));
            ++generic, ++engineered;
        }
        // (R1) at nonsingular points, M >= 6.
        if (M >= 6) {
            std::vector<Polynomial<Zp>> pieces{parse_polynomial<Zp>(F, M, "x0")};
            for (unsigned i = 2; i <= M; ++i) pieces.push_back(random_form(F, M, i, rng));
            const auto v = check_R1(at_origin(M, pieces));
            o.require(v.pass && v.actual_dim == 4, "R1 generic M=" + std::to_string(M));
            // pieces[i-1] = q_i. On T = {x0 = 0}: M=6 kills q_6, M=7 makes q_7 a multiple of q_6.
            if (M == 6) pieces[5] = pieces[0] * random_form(F, M, 5, rng);
            else pieces[6] = pieces[0] * random_form(F, M, 6, rng) + pieces[5] * random_form(F, M, 1, rng);
            o.require(!check_R1(at_origin(M, pieces)).pass, "R1 engineered M=" + std::to_string(M));
            ++generic, ++engineered;
        }
        // (R2) at a rank-7 point, M = 7.
        if (M == 7) {
            std::vector<Polynomial<Zp>> pieces{quadric(7, 7)};
            for (unsigned i = 3; i <= 7; ++i) pieces.push_back(random_form(F, 7, i, rng));
            const auto v = check_R2(at_origin(7, pieces));
            o.require(v.pass && v.actual_dim == 5, "R2 generic");
            pieces.back() = pieces[0] * random_form(F, 7, 5, rng);
            o.require(!check_R2(at_origin(7, pieces)).pass, "R2 engineered");
            ++generic, ++engineered;
        }
    }
    // Groebner dimension against point growth over F_p and F_{p^2}.
    int oracle = 0;
    const std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> shapes3{
        {11, {1}}, {11, {2}}, {11, {3}}, {11, {1, 1}}, {11, {1, 2}}, {11, {1, 1, 1}}};
    const std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> shapes4{
        {7, {1}}, {7, {2}}, {7, {1, 1}}, {7, {1, 2}}, {7, {1, 3}}, {7, {1, 1, 2}}, {7, {1, 1, 1, 1}}};
    for (const auto& [n, shapes] : {std::pair{std::size_t(3), shapes3}, std::pair{std::size_t(4), shapes4}})
        for (const auto& [p, degrees] : shapes)
            for (int k = 0; k < 2; ++k) {
                const Field Fp = Field::prime(p);
                std::vector<Polynomial<Zp>> gens;
                for (auto d : degrees) gens.push_back(random_form(Fp, n, d, rng));
                const int g = ideal_dimension<Zp>(gens, n, true).affine_dim;
                const int pg = point_growth_dimension(gens, n);
                o.require(g == pg, "dimension " + std::to_string(g) + " vs point growth " + std::to_string(pg));
                ++oracle;
            }
    o.log << "    " << generic << " generic sequences pass with dims 4/5/1, " << engineered
          << " engineered failures rejected, " << oracle << " Groebner dimensions match point growth\n";
}

void ac8(Outcome& o) {
    const auto t0 = Clock::now();
    const auto fp = load_fixture<Zp>("fermat_quintic_F11.txt");
    const std::uint32_t p = 11;
    FpFormEvaluator ev(fp.f);
    std::uint64_t ambient = 0, on = 0, nonsingular = 0;
    for_each_projective_point(p, 6, [&](const std::vector<std::uint32_t>& x) {
        ++ambient;
        ev.load(x);
        if (ev.value() != 0) return true;
        ++on;
        // Classify through the full expansion path, not the evaluator.
        nonsingular += classify_point(fp.f, to_projective_point(p, x)).kind == PointKind::Nonsingular;
        return true;
    });
    const auto q = load_fixture<Rational>("fermat_quintic_Q.txt");
    const auto sing = singular_locus_dimension(q.f);
    const double t = seconds_since(t0);
    o.require(ambient == projective_point_count(11, 6), "ambient count");
    o.require(on == nonsingular, std::to_string(on - nonsingular) + " points not nonsingular");
    o.require(!sing.projective_dim || *sing.projective_dim == -1, "singular locus over Q is not empty");
    o.require(t < 300, "runtime " + std::to_string(t) + " s");
    o.log << "    P^5(F_11): " << ambient << " points, " << on << " on F, all nonsingular; Sing F over Q empty ("
          << t << " s)\n";
}

void ac9(Outcome& o) {
    MembershipOptions<Zp> opts;
    opts.all_Fp_points = true;
    const auto good = load_fixture<Zp>("rank3_G_holds_F11.txt");
    const auto r = check_membership(good.f, opts);
    int rank3 = 0;
    for (const auto& pr : r.points) rank3 += pr.kind == PointKind::QuadraticRank && pr.rank == 3;
    o.require(rank3 == 1, "fixture has " + std::to_string(rank3) + " rank-3 points");
    o.require(r.verdict == MembershipVerdict::ConditionsVerified, "verdict " + to_string(r.verdict));
    const auto o3 = basis_point<Zp>(good.f.field(), 6, 0);
    const auto b = blow_up_rank3_point(good.f, o3);
    bool promoted = !b.verdicts.empty();
    for (const auto& v : b.verdicts) promoted = promoted && v.rank >= 4;
    o.require(promoted, "an exceptional point of Q keeps rank < 4");
    o.require(b.paths_agree, "formula and direct paths disagree");

    const auto bad = load_fixture<Zp>("rank3_G_fails_F11.txt");
    const auto rb = check_membership(bad.f, opts);
    const bool witnessed = rb.verdict == MembershipVerdict::ConditionViolated && rb.witness && rb.witness->point &&
                           *rb.witness->point == o3 && rb.witness->condition == "G";
    o.require(witnessed, "(G)-violating fixture lacks a (G) witness at (1:0:0:0:0:0)");
    o.log << "    rank-3 fixture: " << to_string(r.verdict) << ", Q has " << b.verdicts.size()
          << " F_11-points, ranks after blow-up:";
    for (const auto& v : b.verdicts) o.log << ' ' << v.rank;
    o.log << "\n    (G)-violating fixture: " << to_string(rb.verdict) << " at "
          << (rb.witness && rb.witness->point ? rb.witness->point->to_string() : "-") << '\n';
}

void ac10(Outcome& o) {
    CensusConfig c;
    c.M = 5;
    c.p = 5;
    c.sample_count = 500;
    c.seed = 42;
    const auto t0 = Clock::now();
    const auto first = run_census(c);
    c.threads = 1;
    const auto second = run_census(c);
    const double t = seconds_since(t0);
    const auto a = report::to_json(first, true).dump(2) + report::render_text(first);
    const auto b = report::to_json(second, true).dump(2) + report::render_text(second);
    o.require(a == b, "reports differ between runs");
    // The band is recomputed here from the per-point condition count.
    const double N = 3906, q = 15625;
    const double E1 = N / q, E2 = N * (N - 1) / 2 / (q * q);
    const double sigma = std::sqrt(E1 * (1 - (E1 - E2)) / 500);
    const double low = E1 - E2 - 4 * sigma, high = E1 + 4 * sigma;
    std::uint64_t singular = 0;
    for (const auto& s : first.samples) singular += s.singular_points > 0;
    const double observed = double(singular) / 500;
    o.require(observed >= low && observed <= high, "frequency outside the band");
    o.require(first.calibration.within, "library calibration disagrees");
    o.log << "    two runs (default threads and 1 thread) byte-identical; singular-somewhere " << singular
          << "/500 = " << observed << " in [" << low << ", " << high << "] (" << t << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
    const char* titles[] = {"gamma table",
                            "h-analysis closed forms and minimizer",
                            "h cross-derivation",
                            "codimension inequalities M=5..30",
                            "blow-up formula vs direct computation",
                            "(G) and blow-up coherence",
                            "regular-sequence checker",
                            "Fermat quintic end-to-end",
                            "rank-3 fixtures end-to-end",
                            "census determinism and calibration"};
    std::string only;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--criterion") only = argv[i + 1];
    bool all_pass = true, ran = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && criteria[i].first != only) continue;
        ran = true;
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << criteria[i].first << " " << titles[i] << '\n' << o.log.str();
        all_pass = all_pass && o.pass;
    }
    if (!ran) {
        std::cerr << "unknown criterion " << only << '\n';
        return 3;
    }
    return all_pass ? 0 : 1;
}
