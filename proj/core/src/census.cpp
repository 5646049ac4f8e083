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

#include "qsing/census.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "qsing/codim.hpp"
#include "qsing/enumerate.hpp"
#include "qsing/errors.hpp"
#include "qsing/expansion.hpp"
#include "qsing/points.hpp"
#include "qsing/regularity.hpp"
#include "qsing/singularity.hpp"

namespace qsing {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform on [0, p) by rejection, independent of the standard library's distributions.
std::uint32_t draw(std::mt19937_64& rng, std::uint32_t p) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<std::uint32_t>(x % p);
}

mpq_class power_fraction(std::uint64_t N, std::uint32_t p, unsigned c) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), p, c);
    mpq_class q(mpz_class(std::to_string(N)), den);
    q.canonicalize();
    return q;
}

mpq_class ratio(std::uint64_t a, std::uint64_t b) {
    if (b == 0) return 0;
    mpq_class q(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    q.canonicalize();
    return q;
}

}  // namespace

CensusChecks parse_census_checks(const std::string& spec) {
    CensusChecks c{false, false, false, false, false};
    if (spec == "all") return {true, true, true, true, true};
    if (spec == "none" || spec.empty()) return c;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "rank") c.rank = true;
        else if (item == "G") c.condition_G = true;
        else if (item == "R") c.regularity = true;
        else if (item == "planes") c.planes = true;
        else if (item == "lines") c.singular_lines = true;
        else throw ParseError("unknown census check '" + item + "'", 0);
    }
    return c;
}

std::string to_string(const CensusChecks& c) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(c.rank, "rank");
    add(c.condition_G, "G");
    add(c.regularity, "R");
    add(c.planes, "planes");
    add(c.singular_lines, "lines");
    return out.empty() ? "none" : out;
}

void validate(const CensusConfig& config) {
    if (config.p == 2 || !is_prime(config.p)) throw PreconditionError("census: p must be an odd prime");
    if (config.M < 3) throw PreconditionError("census: M must be at least 3");
    if (config.M + 1 > kMaxVars) throw PreconditionError("census: too many variables");
    if (config.sample_count == 0) throw PreconditionError("census: sample_count must be at least 1");
    if ((config.checks.planes || config.checks.singular_lines) && config.M != 5)
        throw PreconditionError("census: plane and line checks need M = 5");
    const std::uint64_t N = projective_point_count(config.p, config.M + 1);
    if (N == 0 || N > config.enumeration_budget)
        throw BudgetExceeded("census: P^" + std::to_string(config.M) + "(F_" + std::to_string(config.p) +
                             ") exceeds the enumeration budget");
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

Polynomial<Zp> sample_form(const CensusConfig& config, std::uint64_t index) {
    const Field field = Field::prime(config.p);
    std::mt19937_64 rng(sample_seed(config.seed, index));
    std::vector<Term<Zp>> terms;
    for (const auto& m : monomials_of_degree(config.M + 1, config.M)) {
        const std::uint32_t c = draw(rng, config.p);
        if (c) terms.push_back({m, Zp(config.p, c)});
    }
    return Polynomial<Zp>::from_terms(field, config.M + 1, std::move(terms));
}

CensusSample analyze_sample(const CensusConfig& config, std::uint64_t index) {
    validate(config);
    const std::uint32_t p = config.p;
    const Polynomial<Zp> f = sample_form(config, index);
    // Second stream for point choices, so coefficients do not depend on r1_points.
    std::mt19937_64 rng(sample_seed(config.seed ^ 0x5bd1e995ULL, index));

    CensusSample s;
    s.index = index;
    FpFormEvaluator ev(f, config.M);
    std::vector<std::vector<std::uint32_t>> singular, on_F;
    const bool euler = config.M % p != 0;
    const bool keep_on_F = config.checks.regularity && config.M >= 6 && config.r1_points > 0;
    for_each_projective_point(p, config.M + 1, [&](const std::vector<std::uint32_t>& x) {
        ev.load(x);
        const bool zero = ev.value() == 0;
        if (zero) {
            ++s.points_on_F;
            if (keep_on_F) on_F.push_back(x);
        }
        if (ev.gradient_vanishes()) {
            if (zero) singular.push_back(x);
            else if (euler) ++s.euler_disagreements;
        }
        return true;
    });
    s.singular_points = singular.size();

    for (const auto& x : singular) {
        const auto exp = expand_at(f, to_projective_point(p, x));
        if (!exp.is_singular()) ++s.expansion_disagreements;
        if (!config.checks.rank && !config.checks.condition_G && !config.checks.regularity) continue;
        const auto report = classify_point(exp);
        if (report.kind == PointKind::HigherMultiplicity || report.rank <= 2) s.low_rank = true;
        if (report.kind != PointKind::QuadraticRank) continue;
        if (report.rank == 3) s.has_rank3_point = true;
        if (config.checks.condition_G && report.rank == 3) {
            try {
                if (!check_condition_G(exp, config.groebner).verdict) ++s.G_failures;
            } catch (const BudgetExceeded&) {
                ++s.G_inconclusive;
            }
        }
        if (config.checks.regularity && report.rank >= 3) {
            try {
                if (!check_regularity(exp, report.rank, config.groebner).pass) ++s.R_failures;
            } catch (const BudgetExceeded&) {
                ++s.R_inconclusive;
            }
        }
    }

    if (keep_on_F) {
        for (unsigned k = 0; k < config.r1_points && !on_F.empty(); ++k) {
            const auto& x = on_F[rng() % on_F.size()];
            const auto exp = expand_at(f, to_projective_point(p, x));
            if (exp.is_singular()) continue;
            try {
                if (!check_regularity(exp, 0, config.groebner).pass) ++s.R_failures;
            } catch (const BudgetExceeded&) {
                ++s.R_inconclusive;
            }
        }
    }

    if (config.checks.planes) {
        try {
            s.contains_plane = !check_no_planes_M5(f, config.planes_options).no_planes;
        } catch (const BudgetExceeded&) {
            s.planes_inconclusive = true;
        }
    }
    if (config.checks.singular_lines) {
        try {
            s.has_singular_line = !check_no_singular_line_in_3space_M5(f, config.lines_options).no_singular_line;
        } catch (const BudgetExceeded&) {
            s.lines_inconclusive = true;
        }
    }
    return s;
}

CalibrationBand calibration_band(unsigned M, std::uint32_t p, std::uint64_t samples, std::uint64_t singular) {
    CalibrationBand b;
    const std::uint64_t N = projective_point_count(p, M + 1);
    b.E1 = power_fraction(N, p, M + 1);
    mpz_class pairs = mpz_class(std::to_string(N)) * (mpz_class(std::to_string(N)) - 1) / 2, den;
    mpz_ui_pow_ui(den.get_mpz_t(), p, 2 * (M + 1));
    b.E2 = mpq_class(pairs, den);
    b.E2.canonicalize();
    const double e1 = b.E1.get_d(), e2 = b.E2.get_d();
    b.sigma = std::sqrt(e1 * (1 - (e1 - e2)) / double(samples));
    b.low = e1 - e2 - 4 * b.sigma;
    b.high = e1 + 4 * b.sigma;
    b.observed = double(singular) / double(samples);
    b.within = b.low <= b.observed && b.observed <= b.high;
    return b;
}

CensusReport run_census(const CensusConfig& config) {
    validate(config);
    CensusReport r;
    r.config = config;
    r.ambient_points = projective_point_count(config.p, config.M + 1);
    r.samples.resize(config.sample_count);

    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.sample_count));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < config.sample_count;) {
            try {
                r.samples[i] = analyze_sample(config, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = config.sample_count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    const std::uint64_t n = config.sample_count;
    const unsigned M = config.M;
    std::uint64_t singular = 0, low = 0, rank3 = 0, g_fail = 0, g_inc = 0, r_fail = 0, r_inc = 0;
    std::uint64_t planes = 0, planes_checked = 0, planes_inc = 0, lines = 0, lines_checked = 0, lines_inc = 0;
    for (const auto& s : r.samples) {
        r.total_points_on_F += s.points_on_F;
        r.total_singular_points += s.singular_points;
        r.expansion_disagreements += s.expansion_disagreements;
        r.euler_disagreements += s.euler_disagreements;
        singular += s.singular_points > 0;
        low += s.low_rank;
        rank3 += s.has_rank3_point;
        g_fail += s.G_failures > 0;
        g_inc += s.G_failures == 0 && s.G_inconclusive > 0;
        r_fail += s.R_failures > 0;
        r_inc += s.R_failures == 0 && s.R_inconclusive > 0;
        if (s.contains_plane) ++planes_checked, planes += *s.contains_plane;
        planes_inc += s.planes_inconclusive;
        if (s.has_singular_line) ++lines_checked, lines += *s.has_singular_line;
        lines_inc += s.lines_inconclusive;
    }
    r.mean_points_on_F = ratio(r.total_points_on_F, n);

    auto tally = [&](std::string name, std::uint64_t fail, std::uint64_t inc, std::uint64_t checked,
                     std::optional<unsigned> c) {
        ConditionTally t;
        t.name = std::move(name);
        t.failures = fail;
        t.inconclusive = inc;
        t.checked = checked;
        t.frequency = ratio(fail, checked);
        t.conditions_per_point = c;
        if (c) t.heuristic = power_fraction(r.ambient_points, config.p, *c);
        r.tallies.push_back(std::move(t));
    };
    tally("singular", singular, 0, n, M + 1);
    if (config.checks.rank) {
        tally("rank<=2-or-multiplicity>=3", low, 0, n,
              M + 1 + static_cast<unsigned>(binomial(long(M) - 1, 2).get_ui()));
        tally("rank-3-point", rank3, 0, n, M + 1 + static_cast<unsigned>(binomial(long(M) - 2, 2).get_ui()));
    }
    if (config.checks.condition_G) tally("G", g_fail, g_inc, rank3, std::nullopt);
    if (config.checks.regularity) tally("R", r_fail, r_inc, n, std::nullopt);
    if (config.checks.planes) tally("planes", planes, planes_inc, planes_checked, std::nullopt);
    if (config.checks.singular_lines) tally("singular-line", lines, lines_inc, lines_checked, std::nullopt);

    r.calibration = calibration_band(M, config.p, n, singular);
    return r;
}

}  // namespace qsing
