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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qsing/blowup.hpp"
#include "qsing/census.hpp"
#include "qsing/enumerate.hpp"
#include "qsing/groebner.hpp"
#include "qsing/points.hpp"
#include "qsing/regularity.hpp"
#include "qsing/text.hpp"

namespace {

using qsing::Field;
using qsing::Polynomial;
using qsing::Zp;

Polynomial<Zp> random_form(const Field& F, std::size_t n, unsigned d, std::mt19937_64& rng) {
    std::vector<qsing::Term<Zp>> terms;
    for (const auto& m : qsing::monomials_of_degree(n, d))
        terms.push_back({m, Zp(F.characteristic(), rng() % F.characteristic())});
    return Polynomial<Zp>::from_terms(F, n, std::move(terms));
}

// Forms of degrees 2, 3, 3, 4 in n variables over F_7: a complete
// intersection, so both engines do the same amount of algebra.
std::vector<Polynomial<Zp>> regular_sequence(std::size_t n) {
    const Field F = Field::prime(7);
    std::mt19937_64 rng(5);
    return {random_form(F, n, 2, rng), random_form(F, n, 3, rng), random_form(F, n, 3, rng),
            random_form(F, n, 4, rng)};
}

void run_engine(benchmark::State& st, qsing::GroebnerAlgorithm algo) {
    const auto gens = regular_sequence(static_cast<std::size_t>(st.range(0)));
    qsing::GroebnerOptions opts;
    opts.algorithm = algo;
    for (auto _ : st) benchmark::DoNotOptimize(qsing::groebner_basis<Zp>(gens, opts));
}

void BM_GroebnerF4(benchmark::State& st) { run_engine(st, qsing::GroebnerAlgorithm::F4); }
void BM_GroebnerBuchberger(benchmark::State& st) { run_engine(st, qsing::GroebnerAlgorithm::Buchberger); }
BENCHMARK(BM_GroebnerF4)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroebnerBuchberger)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RegularSequenceCertificate(benchmark::State& st) {
    const auto gens = regular_sequence(6);
    for (auto _ : st) benchmark::DoNotOptimize(qsing::is_regular_sequence<Zp>(gens, 6, true));
}
BENCHMARK(BM_RegularSequenceCertificate)->Unit(benchmark::kMillisecond);

// Singular points of a random quintic fourfold over F_p: range(0) = p.
void BM_SingularPoints(benchmark::State& st) {
    const Field F = Field::prime(static_cast<std::uint64_t>(st.range(0)));
    std::mt19937_64 rng(11);
    const auto f = random_form(F, 6, 5, rng);
    for (auto _ : st) benchmark::DoNotOptimize(qsing::singular_points(f, 50'000'000));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * qsing::projective_point_count(F.characteristic(), 6)));
}
BENCHMARK(BM_SingularPoints)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BlowupRank3(benchmark::State& st) {
    const Field F = Field::prime(11);
    const auto f = qsing::parse_polynomial<Zp>(
        F, 6,
        "x0^3*x1^2 + x0^3*x2^2 + x0^3*x3^2 + x0^2*x4^2*x5 + x0^2*x1*x4*x5 + 3*x0*x5^4 + 2*x0*x4^4"
        " + x0*x1*x2*x3*x4 + x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
    const qsing::ProjectivePoint<Zp> o(qsing::parse_point<Zp>(F, "1:0:0:0:0:0"));
    for (auto _ : st) benchmark::DoNotOptimize(qsing::blow_up_rank3_point<Zp>(f, o));
}
BENCHMARK(BM_BlowupRank3)->Unit(benchmark::kMillisecond);

void BM_CensusSample(benchmark::State& st) {
    qsing::CensusConfig config;
    config.M = static_cast<unsigned>(st.range(0));
    config.p = 5;
    std::uint64_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(qsing::analyze_sample(config, i++));
}
BENCHMARK(BM_CensusSample)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
