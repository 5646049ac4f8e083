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

#ifndef QSING_CENSUS_HPP
#define QSING_CENSUS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsing/groebner.hpp"
#include "qsing/planes.hpp"

namespace qsing {

/// Which per-sample checks run beyond locating singular points.
struct CensusChecks {
    /// Quadratic rank and multiplicity at each singular point.
    bool rank = true;
    /// Condition (G) at each rank-3 singular point.
    bool condition_G = true;
    /// The regularity condition at each singular point of rank >= 3, and R1
    /// at `r1_points` sampled nonsingular points.
    bool regularity = true;
    /// M = 5 only.
    bool planes = false;
    bool singular_lines = false;

    friend bool operator==(const CensusChecks&, const CensusChecks&) = default;
};

/// Comma-separated subset of "rank,G,R,planes,lines"; "all" and "none" are accepted.
CensusChecks parse_census_checks(const std::string& spec);
std::string to_string(const CensusChecks& c);

struct CensusConfig {
    unsigned M = 5;
    std::uint32_t p = 5;
    std::uint64_t sample_count = 100;
    std::uint64_t seed = 1;
    CensusChecks checks;
    /// Nonsingular points per sample at which R1 is checked (M >= 6).
    unsigned r1_points = 2;
    /// Largest projective space (in points) that may be enumerated.
    std::uint64_t enumeration_budget = 50'000'000;
    GroebnerOptions groebner;
    SubspaceSearchOptions planes_options;
    SubspaceSearchOptions lines_options{1'000'000};
    /// 0 picks the hardware concurrency. Results do not depend on it.
    unsigned threads = 0;
};

/// Throws PreconditionError unless p is an odd prime, M >= 3 and
/// sample_count >= 1; plane and line checks need M = 5.
void validate(const CensusConfig& config);

/// Per-sample outcome; `*_inconclusive` counts checks that hit a budget.
struct CensusSample {
    std::uint64_t index = 0;
    std::uint64_t points_on_F = 0;
    std::uint64_t singular_points = 0;
    /// Some singular point has rank <= 2 or multiplicity >= 3.
    bool low_rank = false;
    bool has_rank3_point = false;
    std::uint64_t G_failures = 0, G_inconclusive = 0;
    std::uint64_t R_failures = 0, R_inconclusive = 0;
    std::optional<bool> contains_plane;
    std::optional<bool> has_singular_line;
    bool planes_inconclusive = false, lines_inconclusive = false;
    /// Singular points where the expansion's linear part is nonzero (must stay 0).
    std::uint64_t expansion_disagreements = 0;
    /// Points with vanishing gradient but f != 0 when p does not divide M (must stay 0).
    std::uint64_t euler_disagreements = 0;
};

struct ConditionTally {
    std::string name;
    std::uint64_t failures = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t checked = 0;
    /// failures / checked, exact.
    mpq_class frequency;
    /// First-order union-bound expectation #P^M(F_p) * p^-c for the per-point
    /// condition count c, where that count is exact.
    std::optional<mpq_class> heuristic;
    std::optional<unsigned> conditions_per_point;
};

/// Band for the fraction of samples singular somewhere. E1 and E2 are the
/// first two Bonferroni terms: a point imposes M+1 independent linear
/// conditions and two distinct points impose 2(M+1) once M >= 3.
struct CalibrationBand {
    mpq_class E1, E2;
    double sigma = 0;
    double low = 0, high = 0;
    double observed = 0;
    bool within = false;
};

struct CensusReport {
    CensusConfig config;
    /// Finite-field outcomes are evidence about a random form over F_p, never a certificate over Q.
    std::string label = "EVIDENCE";
    std::uint64_t ambient_points = 0;
    std::uint64_t total_points_on_F = 0;
    mpq_class mean_points_on_F;
    std::uint64_t total_singular_points = 0;
    std::vector<ConditionTally> tallies;
    CalibrationBand calibration;
    std::uint64_t expansion_disagreements = 0;
    std::uint64_t euler_disagreements = 0;
    std::vector<CensusSample> samples;
};

/// Seed of sample i's private generator; samples never share a stream.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// The form drawn for sample i: uniform independent coefficients on all
/// degree-M monomials in M+1 variables.
Polynomial<Zp> sample_form(const CensusConfig& config, std::uint64_t index);

CensusSample analyze_sample(const CensusConfig& config, std::uint64_t index);

/// Samples run in parallel; the report is identical for any thread count.
CensusReport run_census(const CensusConfig& config);

CalibrationBand calibration_band(unsigned M, std::uint32_t p, std::uint64_t samples, std::uint64_t singular);

}  // namespace qsing

#endif  // QSING_CENSUS_HPP
