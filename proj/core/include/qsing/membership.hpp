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

#ifndef QSING_MEMBERSHIP_HPP
#define QSING_MEMBERSHIP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsing/groebner.hpp"
#include "qsing/planes.hpp"
#include "qsing/singularity.hpp"

namespace qsing {

/// Verdicts are about the points actually checked; the report's ledger
/// records what was not.
enum class MembershipVerdict { ConditionsVerified, ConditionViolated, Inconclusive };

std::string to_string(MembershipVerdict v);
MembershipVerdict membership_verdict_from_string(const std::string& s);

enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// One aggregated condition ("singular-locus", "quadratic-rank", "G", "R1",
/// "R2", "R3", "planes", "singular-lines").
struct ConditionEntry {
    std::string condition;
    CheckStatus status = CheckStatus::Skipped;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::uint64_t inconclusive = 0;
    std::string detail;

    friend bool operator==(const ConditionEntry&, const ConditionEntry&) = default;
};

template <FieldElement K>
struct MembershipWitness {
    std::optional<ProjectivePoint<K>> point;
    std::string condition;
    std::string detail;
    /// Plane, or line then 3-space, for the M = 5 subspace conditions.
    std::vector<FpSubspace> subspaces;
};

template <FieldElement K>
struct MembershipOptions {
    /// Points to check; each must lie on {f = 0}.
    std::vector<ProjectivePoint<K>> points;
    /// Over F_p: enumerate every F_p-point, check all singular ones and R1
    /// at every nonsingular one (M >= 6). Ignored over Q.
    bool all_Fp_points = false;
    std::uint64_t enumeration_budget = 5'000'000;
    GroebnerOptions groebner;
    bool compute_singular_locus = true;
    /// M = 5 subspace conditions, decided over F_p (reduced mod
    /// `reduction_prime` when f is over Q).
    bool planes = false;
    bool singular_lines = false;
    std::uint32_t reduction_prime = 0;
    SubspaceSearchOptions planes_options;
    SubspaceSearchOptions lines_options{1'000'000};
};

template <FieldElement K>
struct MembershipReport {
    unsigned M = 0;
    Field field = Field::rationals();
    /// Projective dimension of Sing F over the algebraic closure, when computed.
    std::optional<int> singular_locus_dim;
    /// Over Q: singular_locus_dim is the dimension mod a prime of good
    /// reduction, an upper bound for the dimension over Q.
    bool singular_locus_dim_is_bound = false;
    /// Singular points and supplied points, in canonical order.
    std::vector<PointReport<K>> points;
    std::uint64_t enumerated_points = 0;
    std::uint64_t enumerated_nonsingular = 0;
    std::vector<ConditionEntry> conditions;
    MembershipVerdict verdict = MembershipVerdict::Inconclusive;
    /// Present exactly when the verdict is ConditionViolated.
    std::optional<MembershipWitness<K>> witness;
    /// What was and was not checked.
    std::vector<std::string> ledger;
};

/// f must be a form of degree M >= 5 in M+1 variables.
template <FieldElement K>
MembershipReport<K> check_membership(const Polynomial<K>& f, const MembershipOptions<K>& opts = {});

/// Coefficientwise reduction. Throws PreconditionError if p divides a denominator.
Polynomial<Zp> reduce_mod(const Polynomial<Rational>& f, std::uint32_t p);

}  // namespace qsing

#endif  // QSING_MEMBERSHIP_HPP
