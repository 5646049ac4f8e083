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

#ifndef QSING_REGULARITY_HPP
#define QSING_REGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsing/expansion.hpp"
#include "qsing/groebner.hpp"

namespace qsing {

enum class RegularityCondition { R1, R2, R3, VacuousM5 };

std::string to_string(RegularityCondition c);
RegularityCondition regularity_condition_from_string(const std::string& s);

/// Outcome of one regular-sequence condition at a point. Dimensions are
/// affine-cone dimensions: R1 expects 4 inside the tangent hyperplane, R2
/// expects 5 and R3 expects 1 in the full chart.
struct RegularityVerdict {
    RegularityCondition condition = RegularityCondition::VacuousM5;
    /// Degrees i of the forms q_i in the checked sequence.
    std::vector<unsigned> sequence;
    int expected_dim = 0;
    int actual_dim = 0;
    bool pass = false;

    friend bool operator==(const RegularityVerdict&, const RegularityVerdict&) = default;
};

/// Expected dimension of the common zeros for each condition at degree M.
int expected_dimension(RegularityCondition c, unsigned M);

/// (R1) at a nonsingular point, M >= 6: q_6..q_M restricted to T_oF.
template <FieldElement K>
RegularityVerdict check_R1(const TaylorExpansion<K>& exp, const GroebnerOptions& opts = {});

/// (R2) at a quadratic point of rank >= 7, M >= 7: q_2, q_7, ..., q_M.
template <FieldElement K>
RegularityVerdict check_R2(const TaylorExpansion<K>& exp, const GroebnerOptions& opts = {});

/// (R3) at a quadratic point of rank 3..6: q_2, q_3, ..., q_M.
template <FieldElement K>
RegularityVerdict check_R3(const TaylorExpansion<K>& exp, const GroebnerOptions& opts = {});

/// Picks the condition from the point type. `quadratic_rank` is 0 for a
/// nonsingular point. Returns VacuousM5 (pass) for nonsingular points when
/// M = 5. Throws PreconditionError for rank <= 2 or multiplicity >= 3.
template <FieldElement K>
RegularityVerdict check_regularity(const TaylorExpansion<K>& exp, int quadratic_rank, const GroebnerOptions& opts = {});

/// Local base locus of the j-th hypertangent system at o inside F.
struct HypertangentBase {
    unsigned j = 0;
    int dim = 0;           ///< dimension of Bs(Lambda_j) at o
    int codim_in_F = 0;    ///< (M - 1) - dim
    int required = 0;      ///< bound implied by the regularity condition
    bool exact = false;    ///< R3 demands equality, R1/R2 a lower bound
    bool holds = false;
};

/// Dimension at o of {q_1 = ... = q_j = 0} intersected with F, computed from
/// the ideal (q_1, ..., q_j, q_{j+1} + ... + q_M). Its components are cones
/// through o up to the last equation, so the global affine dimension equals
/// the local one. Checks codim >= j-4 (R1), >= j-5 (R2) or == j-1 (R3).
template <FieldElement K>
HypertangentBase hypertangent_base_dim(const TaylorExpansion<K>& exp, RegularityCondition condition, unsigned j,
                                       const GroebnerOptions& opts = {});

}  // namespace qsing

#endif  // QSING_REGULARITY_HPP
