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

#ifndef QSING_BLOWUP_HPP
#define QSING_BLOWUP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsing/singularity.hpp"

namespace qsing {

/// Truncated local equation g_2 + g_3 + g_4 at a quadratic point, in
/// coordinates u_0..u_{N-1} where g_2 = sum_{i<a} c_i u_i^2. Pieces of
/// degree >= 5 never reach the quadratic part at an exceptional point and
/// are not stored.
template <FieldElement K>
struct LocalModel {
    std::vector<K> diagonal;
    Polynomial<K> g3;
    Polynomial<K> g4;

    std::size_t nvars() const noexcept { return g3.nvars(); }
    std::size_t rank() const noexcept { return diagonal.size(); }
    std::size_t kernel_dim() const noexcept { return nvars() - rank(); }
    const Field& field() const noexcept { return g3.field(); }
    Polynomial<K> g2() const;

    /// Throws PreconditionError unless rank >= 3 and the pieces are
    /// homogeneous of degrees 3 and 4 in the same ring.
    static LocalModel diagonal_model(std::vector<K> diagonal, Polynomial<K> g3, Polynomial<K> g4);
    /// Diagonalises g2 and carries g3, g4 along.
    static LocalModel from_pieces(const Polynomial<K>& g2, const Polynomial<K>& g3, const Polynomial<K>& g4);
    /// The model of F at a quadratic point of rank >= 3.
    static LocalModel from_expansion(const TaylorExpansion<K>& exp);
};

enum class BlowupStatus { NotOnQ, RankAplus2, RankAplus1, RankA };

std::string to_string(BlowupStatus s);
BlowupStatus blowup_status_from_string(const std::string& s);

template <FieldElement K>
struct BlowupPointVerdict {
    /// Point of the vertex P(ker g_2), coordinates u_a..u_{N-1}.
    ProjectivePoint<K> point;
    BlowupStatus status = BlowupStatus::NotOnQ;
    /// Rank of the quadratic singularity of X+ at the point, 0 if nonsingular.
    int rank = 0;
};

/// Q = E_Y \cap Sing X+ inside the vertex: the zero set of the kernel cubic.
template <FieldElement K>
struct ExceptionalSingLocus {
    Polynomial<K> cubic;
    /// True when the cubic vanishes identically, so Q is the whole vertex.
    bool entire_kernel = false;
    int projective_dim = -1;
};

template <FieldElement K>
ExceptionalSingLocus<K> exceptional_sing_locus(const LocalModel<K>& model);

/// Closed-form rule: C(p) != 0 gives NotOnQ; some dC(p) != 0 gives a+2;
/// h(p) != 0 gives a+1; otherwise a.
template <FieldElement K>
BlowupPointVerdict<K> rank_after_blowup_formula(const LocalModel<K>& model, const ProjectivePoint<K>& p);

/// Substitutes the blow-up chart through p, divides out the exceptional
/// divisor and reads the verdict off the linear and quadratic parts of the
/// strict transform at p. Does not use h.
template <FieldElement K>
BlowupPointVerdict<K> rank_after_blowup_direct(const LocalModel<K>& model, const ProjectivePoint<K>& p);

template <FieldElement K>
struct BlowupReport {
    LocalModel<K> model;
    ConditionGReport<K> condition_G;
    /// Direct-path verdicts; one per checked point of Q, sorted.
    std::vector<BlowupPointVerdict<K>> verdicts;
    /// Formula and direct paths agreed at every checked point.
    bool paths_agree = true;
    /// Projective dimension of the rank-a locus V(C, dC, h).
    int rank_a_locus_dim = -1;
    /// Every checked point was enumerated (F_p) rather than supplied.
    bool enumerated = false;
    /// (G) implies no RankA verdict and an empty rank-a locus.
    bool consistent_with_G = true;
};

/// Checks every F_p-point of Q (or only `points` when given, which is the
/// only option over Q). Throws PreconditionError unless o is a quadratic
/// point of rank 3.
template <FieldElement K>
BlowupReport<K> blow_up_rank3_point(const Polynomial<K>& f, const ProjectivePoint<K>& o,
                                    std::optional<std::vector<ProjectivePoint<K>>> points = std::nullopt,
                                    const GroebnerOptions& opts = {});

}  // namespace qsing

#endif  // QSING_BLOWUP_HPP
