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

#ifndef QSING_SINGULARITY_HPP
#define QSING_SINGULARITY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsing/expansion.hpp"
#include "qsing/groebner.hpp"
#include "qsing/matrix.hpp"
#include "qsing/regularity.hpp"

namespace qsing {

/// Congruence-diagonalised quadratic form: q(P y) = sum_{i<rank} c_i y_i^2,
/// computed without leaving the base field.
template <FieldElement K>
struct QuadraticForm {
    /// Symmetric Gram matrix A with q(z) = z^T A z.
    Matrix<K> matrix;
    std::size_t rank = 0;
    /// Invertible change of variables z = P y.
    Matrix<K> change;
    /// c_1..c_rank, all nonzero.
    std::vector<K> diagonal;
};

template <FieldElement K>
QuadraticForm<K> diagonalize(const Polynomial<K>& q2);

enum class PointKind { Nonsingular, QuadraticRank, HigherMultiplicity };

std::string to_string(PointKind k);
PointKind point_kind_from_string(const std::string& s);

/// Condition (G) data at a quadratic point of rank 3, in diagonalised
/// coordinates y with q_2 = c_1 y_1^2 + c_2 y_2^2 + c_3 y_3^2.
template <FieldElement K>
struct ConditionGReport {
    std::vector<K> diagonal;
    /// M x (M-3) matrix: z = kernel_parameters * w parametrises Sing E_F.
    Matrix<K> kernel_parameters;
    /// q_3 restricted to the kernel, a cubic form in M-3 variables.
    Polynomial<K> restricted_cubic;
    /// Projective dimension of the singular locus of the cubic (-1 if empty).
    int cubic_sing_dim = -1;
    /// 4 q_4|_K - sum_i (1/c_i) (dq_3/dy_i |_K)^2.
    Polynomial<K> h;
    /// Projective dimension of {h = 0} on the singular locus of the cubic.
    int h_on_sing_dim = -1;
    bool verdict = false;
};

template <FieldElement K>
struct PointReport {
    ProjectivePoint<K> point;
    PointKind kind = PointKind::Nonsingular;
    /// rk q_2 for quadratic points, 0 otherwise.
    int rank = 0;
    /// 1 nonsingular, 2 quadratic, otherwise the lowest degree of a nonzero q_i.
    int multiplicity = 1;
    std::optional<ConditionGReport<K>> condition_G;
    std::optional<RegularityVerdict> regularity;
};

/// The cubic and quartic forms on the vertex of the quadric g_2 = 0.
///
/// g3 and g4 are in N variables with g_2 = sum_{i<a} c_i u_i^2; the result
/// lives in the N - a kernel variables u_a..u_{N-1}.
template <FieldElement K>
struct KernelForms {
    Polynomial<K> cubic;
    Polynomial<K> h;
};

template <FieldElement K>
KernelForms<K> kernel_forms(std::span<const K> diagonal, const Polynomial<K>& g3, const Polynomial<K>& g4);

/// Generators of the singular scheme of a form: the form and all its partials.
template <FieldElement K>
std::vector<Polynomial<K>> jacobian_ideal(const Polynomial<K>& form);

template <FieldElement K>
PointReport<K> classify_point(const TaylorExpansion<K>& exp);

/// Throws PreconditionError if f(o) != 0.
template <FieldElement K>
PointReport<K> classify_point(const Polynomial<K>& f, const ProjectivePoint<K>& o);

/// Throws PreconditionError unless the point is a quadratic singularity of rank 3.
template <FieldElement K>
ConditionGReport<K> check_condition_G(const TaylorExpansion<K>& exp, const GroebnerOptions& opts = {});

template <FieldElement K>
ConditionGReport<K> check_condition_G(const Polynomial<K>& f, const ProjectivePoint<K>& o,
                                      const GroebnerOptions& opts = {});

/// V(f, df/dx_0, ..., df/dx_M) as a projective variety.
template <FieldElement K>
IdealDimension<K> singular_locus_dimension(const Polynomial<K>& f, const GroebnerOptions& opts = {});

}  // namespace qsing

#endif  // QSING_SINGULARITY_HPP
