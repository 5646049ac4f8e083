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

#ifndef QSING_EXPANSION_HPP
#define QSING_EXPANSION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsing/polynomial.hpp"

namespace qsing {

/// Point of projective space, stored with its first nonzero coordinate scaled to 1.
template <FieldElement K>
class ProjectivePoint {
   public:
    explicit ProjectivePoint(std::vector<K> coords);

    std::span<const K> coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    /// Index of the first nonzero coordinate (the affine chart used for expansions).
    std::size_t chart() const noexcept { return chart_; }
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
    }

   private:
    std::vector<K> coords_;
    std::size_t chart_ = 0;
};

/// Graded pieces q_1..q_d of f in the affine chart centred at a point of {f = 0}.
///
/// The affine variables z_0..z_{n-2} are the homogeneous coordinates other
/// than the chart coordinate, in their original order: z_k is the translate
/// x_{coordinate_of[k]} - o_{coordinate_of[k]}.
template <FieldElement K>
struct TaylorExpansion {
    ProjectivePoint<K> center;
    unsigned degree = 0;
    std::vector<std::size_t> coordinate_of;
    /// q[i] is homogeneous of degree i; q[0] is the zero polynomial.
    std::vector<Polynomial<K>> q;

    std::size_t nvars() const noexcept { return coordinate_of.size(); }
    std::size_t chart() const noexcept { return center.chart(); }
    const Field& field() const noexcept { return q.front().field(); }
    /// q_i, or zero when i exceeds the degree.
    Polynomial<K> piece(unsigned i) const;
    bool is_singular() const { return q.size() < 2 || q[1].is_zero(); }
    /// q_1 + ... + q_d as one affine polynomial.
    Polynomial<K> affine_polynomial() const;
};

/// Expansion of homogeneous f at o. Throws PreconditionError if f is not
/// homogeneous, the lengths differ, or f(o) != 0.
template <FieldElement K>
TaylorExpansion<K> expand_at(const Polynomial<K>& f, const ProjectivePoint<K>& o);

/// The hyperplane q_1 = 0 parametrised as z = S w, plus the requested q_j restricted to it.
template <FieldElement K>
struct TangentRestriction {
    /// nvars x (nvars - 1) parametrisation matrix.
    Matrix<K> parametrization;
    /// Affine variable solved for in terms of the others.
    std::size_t eliminated = 0;
    std::map<unsigned, Polynomial<K>> restricted;
};

/// Solves q_1 = 0 for its first variable with nonzero coefficient. Throws
/// PreconditionError at a singular point (q_1 == 0).
template <FieldElement K>
TangentRestriction<K> restrict_to_tangent(const TaylorExpansion<K>& exp, std::span<const unsigned> degrees);

}  // namespace qsing

#endif  // QSING_EXPANSION_HPP
