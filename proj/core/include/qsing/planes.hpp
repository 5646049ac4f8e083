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

#ifndef QSING_PLANES_HPP
#define QSING_PLANES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsing/polynomial.hpp"

namespace qsing {

/// Linear subspace of F_p^n given by its reduced row echelon basis, so equal
/// subspaces have equal bases.
struct FpSubspace {
    std::uint32_t p = 0;
    std::vector<std::vector<std::uint32_t>> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    friend bool operator==(const FpSubspace&, const FpSubspace&) = default;
};

/// Span of the given vectors over F_p, in canonical form.
FpSubspace span_of(std::uint32_t p, std::vector<std::vector<std::uint32_t>> vectors);

/// Vectors orthogonal to every basis vector of s, in canonical form.
FpSubspace annihilator(const FpSubspace& s, std::size_t n);

/// f restricted to the subspace is identically zero, as a polynomial in the
/// subspace coordinates (not just at its F_p-points).
bool vanishes_on(const Polynomial<Zp>& f, const FpSubspace& s);

struct SubspaceSearchOptions {
    /// Cap on (number of F_p-points of {f = 0})^2 estimated from the ambient
    /// space, which bounds the line search.
    std::uint64_t work_budget = 10'000'000;
};

/// Every F_p-line on {f = 0}, in increasing order of basis. Lines come from
/// pairs of F_p-points whose joining line lies in the point set and are then
/// confirmed symbolically. Throws BudgetExceeded per the options.
std::vector<FpSubspace> lines_on_hypersurface(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts = {});

/// Outcome of a finite-field search. These are evidence over F_p only: a
/// form over Q can acquire F_p-planes or lines by reduction and vice versa.
struct PlaneCheck {
    bool no_planes = true;
    /// A 3-dimensional linear subspace (projective plane) on {f = 0}.
    std::optional<FpSubspace> witness;
    std::uint64_t lines_examined = 0;
};

/// f must be a quintic in 6 variables over F_p. Candidate planes are spans of
/// two intersecting F_p-lines on {f = 0}, confirmed symbolically.
PlaneCheck check_no_planes_M5(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts = {});

struct SingularLineCheck {
    bool no_singular_line = true;
    /// A projective line L on {f = 0} and a projective 3-space containing it
    /// along which the section is singular at every point of L.
    std::optional<FpSubspace> line;
    std::optional<FpSubspace> three_space;
    std::uint64_t lines_examined = 0;
};

/// f must be a quintic in 6 variables over F_p. A 3-space Pi containing a
/// line L on {f = 0} with L singular on the section exists iff the gradient
/// of f along L spans at most a 2-dimensional space; every F_p-line on
/// {f = 0} is tested that way.
SingularLineCheck check_no_singular_line_in_3space_M5(const Polynomial<Zp>& f,
                                                      const SubspaceSearchOptions& opts = {1'000'000});

}  // namespace qsing

#endif  // QSING_PLANES_HPP
