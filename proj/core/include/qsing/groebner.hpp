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

#ifndef QSING_GROEBNER_HPP
#define QSING_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsing/polynomial.hpp"

namespace qsing {

enum class GroebnerAlgorithm {
    /// F4 over prime fields, Buchberger over the rationals.
    Automatic,
    Buchberger,
    F4,
};

struct GroebnerOptions {
    /// Maximum number of elementary reduction steps before BudgetExceeded.
    /// A step is one S-pair or one reduction by a basis element (F4 counts
    /// row operations in units of 64 entries).
    std::uint64_t step_budget = 50'000'000;
    /// F4 is only available over prime fields; requesting it over the
    /// rationals throws PreconditionError.
    GroebnerAlgorithm algorithm = GroebnerAlgorithm::Automatic;
    /// When nonzero, S-pairs whose lcm has larger degree are never formed.
    /// For forms the result is a Groebner basis up to that degree: it decides
    /// membership of forms of degree <= max_degree and nothing else.
    unsigned max_degree = 0;
};

/// Reduced Groebner basis in grevlex: monic, inter-reduced, sorted by
/// increasing leading monomial. The zero ideal gives an empty basis and the
/// unit ideal gives {1}.
template <FieldElement K>
std::vector<Polynomial<K>> groebner_basis(std::span<const Polynomial<K>> gens, const GroebnerOptions& opts = {});

/// Remainder of p on full division by a Groebner basis.
template <FieldElement K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const Polynomial<K>> basis);

template <FieldElement K>
struct IdealDimension {
    std::vector<Polynomial<K>> generators;
    std::vector<Polynomial<K>> groebner_basis;
    /// Dimension of the affine variety; -1 when it is empty (1 in the ideal).
    int affine_dim = -1;
    /// For homogeneous input: dimension of the projective variety (affine
    /// cone dimension minus one, -1 when only the cone point remains).
    std::optional<int> projective_dim;
    std::uint64_t steps = 0;
};

/// Dimension of V(gens) in affine nvars-space, read off the leading-monomial
/// ideal of a Groebner basis. With `homogeneous` set the generators must be
/// forms and projective_dim is filled in.
template <FieldElement K>
IdealDimension<K> ideal_dimension(std::span<const Polynomial<K>> gens, std::size_t nvars, bool homogeneous,
                                  const GroebnerOptions& opts = {});

/// Largest number of variables spanning a coordinate subspace that avoids
/// every given leading monomial; -1 if some monomial is 1.
int monomial_ideal_dimension(std::span<const Monomial> leading, std::size_t nvars);

/// True if some linear subspace of codimension r (one of `attempts` fixed
/// choices: x_{n-r..n-1} = 0, then pseudo-random graphs over the first n-r
/// variables) meets V(gens) only in the origin. Homogeneous gens only.
/// A true answer proves dim V(gens) <= r; false proves nothing.
template <FieldElement K>
bool linear_section_certifies(std::span<const Polynomial<K>> gens, std::size_t nvars, std::size_t r,
                              const GroebnerOptions& opts = {}, unsigned attempts = 4);

enum class DimensionMethod { LinearSection, Groebner };

template <FieldElement K>
struct RegularSequenceCheck {
    bool regular = false;
    int expected_dim = 0;
    int actual_dim = 0;
    DimensionMethod method = DimensionMethod::Groebner;
    /// Full computation; absent when a linear section settled the question.
    std::optional<IdealDimension<K>> dimension;
};

/// Decides whether dim V(gens) = ambient_dim - #gens. For homogeneous input a
/// forms lying in the ideal of the others are dropped first, then a
/// certifying linear section is tried against Krull's bound for the forms
/// that remain. Only if no section certifies is a full Groebner basis
/// computed.
template <FieldElement K>
RegularSequenceCheck<K> is_regular_sequence(std::span<const Polynomial<K>> gens, std::size_t ambient_dim,
                                            bool homogeneous, const GroebnerOptions& opts = {});

}  // namespace qsing

#endif  // QSING_GROEBNER_HPP
