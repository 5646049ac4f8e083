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

#include "qsing/regularity.hpp"

#include "qsing/singularity.hpp"

namespace qsing {

std::string to_string(RegularityCondition c) {
    switch (c) {
        case RegularityCondition::R1: return "R1";
        case RegularityCondition::R2: return "R2";
        case RegularityCondition::R3: return "R3";
        case RegularityCondition::VacuousM5: return "vacuous-M5";
    }
    return "unknown";
}

RegularityCondition regularity_condition_from_string(const std::string& s) {
    for (auto c : {RegularityCondition::R1, RegularityCondition::R2, RegularityCondition::R3,
                   RegularityCondition::VacuousM5})
        if (to_string(c) == s) return c;
    throw ParseError("unknown regularity condition '" + s + "'", 0);
}

int expected_dimension(RegularityCondition c, unsigned M) {
    const int m = static_cast<int>(M);
    switch (c) {
        case RegularityCondition::R1: return (m - 1) - (m - 5);
        case RegularityCondition::R2: return m - (m - 5);
        case RegularityCondition::R3: return m - (m - 1);
        case RegularityCondition::VacuousM5: return 0;
    }
    return 0;
}

namespace {

template <FieldElement K>
RegularityVerdict run_sequence(RegularityCondition c, unsigned M, std::vector<unsigned> degrees,
                               std::vector<Polynomial<K>> forms, std::size_t nvars, const GroebnerOptions& opts) {
    std::vector<Polynomial<K>> gens;
    for (auto& g : forms)
        if (!g.is_zero()) gens.push_back(std::move(g));
    RegularityVerdict v{c, std::move(degrees), expected_dimension(c, M), 0, false};
    if (gens.size() + static_cast<std::size_t>(v.expected_dim) == nvars)
        v.actual_dim = is_regular_sequence<K>(gens, nvars, true, opts).actual_dim;
    else
        v.actual_dim = ideal_dimension<K>(gens, nvars, true, opts).affine_dim;
    v.pass = v.actual_dim == v.expected_dim;
    return v;
}

template <FieldElement K>
int quadratic_rank(const TaylorExpansion<K>& exp) {
    if (!exp.piece(1).is_zero()) return 0;
    return static_cast<int>(diagonalize(exp.piece(2)).rank);
}

}  // namespace

template <FieldElement K>
RegularityVerdict check_R1(const TaylorExpansion<K>& exp, const GroebnerOptions& opts) {
    if (exp.is_singular()) throw PreconditionError("(R1) applies to nonsingular points");
    const unsigned M = exp.degree;
    if (M < 6) throw PreconditionError("(R1) needs M >= 6");
    std::vector<unsigned> degrees;
    for (unsigned i = 6; i <= M; ++i) degrees.push_back(i);
    auto tr = restrict_to_tangent(exp, degrees);
    std::vector<Polynomial<K>> forms;
    for (auto i : degrees) forms.push_back(tr.restricted.at(i));
    return run_sequence<K>(RegularityCondition::R1, M, std::move(degrees), std::move(forms), exp.nvars() - 1, opts);
}

template <FieldElement K>
RegularityVerdict check_R2(const TaylorExpansion<K>& exp, const GroebnerOptions& opts) {
    const unsigned M = exp.degree;
    if (M < 7) throw PreconditionError("(R2) needs M >= 7");
    if (!exp.is_singular() || quadratic_rank(exp) < 7)
        throw PreconditionError("(R2) applies to quadratic points of rank >= 7");
    std::vector<unsigned> degrees{2};
    for (unsigned i = 7; i <= M; ++i) degrees.push_back(i);
    std::vector<Polynomial<K>> forms;
    for (auto i : degrees) forms.push_back(exp.piece(i));
    return run_sequence<K>(RegularityCondition::R2, M, std::move(degrees), std::move(forms), exp.nvars(), opts);
}

template <FieldElement K>
RegularityVerdict check_R3(const TaylorExpansion<K>& exp, const GroebnerOptions& opts) {
    const unsigned M = exp.degree;
    const int a = exp.is_singular() ? quadratic_rank(exp) : 0;
    if (a < 3 || a > 6) throw PreconditionError("(R3) applies to quadratic points of rank 3..6");
    std::vector<unsigned> degrees;
    std::vector<Polynomial<K>> forms;
    for (unsigned i = 2; i <= M; ++i) {
        degrees.push_back(i);
        forms.push_back(exp.piece(i));
    }
    return run_sequence<K>(RegularityCondition::R3, M, std::move(degrees), std::move(forms), exp.nvars(), opts);
}

template <FieldElement K>
RegularityVerdict check_regularity(const TaylorExpansion<K>& exp, int quadratic_rank, const GroebnerOptions& opts) {
    if (quadratic_rank == 0) {
        if (exp.degree == 5) return {RegularityCondition::VacuousM5, {}, 0, 0, true};
        return check_R1(exp, opts);
    }
    if (quadratic_rank >= 7) return check_R2(exp, opts);
    if (quadratic_rank >= 3) return check_R3(exp, opts);
    throw PreconditionError("no regularity condition for quadratic rank " + std::to_string(quadratic_rank));
}

template <FieldElement K>
HypertangentBase hypertangent_base_dim(const TaylorExpansion<K>& exp, RegularityCondition condition, unsigned j,
                                       const GroebnerOptions& opts) {
    const unsigned M = exp.degree;
    const int ji = static_cast<int>(j);
    HypertangentBase out{j, 0, 0, 0, false, false};
    unsigned lo = 2;
    switch (condition) {
        case RegularityCondition::R1:
            lo = 5;
            out.required = ji - 4;
            break;
        case RegularityCondition::R2:
            lo = 6;
            out.required = ji - 5;
            break;
        case RegularityCondition::R3:
            out.required = ji - 1;
            out.exact = true;
            break;
        case RegularityCondition::VacuousM5:
            throw PreconditionError("no hypertangent inequality without a regularity condition");
    }
    if (j < lo || j + 1 > M)
        throw PreconditionError("hypertangent index j = " + std::to_string(j) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(M - 1) + "]");

    std::vector<Polynomial<K>> gens;
    for (unsigned i = 1; i <= j; ++i)
        if (!exp.piece(i).is_zero()) gens.push_back(exp.piece(i));
    Polynomial<K> tail(exp.field(), exp.nvars());
    for (unsigned i = j + 1; i <= M; ++i) tail += exp.piece(i);
    if (!tail.is_zero()) gens.push_back(std::move(tail));

    out.dim = ideal_dimension<K>(gens, exp.nvars(), false, opts).affine_dim;
    out.codim_in_F = static_cast<int>(M) - 1 - out.dim;
    out.holds = out.exact ? out.codim_in_F == out.required : out.codim_in_F >= out.required;
    return out;
}

#define QSING_INSTANTIATE(K)                                                                                     \
    template RegularityVerdict check_R1(const TaylorExpansion<K>&, const GroebnerOptions&);                      \
    template RegularityVerdict check_R2(const TaylorExpansion<K>&, const GroebnerOptions&);                      \
    template RegularityVerdict check_R3(const TaylorExpansion<K>&, const GroebnerOptions&);                      \
    template RegularityVerdict check_regularity(const TaylorExpansion<K>&, int, const GroebnerOptions&);         \
    template HypertangentBase hypertangent_base_dim(const TaylorExpansion<K>&, RegularityCondition, unsigned,    \
                                                    const GroebnerOptions&);

QSING_INSTANTIATE(Rational)
QSING_INSTANTIATE(Zp)

#undef QSING_INSTANTIATE

}  // namespace qsing
