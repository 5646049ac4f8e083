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

#ifndef QSING_CODIM_HPP
#define QSING_CODIM_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qsing/errors.hpp"

namespace qsing {

/// binom(n, k), zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

/// Lower bound for codim(P \ F). Throws PreconditionError for M < 5.
mpz_class gamma(unsigned M);

/// Number of degree-M monomials in M+1 variables, binom(2M, M).
mpz_class parameter_space_dim(unsigned M);

struct IndexedBound {
    unsigned index = 0;
    mpz_class value;
};

struct B1Bound {
    /// binom(M+4, a) for a = 6..M.
    std::vector<IndexedBound> per_a;
    mpz_class minimum;
};

/// M >= 6.
B1Bound bound_B1(unsigned M);

/// binom(M+5, 5) + M; M >= 7.
mpz_class bound_B2(unsigned M);

struct B3Bound {
    /// binom(M-5, 2) + binom(M+1, a) + M for a = 3..M-1.
    std::vector<IndexedBound> per_a;
    /// Independent conditions on f when the exceptional curve spans a
    /// b-dimensional subspace, b = 1..M-1 (h(b) for b >= 3).
    std::vector<IndexedBound> conditions_per_b;
    /// binom(M-5, 2) + M + conditions_per_b.
    std::vector<IndexedBound> per_b;
};

/// M >= 5. binom(M-5, 2) is zero for M in {5, 6}.
B3Bound bound_B3(unsigned M);

struct BGBound {
    mpz_class value;
    /// False for M in {5, 6, 7}, where the value is the target gamma(M)+M-1
    /// taken from a table rather than assembled from counted conditions.
    bool derived = true;
};

/// M + binom(M-2, 2) + 3(M-6) + 1 for M >= 8.
BGBound bound_BG(unsigned M);

/// h(t) = (t^3 + (1-2M) t^2 + (M^2+M) t + 2) / 2 at integer t (no range check).
mpz_class h_value(unsigned M, long t);

/// h(b) for b in [3, M-1]; throws PreconditionError outside that range.
mpz_class h_poly(unsigned M, long t);

/// 2 h'(t) = 3t^2 + 2(1-2M)t + M^2 + M.
mpz_class h_derivative_twice(unsigned M, long t);

/// Conditions count minus Grassmannian dimension for the b-spanning curve:
/// b(M + (M-b+2)(M-b-1)/2) + (M-b) - (b+1)(M-1-b).
mpz_class h_cross_derivation(unsigned M, long b);

struct HAnalysis {
    unsigned M = 0;
    /// h(b) for b = 3..M-1.
    std::vector<IndexedBound> values;
    mpz_class minimum;
    /// Every b attaining the minimum, increasing.
    std::vector<unsigned> minimizers;
    /// Minimizer as published: b = 3 for M in {5, 6} and M >= 8, b = M-2 for M = 7.
    unsigned claimed_minimizer = 0;
    /// The claimed b attains the true minimum.
    bool claim_holds = false;
    /// h(3) = 3M(M-5)/2 + 19, h(M-2) = M(M-1) - 1, h(M-1) = M(M-1) + 1.
    bool closed_forms_hold = false;
    /// Quarter of the discriminant of 2h': M^2 - 7M + 1. Negative means h is increasing.
    mpz_class discriminant_quarter;
    /// h'(M-2) <= 0 <= h'(M-1), i.e. M-2 <= t* <= M-1 (M >= 7 only).
    std::optional<bool> upper_root_bracketed;
    /// Both critical points of h lie in [3, M-1] (M >= 7 only).
    std::optional<bool> roots_in_segment;
};

/// M >= 5.
HAnalysis analyze_h(unsigned M);

struct InequalityCheck {
    std::string name;
    mpz_class lhs;
    mpz_class rhs;
    /// lhs > rhs when strict, lhs >= rhs otherwise.
    bool strict = false;
    bool holds = false;
    bool equality = false;
};

struct Theorem03Verdict {
    unsigned M = 0;
    mpz_class target;
    std::vector<InequalityCheck> checks;
    bool holds = false;
};

/// Every inequality the codimension count asserts, each against gamma(M) or
/// gamma(M)+M-1 as applicable.
Theorem03Verdict verify_theorem_03(unsigned M);

struct CodimReport {
    unsigned M = 0;
    mpz_class gamma;
    mpz_class dim_P;
    /// gamma(M) + M - 1, the per-point requirement.
    mpz_class target;
    BGBound B_G;
    std::optional<B1Bound> B1;
    std::optional<mpz_class> B2;
    B3Bound B3;
    HAnalysis h;
    Theorem03Verdict theorem03;
};

CodimReport codim_report(unsigned M);

}  // namespace qsing

#endif  // QSING_CODIM_HPP
