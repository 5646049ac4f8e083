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

#include "qsing/codim.hpp"

#include <algorithm>
#include <string>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

void require_M(unsigned M, unsigned lowest, const char* what) {
    if (M < lowest)
        throw PreconditionError(std::string(what) + " requires M >= " + std::to_string(lowest) +
                                ", got M = " + std::to_string(M));
}

mpz_class z(long v) { return mpz_class(v); }

// Clamped at zero for M in {5, 6}.
mpz_class b3_prefix(unsigned M) { return M >= 7 ? binomial(long(M) - 5, 2) : mpz_class(0); }

InequalityCheck check(std::string name, const mpz_class& lhs, const mpz_class& rhs,
                      bool strict) {
    InequalityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.strict = strict;
    c.holds = strict ? lhs > rhs : lhs >= rhs;
    c.equality = lhs == rhs;
    return c;
}

}  // namespace

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class gamma(unsigned M) {
    require_M(M, 5, "gamma");
    switch (M) {
        case 5: return 6;
        case 6: return 9;
        case 7: return 15;
        default: return binomial(long(M) - 1, 2) + 1;
    }
}

mpz_class parameter_space_dim(unsigned M) { return binomial(2 * long(M), long(M)); }

B1Bound bound_B1(unsigned M) {
    require_M(M, 6, "bound_B1");
    B1Bound out;
    for (unsigned a = 6; a <= M; ++a) out.per_a.push_back({a, binomial(long(M) + 4, a)});
    out.minimum = out.per_a.front().value;
    for (const auto& e : out.per_a) out.minimum = std::min(out.minimum, e.value);
    return out;
}

mpz_class bound_B2(unsigned M) {
    require_M(M, 7, "bound_B2");
    return binomial(long(M) + 5, 5) + M;
}

B3Bound bound_B3(unsigned M) {
    require_M(M, 5, "bound_B3");
    const mpz_class prefix = b3_prefix(M);
    B3Bound out;
    for (unsigned a = 3; a + 1 <= M; ++a)
        out.per_a.push_back({a, prefix + binomial(long(M) + 1, a) + M});
    for (unsigned b = 1; b + 1 <= M; ++b) {
        mpz_class count;
        if (b == 1)
            count = binomial(M, 2) + 2;
        else if (b == 2)
            count = z(long(M) * M - M + 1);
        else
            count = h_value(M, b);
        out.conditions_per_b.push_back({b, count});
        out.per_b.push_back({b, prefix + M + count});
    }
    return out;
}

BGBound bound_BG(unsigned M) {
    require_M(M, 5, "bound_BG");
    if (M < 8) return {gamma(M) + M - 1, false};
    return {M + binomial(long(M) - 2, 2) + 3 * (long(M) - 6) + 1, true};
}

mpz_class h_value(unsigned M, long t) {
    const mpz_class T = t, m = M;
    const mpz_class twice = T * T * T + (1 - 2 * m) * T * T + (m * m + m) * T + 2;
    // t^3 + t^2 and (M^2+M)t are even, so the numerator always is.
    return twice / 2;
}

mpz_class h_poly(unsigned M, long t) {
    require_M(M, 5, "h_poly");
    if (t < 3 || t > long(M) - 1)
        throw PreconditionError("h_poly: t = " + std::to_string(t) + " outside [3, " +
                                std::to_string(M - 1) + "]");
    return h_value(M, t);
}

mpz_class h_derivative_twice(unsigned M, long t) {
    const mpz_class T = t, m = M;
    return 3 * T * T + 2 * (1 - 2 * m) * T + m * m + m;
}

mpz_class h_cross_derivation(unsigned M, long b) {
    const mpz_class m = M, B = b;
    // (M-b+2)(M-b-1) is a product of integers differing by 3, hence even.
    const mpz_class half = (m - B + 2) * (m - B - 1) / 2;
    return B * (m + half) + (m - B) - (B + 1) * (m - 1 - B);
}

HAnalysis analyze_h(unsigned M) {
    require_M(M, 5, "analyze_h");
    HAnalysis out;
    out.M = M;
    for (long b = 3; b <= long(M) - 1; ++b) out.values.push_back({unsigned(b), h_value(M, b)});
    out.minimum = out.values.front().value;
    for (const auto& e : out.values) out.minimum = std::min(out.minimum, e.value);
    for (const auto& e : out.values)
        if (e.value == out.minimum) out.minimizers.push_back(e.index);

    out.claimed_minimizer = M == 7 ? M - 2 : 3;
    out.claim_holds = h_value(M, out.claimed_minimizer) == out.minimum;

    const long m = M;
    out.closed_forms_hold = 2 * h_value(M, 3) == 3 * z(m) * (m - 5) + 38 &&
                            h_value(M, m - 2) == z(m * (m - 1) - 1) &&
                            h_value(M, m - 1) == z(m * (m - 1) + 1);

    // disc(2h') = 4(1-2M)^2 - 12(M^2+M) = 4(M^2 - 7M + 1).
    out.discriminant_quarter = z(m) * m - 7 * m + 1;
    if (M >= 7) {
        out.upper_root_bracketed =
            h_derivative_twice(M, m - 2) <= 0 && h_derivative_twice(M, m - 1) >= 0;
        // With positive discriminant, both roots lie in [3, M-1] iff h' >= 0 at both ends
        // and the vertex (2M-1)/3 lies inside.
        const bool vertex_inside = 3 * 3 <= 2 * m - 1 && 2 * m - 1 <= 3 * (m - 1);
        out.roots_in_segment = out.discriminant_quarter >= 0 && vertex_inside &&
                               h_derivative_twice(M, 3) >= 0 &&
                               h_derivative_twice(M, m - 1) >= 0;
    }
    return out;
}

Theorem03Verdict verify_theorem_03(unsigned M) {
    require_M(M, 5, "verify_theorem_03");
    Theorem03Verdict v;
    v.M = M;
    const mpz_class g = gamma(M);
    v.target = g + M - 1;
    const long m = M;

    v.checks.push_back(check("M(M-2) > gamma", z(m * (m - 2)), g, true));
    v.checks.push_back(check("rank<=2: binom(M-1,2)+1 >= gamma", binomial(m - 1, 2) + 1, g, false));
    v.checks.push_back(check("B_G >= gamma+M-1", bound_BG(M).value, v.target, false));
    if (M >= 6)
        v.checks.push_back(check("B1 min >= gamma+M-1", bound_B1(M).minimum, v.target, false));
    if (M >= 7) v.checks.push_back(check("B2 >= gamma+M-1", bound_B2(M), v.target, false));
    const B3Bound b3 = bound_B3(M);
    for (const auto& e : b3.per_a)
        v.checks.push_back(check("B3 a=" + std::to_string(e.index) + " >= gamma+M-1", e.value,
                                 v.target, false));
    for (const auto& e : b3.per_b)
        v.checks.push_back(check("B3M b=" + std::to_string(e.index) + " >= gamma+M-1", e.value,
                                 v.target, false));

    v.holds = std::all_of(v.checks.begin(), v.checks.end(),
                          [](const InequalityCheck& c) { return c.holds; });
    return v;
}

CodimReport codim_report(unsigned M) {
    require_M(M, 5, "codim_report");
    CodimReport r;
    r.M = M;
    r.gamma = gamma(M);
    r.dim_P = parameter_space_dim(M);
    r.target = r.gamma + M - 1;
    r.B_G = bound_BG(M);
    if (M >= 6) r.B1 = bound_B1(M);
    if (M >= 7) r.B2 = bound_B2(M);
    r.B3 = bound_B3(M);
    r.h = analyze_h(M);
    r.theorem03 = verify_theorem_03(M);
    return r;
}

}  // namespace qsing
