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

// Shared helpers for the test suites: fixture loading and random forms
// with prescribed singularities. Everything is seeded so failures replay.

#ifndef QSING_TESTS_SUPPORT_HPP
#define QSING_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "qsing/blowup.hpp"
#include "qsing/expansion.hpp"
#include "qsing/text.hpp"

namespace qsing::testing {

inline std::string fixture_path(const std::string& name) { return std::string(QSING_FIXTURE_DIR) + "/" + name; }

template <FieldElement K>
struct Fixture {
    unsigned M = 0;
    Polynomial<K> f;
};

template <FieldElement K>
Fixture<K> load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw PreconditionError("missing fixture " + name);
    const std::string contents{std::istreambuf_iterator<char>(in), {}};
    const auto h = parse_hypersurface_header(contents);
    const auto M = static_cast<unsigned>(h.degree);
    return {M, parse_polynomial<K>(h.field, M + 1, h.polynomial)};
}

inline Zp random_element(const Field& F, std::mt19937_64& rng) {
    return Zp(F.characteristic(), rng() % F.characteristic());
}

inline Zp random_unit(const Field& F, std::mt19937_64& rng) {
    return Zp(F.characteristic(), 1 + rng() % (F.characteristic() - 1));
}

/// Random form of degree d; each monomial is present with probability `density`.
inline Polynomial<Zp> random_form(const Field& F, std::size_t nvars, unsigned d, std::mt19937_64& rng,
                                  double density = 1.0) {
    std::bernoulli_distribution keep(density);
    std::vector<Term<Zp>> terms;
    for (const auto& m : monomials_of_degree(nvars, d))
        if (keep(rng)) terms.push_back({m, random_element(F, rng)});
    return Polynomial<Zp>::from_terms(F, nvars, std::move(terms));
}

inline Polynomial<Rational> random_rational_form(std::size_t nvars, unsigned d, std::mt19937_64& rng,
                                                 double density = 1.0, int bound = 5) {
    const Field Q = Field::rationals();
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
    std::vector<Term<Rational>> terms;
    for (const auto& m : monomials_of_degree(nvars, d))
        if (keep(rng)) terms.push_back({m, Rational::from_fraction(Q, num(rng), den(rng))});
    return Polynomial<Rational>::from_terms(Q, nvars, std::move(terms));
}

/// Random LocalModel with a nonzero diagonal of length a in N variables.
inline LocalModel<Zp> random_local_model(const Field& F, std::size_t a, std::size_t N, std::mt19937_64& rng) {
    std::vector<Zp> diag;
    for (std::size_t i = 0; i < a; ++i) diag.push_back(random_unit(F, rng));
    return LocalModel<Zp>::diagonal_model(std::move(diag), random_form(F, N, 3, rng), random_form(F, N, 4, rng));
}

/// Degree-M form in x0..xM with a rank-3 quadratic point at e_0:
/// x0^{M-2} (c1 x1^2 + c2 x2^2 + c3 x3^2) + sum_{i>=3} x0^{M-i} q_i.
/// With `singular_kernel_cubic` the cubic restricted to the kernel x4..xM
/// is singular at e_M (no monomial has xM-degree >= 2), so (G) has a point
/// to look at.
inline Polynomial<Zp> rank3_form(const Field& F, unsigned M, std::mt19937_64& rng, bool singular_kernel_cubic) {
    const std::size_t n = M + 1;
    std::vector<Term<Zp>> terms;
    for (std::size_t i = 1; i <= 3; ++i) {
        Monomial m = Monomial::variable(0, M - 2);
        m.set(i, 2);
        terms.push_back({m, random_unit(F, rng)});
    }
    // q_i lives in x1..xM; build it there, then lift with x0^{M-i}.
    for (unsigned i = 3; i <= M; ++i) {
        for (const auto& m : monomials_of_degree(M, i)) {
            if (i == 3 && singular_kernel_cubic) {
                const bool in_kernel = m[0] == 0 && m[1] == 0 && m[2] == 0;
                if (in_kernel && m[M - 1] >= 2) continue;
            }
            Monomial lifted = Monomial::variable(0, M - i);
            for (std::size_t v = 0; v < M; ++v) lifted.set(v + 1, m[v]);
            terms.push_back({lifted, random_element(F, rng)});
        }
    }
    return Polynomial<Zp>::from_terms(F, n, std::move(terms));
}

/// The form sum_i x0^{M-i} q_i(x1..xM), whose expansion at e_0 has the
/// given pieces (q_i in M variables, index i = degree).
template <FieldElement K>
Polynomial<K> form_from_pieces(const Field& F, unsigned M, const std::vector<Polynomial<K>>& pieces) {
    std::vector<Term<K>> terms;
    for (const auto& q : pieces) {
        if (q.is_zero()) continue;
        const auto i = static_cast<unsigned>(q.degree());
        for (const auto& t : q.terms()) {
            Monomial lifted = Monomial::variable(0, M - i);
            for (std::size_t v = 0; v < M; ++v) lifted.set(v + 1, t.mono[v]);
            terms.push_back({lifted, t.coeff});
        }
    }
    return Polynomial<K>::from_terms(F, M + 1, std::move(terms));
}

template <FieldElement K>
ProjectivePoint<K> basis_point(const Field& F, std::size_t n, std::size_t i) {
    std::vector<K> v(n, K::zero(F));
    v[i] = K::one(F);
    return ProjectivePoint<K>(std::move(v));
}

inline std::vector<Zp> to_zp(std::uint32_t p, const std::vector<std::uint32_t>& x) {
    std::vector<Zp> out;
    for (auto v : x) out.emplace_back(p, v);
    return out;
}

}  // namespace qsing::testing

#endif  // QSING_TESTS_SUPPORT_HPP
