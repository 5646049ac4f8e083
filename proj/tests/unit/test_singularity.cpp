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

#include <random>

#include "doctest.h"
#include "qsing/singularity.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

// Rank of a symmetric matrix by plain Gaussian elimination over F_p.
std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < m && rank < n; ++c) {
        std::size_t r = rank;
        while (r < n && a[r][c] % p == 0) ++r;
        if (r == n) continue;
        std::swap(a[r], a[rank]);
        std::uint64_t inv = 1;
        for (std::uint64_t e = p - 2, b = a[rank][c] % p; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][c] % p == 0) continue;
            const std::uint64_t k = a[i][c] % p * inv % p;
            for (std::size_t j = 0; j < m; ++j) a[i][j] = (a[i][j] + (p - k) * (a[rank][j] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

// Hessian of a quadratic form read off its coefficients.
std::size_t hessian_rank(const Polynomial<Zp>& q2) {
    const std::size_t n = q2.nvars();
    const std::uint64_t p = q2.field().characteristic();
    std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& t : q2.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e) idx.push_back(i);
        const auto c = t.coeff.value();
        if (idx[0] == idx[1]) h[idx[0]][idx[0]] = 2 * c % p;
        else h[idx[0]][idx[1]] = h[idx[1]][idx[0]] = c;
    }
    return naive_rank(h, p);
}

}  // namespace

TEST_CASE("Taylor pieces recompose to f in the affine chart") {
    std::mt19937_64 rng(1);
    const Field F = Field::prime(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_form(F, 4, 4, rng);
        std::vector<Zp> o{Zp(31, 0), Zp(31, 1), Zp(31, rng() % 31), Zp(31, rng() % 31)};
        // Force f(o) = 0 by subtracting f(o) x1^4.
        f -= f.evaluate(o) * Polynomial<Zp>::term(F, 4, Monomial::variable(1, 4), Zp::one(F));
        const ProjectivePoint<Zp> po(o);
        const auto exp = expand_at(f, po);
        CHECK(exp.chart() == 1);
        CHECK(exp.piece(0).is_zero());
        for (unsigned i = 1; i <= 4; ++i) CHECK((exp.piece(i).is_zero() || exp.piece(i).degree() == int(i)));
        for (int k = 0; k < 10; ++k) {
            std::vector<Zp> z{Zp(31, rng() % 31), Zp(31, rng() % 31), Zp(31, rng() % 31)};
            std::vector<Zp> x = o;
            for (std::size_t j = 0; j < 3; ++j) x[exp.coordinate_of[j]] += z[j];
            CHECK(exp.affine_polynomial().evaluate(z) == f.evaluate(x));
        }
    }
    CHECK_THROWS_AS(expand_at(random_form(F, 4, 4, rng) + Polynomial<Zp>::term(F, 4, Monomial::variable(0, 4), Zp::one(F)),
                              basis_point<Zp>(F, 4, 0)),
                    PreconditionError);
}

TEST_CASE("Fermat quintic point (1:-1:0:0:0:0) is nonsingular") {
    const auto fx = load_fixture<Rational>("fermat_quintic_Q.txt");
    const auto r = classify_point(fx.f, ProjectivePoint<Rational>(parse_point<Rational>(Field::rationals(), "1:-1:0:0:0:0")));
    CHECK(r.kind == PointKind::Nonsingular);
    CHECK(r.multiplicity == 1);
}

TEST_CASE("quadratic rank agrees with the Hessian rank oracle") {
    std::mt19937_64 rng(2);
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const Field F = Field::prime(p);
        for (int trial = 0; trial < 15; ++trial) {
            const unsigned M = 5 + trial % 2;
            // q2 = sum of r squares of random linear forms in x1..xM.
            const unsigned r = 1 + trial % M;
            Polynomial<Zp> q2(F, M);
            for (unsigned k = 0; k < r; ++k) {
                const auto l = random_form(F, M, 1, rng);
                q2 += random_unit(F, rng) * l * l;
            }
            const auto f = form_from_pieces<Zp>(F, M, {q2, random_form(F, M, 3, rng), random_form(F, M, M, rng)});
            const auto rep = classify_point(f, basis_point<Zp>(F, M + 1, 0));
            const auto expected = hessian_rank(q2);
            if (expected == 0) CHECK(rep.kind == PointKind::HigherMultiplicity);
            else {
                CHECK(rep.kind == PointKind::QuadraticRank);
                CHECK(rep.rank == int(expected));
            }
        }
    }
}

TEST_CASE("diagonalize: q(Py) = sum c_i y_i^2 over Q and F_p") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto q = random_rational_form(5, 2, rng, 0.5);
        const auto d = diagonalize(q);
        const std::vector<Rational> zero(5);
        const auto lhs = q.linear_substitute(d.change, zero);
        Polynomial<Rational> rhs(Field::rationals(), 5);
        for (std::size_t i = 0; i < d.rank; ++i)
            rhs += Polynomial<Rational>::term(Field::rationals(), 5, Monomial::variable(i, 2), d.diagonal[i]);
        CHECK(lhs == rhs);
    }
    // x0*x1 has no diagonal term; the congruence must still find rank 2.
    const auto h = diagonalize(parse_polynomial<Zp>(Field::prime(7), 2, "x0*x1"));
    CHECK(h.rank == 2);
}

TEST_CASE("multiplicity of higher-order points") {
    const Field F = Field::prime(7);
    const auto f = parse_polynomial<Zp>(F, 6, "x0^2*x1^3 + x0*x2^4 + x3^5 + x4^5 + x5^5");
    const auto r = classify_point(f, basis_point<Zp>(F, 6, 0));
    CHECK(r.kind == PointKind::HigherMultiplicity);
    CHECK(r.multiplicity == 3);
}

TEST_CASE("condition (G) on the committed fixtures") {
    const auto good = load_fixture<Zp>("rank3_G_holds_F11.txt");
    const auto o = basis_point<Zp>(good.f.field(), 6, 0);
    const auto g = check_condition_G(good.f, o);
    CHECK(g.verdict);
    CHECK(g.cubic_sing_dim == 0);
    CHECK(g.h_on_sing_dim == -1);
    CHECK(g.kernel_parameters.rows() == 5);
    CHECK(g.kernel_parameters.cols() == 2);

    const auto bad = load_fixture<Zp>("rank3_G_fails_F11.txt");
    const auto b = check_condition_G(bad.f, o);
    CHECK_FALSE(b.verdict);
    CHECK(b.h_on_sing_dim == 0);

    const auto rank4 = load_fixture<Zp>("rank4_R3_fails_F11.txt");
    CHECK_THROWS_AS(check_condition_G(rank4.f, o), PreconditionError);
}

TEST_CASE("(G) fails when the kernel cubic has a singular curve") {
    // Kernel cubic x4^2*x5 + 0 with M = 6: singular along the line x4 = 0.
    const Field F = Field::prime(7);
    const unsigned M = 6;
    const auto q2 = parse_polynomial<Zp>(F, M, "x0^2 + x1^2 + x2^2");
    const auto q3 = parse_polynomial<Zp>(F, M, "x3^2*x4");
    const auto q4 = parse_polynomial<Zp>(F, M, "x3^4 + x4^4 + x5^4");
    const auto f = form_from_pieces<Zp>(F, M, {q2, q3, q4, parse_polynomial<Zp>(F, M, "x0^6+x5^6")});
    const auto g = check_condition_G(f, basis_point<Zp>(F, M + 1, 0));
    CHECK(g.cubic_sing_dim == 1);
    CHECK_FALSE(g.verdict);
}

TEST_CASE("singular locus dimension") {
    const auto fermat = load_fixture<Rational>("fermat_quintic_Q.txt");
    CHECK(singular_locus_dimension(fermat.f).projective_dim.value_or(-1) == -1);
    const Field F = Field::prime(11);
    // A cone over a smooth plane cubic: singular exactly at the vertex.
    const auto cone = parse_polynomial<Zp>(F, 4, "x0^3 + x1^3 + x2^3");
    CHECK(singular_locus_dimension(cone).projective_dim.value_or(-1) == 0);
    // x0*x1 = 0 in P^3 is singular along the line x0 = x1 = 0.
    CHECK(singular_locus_dimension(parse_polynomial<Zp>(F, 4, "x0*x1")).projective_dim.value_or(-1) == 1);
}
