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

#include "qsing/singularity.hpp"

#include <utility>

namespace qsing {

std::string to_string(PointKind k) {
    switch (k) {
        case PointKind::Nonsingular: return "nonsingular";
        case PointKind::QuadraticRank: return "quadratic";
        case PointKind::HigherMultiplicity: return "higher-multiplicity";
    }
    return "unknown";
}

PointKind point_kind_from_string(const std::string& s) {
    if (s == "nonsingular") return PointKind::Nonsingular;
    if (s == "quadratic") return PointKind::QuadraticRank;
    if (s == "higher-multiplicity") return PointKind::HigherMultiplicity;
    throw ParseError("unknown point kind '" + s + "'", 0);
}

namespace {

// A <- E^T A E and P <- P E where E adds f times column `from` to column `to`.
template <FieldElement K>
void add_column(Matrix<K>& a, Matrix<K>& p, std::size_t to, std::size_t from, const K& f) {
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) a(r, to) += f * a(r, from);
    for (std::size_t c = 0; c < n; ++c) a(to, c) += f * a(from, c);
    for (std::size_t r = 0; r < p.rows(); ++r) p(r, to) += f * p(r, from);
}

template <FieldElement K>
void swap_columns(Matrix<K>& a, Matrix<K>& p, std::size_t i, std::size_t j) {
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < p.rows(); ++r) std::swap(p(r, i), p(r, j));
}

}  // namespace

template <FieldElement K>
QuadraticForm<K> diagonalize(const Polynomial<K>& q2) {
    if (!q2.is_zero() && (q2.degree() != 2 || !q2.is_homogeneous()))
        throw PreconditionError("diagonalize: expected a quadratic form");
    const Field& fld = q2.field();
    const std::size_t n = q2.nvars();
    const K half = K::from_int(fld, 2).inverse();

    Matrix<K> a(fld, n, n);
    for (const auto& t : q2.terms()) {
        std::size_t i = n, j = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (t.mono[v] == 2) i = j = v;
            else if (t.mono[v] == 1) (i == n ? i : j) = v;
        }
        if (i == j) a(i, i) = t.coeff;
        else a(i, j) = a(j, i) = t.coeff * half;
    }

    QuadraticForm<K> out{a, 0, Matrix<K>::identity(fld, n), {}};
    Matrix<K> w = a;
    Matrix<K>& p = out.change;
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && w(j, j).is_zero()) ++j;
            if (j < n) {
                swap_columns(w, p, k, j);
            } else {
                j = k + 1;
                while (j < n && w(k, j).is_zero()) ++j;
                if (j == n) continue;
                // new w(k,k) = 2 w(k,j), nonzero in odd characteristic
                add_column(w, p, k, j, K::one(fld));
            }
        }
        const K inv = w(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w(i, k).is_zero()) continue;
            add_column(w, p, i, k, -(w(i, k) * inv));
        }
    }

    // nonzero diagonal entries first, stable
    std::size_t next = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k).is_zero()) continue;
        if (k != next) swap_columns(w, p, next, k);
        ++next;
    }
    out.rank = next;
    for (std::size_t k = 0; k < next; ++k) out.diagonal.push_back(w(k, k));
    return out;
}

template <FieldElement K>
KernelForms<K> kernel_forms(std::span<const K> diagonal, const Polynomial<K>& g3, const Polynomial<K>& g4) {
    const Field& fld = g3.field();
    const std::size_t n = g3.nvars();
    const std::size_t a = diagonal.size();
    if (a > n) throw PreconditionError("kernel_forms: rank exceeds variable count");
    const std::size_t m = n - a;

    Matrix<K> restrict(fld, n, m);
    for (std::size_t k = 0; k < m; ++k) restrict(a + k, k) = K::one(fld);

    KernelForms<K> out{g3.linear_map(restrict), g4.linear_map(restrict).scale(K::from_int(fld, 4))};
    for (std::size_t i = 0; i < a; ++i) {
        Polynomial<K> d = g3.partial_derivative(i).linear_map(restrict);
        out.h -= (d * d).scale(diagonal[i].inverse());
    }
    return out;
}

template <FieldElement K>
std::vector<Polynomial<K>> jacobian_ideal(const Polynomial<K>& form) {
    std::vector<Polynomial<K>> gens;
    if (!form.is_zero()) gens.push_back(form);
    for (std::size_t i = 0; i < form.nvars(); ++i) {
        auto d = form.partial_derivative(i);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return gens;
}

template <FieldElement K>
PointReport<K> classify_point(const TaylorExpansion<K>& exp) {
    PointReport<K> r{exp.center, PointKind::Nonsingular, 0, 1, std::nullopt, std::nullopt};
    if (!exp.piece(1).is_zero()) return r;
    const auto q2 = exp.piece(2);
    if (!q2.is_zero()) {
        r.kind = PointKind::QuadraticRank;
        r.multiplicity = 2;
        r.rank = static_cast<int>(diagonalize(q2).rank);
        return r;
    }
    r.kind = PointKind::HigherMultiplicity;
    unsigned i = 3;
    while (i <= exp.degree && exp.piece(i).is_zero()) ++i;
    r.multiplicity = static_cast<int>(i);
    return r;
}

template <FieldElement K>
PointReport<K> classify_point(const Polynomial<K>& f, const ProjectivePoint<K>& o) {
    return classify_point(expand_at(f, o));
}

template <FieldElement K>
ConditionGReport<K> check_condition_G(const TaylorExpansion<K>& exp, const GroebnerOptions& opts) {
    if (!exp.piece(1).is_zero()) throw PreconditionError("condition (G) needs a singular point");
    const auto qf = diagonalize(exp.piece(2));
    if (qf.rank != 3) throw PreconditionError("condition (G) needs a quadratic point of rank 3");

    const std::size_t n = exp.nvars();
    const Field& fld = exp.field();
    const std::vector<K> zero(n, K::zero(fld));
    const auto g3 = exp.piece(3).linear_substitute(qf.change, zero);
    const auto g4 = exp.piece(4).linear_substitute(qf.change, zero);
    auto kf = kernel_forms<K>(qf.diagonal, g3, g4);

    ConditionGReport<K> out{qf.diagonal, Matrix<K>(fld, n, n - 3), kf.cubic, -1, kf.h, -1, false};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k + 3 < n; ++k) out.kernel_parameters(r, k) = qf.change(r, k + 3);

    const std::size_t m = n - 3;
    auto sing = jacobian_ideal(kf.cubic);
    out.cubic_sing_dim = *ideal_dimension<K>(sing, m, true, opts).projective_dim;
    if (out.cubic_sing_dim >= 0) {
        if (!kf.h.is_zero()) sing.push_back(kf.h);
        out.h_on_sing_dim = *ideal_dimension<K>(sing, m, true, opts).projective_dim;
    }
    out.verdict = out.cubic_sing_dim <= 0 && out.h_on_sing_dim == -1;
    return out;
}

template <FieldElement K>
ConditionGReport<K> check_condition_G(const Polynomial<K>& f, const ProjectivePoint<K>& o,
                                      const GroebnerOptions& opts) {
    return check_condition_G(expand_at(f, o), opts);
}

template <FieldElement K>
IdealDimension<K> singular_locus_dimension(const Polynomial<K>& f, const GroebnerOptions& opts) {
    if (!f.is_homogeneous()) throw PreconditionError("singular_locus_dimension: f must be homogeneous");
    auto gens = jacobian_ideal(f);
    return ideal_dimension<K>(gens, f.nvars(), true, opts);
}

#define QSING_INSTANTIATE(K)                                                                                  \
    template QuadraticForm<K> diagonalize(const Polynomial<K>&);                                              \
    template KernelForms<K> kernel_forms(std::span<const K>, const Polynomial<K>&, const Polynomial<K>&);    \
    template std::vector<Polynomial<K>> jacobian_ideal(const Polynomial<K>&);                                 \
    template PointReport<K> classify_point(const TaylorExpansion<K>&);                                        \
    template PointReport<K> classify_point(const Polynomial<K>&, const ProjectivePoint<K>&);                  \
    template ConditionGReport<K> check_condition_G(const TaylorExpansion<K>&, const GroebnerOptions&);        \
    template ConditionGReport<K> check_condition_G(const Polynomial<K>&, const ProjectivePoint<K>&,           \
                                                   const GroebnerOptions&);                                   \
    template IdealDimension<K> singular_locus_dimension(const Polynomial<K>&, const GroebnerOptions&);

QSING_INSTANTIATE(Rational)
QSING_INSTANTIATE(Zp)

#undef QSING_INSTANTIATE

}  // namespace qsing
