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

#include "qsing/blowup.hpp"

#include <algorithm>
#include <type_traits>

#include "qsing/enumerate.hpp"

namespace qsing {

std::string to_string(BlowupStatus s) {
    switch (s) {
        case BlowupStatus::NotOnQ: return "not-on-Q";
        case BlowupStatus::RankAplus2: return "rank-a+2";
        case BlowupStatus::RankAplus1: return "rank-a+1";
        case BlowupStatus::RankA: return "rank-a";
    }
    return "unknown";
}

BlowupStatus blowup_status_from_string(const std::string& s) {
    for (auto st : {BlowupStatus::NotOnQ, BlowupStatus::RankAplus2, BlowupStatus::RankAplus1, BlowupStatus::RankA})
        if (to_string(st) == s) return st;
    throw ParseError("unknown blow-up status '" + s + "'", 0);
}

template <FieldElement K>
Polynomial<K> LocalModel<K>::g2() const {
    Polynomial<K> q(field(), nvars());
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        q += Polynomial<K>::term(field(), nvars(), Monomial::variable(i, 2), diagonal[i]);
    return q;
}

template <FieldElement K>
LocalModel<K> LocalModel<K>::diagonal_model(std::vector<K> diagonal, Polynomial<K> g3, Polynomial<K> g4) {
    if (diagonal.size() < 3) throw PreconditionError("local model needs rank a >= 3");
    if (g3.nvars() != g4.nvars() || !(g3.field() == g4.field()))
        throw PreconditionError("local model pieces live in different rings");
    if (diagonal.size() >= g3.nvars()) throw PreconditionError("local model needs a nonzero kernel");
    if ((!g3.is_zero() && (g3.degree() != 3 || !g3.is_homogeneous())) ||
        (!g4.is_zero() && (g4.degree() != 4 || !g4.is_homogeneous())))
        throw PreconditionError("local model pieces must be homogeneous of degrees 3 and 4");
    for (const auto& c : diagonal)
        if (c.is_zero()) throw PreconditionError("local model diagonal entries must be nonzero");
    return LocalModel{std::move(diagonal), std::move(g3), std::move(g4)};
}

template <FieldElement K>
LocalModel<K> LocalModel<K>::from_pieces(const Polynomial<K>& g2, const Polynomial<K>& g3, const Polynomial<K>& g4) {
    const auto qf = diagonalize(g2);
    const std::vector<K> zero(g2.nvars(), K::zero(g2.field()));
    return diagonal_model(qf.diagonal, g3.linear_substitute(qf.change, zero), g4.linear_substitute(qf.change, zero));
}

template <FieldElement K>
LocalModel<K> LocalModel<K>::from_expansion(const TaylorExpansion<K>& exp) {
    if (!exp.piece(1).is_zero()) throw PreconditionError("local model needs a singular point");
    return from_pieces(exp.piece(2), exp.piece(3), exp.piece(4));
}

template <FieldElement K>
ExceptionalSingLocus<K> exceptional_sing_locus(const LocalModel<K>& model) {
    auto kf = kernel_forms<K>(model.diagonal, model.g3, model.g4);
    const int m = static_cast<int>(model.kernel_dim());
    const bool entire = kf.cubic.is_zero();
    return {std::move(kf.cubic), entire, entire ? m - 1 : m - 2};
}

namespace {

template <FieldElement K>
void check_kernel_point(const LocalModel<K>& model, const ProjectivePoint<K>& p) {
    if (p.size() != model.kernel_dim())
        throw PreconditionError("kernel point " + p.to_string() + " needs " + std::to_string(model.kernel_dim()) +
                                " coordinates");
}

template <FieldElement K>
BlowupPointVerdict<K> verdict_for_rank(const ProjectivePoint<K>& p, std::size_t a, std::size_t r) {
    if (r == a + 2) return {p, BlowupStatus::RankAplus2, static_cast<int>(r)};
    if (r == a + 1) return {p, BlowupStatus::RankAplus1, static_cast<int>(r)};
    if (r == a) return {p, BlowupStatus::RankA, static_cast<int>(r)};
    throw Error("blow-up: quadratic part of rank " + std::to_string(r) + " outside [a, a+2]");
}

}  // namespace

template <FieldElement K>
BlowupPointVerdict<K> rank_after_blowup_formula(const LocalModel<K>& model, const ProjectivePoint<K>& p) {
    check_kernel_point(model, p);
    const auto kf = kernel_forms<K>(model.diagonal, model.g3, model.g4);
    const auto x = p.coords();
    if (!kf.cubic.evaluate(x).is_zero()) return {p, BlowupStatus::NotOnQ, 0};
    const std::size_t a = model.rank();
    for (std::size_t k = 0; k < model.kernel_dim(); ++k)
        if (!kf.cubic.partial_derivative(k).evaluate(x).is_zero()) return verdict_for_rank(p, a, a + 2);
    return verdict_for_rank(p, a, kf.h.evaluate(x).is_zero() ? a : a + 1);
}

template <FieldElement K>
BlowupPointVerdict<K> rank_after_blowup_direct(const LocalModel<K>& model, const ProjectivePoint<K>& p) {
    check_kernel_point(model, p);
    const Field& fld = model.field();
    const std::size_t n = model.nvars();
    const std::size_t a = model.rank();
    // p is canonical, so its chart coordinate is 1 and the chart u_J = w_J,
    // u_i = (p_i + w_i) w_J centres w = 0 at p.
    const std::size_t J = a + p.chart();
    const auto wJ = Polynomial<K>::variable(fld, n, J);
    std::vector<Polynomial<K>> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == J) {
            images.push_back(wJ);
            continue;
        }
        auto shifted = Polynomial<K>::variable(fld, n, i);
        if (i >= a) shifted += Polynomial<K>::constant(fld, n, p.coords()[i - a]);
        images.push_back(shifted * wJ);
    }
    const auto g = model.g2() + model.g3 + model.g4;
    const auto strict = g.substitute(images).divide_by_monomial(Monomial::variable(J, 2));

    if (!strict.homogeneous_component(0).is_zero()) throw Error("blow-up: kernel point is off the exceptional quadric");
    if (!strict.homogeneous_component(1).is_zero()) return {p, BlowupStatus::NotOnQ, 0};
    return verdict_for_rank(p, a, diagonalize(strict.homogeneous_component(2)).rank);
}

template <FieldElement K>
BlowupReport<K> blow_up_rank3_point(const Polynomial<K>& f, const ProjectivePoint<K>& o,
                                    std::optional<std::vector<ProjectivePoint<K>>> points,
                                    const GroebnerOptions& opts) {
    const auto exp = expand_at(f, o);
    const auto cls = classify_point(exp);
    if (cls.kind != PointKind::QuadraticRank || cls.rank != 3)
        throw PreconditionError("blow-up analysis needs a quadratic point of rank 3 at " + o.to_string());

    BlowupReport<K> out{LocalModel<K>::from_expansion(exp), check_condition_G(exp, opts), {}, true, -1, false, true};
    out.rank_a_locus_dim = out.condition_G.h_on_sing_dim;

    std::vector<ProjectivePoint<K>> pts;
    if (points) {
        pts = std::move(*points);
    } else if constexpr (std::is_same_v<K, Zp>) {
        const auto locus = exceptional_sing_locus(out.model);
        const Field& fld = out.model.field();
        std::vector<Zp> x;
        for_each_projective_point(fld.characteristic(), out.model.kernel_dim(), [&](const auto& raw) {
            x.clear();
            for (auto v : raw) x.push_back(Zp::from_int(fld, v));
            if (locus.cubic.evaluate(x).is_zero()) pts.emplace_back(x);
            return true;
        });
        out.enumerated = true;
    }

    std::sort(pts.begin(), pts.end());
    for (const auto& p : pts) {
        auto direct = rank_after_blowup_direct(out.model, p);
        if (rank_after_blowup_formula(out.model, p).status != direct.status) out.paths_agree = false;
        out.verdicts.push_back(std::move(direct));
    }
    if (out.condition_G.verdict) {
        const bool any_rank_a = std::any_of(out.verdicts.begin(), out.verdicts.end(),
                                            [](const auto& v) { return v.status == BlowupStatus::RankA; });
        out.consistent_with_G = !any_rank_a && out.rank_a_locus_dim == -1;
    }
    return out;
}

#define QSING_INSTANTIATE(K)                                                                                     \
    template struct LocalModel<K>;                                                                               \
    template ExceptionalSingLocus<K> exceptional_sing_locus(const LocalModel<K>&);                               \
    template BlowupPointVerdict<K> rank_after_blowup_formula(const LocalModel<K>&, const ProjectivePoint<K>&);   \
    template BlowupPointVerdict<K> rank_after_blowup_direct(const LocalModel<K>&, const ProjectivePoint<K>&);    \
    template BlowupReport<K> blow_up_rank3_point(const Polynomial<K>&, const ProjectivePoint<K>&,                \
                                                 std::optional<std::vector<ProjectivePoint<K>>>,                 \
                                                 const GroebnerOptions&);

QSING_INSTANTIATE(Rational)
QSING_INSTANTIATE(Zp)

#undef QSING_INSTANTIATE

}  // namespace qsing
