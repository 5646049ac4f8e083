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

#include "qsing/expansion.hpp"

#include "qsing/text.hpp"

namespace qsing {

template <FieldElement K>
ProjectivePoint<K>::ProjectivePoint(std::vector<K> coords) : coords_(std::move(coords)) {
    std::size_t i = 0;
    while (i < coords_.size() && coords_[i].is_zero()) ++i;
    if (i == coords_.size()) throw PreconditionError("projective point with all coordinates zero");
    chart_ = i;
    if (!coords_[i].is_one()) {
        K inv = coords_[i].inverse();
        for (auto& c : coords_) c *= inv;
    }
}

template <FieldElement K>
std::string ProjectivePoint<K>::to_string() const {
    return "(" + format_point<K>(coords_) + ")";
}

template <FieldElement K>
Polynomial<K> TaylorExpansion<K>::piece(unsigned i) const {
    if (i < q.size()) return q[i];
    return Polynomial<K>(field(), nvars());
}

template <FieldElement K>
Polynomial<K> TaylorExpansion<K>::affine_polynomial() const {
    Polynomial<K> s(field(), nvars());
    for (const auto& qi : q) s += qi;
    return s;
}

template <FieldElement K>
TaylorExpansion<K> expand_at(const Polynomial<K>& f, const ProjectivePoint<K>& o) {
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("expand_at: f must be a nonzero homogeneous form");
    if (o.size() != f.nvars()) throw PreconditionError("expand_at: point has wrong number of coordinates");
    if (!f.evaluate(o.coords()).is_zero()) throw PreconditionError("expand_at: point " + o.to_string() + " is not on the hypersurface");

    const Field fld = f.field();
    const std::size_t n = f.nvars();
    const std::size_t m = n - 1;
    TaylorExpansion<K> exp{o, static_cast<unsigned>(f.degree()), {}, {}};

    // x_chart = 1, x_i = o_i + z_k for the other coordinates.
    std::vector<Polynomial<K>> images;
    images.reserve(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == o.chart()) {
            images.push_back(Polynomial<K>::constant(fld, m, K::one(fld)));
            continue;
        }
        exp.coordinate_of.push_back(i);
        images.push_back(Polynomial<K>::variable(fld, m, k++) + Polynomial<K>::constant(fld, m, o.coords()[i]));
    }
    Polynomial<K> affine = f.substitute(images);
    for (unsigned d = 0; d <= exp.degree; ++d) exp.q.push_back(affine.homogeneous_component(d));
    if (!exp.q[0].is_zero()) throw std::logic_error("expand_at: constant term survived although f(o) = 0");
    return exp;
}

template <FieldElement K>
TangentRestriction<K> restrict_to_tangent(const TaylorExpansion<K>& exp, std::span<const unsigned> degrees) {
    if (exp.is_singular()) throw PreconditionError("restrict_to_tangent: point is singular (q1 == 0)");
    const Field fld = exp.field();
    const std::size_t m = exp.nvars();
    const auto& q1 = exp.q[1];

    std::vector<K> a(m, K::zero(fld));
    for (const auto& t : q1.terms())
        for (std::size_t i = 0; i < m; ++i)
            if (t.mono[i]) a[i] = t.coeff;
    std::size_t piv = 0;
    while (a[piv].is_zero()) ++piv;

    // z_piv = -(sum_{i != piv} a_i z_i) / a_piv; the rest map to w in order.
    Matrix<K> s(fld, m, m - 1);
    K inv = a[piv].inverse();
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == piv) continue;
        s(i, col) = K::one(fld);
        s(piv, col) = -(a[i] * inv);
        ++col;
    }
    TangentRestriction<K> out{s, piv, {}};
    for (unsigned d : degrees) out.restricted.emplace(d, exp.piece(d).linear_map(s));
    return out;
}

template class ProjectivePoint<Rational>;
template class ProjectivePoint<Zp>;
template struct TaylorExpansion<Rational>;
template struct TaylorExpansion<Zp>;
template TaylorExpansion<Rational> expand_at(const Polynomial<Rational>&, const ProjectivePoint<Rational>&);
template TaylorExpansion<Zp> expand_at(const Polynomial<Zp>&, const ProjectivePoint<Zp>&);
template TangentRestriction<Rational> restrict_to_tangent(const TaylorExpansion<Rational>&, std::span<const unsigned>);
template TangentRestriction<Zp> restrict_to_tangent(const TaylorExpansion<Zp>&, std::span<const unsigned>);

}  // namespace qsing
