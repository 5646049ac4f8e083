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

#include "qsing/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qsing {

namespace {

template <FieldElement K>
bool term_greater(const Term<K>& a, const Term<K>& b) {
    return a.mono > b.mono;
}

}  // namespace

template <FieldElement K>
Polynomial<K>::Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {
    if (nvars > kMaxVars) throw PreconditionError("polynomial ring has too many variables");
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::constant(Field field, std::size_t nvars, const K& c) {
    return term(field, nvars, Monomial(), c);
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::variable(Field field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw PreconditionError("variable index out of range");
    return term(field, nvars, Monomial::variable(index), K::one(field));
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::term(Field field, std::size_t nvars, const Monomial& m, const K& c) {
    Polynomial p(field, nvars);
    if (m.support_end() > nvars) throw PreconditionError("monomial uses variables outside the ring");
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::from_terms(Field field, std::size_t nvars, std::vector<TermType> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(), term_greater<K>);
    for (auto& t : terms) {
        if (t.mono.support_end() > nvars) throw PreconditionError("monomial uses variables outside the ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

template <FieldElement K>
int Polynomial<K>::degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

template <FieldElement K>
int Polynomial<K>::low_degree() const noexcept {
    // grevlex is degree-compatible, so the last term has the smallest degree.
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

template <FieldElement K>
bool Polynomial<K>::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

template <FieldElement K>
const Monomial& Polynomial<K>::leading_monomial() const {
    if (terms_.empty()) throw PreconditionError("leading monomial of zero polynomial");
    return terms_.front().mono;
}

template <FieldElement K>
const K& Polynomial<K>::leading_coefficient() const {
    if (terms_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return terms_.front().coeff;
}

template <FieldElement K>
K Polynomial<K>::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const TermType& t, const Monomial& x) { return t.mono > x; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return K::zero(field_);
}

template <FieldElement K>
void Polynomial<K>::check_ring(const Polynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_) throw RingMismatch("polynomials from different rings");
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

template <FieldElement K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& o) {
    check_ring(o);
    add_scaled(K::one(field_), Monomial(), o);
    return *this;
}

template <FieldElement K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& o) {
    check_ring(o);
    add_scaled(-K::one(field_), Monomial(), o);
    return *this;
}

template <FieldElement K>
void Polynomial<K>::add_scaled(const K& c, const Monomial& m, const Polynomial& g) {
    check_ring(g);
    if (c.is_zero() || g.is_zero()) return;
    std::vector<TermType> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    const bool shift = !m.is_one();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Monomial bm = shift ? b->mono * m : b->mono;
        if (a == terms_.end() || bm > a->mono) {
            out.push_back({bm, c * b->coeff});
            ++b;
        } else if (a->mono > bm) {
            out.push_back(std::move(*a++));
        } else {
            K s = a->coeff + c * b->coeff;
            if (!s.is_zero()) out.push_back({a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    std::vector<TermType> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) prods.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(field_, nvars_, std::move(prods));
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::scale(const K& c) const {
    if (c.is_zero()) return Polynomial(field_, nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::mul_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return Polynomial(field_, nvars_);
    if (m.support_end() > nvars_) throw PreconditionError("monomial uses variables outside the ring");
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::pow(unsigned e) const {
    Polynomial result = constant(field_, nvars_, K::one(field_));
    Polynomial base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::monic() const {
    if (is_zero() || terms_.front().coeff.is_one()) return *this;
    return scale(terms_.front().coeff.inverse());
}

template <FieldElement K>
K Polynomial<K>::evaluate(std::span<const K> point) const {
    if (point.size() != nvars_) throw PreconditionError("evaluation point has wrong length");
    // Power table per variable, sized to the largest exponent present.
    std::vector<std::vector<K>> powers(nvars_);
    std::vector<unsigned> maxe(nvars_, 0);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], t.mono[i]);
    for (std::size_t i = 0; i < nvars_; ++i) {
        powers[i].reserve(maxe[i] + 1);
        powers[i].push_back(K::one(field_));
        for (unsigned k = 1; k <= maxe[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    K sum = K::zero(field_);
    for (const auto& t : terms_) {
        K v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.mono[i]) v *= powers[i][t.mono[i]];
        sum += v;
    }
    return sum;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::partial_derivative(std::size_t var) const {
    if (var >= nvars_) throw PreconditionError("partial derivative: variable index out of range");
    std::vector<TermType> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, t.coeff * K::from_int(field_, e)});
    }
    // Dropping x_var by one keeps the relative grevlex order of the survivors,
    // but coefficients can vanish in characteristic p.
    return from_terms(field_, nvars_, std::move(out));
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::homogeneous_component(unsigned d) const {
    Polynomial r(field_, nvars_);
    for (const auto& t : terms_)
        if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::substitute(std::span<const Polynomial> images) const {
    if (images.size() != nvars_) throw PreconditionError("substitute: need one image per variable");
    if (images.empty()) return *this;
    const Field f = images[0].field_;
    const std::size_t n = images[0].nvars_;
    for (const auto& im : images)
        if (!(im.field_ == f) || im.nvars_ != n) throw RingMismatch("substitute: images from different rings");
    if (!(f == field_)) throw RingMismatch("substitute: images over a different field");

    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(f, n, K::one(f)));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        return pw[e];
    };

    std::vector<TermType> acc;
    for (const auto& t : terms_) {
        Polynomial prod = constant(f, n, t.coeff);
        for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i)
            if (t.mono[i]) prod = prod * power_of(i, t.mono[i]);
        acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    }
    return from_terms(f, n, std::move(acc));
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::linear_map(const Matrix<K>& a) const {
    if (a.rows() != nvars_) throw PreconditionError("linear_map: matrix row count must equal nvars");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        std::vector<TermType> ts;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) ts.push_back({Monomial::variable(j), a(i, j)});
        images.push_back(from_terms(field_, a.cols(), std::move(ts)));
    }
    return substitute(images);
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::linear_substitute(const Matrix<K>& a, std::span<const K> t) const {
    if (a.rows() != nvars_ || a.cols() != nvars_ || t.size() != nvars_)
        throw PreconditionError("linear_substitute: dimension mismatch");
    if (!inverse(a)) throw PreconditionError("linear_substitute: singular matrix");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        std::vector<TermType> ts;
        for (std::size_t j = 0; j < nvars_; ++j)
            if (!a(i, j).is_zero()) ts.push_back({Monomial::variable(j), a(i, j)});
        if (!t[i].is_zero()) ts.push_back({Monomial(), t[i]});
        images.push_back(from_terms(field_, nvars_, std::move(ts)));
    }
    return substitute(images);
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::divide_by_monomial(const Monomial& m) const {
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!m.divides(t.mono)) throw PreconditionError("divide_by_monomial: inexact division");
        r.terms_.push_back({m.quotient_of(t.mono), t.coeff});
    }
    return r;
}

template <FieldElement K>
Polynomial<K> Polynomial<K>::extend(std::size_t nvars) const {
    if (nvars < nvars_) throw PreconditionError("extend: cannot drop variables");
    Polynomial r = *this;
    r.nvars_ = nvars;
    if (nvars > kMaxVars) throw PreconditionError("polynomial ring has too many variables");
    return r;
}

template <FieldElement K>
std::string Polynomial<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        K mag = negative ? -t.coeff : t.coeff;
        const bool unit = mag.is_one();
        if (t.mono.is_one()) {
            os << mag.to_string();
            continue;
        }
        if (!unit) os << mag.to_string() << '*';
        bool firstvar = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!t.mono[i]) continue;
            if (!firstvar) os << '*';
            firstvar = false;
            os << 'x' << i;
            if (t.mono[i] > 1) os << '^' << t.mono[i];
        }
    }
    return os.str();
}

template class Polynomial<Rational>;
template class Polynomial<Zp>;

}  // namespace qsing
