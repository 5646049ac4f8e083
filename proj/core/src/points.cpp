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

#include "qsing/points.hpp"

#include <string>
#include <unordered_map>

#include "qsing/enumerate.hpp"
#include "qsing/errors.hpp"

namespace qsing {

FpFormEvaluator::FpFormEvaluator(const Polynomial<Zp>& f, unsigned degree)
    : p_(f.field().characteristic()), n_(f.nvars()), d_(degree) {
    if (!f.field().is_prime()) throw PreconditionError("FpFormEvaluator: needs a prime field");
    if (!f.is_zero() && (!f.is_homogeneous() || unsigned(f.degree()) != degree))
        throw PreconditionError("FpFormEvaluator: f must be a form of degree " + std::to_string(degree));
    if (n_ == 0) throw PreconditionError("FpFormEvaluator: no variables");

    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    std::vector<Monomial> all;
    for (unsigned k = 0; k <= d_; ++k) {
        layer_start_.push_back(all.size());
        for (const auto& m : monomials_of_degree(n_, k)) {
            const auto id = static_cast<std::uint32_t>(all.size());
            index.emplace(m, id);
            all.push_back(m);
            std::uint32_t v = 0, parent = 0;
            if (k > 0) {
                while (m[v] == 0) ++v;
                parent = index.at(Monomial::variable(v).quotient_of(m));
            }
            var_.push_back(v);
            parent_.push_back(parent);
        }
    }
    layer_start_.push_back(all.size());
    table_.assign(all.size(), 0);

    const std::size_t top = layer_start_[d_];
    f_coeffs_.assign(layer_start_[d_ + 1] - top, 0);
    for (const auto& t : f.terms()) f_coeffs_[index.at(t.mono) - top] = t.coeff.value();

    if (d_ == 0) return;
    const std::size_t below = layer_start_[d_ - 1];
    partial_coeffs_.assign(n_, std::vector<std::uint32_t>(top - below, 0));
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < n_; ++i) {
            const unsigned e = t.mono[i];
            if (e == 0) continue;
            const auto mult = static_cast<std::uint64_t>(e % p_);
            const std::uint32_t j = index.at(Monomial::variable(i).quotient_of(t.mono)) - below;
            partial_coeffs_[i][j] = static_cast<std::uint32_t>(mult * t.coeff.value() % p_);
        }
}

FpFormEvaluator::FpFormEvaluator(const Polynomial<Zp>& f)
    : FpFormEvaluator(f, f.is_zero() ? throw PreconditionError("FpFormEvaluator: zero form has no degree")
                                     : static_cast<unsigned>(f.degree())) {}

void FpFormEvaluator::load(std::span<const std::uint32_t> x) {
    if (x.size() != n_) throw PreconditionError("FpFormEvaluator: point has the wrong length");
    table_[0] = 1 % p_;
    for (std::size_t k = 1; k < table_.size(); ++k) table_[k] = table_[parent_[k]] * (x[var_[k]] % p_) % p_;
}

std::uint32_t FpFormEvaluator::dot(const std::vector<std::uint32_t>& coeffs, std::size_t offset) const {
    std::uint64_t acc = 0;
    if (p_ < (1U << 16)) {
        // Each product is below 2^32, so 2^32 of them fit before reducing.
        for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * table_[offset + j];
        return static_cast<std::uint32_t>(acc % p_);
    }
    for (std::size_t j = 0; j < coeffs.size(); ++j) acc = (acc + coeffs[j] * table_[offset + j]) % p_;
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t FpFormEvaluator::value() const { return dot(f_coeffs_, layer_start_[d_]); }

std::uint32_t FpFormEvaluator::partial(std::size_t i) const {
    if (d_ == 0) return 0;
    return dot(partial_coeffs_.at(i), layer_start_[d_ - 1]);
}

bool FpFormEvaluator::gradient_vanishes() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (partial(i) != 0) return false;
    return true;
}

ProjectivePoint<Zp> to_projective_point(std::uint32_t p, std::span<const std::uint32_t> x) {
    std::vector<Zp> coords;
    coords.reserve(x.size());
    for (auto v : x) coords.emplace_back(p, v % p);
    return ProjectivePoint<Zp>(std::move(coords));
}

namespace {

template <class Keep>
std::vector<std::vector<std::uint32_t>> scan(const Polynomial<Zp>& f, std::uint64_t budget, Keep keep) {
    const std::uint32_t p = f.field().characteristic();
    const std::uint64_t count = projective_point_count(p, f.nvars());
    if (count == 0 || count > budget)
        throw BudgetExceeded("point enumeration: P^" + std::to_string(f.nvars() - 1) + "(F_" +
                             std::to_string(p) + ") exceeds the budget of " + std::to_string(budget) + " points");
    FpFormEvaluator ev(f, f.is_zero() ? 0 : unsigned(f.degree()));
    std::vector<std::vector<std::uint32_t>> out;
    for_each_projective_point(p, f.nvars(), [&](const std::vector<std::uint32_t>& x) {
        ev.load(x);
        if (keep(ev)) out.push_back(x);
        return true;
    });
    return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_points(const Polynomial<Zp>& f, std::uint64_t budget) {
    return scan(f, budget, [](const FpFormEvaluator& ev) { return ev.value() == 0; });
}

std::vector<std::vector<std::uint32_t>> singular_points(const Polynomial<Zp>& f, std::uint64_t budget) {
    return scan(f, budget, [](const FpFormEvaluator& ev) { return ev.gradient_vanishes() && ev.value() == 0; });
}

}  // namespace qsing
