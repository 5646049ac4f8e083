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

#ifndef QSING_POINTS_HPP
#define QSING_POINTS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsing/expansion.hpp"
#include "qsing/polynomial.hpp"

namespace qsing {

/// Fast evaluation of a form over F_p and all of its partials at integer
/// coordinates in [0, p).
///
/// load(x) tabulates every monomial of degree <= d at x once; value() and
/// partial(i) are then dot products against that table. Not thread-safe:
/// give each worker its own copy.
class FpFormEvaluator {
   public:
    /// Throws PreconditionError unless f is homogeneous (or zero) over a prime field.
    /// The zero form needs its degree spelled out, so it takes `degree` explicitly.
    FpFormEvaluator(const Polynomial<Zp>& f, unsigned degree);
    explicit FpFormEvaluator(const Polynomial<Zp>& f);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return n_; }
    unsigned degree() const noexcept { return d_; }

    void load(std::span<const std::uint32_t> x);
    std::uint32_t value() const;
    std::uint32_t partial(std::size_t i) const;
    /// Every partial is zero at the loaded point.
    bool gradient_vanishes() const;

   private:
    std::uint32_t dot(const std::vector<std::uint32_t>& coeffs, std::size_t offset) const;

    std::uint32_t p_;
    std::size_t n_;
    unsigned d_;
    // Monomials of degree 0..d laid out by degree; table entry k is
    // x_{var_[k]} * table[parent_[k]] for k > 0.
    std::vector<std::uint32_t> var_, parent_;
    std::vector<std::size_t> layer_start_;
    std::vector<std::uint32_t> f_coeffs_;
    std::vector<std::vector<std::uint32_t>> partial_coeffs_;
    std::vector<std::uint64_t> table_;
};

/// Canonical representative (first nonzero coordinate 1) of x in P^{n-1}(F_p).
ProjectivePoint<Zp> to_projective_point(std::uint32_t p, std::span<const std::uint32_t> x);

/// Every F_p-point of {f = 0}, as canonical representatives in increasing
/// lexicographic order. Throws BudgetExceeded if the ambient projective space
/// has more than `budget` points.
std::vector<std::vector<std::uint32_t>> enumerate_points(const Polynomial<Zp>& f, std::uint64_t budget);

/// Every F_p-point where f and all of its partials vanish, same order and budget.
std::vector<std::vector<std::uint32_t>> singular_points(const Polynomial<Zp>& f, std::uint64_t budget);

}  // namespace qsing

#endif  // QSING_POINTS_HPP
