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

#ifndef QSING_POLYNOMIAL_HPP
#define QSING_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsing/field.hpp"
#include "qsing/matrix.hpp"
#include "qsing/monomial.hpp"

namespace qsing {

template <FieldElement K>
struct Term {
    Monomial mono;
    K coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q or F_p in variables x0..x{n-1}.
///
/// Terms are kept sorted by strictly decreasing grevlex monomial with no
/// zero coefficients, so equal polynomials compare equal term by term.
/// The zero polynomial has no terms and degree -1.
template <FieldElement K>
class Polynomial {
   public:
    using TermType = Term<K>;

    Polynomial(Field field, std::size_t nvars);

    static Polynomial constant(Field field, std::size_t nvars, const K& c);
    static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
    static Polynomial term(Field field, std::size_t nvars, const Monomial& m, const K& c);
    /// Sorts, merges duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(Field field, std::size_t nvars, std::vector<TermType> terms);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::span<const TermType> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept;
    /// Smallest total degree of a term; -1 for zero.
    int low_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

    const Monomial& leading_monomial() const;
    const K& leading_coefficient() const;
    K coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
    friend Polynomial operator*(const K& c, const Polynomial& a) { return a.scale(c); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial multiply(const Polynomial& o) const;
    Polynomial scale(const K& c) const;
    Polynomial mul_term(const Monomial& m, const K& c) const;
    /// *this += c * m * g, the elementary step of polynomial reduction.
    void add_scaled(const K& c, const Monomial& m, const Polynomial& g);
    Polynomial pow(unsigned e) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    K evaluate(std::span<const K> point) const;
    Polynomial partial_derivative(std::size_t var) const;
    Polynomial homogeneous_component(unsigned d) const;

    /// Composes with x_i -> images[i]; all images share one ring, which may
    /// differ in variable count from this one.
    Polynomial substitute(std::span<const Polynomial> images) const;
    /// p(A z + t) for invertible square A. Throws PreconditionError if A is singular.
    Polynomial linear_substitute(const Matrix<K>& a, std::span<const K> t) const;
    /// p(A z) for any nvars x m matrix A (no invertibility requirement); the
    /// result lives in m variables.
    Polynomial linear_map(const Matrix<K>& a) const;

    /// Exact division by a monomial; throws PreconditionError if some term is not divisible.
    Polynomial divide_by_monomial(const Monomial& m) const;

    /// Same polynomial read in a ring with more (or equally many) variables.
    Polynomial extend(std::size_t nvars) const;

    std::string to_string() const;

   private:
    void check_ring(const Polynomial& o) const;

    Field field_;
    std::size_t nvars_;
    std::vector<TermType> terms_;
};

extern template class Polynomial<Rational>;
extern template class Polynomial<Zp>;

}  // namespace qsing

#endif  // QSING_POLYNOMIAL_HPP
