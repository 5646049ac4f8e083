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

#ifndef QSING_FIELD_HPP
#define QSING_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include "qsing/errors.hpp"

namespace qsing {

class Zp;

/// Describes a coefficient field: the rationals or F_p for an odd prime p.
class Field {
   public:
    enum class Kind { Rationals, Prime };

    static Field rationals() noexcept { return Field(Kind::Rationals, 0); }
    /// Throws PreconditionError unless p is an odd prime below 2^31.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    /// "Q" or "Fp:<p>", the spelling used by input file headers.
    std::string name() const;
    static Field parse(const std::string& spec);

    friend bool operator==(const Field&, const Field&) = default;

   private:
    friend class Zp;
    Field(Kind k, std::uint32_t p) noexcept : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Element of Q, backed by a canonical GMP rational.
class Rational {
   public:
    Rational() = default;
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero(const Field&) { return Rational(); }
    static Rational one(const Field&) { return Rational(mpq_class(1)); }
    static Rational from_int(const Field&, long long n) { return Rational(mpq_class(static_cast<long>(n))); }
    static Rational from_fraction(const Field&, const mpz_class& num, const mpz_class& den);

    Field field() const noexcept { return Field::rationals(); }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }
    Rational inverse() const;
    const mpq_class& value() const noexcept { return v_; }
    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this *= o.inverse(); return *this; }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

   private:
    mpq_class v_;
};

/// Element of F_p. Carries its modulus so mixed-field arithmetic is caught.
class Zp {
   public:
    Zp() = default;
    Zp(std::uint32_t p, std::uint64_t v) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}

    static Zp zero(const Field& f) { return Zp(f.characteristic(), 0); }
    static Zp one(const Field& f) { return Zp(f.characteristic(), 1); }
    static Zp from_int(const Field& f, long long n);
    static Zp from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);

    Field field() const noexcept { return Field(Field::Kind::Prime, p_); }
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return v_ == 0 ? 0 : 1; }
    Zp inverse() const;
    std::string to_string() const { return std::to_string(v_); }

    Zp& operator+=(const Zp& o) {
        check(o);
        std::uint32_t s = v_ + o.v_;
        v_ = s >= p_ ? s - p_ : s;
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Zp& operator*=(const Zp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }
    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend Zp operator-(const Zp& a) { return Zp(a.p_, a.v_ == 0 ? 0 : a.p_ - a.v_); }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    /// Orders by the representative in [0, p); used only for canonical output order.
    friend bool operator<(const Zp& a, const Zp& b) { return a.v_ < b.v_; }

   private:
    void check(const Zp& o) const {
        if (p_ != o.p_) throw RingMismatch("F_p elements with different moduli");
    }
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 3;
};

/// The coefficient types every algorithm in the library is generic over.
template <class K>
concept FieldElement = requires(const K a, const K b, const Field f, long long n, mpz_class z) {
    { K::zero(f) } -> std::same_as<K>;
    { K::one(f) } -> std::same_as<K>;
    { K::from_int(f, n) } -> std::same_as<K>;
    { K::from_fraction(f, z, z) } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::same_as<bool>;
    { a.to_string() } -> std::same_as<std::string>;
    { a.sign() } -> std::same_as<int>;
};

static_assert(FieldElement<Rational>);
static_assert(FieldElement<Zp>);

/// a^e by repeated squaring.
template <FieldElement K>
K power(K a, unsigned e, const Field& f) {
    K r = K::one(f);
    while (e) {
        if (e & 1U) r *= a;
        a *= a;
        e >>= 1U;
    }
    return r;
}

}  // namespace qsing

#endif  // QSING_FIELD_HPP
