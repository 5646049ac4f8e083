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

#include "qsing/field.hpp"

#include <cctype>
#include <limits>

namespace qsing {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p == 2) throw PreconditionError("characteristic 2 is not supported");
    if (p > std::numeric_limits<std::int32_t>::max() || !qsing::is_prime(p))
        throw PreconditionError("field characteristic " + std::to_string(p) + " is not an odd prime below 2^31");
    return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
    return kind_ == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& spec) {
    if (spec == "Q") return rationals();
    if (spec.rfind("Fp:", 0) == 0 && spec.size() > 3) {
        std::uint64_t p = 0;
        for (std::size_t i = 3; i < spec.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(spec[i]))) throw ParseError("bad field '" + spec + "'", i);
            p = p * 10 + static_cast<std::uint64_t>(spec[i] - '0');
            if (p > (1ULL << 40)) throw ParseError("field characteristic too large", i);
        }
        return prime(p);
    }
    throw ParseError("unknown field '" + spec + "' (expected Q or Fp:<p>)", 0);
}

Rational Rational::from_fraction(const Field&, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero");
    return Rational(mpq_class(1) / v_);
}

Zp Zp::from_int(const Field& f, long long n) {
    const long long p = f.characteristic();
    long long r = n % p;
    if (r < 0) r += p;
    return Zp(f.characteristic(), static_cast<std::uint64_t>(r));
}

Zp Zp::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    const unsigned long p = f.characteristic();
    mpz_class n = num % p;
    mpz_class d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw PreconditionError("denominator vanishes modulo " + std::to_string(p));
    return Zp(f.characteristic(), n.get_ui()) / Zp(f.characteristic(), d.get_ui());
}

Zp Zp::inverse() const {
    if (v_ == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return Zp(p_, static_cast<std::uint64_t>(x0));
}

}  // namespace qsing
