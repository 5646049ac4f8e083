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

#ifndef QSING_MONOMIAL_HPP
#define QSING_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsing/errors.hpp"

namespace qsing {

inline constexpr std::size_t kMaxVars = 24;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector with cached total degree. Slots past the ring's variable
/// count are always zero, so comparisons never need the variable count.
class Monomial {
   public:
    Monomial() noexcept { e_.fill(0); }

    static Monomial from_exponents(std::span<const unsigned> exps) {
        if (exps.size() > kMaxVars) throw PreconditionError("too many variables for Monomial");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
        return m;
    }
    static Monomial variable(std::size_t i, unsigned power = 1) {
        Monomial m;
        m.set(i, power);
        return m;
    }

    unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
    unsigned degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    void set(std::size_t i, unsigned v) {
        if (i >= kMaxVars) throw PreconditionError("variable index out of range");
        if (v > kMaxExponent) throw PreconditionError("exponent overflow");
        deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + v);
        e_[i] = static_cast<std::uint8_t>(v);
    }

    /// Highest variable index carrying a nonzero exponent, plus one.
    std::size_t support_end() const noexcept {
        std::size_t n = kMaxVars;
        while (n > 0 && e_[n - 1] == 0) --n;
        return n;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned s = unsigned(a.e_[i]) + b.e_[i];
            if (s > kMaxExponent) throw PreconditionError("exponent overflow");
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
        return r;
    }

    /// True when this monomial divides m.
    bool divides(const Monomial& m) const noexcept {
        if (deg_ > m.deg_) return false;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    /// m / this; requires divides(m).
    Monomial quotient_of(const Monomial& m) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(m.e_[i] - e_[i]);
        r.deg_ = static_cast<std::uint16_t>(m.deg_ - deg_);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

    /// Bit i set iff x_i occurs; a.divides(b) implies (mask(a) & ~mask(b)) == 0.
    std::uint32_t support_mask() const noexcept {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i]) m |= 1U << i;
        return m;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : e_) h = (h ^ b) * 1099511628211ULL;
        return static_cast<std::size_t>(h);
    }

    /// Graded reverse lexicographic order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
        for (std::size_t i = kMaxVars; i-- > 0;) {
            if (a.e_[i] != b.e_[i]) return b.e_[i] <=> a.e_[i];
        }
        return std::strong_ordering::equal;
    }

   private:
    std::array<std::uint8_t, kMaxVars> e_;
    std::uint16_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree d in nvars variables, in decreasing
/// lexicographic order of the exponent vector (x_0^d first).
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) return out;
    std::vector<unsigned> e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace qsing

#endif  // QSING_MONOMIAL_HPP
