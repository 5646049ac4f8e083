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

#ifndef QSING_ENUMERATE_HPP
#define QSING_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsing {

/// Number of points of P^{n-1}(F_p), or 0 on overflow past 2^63.
inline std::uint64_t projective_point_count(std::uint64_t p, std::size_t n) {
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > (UINT64_MAX >> 1) - power) return 0;
        total += power;
        if (i + 1 < n && power > (UINT64_MAX >> 1) / p) return 0;
        power *= p;
    }
    return total;
}

/// Calls fn(coords) once for every point of P^{n-1}(F_p), each given by its
/// canonical representative (first nonzero coordinate equal to 1). Points are
/// visited in increasing lexicographic order of the representative.
/// fn may return false to stop early.
template <class Fn>
void for_each_projective_point(std::uint32_t p, std::size_t n, Fn&& fn) {
    if (n == 0) return;
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t chart = n; chart-- > 0;) {
        std::fill(x.begin(), x.end(), 0);
        x[chart] = 1;
        while (true) {
            if (!fn(static_cast<const std::vector<std::uint32_t>&>(x))) return;
            std::size_t i = n;
            while (i-- > chart + 1) {
                if (++x[i] < p) break;
                x[i] = 0;
            }
            if (i == chart) break;
        }
    }
}

}  // namespace qsing

#endif  // QSING_ENUMERATE_HPP
