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

// Critical-pair bookkeeping shared by the Groebner engines. Internal header.

#ifndef QSING_SRC_PAIRS_HPP
#define QSING_SRC_PAIRS_HPP

#include <cstddef>
#include <vector>

#include "qsing/monomial.hpp"

namespace qsing::detail {

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

/// Gebauer-Moeller installation of element h (leading monomial leads[h]):
/// adds its useful pairs, drops old pairs made redundant by it and
/// deactivates elements whose leading monomial it divides.
inline void gebauer_moeller_update(const std::vector<Monomial>& leads, std::vector<bool>& active,
                                   std::vector<CriticalPair>& pairs, std::size_t h) {
    const Monomial& lh = leads[h];
    std::vector<CriticalPair> c;
    for (std::size_t g = 0; g < h; ++g)
        if (active[g]) c.push_back({g, h, lcm(leads[g], lh)});

    // Chain criterion among the new pairs; coprime pairs survive it and are
    // removed afterwards by the product criterion.
    std::vector<CriticalPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& p1 = c[k];
        bool keep = coprime(leads[p1.i], lh);
        if (!keep) {
            keep = true;
            for (std::size_t l = k + 1; l < c.size() && keep; ++l)
                if (c[l].lcm.divides(p1.lcm)) keep = false;
            for (std::size_t l = 0; l < d.size() && keep; ++l)
                if (d[l].lcm.divides(p1.lcm)) keep = false;
        }
        if (keep) d.push_back(p1);
    }

    std::vector<CriticalPair> kept;
    kept.reserve(pairs.size() + d.size());
    for (const auto& p : pairs) {
        bool drop = lh.divides(p.lcm) && !(lcm(leads[p.i], lh) == p.lcm) && !(lcm(leads[p.j], lh) == p.lcm);
        if (!drop) kept.push_back(p);
    }
    for (const auto& p : d)
        if (!coprime(leads[p.i], lh)) kept.push_back(p);
    pairs = std::move(kept);

    for (std::size_t g = 0; g < h; ++g)
        if (active[g] && lh.divides(leads[g])) active[g] = false;
}

/// Indices of a minimal basis: active elements whose leading monomial is
/// not divisible by another kept one (first occurrence wins on ties).
inline std::vector<std::size_t> minimal_indices(const std::vector<Monomial>& leads, const std::vector<bool>& active) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < leads.size(); ++k) {
        if (!active[k]) continue;
        bool redundant = false;
        for (std::size_t l = 0; l < leads.size() && !redundant; ++l) {
            if (l == k || !active[l] || !leads[l].divides(leads[k])) continue;
            redundant = !(leads[l] == leads[k]) || l < k;
        }
        if (!redundant) out.push_back(k);
    }
    return out;
}

}  // namespace qsing::detail

#endif  // QSING_SRC_PAIRS_HPP
