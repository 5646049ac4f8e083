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

// F4-style Groebner engine over prime fields. Internal header.

#ifndef QSING_SRC_F4_HPP
#define QSING_SRC_F4_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qsing/groebner.hpp"

namespace qsing::detail {

struct F4Result {
    std::vector<Polynomial<Zp>> basis;
    std::uint64_t steps = 0;
};

/// Grevlex Groebner basis of the ideal generated by gens (all in one ring).
/// With reduce = false the result is a minimal basis, otherwise the reduced
/// one; both are monic and sorted by increasing leading monomial.
F4Result f4_groebner(std::span<const Polynomial<Zp>> gens, const GroebnerOptions& opts, bool reduce);

}  // namespace qsing::detail

#endif  // QSING_SRC_F4_HPP
