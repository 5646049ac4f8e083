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

#ifndef QSING_TEXT_HPP
#define QSING_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qsing/polynomial.hpp"

namespace qsing {

/// Parses the polynomial text syntax, e.g. "3*x0^2*x4 - x1*x2^4 + 7/2".
///
/// Whitespace between tokens is ignored. Coefficients are integers or a/b;
/// variables are x0..x{nvars-1}. Throws ParseError carrying the offending
/// character position.
template <FieldElement K>
Polynomial<K> parse_polynomial(const Field& field, std::size_t nvars, std::string_view text);

/// Parses a colon-separated coordinate list such as "1:-1:0:1/2".
template <FieldElement K>
std::vector<K> parse_point(const Field& field, std::string_view text);

template <FieldElement K>
std::string format_point(std::span<const K> coords);

/// Contents of a hypersurface input file: a header line
/// "M=<int> field=Q|Fp:<p>" followed by the polynomial text.
struct HypersurfaceText {
    int degree = 0;
    Field field = Field::rationals();
    std::string polynomial;
};

HypersurfaceText parse_hypersurface_header(std::string_view contents);

}  // namespace qsing

#endif  // QSING_TEXT_HPP
