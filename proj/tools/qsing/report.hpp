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

// JSON records and text rendering for every report the tool prints. Each
// record carries "record" (its kind) and "schema_version"; exact integers
// and fractions are decimal strings so nothing is rounded.

#ifndef QSING_TOOLS_REPORT_HPP
#define QSING_TOOLS_REPORT_HPP

#include <string>

#include "json.hpp"
#include "qsing/blowup.hpp"
#include "qsing/census.hpp"
#include "qsing/codim.hpp"
#include "qsing/membership.hpp"
#include "qsing/singularity.hpp"

namespace qsing::report {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

template <FieldElement K>
json to_json(const PointReport<K>& r);
template <FieldElement K>
PointReport<K> point_report_from_json(const json& j, const Field& field);

template <FieldElement K>
json to_json(const MembershipReport<K>& r);
template <FieldElement K>
MembershipReport<K> membership_report_from_json(const json& j);

template <FieldElement K>
json to_json(const BlowupReport<K>& r);
template <FieldElement K>
BlowupReport<K> blowup_report_from_json(const json& j);

json to_json(const CodimReport& r);
CodimReport codim_report_from_json(const json& j);

json to_json(const CensusReport& r, bool per_sample);
CensusReport census_report_from_json(const json& j);

/// Wraps a point report in a top-level record.
template <FieldElement K>
json point_record(const PointReport<K>& r, const Field& field, unsigned M);

template <FieldElement K>
std::string render_text(const PointReport<K>& r);
template <FieldElement K>
std::string render_text(const MembershipReport<K>& r);
template <FieldElement K>
std::string render_text(const BlowupReport<K>& r);
std::string render_text(const CodimReport& r);
std::string render_text(const CensusReport& r);

}  // namespace qsing::report

#endif  // QSING_TOOLS_REPORT_HPP
