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

#include "report.hpp"

#include <sstream>

#include "qsing/text.hpp"

namespace qsing::report {

namespace {

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(const mpq_class& q) { return q.get_str(); }
mpz_class mpz(const json& j) { return mpz_class(j.get<std::string>()); }
mpq_class mpq(const json& j) {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
}

template <FieldElement K>
K element(const Field& field, const json& j) {
    return parse_point<K>(field, j.get<std::string>()).at(0);
}

template <FieldElement K>
json elements(std::span<const K> v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.to_string());
    return a;
}

template <FieldElement K>
std::vector<K> elements_from(const Field& field, const json& j) {
    std::vector<K> out;
    for (const auto& e : j) out.push_back(element<K>(field, e));
    return out;
}

template <FieldElement K>
std::string point_str(const ProjectivePoint<K>& p) {
    return format_point<K>(p.coords());
}

template <FieldElement K>
ProjectivePoint<K> point_from(const Field& field, const json& j) {
    return ProjectivePoint<K>(parse_point<K>(field, j.get<std::string>()));
}

template <FieldElement K>
Polynomial<K> poly_from(const Field& field, std::size_t nvars, const json& j) {
    return parse_polynomial<K>(field, nvars, j.get<std::string>());
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json regularity_json(const RegularityVerdict& v) {
    return {{"condition", to_string(v.condition)},
            {"sequence_checked", v.sequence},
            {"expected_dim", v.expected_dim},
            {"actual_dim", v.actual_dim},
            {"pass", v.pass}};
}

RegularityVerdict regularity_from(const json& j) {
    RegularityVerdict v;
    v.condition = regularity_condition_from_string(j.at("condition").get<std::string>());
    v.sequence = j.at("sequence_checked").get<std::vector<unsigned>>();
    v.expected_dim = j.at("expected_dim").get<int>();
    v.actual_dim = j.at("actual_dim").get<int>();
    v.pass = j.at("pass").get<bool>();
    return v;
}

template <FieldElement K>
json condition_G_json(const ConditionGReport<K>& g) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.kernel_parameters.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.kernel_parameters.cols(); ++c) row.push_back(g.kernel_parameters(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return {{"diagonal", elements<K>(g.diagonal)},
            {"kernel_nvars", g.kernel_parameters.cols()},
            {"kernel_parameters", std::move(rows)},
            {"restricted_cubic", g.restricted_cubic.to_string()},
            {"cubic_sing_dim", g.cubic_sing_dim},
            {"h_poly", g.h.to_string()},
            {"h_on_sing_dim", g.h_on_sing_dim},
            {"verdict", g.verdict}};
}

template <FieldElement K>
ConditionGReport<K> condition_G_from(const json& j, const Field& field) {
    const auto k = j.at("kernel_nvars").get<std::size_t>();
    const auto& rows = j.at("kernel_parameters");
    Matrix<K> params(field, rows.size(), k);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < k; ++c) params(r, c) = element<K>(field, rows[r].at(c));
    return ConditionGReport<K>{elements_from<K>(field, j.at("diagonal")),
                               std::move(params),
                               poly_from<K>(field, k, j.at("restricted_cubic")),
                               j.at("cubic_sing_dim").get<int>(),
                               poly_from<K>(field, k, j.at("h_poly")),
                               j.at("h_on_sing_dim").get<int>(),
                               j.at("verdict").get<bool>()};
}

json subspace_json(const FpSubspace& s) { return {{"p", s.p}, {"basis", s.basis}}; }

FpSubspace subspace_from(const json& j) {
    return {j.at("p").get<std::uint32_t>(), j.at("basis").get<std::vector<std::vector<std::uint32_t>>>()};
}

json indexed(const std::vector<IndexedBound>& v, const char* key) {
    json a = json::array();
    for (const auto& e : v) a.push_back({{key, e.index}, {"value", str(e.value)}});
    return a;
}

std::vector<IndexedBound> indexed_from(const json& j, const char* key) {
    std::vector<IndexedBound> out;
    for (const auto& e : j) out.push_back({e.at(key).get<unsigned>(), mpz(e.at("value"))});
    return out;
}

}  // namespace

// ---- point reports ---------------------------------------------------------

template <FieldElement K>
json to_json(const PointReport<K>& r) {
    return {{"point", point_str(r.point)},
            {"kind", to_string(r.kind)},
            {"rank", r.rank},
            {"multiplicity", r.multiplicity},
            {"condition_G", r.condition_G ? condition_G_json(*r.condition_G) : json(nullptr)},
            {"regularity", r.regularity ? regularity_json(*r.regularity) : json(nullptr)}};
}

template <FieldElement K>
PointReport<K> point_report_from_json(const json& j, const Field& field) {
    PointReport<K> r{point_from<K>(field, j.at("point")),
                     point_kind_from_string(j.at("kind").get<std::string>()),
                     j.at("rank").get<int>(),
                     j.at("multiplicity").get<int>(),
                     std::nullopt,
                     std::nullopt};
    if (!j.at("condition_G").is_null()) r.condition_G = condition_G_from<K>(j.at("condition_G"), field);
    if (!j.at("regularity").is_null()) r.regularity = regularity_from(j.at("regularity"));
    return r;
}

template <FieldElement K>
json point_record(const PointReport<K>& r, const Field& field, unsigned M) {
    json j = {{"record", "point_report"}, {"schema_version", kSchemaVersion}, {"field", field.name()}, {"M", M}};
    j.update(to_json(r));
    return j;
}

// ---- membership ------------------------------------------------------------

template <FieldElement K>
json to_json(const MembershipReport<K>& r) {
    json points = json::array();
    for (const auto& p : r.points) points.push_back(to_json(p));
    json conditions = json::array();
    for (const auto& c : r.conditions)
        conditions.push_back({{"condition", c.condition},
                              {"status", to_string(c.status)},
                              {"checked", c.checked},
                              {"failed", c.failed},
                              {"inconclusive", c.inconclusive},
                              {"detail", c.detail}});
    json witness = nullptr;
    if (r.witness) {
        json subspaces = json::array();
        for (const auto& s : r.witness->subspaces) subspaces.push_back(subspace_json(s));
        witness = {{"point", r.witness->point ? json(point_str(*r.witness->point)) : json(nullptr)},
                   {"condition", r.witness->condition},
                   {"detail", r.witness->detail},
                   {"subspaces", std::move(subspaces)}};
    }
    return {{"record", "membership_report"},
            {"schema_version", kSchemaVersion},
            {"field", r.field.name()},
            {"M", r.M},
            {"verdict", to_string(r.verdict)},
            {"witness", std::move(witness)},
            {"singular_locus_dim", opt_int(r.singular_locus_dim)},
            {"singular_locus_dim_is_upper_bound", r.singular_locus_dim_is_bound},
            {"enumerated_points", r.enumerated_points},
            {"enumerated_nonsingular", r.enumerated_nonsingular},
            {"conditions", std::move(conditions)},
            {"points", std::move(points)},
            {"ledger", r.ledger}};
}

template <FieldElement K>
MembershipReport<K> membership_report_from_json(const json& j) {
    MembershipReport<K> r;
    r.field = Field::parse(j.at("field").get<std::string>());
    r.M = j.at("M").get<unsigned>();
    r.verdict = membership_verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("singular_locus_dim").is_null()) r.singular_locus_dim = j.at("singular_locus_dim").get<int>();
    r.singular_locus_dim_is_bound = j.at("singular_locus_dim_is_upper_bound").get<bool>();
    r.enumerated_points = j.at("enumerated_points").get<std::uint64_t>();
    r.enumerated_nonsingular = j.at("enumerated_nonsingular").get<std::uint64_t>();
    for (const auto& c : j.at("conditions"))
        r.conditions.push_back({c.at("condition").get<std::string>(),
                                check_status_from_string(c.at("status").get<std::string>()),
                                c.at("checked").get<std::uint64_t>(), c.at("failed").get<std::uint64_t>(),
                                c.at("inconclusive").get<std::uint64_t>(), c.at("detail").get<std::string>()});
    for (const auto& p : j.at("points")) r.points.push_back(point_report_from_json<K>(p, r.field));
    r.ledger = j.at("ledger").get<std::vector<std::string>>();
    if (const auto& w = j.at("witness"); !w.is_null()) {
        MembershipWitness<K> mw;
        if (!w.at("point").is_null()) mw.point = point_from<K>(r.field, w.at("point"));
        mw.condition = w.at("condition").get<std::string>();
        mw.detail = w.at("detail").get<std::string>();
        for (const auto& s : w.at("subspaces")) mw.subspaces.push_back(subspace_from(s));
        r.witness = std::move(mw);
    }
    return r;
}

// ---- blow-up ---------------------------------------------------------------

template <FieldElement K>
json to_json(const BlowupReport<K>& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"point", point_str(v.point)}, {"status", to_string(v.status)}, {"rank", v.rank}});
    return {{"record", "blowup_report"},
            {"schema_version", kSchemaVersion},
            {"field", r.model.field().name()},
            {"model",
             {{"nvars", r.model.nvars()},
              {"diagonal", elements<K>(r.model.diagonal)},
              {"g3", r.model.g3.to_string()},
              {"g4", r.model.g4.to_string()}}},
            {"condition_G", condition_G_json(r.condition_G)},
            {"paths_agree", r.paths_agree},
            {"rank_a_locus_dim", r.rank_a_locus_dim},
            {"enumerated", r.enumerated},
            {"consistent_with_G", r.consistent_with_G},
            {"verdicts", std::move(verdicts)}};
}

template <FieldElement K>
BlowupReport<K> blowup_report_from_json(const json& j) {
    const Field field = Field::parse(j.at("field").get<std::string>());
    const auto& m = j.at("model");
    const auto n = m.at("nvars").get<std::size_t>();
    LocalModel<K> model{elements_from<K>(field, m.at("diagonal")), poly_from<K>(field, n, m.at("g3")),
                        poly_from<K>(field, n, m.at("g4"))};
    BlowupReport<K> r{std::move(model),
                      condition_G_from<K>(j.at("condition_G"), field),
                      {},
                      j.at("paths_agree").get<bool>(),
                      j.at("rank_a_locus_dim").get<int>(),
                      j.at("enumerated").get<bool>(),
                      j.at("consistent_with_G").get<bool>()};
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back({point_from<K>(field, v.at("point")),
                              blowup_status_from_string(v.at("status").get<std::string>()), v.at("rank").get<int>()});
    return r;
}

// ---- codim -----------------------------------------------------------------

json to_json(const CodimReport& r) {
    json checks = json::array();
    for (const auto& c : r.theorem03.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", str(c.lhs)},
                          {"rhs", str(c.rhs)},
                          {"strict", c.strict},
                          {"holds", c.holds},
                          {"equality", c.equality}});
    const auto& h = r.h;
    return {{"record", "codim_report"},
            {"schema_version", kSchemaVersion},
            {"M", r.M},
            {"gamma", str(r.gamma)},
            {"dim_P", str(r.dim_P)},
            {"target", str(r.target)},
            {"bounds",
             {{"B_G", {{"value", str(r.B_G.value)}, {"derived", r.B_G.derived}}},
              {"B1", r.B1 ? json{{"per_a", indexed(r.B1->per_a, "a")}, {"minimum", str(r.B1->minimum)}}
                          : json(nullptr)},
              {"B2", r.B2 ? json(str(*r.B2)) : json(nullptr)},
              {"B3", {{"per_a", indexed(r.B3.per_a, "a")}}},
              {"B3M_per_b",
               {{"conditions", indexed(r.B3.conditions_per_b, "b")}, {"bounds", indexed(r.B3.per_b, "b")}}},
              {"h_analysis",
               {{"values", indexed(h.values, "b")},
                {"minimum", str(h.minimum)},
                {"minimizers", h.minimizers},
                {"claimed_minimizer", h.claimed_minimizer},
                {"claim_holds", h.claim_holds},
                {"closed_forms_hold", h.closed_forms_hold},
                {"discriminant_quarter", str(h.discriminant_quarter)},
                {"upper_root_bracketed", opt_bool(h.upper_root_bracketed)},
                {"roots_in_segment", opt_bool(h.roots_in_segment)}}}}},
            {"theorem03_verdict", {{"holds", r.theorem03.holds}, {"target", str(r.theorem03.target)}, {"checks", checks}}}};
}

CodimReport codim_report_from_json(const json& j) {
    CodimReport r;
    r.M = j.at("M").get<unsigned>();
    r.gamma = mpz(j.at("gamma"));
    r.dim_P = mpz(j.at("dim_P"));
    r.target = mpz(j.at("target"));
    const auto& b = j.at("bounds");
    r.B_G = {mpz(b.at("B_G").at("value")), b.at("B_G").at("derived").get<bool>()};
    if (!b.at("B1").is_null()) r.B1 = B1Bound{indexed_from(b.at("B1").at("per_a"), "a"), mpz(b.at("B1").at("minimum"))};
    if (!b.at("B2").is_null()) r.B2 = mpz(b.at("B2"));
    r.B3.per_a = indexed_from(b.at("B3").at("per_a"), "a");
    r.B3.conditions_per_b = indexed_from(b.at("B3M_per_b").at("conditions"), "b");
    r.B3.per_b = indexed_from(b.at("B3M_per_b").at("bounds"), "b");
    const auto& h = b.at("h_analysis");
    r.h.M = r.M;
    r.h.values = indexed_from(h.at("values"), "b");
    r.h.minimum = mpz(h.at("minimum"));
    r.h.minimizers = h.at("minimizers").get<std::vector<unsigned>>();
    r.h.claimed_minimizer = h.at("claimed_minimizer").get<unsigned>();
    r.h.claim_holds = h.at("claim_holds").get<bool>();
    r.h.closed_forms_hold = h.at("closed_forms_hold").get<bool>();
    r.h.discriminant_quarter = mpz(h.at("discriminant_quarter"));
    if (!h.at("upper_root_bracketed").is_null()) r.h.upper_root_bracketed = h.at("upper_root_bracketed").get<bool>();
    if (!h.at("roots_in_segment").is_null()) r.h.roots_in_segment = h.at("roots_in_segment").get<bool>();
    const auto& t = j.at("theorem03_verdict");
    r.theorem03.M = r.M;
    r.theorem03.holds = t.at("holds").get<bool>();
    r.theorem03.target = mpz(t.at("target"));
    for (const auto& c : t.at("checks"))
        r.theorem03.checks.push_back({c.at("name").get<std::string>(), mpz(c.at("lhs")), mpz(c.at("rhs")),
                                      c.at("strict").get<bool>(), c.at("holds").get<bool>(),
                                      c.at("equality").get<bool>()});
    return r;
}

// ---- census ----------------------------------------------------------------

json to_json(const CensusReport& r, bool per_sample) {
    const auto& c = r.config;
    json tallies = json::array();
    for (const auto& t : r.tallies)
        tallies.push_back({{"name", t.name},
                           {"failures", t.failures},
                           {"inconclusive", t.inconclusive},
                           {"checked", t.checked},
                           {"frequency", str(t.frequency)},
                           {"heuristic", t.heuristic ? json(str(*t.heuristic)) : json(nullptr)},
                           {"conditions_per_point", t.conditions_per_point ? json(*t.conditions_per_point) : json(nullptr)}});
    const auto& b = r.calibration;
    json j = {{"record", "census_report"},
              {"schema_version", kSchemaVersion},
              {"label", r.label},
              {"config",
               {{"M", c.M},
                {"p", c.p},
                {"samples", c.sample_count},
                {"seed", c.seed},
                {"checks", to_string(c.checks)},
                {"r1_points", c.r1_points},
                {"budget_enum", c.enumeration_budget},
                {"budget_groebner", c.groebner.step_budget}}},
              {"ambient_points", r.ambient_points},
              {"total_points_on_F", r.total_points_on_F},
              {"mean_points_on_F", str(r.mean_points_on_F)},
              {"total_singular_points", r.total_singular_points},
              {"tallies", std::move(tallies)},
              {"calibration",
               {{"E1", str(b.E1)},
                {"E2", str(b.E2)},
                {"sigma", b.sigma},
                {"low", b.low},
                {"high", b.high},
                {"observed", b.observed},
                {"within", b.within}}},
              {"expansion_disagreements", r.expansion_disagreements},
              {"euler_disagreements", r.euler_disagreements}};
    if (per_sample) {
        json samples = json::array();
        for (const auto& s : r.samples)
            samples.push_back({{"index", s.index},
                               {"points_on_F", s.points_on_F},
                               {"singular_points", s.singular_points},
                               {"low_rank", s.low_rank},
                               {"has_rank3_point", s.has_rank3_point},
                               {"G_failures", s.G_failures},
                               {"G_inconclusive", s.G_inconclusive},
                               {"R_failures", s.R_failures},
                               {"R_inconclusive", s.R_inconclusive},
                               {"contains_plane", opt_bool(s.contains_plane)},
                               {"has_singular_line", opt_bool(s.has_singular_line)},
                               {"planes_inconclusive", s.planes_inconclusive},
                               {"lines_inconclusive", s.lines_inconclusive},
                               {"expansion_disagreements", s.expansion_disagreements},
                               {"euler_disagreements", s.euler_disagreements}});
        j["samples"] = std::move(samples);
    }
    return j;
}

CensusReport census_report_from_json(const json& j) {
    CensusReport r;
    const auto& c = j.at("config");
    r.config.M = c.at("M").get<unsigned>();
    r.config.p = c.at("p").get<std::uint32_t>();
    r.config.sample_count = c.at("samples").get<std::uint64_t>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.checks = parse_census_checks(c.at("checks").get<std::string>());
    r.config.r1_points = c.at("r1_points").get<unsigned>();
    r.config.enumeration_budget = c.at("budget_enum").get<std::uint64_t>();
    r.config.groebner.step_budget = c.at("budget_groebner").get<std::uint64_t>();
    r.label = j.at("label").get<std::string>();
    r.ambient_points = j.at("ambient_points").get<std::uint64_t>();
    r.total_points_on_F = j.at("total_points_on_F").get<std::uint64_t>();
    r.mean_points_on_F = mpq(j.at("mean_points_on_F"));
    r.total_singular_points = j.at("total_singular_points").get<std::uint64_t>();
    for (const auto& t : j.at("tallies")) {
        ConditionTally ct;
        ct.name = t.at("name").get<std::string>();
        ct.failures = t.at("failures").get<std::uint64_t>();
        ct.inconclusive = t.at("inconclusive").get<std::uint64_t>();
        ct.checked = t.at("checked").get<std::uint64_t>();
        ct.frequency = mpq(t.at("frequency"));
        if (!t.at("heuristic").is_null()) ct.heuristic = mpq(t.at("heuristic"));
        if (!t.at("conditions_per_point").is_null()) ct.conditions_per_point = t.at("conditions_per_point").get<unsigned>();
        r.tallies.push_back(std::move(ct));
    }
    const auto& b = j.at("calibration");
    r.calibration = {mpq(b.at("E1")),         mpq(b.at("E2")),           b.at("sigma").get<double>(),
                     b.at("low").get<double>(), b.at("high").get<double>(), b.at("observed").get<double>(),
                     b.at("within").get<bool>()};
    r.expansion_disagreements = j.at("expansion_disagreements").get<std::uint64_t>();
    r.euler_disagreements = j.at("euler_disagreements").get<std::uint64_t>();
    if (j.contains("samples"))
        for (const auto& s : j.at("samples")) {
            CensusSample cs;
            cs.index = s.at("index").get<std::uint64_t>();
            cs.points_on_F = s.at("points_on_F").get<std::uint64_t>();
            cs.singular_points = s.at("singular_points").get<std::uint64_t>();
            cs.low_rank = s.at("low_rank").get<bool>();
            cs.has_rank3_point = s.at("has_rank3_point").get<bool>();
            cs.G_failures = s.at("G_failures").get<std::uint64_t>();
            cs.G_inconclusive = s.at("G_inconclusive").get<std::uint64_t>();
            cs.R_failures = s.at("R_failures").get<std::uint64_t>();
            cs.R_inconclusive = s.at("R_inconclusive").get<std::uint64_t>();
            if (!s.at("contains_plane").is_null()) cs.contains_plane = s.at("contains_plane").get<bool>();
            if (!s.at("has_singular_line").is_null()) cs.has_singular_line = s.at("has_singular_line").get<bool>();
            cs.planes_inconclusive = s.at("planes_inconclusive").get<bool>();
            cs.lines_inconclusive = s.at("lines_inconclusive").get<bool>();
            cs.expansion_disagreements = s.at("expansion_disagreements").get<std::uint64_t>();
            cs.euler_disagreements = s.at("euler_disagreements").get<std::uint64_t>();
            r.samples.push_back(cs);
        }
    return r;
}

// ---- text ------------------------------------------------------------------

namespace {

template <FieldElement K>
void render_point(std::ostream& os, const PointReport<K>& r, const char* indent) {
    os << indent << "point " << point_str(r.point) << ": " << to_string(r.kind);
    if (r.kind == PointKind::QuadraticRank) os << " (rank " << r.rank << ")";
    if (r.kind == PointKind::HigherMultiplicity) os << " (multiplicity " << r.multiplicity << ")";
    os << '\n';
    if (r.condition_G) {
        const auto& g = *r.condition_G;
        os << indent << "  (G): " << (g.verdict ? "holds" : "fails") << "; kernel cubic " << g.restricted_cubic.to_string()
           << ", its singular locus dim " << g.cubic_sing_dim << "; h = " << g.h.to_string()
           << ", V(h) on it dim " << g.h_on_sing_dim << '\n';
    }
    if (r.regularity) {
        const auto& v = *r.regularity;
        os << indent << "  " << to_string(v.condition) << ": " << (v.pass ? "pass" : "FAIL");
        if (v.condition != RegularityCondition::VacuousM5)
            os << " (dimension " << v.actual_dim << ", expected " << v.expected_dim << ")";
        os << '\n';
    }
}

}  // namespace

template <FieldElement K>
std::string render_text(const PointReport<K>& r) {
    std::ostringstream os;
    render_point(os, r, "");
    return os.str();
}

template <FieldElement K>
std::string render_text(const MembershipReport<K>& r) {
    std::ostringstream os;
    os << "membership check, M = " << r.M << " over " << r.field.name() << '\n';
    os << "verdict: " << to_string(r.verdict) << " (at the checked points)\n";
    if (r.witness) {
        os << "witness: " << r.witness->condition;
        if (r.witness->point) os << " at " << point_str(*r.witness->point);
        os << ": " << r.witness->detail << '\n';
    }
    os << "conditions:\n";
    for (const auto& c : r.conditions) {
        os << "  " << c.condition << ": " << to_string(c.status) << " (checked " << c.checked << ", failed " << c.failed
           << ", inconclusive " << c.inconclusive << ")";
        if (!c.detail.empty()) os << " " << c.detail;
        os << '\n';
    }
    if (!r.points.empty()) {
        os << "points:\n";
        for (const auto& p : r.points) render_point(os, p, "  ");
    }
    if (r.enumerated_points)
        os << "enumerated " << r.enumerated_points << " F_p-points on F, " << r.enumerated_nonsingular
           << " nonsingular\n";
    os << "ledger:\n";
    for (const auto& l : r.ledger) os << "  - " << l << '\n';
    return os.str();
}

template <FieldElement K>
std::string render_text(const BlowupReport<K>& r) {
    std::ostringstream os;
    os << "blow-up of a rank-" << r.model.rank() << " point, " << r.model.kernel_dim() << "-dimensional kernel over "
       << r.model.field().name() << '\n';
    os << "(G): " << (r.condition_G.verdict ? "holds" : "fails") << "; rank-a locus dim " << r.rank_a_locus_dim << '\n';
    os << "formula and direct chart computation " << (r.paths_agree ? "agree" : "DISAGREE") << " at "
       << r.verdicts.size() << (r.enumerated ? " enumerated" : " supplied") << " point(s) of Q\n";
    os << "consistent with (G): " << (r.consistent_with_G ? "yes" : "NO") << '\n';
    for (const auto& v : r.verdicts)
        os << "  " << point_str(v.point) << ": " << to_string(v.status) << " (rank " << v.rank << ")\n";
    return os.str();
}

std::string render_text(const CodimReport& r) {
    std::ostringstream os;
    os << "codimension tables for M = " << r.M << '\n';
    os << "  gamma(M)            " << r.gamma << '\n';
    os << "  dim P               " << r.dim_P << '\n';
    os << "  target gamma+M-1    " << r.target << '\n';
    os << "  B_G                 " << r.B_G.value << (r.B_G.derived ? "" : "  (table entry, not assembled)") << '\n';
    if (r.B1) {
        os << "  B1 per a           ";
        for (const auto& e : r.B1->per_a) os << " a=" << e.index << ":" << e.value;
        os << "\n  B1 minimum          " << r.B1->minimum << '\n';
    }
    if (r.B2) os << "  B2                  " << *r.B2 << '\n';
    os << "  B3 per a           ";
    for (const auto& e : r.B3.per_a) os << " a=" << e.index << ":" << e.value;
    os << "\n  B3 (a=M) per b      ";
    for (const auto& e : r.B3.per_b) os << " b=" << e.index << ":" << e.value;
    os << "  (lower bounds)\n";
    const auto& h = r.h;
    os << "  h(b), b=3..M-1     ";
    for (const auto& e : h.values) os << " " << e.value;
    os << "\n  min h               " << h.minimum << " at b =";
    for (auto b : h.minimizers) os << ' ' << b;
    os << "\n  published minimizer b = " << h.claimed_minimizer << " (h = "
       << h_value(r.M, h.claimed_minimizer) << ")" << (h.claim_holds ? "" : "  NOT the minimum") << '\n';
    os << "  closed forms for h(3), h(M-2), h(M-1): " << (h.closed_forms_hold ? "hold" : "FAIL") << '\n';
    if (h.upper_root_bracketed)
        os << "  larger root of h' in [M-2, M-1]: " << (*h.upper_root_bracketed ? "yes" : "no") << '\n';
    os << "inequalities (" << (r.theorem03.holds ? "all hold" : "SOME FAIL") << "):\n";
    for (const auto& c : r.theorem03.checks)
        os << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << ": " << c.lhs << (c.strict ? " > " : " >= ") << c.rhs
           << (c.equality ? "  (equality)" : "") << '\n';
    return os.str();
}

std::string render_text(const CensusReport& r) {
    std::ostringstream os;
    const auto& c = r.config;
    os << "census [" << r.label << "] M = " << c.M << " over F_" << c.p << ", " << c.sample_count
       << " samples, seed " << c.seed << ", checks " << to_string(c.checks) << '\n';
    os << "  points of P^" << c.M << ": " << r.ambient_points << "; mean points on F: " << r.mean_points_on_F.get_d()
       << " (" << r.mean_points_on_F << ")\n";
    for (const auto& t : r.tallies) {
        os << "  " << t.name << ": " << t.failures << "/" << t.checked << " = " << t.frequency;
        if (t.inconclusive) os << ", inconclusive " << t.inconclusive;
        if (t.heuristic) os << "; first-order expectation " << t.heuristic->get_d();
        os << '\n';
    }
    const auto& b = r.calibration;
    os << "  calibration: observed " << b.observed << " in [" << b.low << ", " << b.high << "]: "
       << (b.within ? "yes" : "NO") << " (E1 = " << b.E1 << ")\n";
    os << "  consistency: expansion " << r.expansion_disagreements << ", Euler " << r.euler_disagreements << '\n';
    return os.str();
}

#define QSING_INSTANTIATE(K)                                                               \
    template json to_json(const PointReport<K>&);                                          \
    template PointReport<K> point_report_from_json(const json&, const Field&);            \
    template json to_json(const MembershipReport<K>&);                                     \
    template MembershipReport<K> membership_report_from_json(const json&);                 \
    template json to_json(const BlowupReport<K>&);                                         \
    template BlowupReport<K> blowup_report_from_json(const json&);                         \
    template json point_record(const PointReport<K>&, const Field&, unsigned);             \
    template std::string render_text(const PointReport<K>&);                               \
    template std::string render_text(const MembershipReport<K>&);                          \
    template std::string render_text(const BlowupReport<K>&);

QSING_INSTANTIATE(Rational)
QSING_INSTANTIATE(Zp)

#undef QSING_INSTANTIATE

}  // namespace qsing::report
