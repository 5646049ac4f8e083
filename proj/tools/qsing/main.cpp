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

// qsing: command-line front end. Exit codes are a stable contract:
// 0 verified / tables OK, 1 violation found, 2 inconclusive, 3 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsing/expansion.hpp"
#include "qsing/regularity.hpp"
#include "qsing/text.hpp"
#include "report.hpp"

namespace {

using namespace qsing;
using report::json;

constexpr int kVerified = 0;
constexpr int kViolation = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;

struct Input {
    HypersurfaceText header;
    unsigned M = 0;
};

Input read_input(const std::string& path) {
    std::string contents;
    if (path == "-") {
        contents.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot open " + path);
        contents.assign(std::istreambuf_iterator<char>(in), {});
    }
    Input input{parse_hypersurface_header(contents), 0};
    if (input.header.degree < 1) throw PreconditionError("header degree M must be positive");
    input.M = static_cast<unsigned>(input.header.degree);
    return input;
}

template <FieldElement K>
Polynomial<K> load_form(const Input& in) {
    auto f = parse_polynomial<K>(in.header.field, in.M + 1, in.header.polynomial);
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != static_cast<int>(in.M))
        throw PreconditionError("polynomial is not a nonzero form of degree M=" + std::to_string(in.M));
    return f;
}

template <FieldElement K>
ProjectivePoint<K> load_point(const Field& field, const std::string& text, std::size_t size) {
    auto coords = parse_point<K>(field, text);
    if (coords.size() != size)
        throw PreconditionError("point " + text + " has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(size));
    return ProjectivePoint<K>(std::move(coords));
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
    std::string file;
    std::string point;
    std::uint64_t budget_groebner = GroebnerOptions{}.step_budget;
    bool json = false;
};

template <FieldElement K>
int classify(const Input& in, const ClassifyArgs& a) {
    const auto f = load_form<K>(in);
    const auto o = load_point<K>(in.header.field, a.point, in.M + 1);
    GroebnerOptions opts;
    opts.step_budget = a.budget_groebner;
    const auto exp = expand_at(f, o);
    auto r = classify_point(exp);
    int code = kVerified;
    const bool bad_kind =
        r.kind == PointKind::HigherMultiplicity || (r.kind == PointKind::QuadraticRank && r.rank < 3);
    if (bad_kind) code = kViolation;
    try {
        if (!bad_kind && r.kind == PointKind::QuadraticRank && r.rank == 3) {
            r.condition_G = check_condition_G(exp, opts);
            if (!r.condition_G->verdict) code = kViolation;
        }
        if (!bad_kind && !(r.kind == PointKind::Nonsingular && in.M == 5)) {
            r.regularity = check_regularity(exp, r.rank, opts);
            if (!r.regularity->pass) code = kViolation;
        } else if (!bad_kind) {
            r.regularity = check_regularity(exp, 0, opts);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        if (code == kVerified) code = kInconclusive;
    }
    emit(report::point_record(r, in.header.field, in.M), report::render_text(r), a.json);
    return code;
}

// ---- check-membership ------------------------------------------------------

struct MembershipArgs {
    std::string file;
    std::vector<std::string> points;
    bool all_Fp_points = false;
    std::uint64_t budget_enum = MembershipOptions<Zp>{}.enumeration_budget;
    std::uint64_t budget_groebner = GroebnerOptions{}.step_budget;
    bool planes = false;
    bool lines = false;
    std::uint32_t reduce_mod = 0;
    bool skip_singular_locus = false;
    bool json = false;
};

template <FieldElement K>
int check_membership_cmd(const Input& in, const MembershipArgs& a) {
    const auto f = load_form<K>(in);
    if (in.M < 5) throw PreconditionError("membership conditions need M >= 5");
    MembershipOptions<K> opts;
    for (const auto& p : a.points) opts.points.push_back(load_point<K>(in.header.field, p, in.M + 1));
    opts.all_Fp_points = a.all_Fp_points;
    opts.enumeration_budget = a.budget_enum;
    opts.groebner.step_budget = a.budget_groebner;
    opts.compute_singular_locus = !a.skip_singular_locus;
    opts.planes = a.planes;
    opts.singular_lines = a.lines;
    opts.reduction_prime = a.reduce_mod;
    const auto r = check_membership(f, opts);
    emit(report::to_json(r), report::render_text(r), a.json);
    switch (r.verdict) {
        case MembershipVerdict::ConditionsVerified: return kVerified;
        case MembershipVerdict::ConditionViolated: return kViolation;
        case MembershipVerdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

// ---- blowup ----------------------------------------------------------------

struct BlowupArgs {
    std::string file;
    std::string point;
    std::vector<std::string> exceptional;
    std::uint64_t budget_groebner = GroebnerOptions{}.step_budget;
    bool json = false;
};

template <FieldElement K>
int blowup_cmd(const Input& in, const BlowupArgs& a) {
    const auto f = load_form<K>(in);
    const auto o = load_point<K>(in.header.field, a.point, in.M + 1);
    GroebnerOptions opts;
    opts.step_budget = a.budget_groebner;
    // The vertex has M - 3 coordinates at a rank-3 point.
    std::optional<std::vector<ProjectivePoint<K>>> points;
    if (!a.exceptional.empty()) {
        points.emplace();
        for (const auto& p : a.exceptional) points->push_back(load_point<K>(in.header.field, p, in.M - 3));
    }
    const auto r = blow_up_rank3_point(f, o, points, opts);
    emit(report::to_json(r), report::render_text(r), a.json);
    return r.condition_G.verdict && r.paths_agree && r.consistent_with_G ? kVerified : kViolation;
}

template <class Fn>
int dispatch(const Input& in, Fn&& fn) {
    if (in.header.field.is_prime()) return fn.template operator()<Zp>();
    return fn.template operator()<Rational>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of general-position conditions on hypersurface singularities"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Classify one point of {f = 0} and check its conditions");
    classify_cmd->add_option("file", ca.file, "Input file ('-' for stdin)")->required();
    classify_cmd->add_option("--point", ca.point, "Point as colon-separated coordinates")->required();
    classify_cmd->add_option("--budget-groebner", ca.budget_groebner, "Groebner step budget");
    classify_cmd->add_flag("--json", ca.json, "Emit a JSON record");

    MembershipArgs ma;
    auto* member_cmd = app.add_subcommand("check-membership", "Check every general-position condition");
    member_cmd->add_option("file", ma.file, "Input file ('-' for stdin)")->required();
    member_cmd->add_option("--point", ma.points, "Point to check (repeatable)");
    member_cmd->add_flag("--all-Fp-points", ma.all_Fp_points, "Enumerate and check every F_p-point");
    member_cmd->add_option("--budget-enum", ma.budget_enum, "Maximum number of ambient points to enumerate");
    member_cmd->add_option("--budget-groebner", ma.budget_groebner, "Groebner step budget");
    member_cmd->add_flag("--planes", ma.planes, "M = 5: search for planes on F over F_p");
    member_cmd->add_flag("--lines", ma.lines, "M = 5: search for lines singular on a 3-space section");
    member_cmd->add_option("--reduce-mod", ma.reduce_mod, "Prime for the subspace checks when f is over Q");
    member_cmd->add_flag("--skip-singular-locus", ma.skip_singular_locus, "Do not compute dim Sing F");
    member_cmd->add_flag("--json", ma.json, "Emit a JSON record");

    unsigned codim_M = 0;
    bool codim_json = false;
    auto* codim_cmd = app.add_subcommand("codim-tables", "Print the codimension bounds for degree M");
    codim_cmd->add_option("--M", codim_M, "Degree and dimension M >= 5")->required();
    codim_cmd->add_flag("--json", codim_json, "Emit a JSON record");

    CensusConfig cc;
    std::string checks = to_string(cc.checks);
    bool census_json = false;
    bool per_sample = false;
    auto* census_cmd = app.add_subcommand("census", "Sample random forms over F_p and tally failures");
    census_cmd->add_option("--M", cc.M, "Degree and dimension");
    census_cmd->add_option("--p", cc.p, "Odd prime");
    census_cmd->add_option("--samples", cc.sample_count, "Number of random forms");
    census_cmd->add_option("--seed", cc.seed, "RNG seed");
    census_cmd->add_option("--checks", checks, "Comma list of rank,G,R,planes,lines, or all / none");
    census_cmd->add_option("--r1-points", cc.r1_points, "Nonsingular points per sample checked for R1");
    census_cmd->add_option("--threads", cc.threads, "Worker threads (0 = hardware concurrency)");
    census_cmd->add_option("--budget-enum", cc.enumeration_budget, "Maximum number of ambient points");
    census_cmd->add_option("--budget-groebner", cc.groebner.step_budget, "Groebner step budget");
    census_cmd->add_flag("--per-sample", per_sample, "Include per-sample rows in the JSON record");
    census_cmd->add_flag("--json", census_json, "Emit a JSON record");

    BlowupArgs ba;
    auto* blowup_cmd_ = app.add_subcommand("blowup", "Blow up a rank-3 point and check the exceptional points");
    blowup_cmd_->add_option("file", ba.file, "Input file ('-' for stdin)")->required();
    blowup_cmd_->add_option("--point", ba.point, "The rank-3 point")->required();
    blowup_cmd_->add_option("--exceptional-point", ba.exceptional,
                            "Point of the vertex (M-3 coordinates); required over Q");
    blowup_cmd_->add_option("--budget-groebner", ba.budget_groebner, "Groebner step budget");
    blowup_cmd_->add_flag("--json", ba.json, "Emit a JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify_cmd) {
            const auto in = read_input(ca.file);
            return dispatch(in, [&]<class K>() { return classify<K>(in, ca); });
        }
        if (*member_cmd) {
            const auto in = read_input(ma.file);
            return dispatch(in, [&]<class K>() { return check_membership_cmd<K>(in, ma); });
        }
        if (*blowup_cmd_) {
            const auto in = read_input(ba.file);
            return dispatch(in, [&]<class K>() { return blowup_cmd<K>(in, ba); });
        }
        if (*codim_cmd) {
            if (codim_M < 5) throw PreconditionError("codim-tables needs M >= 5");
            const auto r = codim_report(codim_M);
            emit(report::to_json(r), report::render_text(r), codim_json);
            return r.theorem03.holds ? kVerified : kViolation;
        }
        if (*census_cmd) {
            cc.checks = parse_census_checks(checks);
            const auto r = run_census(cc);
            emit(report::to_json(r, per_sample), report::render_text(r), census_json);
            return kVerified;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
