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

#include "qsing/membership.hpp"

#include <algorithm>
#include <map>

#include "qsing/enumerate.hpp"
#include "qsing/errors.hpp"
#include "qsing/expansion.hpp"
#include "qsing/points.hpp"
#include "qsing/regularity.hpp"

namespace qsing {

std::string to_string(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::ConditionsVerified: return "ConditionsVerified";
        case MembershipVerdict::ConditionViolated: return "ConditionViolated";
        case MembershipVerdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

MembershipVerdict membership_verdict_from_string(const std::string& s) {
    for (auto v : {MembershipVerdict::ConditionsVerified, MembershipVerdict::ConditionViolated,
                   MembershipVerdict::Inconclusive})
        if (to_string(v) == s) return v;
    throw ParseError("unknown membership verdict '" + s + "'", 0);
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

CheckStatus check_status_from_string(const std::string& s) {
    for (auto v : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Inconclusive, CheckStatus::Skipped})
        if (to_string(v) == s) return v;
    throw ParseError("unknown check status '" + s + "'", 0);
}

Polynomial<Zp> reduce_mod(const Polynomial<Rational>& f, std::uint32_t p) {
    const Field field = Field::prime(p);
    std::vector<Term<Zp>> terms;
    for (const auto& t : f.terms()) {
        const mpq_class& c = t.coeff.value();
        if (c.get_den() % p == 0)
            throw PreconditionError("reduce_mod: " + std::to_string(p) + " divides a coefficient denominator");
        terms.push_back({t.mono, Zp::from_fraction(field, c.get_num(), c.get_den())});
    }
    return Polynomial<Zp>::from_terms(field, f.nvars(), std::move(terms));
}

namespace {

const char* const kConditionOrder[] = {"singular-locus", "quadratic-rank", "G",      "R1",
                                       "R2",             "R3",             "planes", "singular-lines"};

template <FieldElement K>
class Assembler {
   public:
    explicit Assembler(MembershipReport<K>& r) : r_(r) {}

    ConditionEntry& entry(const std::string& name) {
        auto& e = entries_[name];
        e.condition = name;
        return e;
    }
    void pass(const std::string& name) { ++entry(name).checked; }
    void inconclusive(const std::string& name) {
        auto& e = entry(name);
        ++e.checked;
        ++e.inconclusive;
    }
    void fail(const std::string& name, MembershipWitness<K> w) {
        auto& e = entry(name);
        ++e.checked;
        ++e.failed;
        if (!first_failure_) first_failure_ = std::move(w);
    }

    void finish() {
        bool inconclusive = false;
        for (const char* name : kConditionOrder) {
            auto it = entries_.find(name);
            if (it == entries_.end()) continue;
            ConditionEntry e = it->second;
            if (e.failed) e.status = CheckStatus::Fail;
            else if (e.inconclusive) e.status = CheckStatus::Inconclusive;
            else e.status = e.checked ? CheckStatus::Pass : CheckStatus::Skipped;
            inconclusive |= e.status == CheckStatus::Inconclusive;
            r_.conditions.push_back(std::move(e));
        }
        if (first_failure_) {
            r_.verdict = MembershipVerdict::ConditionViolated;
            r_.witness = std::move(first_failure_);
        } else {
            r_.verdict = inconclusive ? MembershipVerdict::Inconclusive : MembershipVerdict::ConditionsVerified;
        }
    }

   private:
    MembershipReport<K>& r_;
    std::map<std::string, ConditionEntry> entries_;
    std::optional<MembershipWitness<K>> first_failure_;
};

template <FieldElement K>
MembershipWitness<K> point_witness(const ProjectivePoint<K>& o, std::string condition, std::string detail) {
    return {o, std::move(condition), std::move(detail), {}};
}

// Classifies o and runs the conditions that apply to its kind.
template <FieldElement K>
PointReport<K> check_point(const Polynomial<K>& f, const ProjectivePoint<K>& o, unsigned M,
                           const GroebnerOptions& opts, Assembler<K>& out) {
    const auto exp = expand_at(f, o);
    PointReport<K> report = classify_point(exp);
    if (report.kind == PointKind::HigherMultiplicity ||
        (report.kind == PointKind::QuadraticRank && report.rank < 3)) {
        out.fail("quadratic-rank",
                 point_witness(o, "quadratic-rank",
                               report.kind == PointKind::HigherMultiplicity
                                   ? "multiplicity " + std::to_string(report.multiplicity)
                                   : "quadratic rank " + std::to_string(report.rank) + " < 3"));
        return report;
    }
    if (report.kind == PointKind::QuadraticRank) out.pass("quadratic-rank");

    if (report.kind == PointKind::QuadraticRank && report.rank == 3) {
        try {
            report.condition_G = check_condition_G(exp, opts);
            if (report.condition_G->verdict) out.pass("G");
            else
                out.fail("G", point_witness(o, "G",
                                            "cubic singular locus dim " +
                                                std::to_string(report.condition_G->cubic_sing_dim) +
                                                ", h on it dim " +
                                                std::to_string(report.condition_G->h_on_sing_dim)));
        } catch (const BudgetExceeded&) {
            out.inconclusive("G");
        }
    }

    const bool vacuous = report.kind == PointKind::Nonsingular && M == 5;
    if (vacuous) return report;
    const std::string name = report.kind == PointKind::Nonsingular ? "R1" : report.rank >= 7 ? "R2" : "R3";
    try {
        report.regularity = check_regularity(exp, report.rank, opts);
        const auto& v = *report.regularity;
        if (v.pass) out.pass(name);
        else
            out.fail(name, point_witness(o, name,
                                         "dimension " + std::to_string(v.actual_dim) + " exceeds expected " +
                                             std::to_string(v.expected_dim) + " by " +
                                             std::to_string(v.actual_dim - v.expected_dim)));
    } catch (const BudgetExceeded&) {
        out.inconclusive(name);
    }
    return report;
}

template <FieldElement K>
std::optional<Polynomial<Zp>> subspace_form(const Polynomial<K>& f, const MembershipOptions<K>& opts,
                                            std::vector<std::string>& ledger) {
    if constexpr (std::is_same_v<K, Zp>) {
        return f;
    } else {
        if (opts.reduction_prime == 0) {
            ledger.push_back("planes/lines: requested over Q without a reduction prime; skipped");
            return std::nullopt;
        }
        ledger.push_back("planes/lines: decided for the reduction mod " + std::to_string(opts.reduction_prime));
        return reduce_mod(f, opts.reduction_prime);
    }
}

// dim Sing(F mod p) bounds dim Sing F from above: fibre dimension is upper
// semicontinuous on the projective Z_(p)-scheme cut out by f and its
// partials. Returns (bound, p) for the first prime of good reduction.
std::optional<std::pair<int, std::uint32_t>> modular_singular_bound(const Polynomial<Rational>& f,
                                                                     const MembershipOptions<Rational>& opts,
                                                                     std::vector<std::string>& ledger) {
    std::vector<std::uint32_t> primes{32003, 32009};
    if (opts.reduction_prime) primes.insert(primes.begin(), opts.reduction_prime);
    for (const auto p : primes) {
        try {
            const auto fp = reduce_mod(f, p);
            if (fp.is_zero()) continue;
            const auto dim = singular_locus_dimension(fp, opts.groebner);
            return std::pair{dim.projective_dim.value_or(-1), p};
        } catch (const PreconditionError&) {
            continue;  // p divides a denominator
        } catch (const BudgetExceeded&) {
            ledger.push_back("singular locus: mod " + std::to_string(p) + " bound exceeded the Groebner budget");
        }
    }
    return std::nullopt;
}

}  // namespace

template <FieldElement K>
MembershipReport<K> check_membership(const Polynomial<K>& f, const MembershipOptions<K>& opts) {
    if (f.is_zero() || !f.is_homogeneous())
        throw PreconditionError("check_membership: f must be a nonzero form");
    const auto M = static_cast<unsigned>(f.degree());
    if (M < 5) throw PreconditionError("check_membership: needs M >= 5, got degree " + std::to_string(M));
    if (f.nvars() != M + 1)
        throw PreconditionError("check_membership: a degree-" + std::to_string(M) + " form needs " +
                                std::to_string(M + 1) + " variables");

    MembershipReport<K> r;
    r.M = M;
    r.field = f.field();
    Assembler<K> out(r);

    if (opts.compute_singular_locus) {
        const int required = M == 5 ? 4 : 5;
        auto record = [&](int dim, const std::string& how) {
            r.singular_locus_dim = dim;
            const int codim = int(M) - 1 - dim;
            auto& e = out.entry("singular-locus");
            e.detail = how + "projective dimension " + std::to_string(dim) + ", codimension in F " +
                       std::to_string(codim) + ", required >= " + std::to_string(required);
            if (codim >= required) out.pass("singular-locus");
            else out.fail("singular-locus", {std::nullopt, "singular-locus", e.detail, {}});
            r.ledger.push_back("singular locus: " + e.detail);
        };
        bool certified = false;
        if constexpr (std::is_same_v<K, Rational>) {
            if (const auto bound = modular_singular_bound(f, opts, r.ledger);
                bound && int(M) - 1 - bound->first >= required) {
                r.singular_locus_dim_is_bound = true;
                record(bound->first, "at most (mod " + std::to_string(bound->second) + " bound) ");
                certified = true;
            }
        }
        if (!certified) {
            try {
                const auto dim = singular_locus_dimension(f, opts.groebner);
                record(dim.projective_dim.value_or(-1), "");
            } catch (const BudgetExceeded&) {
                out.inconclusive("singular-locus");
                r.ledger.push_back("singular locus: Groebner budget exceeded");
            }
        }
    } else {
        r.ledger.push_back("singular locus: not computed");
    }

    std::vector<ProjectivePoint<K>> points = opts.points;
    for (const auto& o : points)
        if (o.size() != f.nvars()) throw PreconditionError("check_membership: point has the wrong length");

    bool enumerated = false;
    if constexpr (std::is_same_v<K, Zp>) {
        if (opts.all_Fp_points) {
            const std::uint32_t p = f.field().characteristic();
            const std::uint64_t N = projective_point_count(p, f.nvars());
            if (N == 0 || N > opts.enumeration_budget) {
                out.inconclusive("quadratic-rank");
                r.ledger.push_back("F_p-points: P^" + std::to_string(M) + "(F_" + std::to_string(p) +
                                   ") exceeds the enumeration budget; not enumerated");
            } else {
                enumerated = true;
                FpFormEvaluator ev(f);
                std::vector<ProjectivePoint<Zp>> nonsingular;
                for_each_projective_point(p, f.nvars(), [&](const std::vector<std::uint32_t>& x) {
                    ev.load(x);
                    if (ev.value() != 0) return true;
                    ++r.enumerated_points;
                    if (ev.gradient_vanishes()) points.push_back(to_projective_point(p, x));
                    else if (M >= 6) nonsingular.push_back(to_projective_point(p, x));
                    else ++r.enumerated_nonsingular;
                    return true;
                });
                for (const auto& o : nonsingular) {
                    ++r.enumerated_nonsingular;
                    const auto exp = expand_at(f, o);
                    try {
                        const auto v = check_regularity(exp, 0, opts.groebner);
                        if (v.pass) out.pass("R1");
                        else
                            out.fail("R1", point_witness(o, "R1",
                                                         "dimension " + std::to_string(v.actual_dim) +
                                                             " exceeds expected " + std::to_string(v.expected_dim)));
                    } catch (const BudgetExceeded&) {
                        out.inconclusive("R1");
                    }
                }
                r.ledger.push_back("F_p-points: all " + std::to_string(r.enumerated_points) +
                                   " points of F over F_" + std::to_string(p) +
                                   " enumerated; points over extension fields not checked");
            }
        }
    }
    if (!enumerated)
        r.ledger.push_back(std::string("points: only the ") + std::to_string(opts.points.size()) +
                           " supplied point(s) checked; rational singular points are not searched for");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const auto& o : points) {
        if (!f.evaluate(o.coords()).is_zero())
            throw PreconditionError("check_membership: point " + o.to_string() + " is not on the hypersurface");
        r.points.push_back(check_point(f, o, M, opts.groebner, out));
    }

    if (M == 5 && (opts.planes || opts.singular_lines)) {
        if (auto g = subspace_form(f, opts, r.ledger)) {
            if (opts.planes) {
                try {
                    const auto pc = check_no_planes_M5(*g, opts.planes_options);
                    if (pc.no_planes) out.pass("planes");
                    else out.fail("planes", {std::nullopt, "planes", "F_p-plane on F (evidence)", {*pc.witness}});
                } catch (const BudgetExceeded&) {
                    out.inconclusive("planes");
                }
            }
            if (opts.singular_lines) {
                try {
                    const auto lc = check_no_singular_line_in_3space_M5(*g, opts.lines_options);
                    if (lc.no_singular_line) out.pass("singular-lines");
                    else
                        out.fail("singular-lines", {std::nullopt, "singular-lines",
                                                    "F_p-line singular on a 3-space section (evidence)",
                                                    {*lc.line, *lc.three_space}});
                } catch (const BudgetExceeded&) {
                    out.inconclusive("singular-lines");
                }
            }
            r.ledger.push_back("planes/lines: F_p evidence, not a certificate over Q");
        }
    } else if (M == 5) {
        r.ledger.push_back("planes/lines: not requested");
    }
    if (M >= 6 && !enumerated)
        r.ledger.push_back("R1: checked only at supplied nonsingular points");

    out.finish();
    return r;
}

template MembershipReport<Rational> check_membership(const Polynomial<Rational>&, const MembershipOptions<Rational>&);
template MembershipReport<Zp> check_membership(const Polynomial<Zp>&, const MembershipOptions<Zp>&);

}  // namespace qsing
