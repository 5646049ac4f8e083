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

#include "qsing/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <type_traits>

#include "f4.hpp"
#include "qsing/matrix.hpp"
#include "pairs.hpp"

namespace qsing {

namespace {

using detail::CriticalPair;

template <FieldElement K>
class Buchberger {
   public:
    Buchberger(Field f, std::size_t nvars, const GroebnerOptions& opts) : field_(f), nvars_(nvars), opts_(opts) {}

    void add(const Polynomial<K>& p) {
        if (unit_) return;
        insert(reduce(to_map(p), false));
    }

    void run() {
        while (!unit_ && !pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const CriticalPair& a, const CriticalPair& b) {
                if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
                if (a.i != b.i) return a.i < b.i;
                return a.j < b.j;
            });
            if (opts_.max_degree && best->lcm.degree() > opts_.max_degree) break;
            CriticalPair pr = *best;
            *best = pairs_.back();
            pairs_.pop_back();
            insert(reduce(s_polynomial(pr), false));
        }
    }

    std::vector<Polynomial<K>> reduced_basis() {
        if (unit_) return {Polynomial<K>::constant(field_, nvars_, K::one(field_))};
        auto idx = detail::minimal_indices(leads_, active_);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
        reducers_ = idx;
        // Leading monomials are pairwise non-dividing, so only tails change.
        std::vector<Polynomial<K>> out;
        out.reserve(idx.size());
        for (auto k : idx) {
            const auto& lt = polys_[k].terms().front();
            Polynomial<K> head = Polynomial<K>::term(field_, nvars_, lt.mono, lt.coeff);
            out.push_back(head + reduce(to_map(polys_[k] - head), true));
        }
        return out;
    }

    std::uint64_t steps() const noexcept { return steps_; }

   private:
    using TermMap = std::map<Monomial, K, std::greater<Monomial>>;

    TermMap to_map(const Polynomial<K>& p) const {
        TermMap m;
        for (const auto& t : p.terms()) m.emplace_hint(m.end(), t.mono, t.coeff);
        return m;
    }

    void tick() {
        if (++steps_ > opts_.step_budget)
            throw BudgetExceeded("Groebner step budget of " + std::to_string(opts_.step_budget) + " exceeded");
    }

    static void axpy(TermMap& h, const K& c, const Monomial& m, const Polynomial<K>& g) {
        auto ts = g.terms();
        for (std::size_t k = 1; k < ts.size(); ++k) {
            auto [it, inserted] = h.try_emplace(ts[k].mono * m, c * ts[k].coeff);
            if (!inserted) {
                it->second += c * ts[k].coeff;
                if (it->second.is_zero()) h.erase(it);
            }
        }
    }

    TermMap s_polynomial(const CriticalPair& pr) {
        TermMap h;
        axpy(h, K::one(field_), leads_[pr.i].quotient_of(pr.lcm), polys_[pr.i]);
        axpy(h, -K::one(field_), leads_[pr.j].quotient_of(pr.lcm), polys_[pr.j]);
        tick();
        return h;
    }

    const Polynomial<K>* find_reducer(const Monomial& m) const {
        const std::uint32_t mask = m.support_mask();
        for (auto k : reducers_)
            if ((masks_[k] & ~mask) == 0 && leads_[k].divides(m)) return &polys_[k];
        return nullptr;
    }

    /// Top reduction, or full reduction when `full`; reducers are monic.
    Polynomial<K> reduce(TermMap h, bool full) {
        std::vector<Term<K>> rem;
        while (!h.empty()) {
            auto it = h.begin();
            const Polynomial<K>* red = find_reducer(it->first);
            if (!red) {
                rem.push_back({it->first, it->second});
                h.erase(it);
                if (!full) break;
                continue;
            }
            K c = it->second;
            Monomial m = red->leading_monomial().quotient_of(it->first);
            h.erase(it);
            axpy(h, -c, m, *red);
            tick();
        }
        for (auto& [m, c] : h) rem.push_back({m, c});
        return Polynomial<K>::from_terms(field_, nvars_, std::move(rem));
    }

    void insert(Polynomial<K> r) {
        if (r.is_zero()) return;
        r = r.monic();
        if (r.is_constant()) {
            unit_ = true;
            return;
        }
        leads_.push_back(r.leading_monomial());
        masks_.push_back(r.leading_monomial().support_mask());
        polys_.push_back(std::move(r));
        active_.push_back(true);
        detail::gebauer_moeller_update(leads_, active_, pairs_, polys_.size() - 1);
        reducers_.clear();
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) reducers_.push_back(k);
    }

    Field field_;
    std::size_t nvars_;
    GroebnerOptions opts_;
    std::vector<Polynomial<K>> polys_;
    std::vector<Monomial> leads_;
    std::vector<std::uint32_t> masks_;
    std::vector<bool> active_;
    std::vector<std::size_t> reducers_;
    std::vector<CriticalPair> pairs_;
    std::uint64_t steps_ = 0;
    bool unit_ = false;
};

template <FieldElement K>
std::vector<Polynomial<K>> compute_basis(std::span<const Polynomial<K>> gens, std::size_t nvars,
                                         const GroebnerOptions& opts, std::uint64_t& steps) {
    if constexpr (std::is_same_v<K, Zp>) {
        if (opts.algorithm != GroebnerAlgorithm::Buchberger) {
            auto r = detail::f4_groebner(gens, opts, true);
            steps = r.steps;
            return std::move(r.basis);
        }
    } else {
        if (opts.algorithm == GroebnerAlgorithm::F4) throw PreconditionError("F4 needs a prime field");
    }
    Buchberger<K> bb(gens[0].field(), nvars, opts);
    for (const auto& g : gens) bb.add(g);
    bb.run();
    steps = bb.steps();
    return bb.reduced_basis();
}

template <FieldElement K>
void check_same_ring(std::span<const Polynomial<K>> gens) {
    for (const auto& g : gens)
        if (!(g.field() == gens[0].field()) || g.nvars() != gens[0].nvars())
            throw RingMismatch("generators from different rings");
}

/// Smallest set of variables meeting every support (branch on an unmet support).
void min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int size, int& best) {
    if (size >= best) return;
    for (auto s : supports) {
        if (s & chosen) continue;
        for (std::uint32_t bits = s; bits; bits &= bits - 1) {
            std::uint32_t v = bits & (~bits + 1);
            min_hitting_set(supports, chosen | v, size + 1, best);
        }
        return;
    }
    best = size;
}

}  // namespace

int monomial_ideal_dimension(std::span<const Monomial> leading, std::size_t nvars) {
    std::vector<std::uint32_t> supports;
    for (const auto& m : leading) {
        if (m.is_one()) return -1;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m[i]) s |= 1U << i;
        supports.push_back(s);
    }
    // Only minimal supports matter.
    std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::vector<std::uint32_t> minimal;
    for (auto s : supports) {
        bool redundant = false;
        for (auto t : minimal)
            if ((t & s) == t) redundant = true;
        if (!redundant) minimal.push_back(s);
    }
    int best = static_cast<int>(nvars) + 1;
    min_hitting_set(minimal, 0, 0, best);
    return static_cast<int>(nvars) - best;
}

template <FieldElement K>
std::vector<Polynomial<K>> groebner_basis(std::span<const Polynomial<K>> gens, const GroebnerOptions& opts) {
    if (gens.empty()) return {};
    check_same_ring(gens);
    std::uint64_t steps = 0;
    return compute_basis(gens, gens[0].nvars(), opts, steps);
}

template <FieldElement K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const Polynomial<K>> basis) {
    Polynomial<K> h = p;
    Polynomial<K> rem(p.field(), p.nvars());
    while (!h.is_zero()) {
        const auto lt = h.terms().front();
        const Polynomial<K>* red = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
                red = &g;
                break;
            }
        if (red) {
            h.add_scaled(-(lt.coeff / red->leading_coefficient()), red->leading_monomial().quotient_of(lt.mono), *red);
        } else {
            auto t = Polynomial<K>::term(p.field(), p.nvars(), lt.mono, lt.coeff);
            rem += t;
            h -= t;
        }
    }
    return rem;
}

template <FieldElement K>
IdealDimension<K> ideal_dimension(std::span<const Polynomial<K>> gens, std::size_t nvars, bool homogeneous,
                                  const GroebnerOptions& opts) {
    IdealDimension<K> out;
    out.generators.assign(gens.begin(), gens.end());
    if (homogeneous)
        for (const auto& g : gens)
            if (!g.is_homogeneous()) throw PreconditionError("ideal_dimension: generator is not homogeneous");
    check_same_ring(gens);
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw RingMismatch("ideal_dimension: generator ring has wrong variable count");
    if (!gens.empty()) {
        out.groebner_basis = compute_basis(gens, nvars, opts, out.steps);
    }
    std::vector<Monomial> lead;
    for (const auto& g : out.groebner_basis) lead.push_back(g.leading_monomial());
    out.affine_dim = monomial_ideal_dimension(lead, nvars);
    if (homogeneous) out.projective_dim = out.affine_dim >= 0 ? out.affine_dim - 1 : -1;
    return out;
}

template <FieldElement K>
bool linear_section_certifies(std::span<const Polynomial<K>> gens, std::size_t nvars, std::size_t r,
                              const GroebnerOptions& opts, unsigned attempts) {
    if (r > nvars) throw PreconditionError("linear_section_certifies: codimension exceeds variable count");
    for (const auto& g : gens)
        if (!g.is_homogeneous() || g.nvars() != nvars)
            throw PreconditionError("linear_section_certifies: needs homogeneous generators in the stated ring");
    if (gens.empty()) return nvars == r;
    const Field& fld = gens[0].field();
    const std::size_t m = nvars - r;
    // Fixed seed: the same input always gets the same sections.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (unsigned attempt = 0; attempt < attempts; ++attempt) {
        Matrix<K> a(fld, nvars, m);
        for (std::size_t i = 0; i < m; ++i) a(i, i) = K::one(fld);
        if (attempt > 0)
            for (std::size_t i = m; i < nvars; ++i)
                for (std::size_t k = 0; k < m; ++k) a(i, k) = K::from_int(fld, static_cast<long long>(rng() % 97) - 48);
        std::vector<Polynomial<K>> sliced;
        for (const auto& g : gens) sliced.push_back(g.linear_map(a));
        if (ideal_dimension<K>(sliced, m, true, opts).affine_dim <= 0) return true;
    }
    return false;
}

template <FieldElement K>
RegularSequenceCheck<K> is_regular_sequence(std::span<const Polynomial<K>> gens, std::size_t ambient_dim,
                                            bool homogeneous, const GroebnerOptions& opts) {
    if (gens.size() > ambient_dim) throw PreconditionError("is_regular_sequence: more forms than variables");
    for (const auto& g : gens)
        if (g.nvars() != ambient_dim) throw PreconditionError("is_regular_sequence: ambient dimension mismatch");
    RegularSequenceCheck<K> out;
    out.expected_dim = static_cast<int>(ambient_dim - gens.size());
    // Krull's lower bound needs a proper ideal of positive-degree forms.
    const bool degenerate = std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.degree() <= 0; });
    if (homogeneous && !degenerate) {
        // A form in the ideal of the others does not cut V down, so dropping it
        // raises Krull's bound. Membership in degree d only needs a basis
        // truncated at d, which is cheap next to the full one and next to a
        // section that fails to certify.
        std::vector<Polynomial<K>> kept(gens.begin(), gens.end());
        std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
        for (std::size_t j = 0; j < kept.size();) {
            std::vector<Polynomial<K>> others;
            for (std::size_t i = 0; i < kept.size(); ++i)
                if (i != j && kept[i].degree() <= kept[j].degree()) others.push_back(kept[i]);
            GroebnerOptions truncated = opts;
            truncated.max_degree = static_cast<unsigned>(kept[j].degree());
            const auto basis = others.empty() ? std::vector<Polynomial<K>>{} : groebner_basis<K>(others, truncated);
            if (!others.empty() && normal_form<K>(kept[j], basis).is_zero())
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
            else
                ++j;
        }
        const auto lower = ambient_dim - kept.size();
        if (linear_section_certifies<K>(kept, ambient_dim, lower, opts)) {
            out.actual_dim = static_cast<int>(lower);
            out.regular = kept.size() == gens.size();
            out.method = DimensionMethod::LinearSection;
            return out;
        }
    }
    out.dimension = ideal_dimension(gens, ambient_dim, homogeneous, opts);
    out.actual_dim = out.dimension->affine_dim;
    out.regular = out.actual_dim == out.expected_dim;
    return out;
}

template std::vector<Polynomial<Rational>> groebner_basis(std::span<const Polynomial<Rational>>, const GroebnerOptions&);
template std::vector<Polynomial<Zp>> groebner_basis(std::span<const Polynomial<Zp>>, const GroebnerOptions&);
template Polynomial<Rational> normal_form(const Polynomial<Rational>&, std::span<const Polynomial<Rational>>);
template Polynomial<Zp> normal_form(const Polynomial<Zp>&, std::span<const Polynomial<Zp>>);
template IdealDimension<Rational> ideal_dimension(std::span<const Polynomial<Rational>>, std::size_t, bool,
                                                  const GroebnerOptions&);
template IdealDimension<Zp> ideal_dimension(std::span<const Polynomial<Zp>>, std::size_t, bool, const GroebnerOptions&);
template bool linear_section_certifies(std::span<const Polynomial<Rational>>, std::size_t, std::size_t,
                                       const GroebnerOptions&, unsigned);
template bool linear_section_certifies(std::span<const Polynomial<Zp>>, std::size_t, std::size_t,
                                       const GroebnerOptions&, unsigned);
template RegularSequenceCheck<Rational> is_regular_sequence(std::span<const Polynomial<Rational>>, std::size_t, bool,
                                                            const GroebnerOptions&);
template RegularSequenceCheck<Zp> is_regular_sequence(std::span<const Polynomial<Zp>>, std::size_t, bool,
                                                      const GroebnerOptions&);

}  // namespace qsing
