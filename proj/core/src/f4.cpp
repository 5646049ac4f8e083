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

#include "f4.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <utility>

#include "pairs.hpp"

namespace qsing::detail {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Monic, terms strictly decreasing.
struct SparsePoly {
    std::vector<Monomial> mons;
    std::vector<u32> coeffs;
};

/// Column indices strictly increasing (column 0 is the largest monomial).
struct SparseRow {
    std::vector<u32> cols;
    std::vector<u32> vals;
};

struct RowSpec {
    const SparsePoly* poly;
    Monomial mult;
};

u32 inverse_mod(u32 a, u32 p) {
    u64 result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<u32>(result);
}

/// One Macaulay-style matrix: symbolic preprocessing plus row reduction.
class MatrixBuilder {
   public:
    MatrixBuilder(const std::vector<SparsePoly>& polys, const std::vector<Monomial>& leads,
                  const std::vector<u32>& masks, const std::vector<std::size_t>& reducers)
        : polys_(polys), leads_(leads), masks_(masks), reducer_pool_(reducers) {}

    u32 touch(const Monomial& m) {
        auto [it, inserted] = col_of_.try_emplace(m, static_cast<u32>(col_mono_.size()));
        if (inserted) {
            col_mono_.push_back(m);
            reducer_of_.push_back(-1);
            work_.push_back(it->second);
        }
        return it->second;
    }

    void add_monomials(const RowSpec& s) {
        for (const auto& m : s.poly->mons) touch(m * s.mult);
    }

    /// Registers s as the pivot row for its leading column if that column
    /// has none yet; otherwise queues it for reduction.
    void add_pivot_or_todo(const RowSpec& s) {
        u32 c = touch(s.poly->mons.front() * s.mult);
        if (reducer_of_[c] < 0) {
            reducer_of_[c] = static_cast<long>(reducers_.size());
            reducers_.push_back(s);
            add_monomials(s);
        } else {
            add_todo(s);
        }
    }

    void add_todo(const RowSpec& s) {
        if (!seen_.emplace(s.poly, s.mult).second) return;
        todo_.push_back(s);
        add_monomials(s);
    }

    void preprocess() {
        while (!work_.empty()) {
            u32 c = work_.back();
            work_.pop_back();
            if (reducer_of_[c] >= 0) continue;
            const Monomial m = col_mono_[c];
            const u32 mask = m.support_mask();
            for (auto it = reducer_pool_.rbegin(); it != reducer_pool_.rend(); ++it) {
                std::size_t k = *it;
                if ((masks_[k] & ~mask) != 0 || !leads_[k].divides(m)) continue;
                RowSpec s{&polys_[k], leads_[k].quotient_of(m)};
                reducer_of_[c] = static_cast<long>(reducers_.size());
                reducers_.push_back(s);
                add_monomials(s);
                break;
            }
        }
        // Sort columns by decreasing monomial.
        const std::size_t n = col_mono_.size();
        std::vector<u32> order(n);
        for (u32 i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](u32 a, u32 b) { return col_mono_[b] < col_mono_[a]; });
        remap_.assign(n, 0);
        sorted_mono_.resize(n);
        for (u32 i = 0; i < n; ++i) {
            remap_[order[i]] = i;
            sorted_mono_[i] = col_mono_[order[i]];
        }
    }

    SparseRow row_of(const RowSpec& s) const {
        SparseRow r;
        r.cols.reserve(s.poly->mons.size());
        r.vals = s.poly->coeffs;
        for (const auto& m : s.poly->mons) r.cols.push_back(remap_[col_of_.at(m * s.mult)]);
        return r;
    }

    std::size_t ncols() const { return sorted_mono_.size(); }
    const std::vector<RowSpec>& reducers() const { return reducers_; }
    const std::vector<RowSpec>& todo() const { return todo_; }
    const Monomial& monomial(u32 col) const { return sorted_mono_[col]; }

    SparsePoly to_poly(const SparseRow& r) const {
        SparsePoly out;
        out.coeffs = r.vals;
        out.mons.reserve(r.cols.size());
        for (auto c : r.cols) out.mons.push_back(sorted_mono_[c]);
        return out;
    }

   private:
    const std::vector<SparsePoly>& polys_;
    const std::vector<Monomial>& leads_;
    const std::vector<u32>& masks_;
    const std::vector<std::size_t>& reducer_pool_;

    std::unordered_map<Monomial, u32, MonomialHash> col_of_;
    std::vector<Monomial> col_mono_;
    std::vector<long> reducer_of_;
    std::vector<u32> work_;
    std::vector<RowSpec> reducers_;
    std::vector<RowSpec> todo_;
    std::set<std::pair<const SparsePoly*, Monomial>> seen_;
    std::vector<u32> remap_;
    std::vector<Monomial> sorted_mono_;
};

class F4 {
   public:
    F4(Field f, std::size_t nvars, const GroebnerOptions& opts)
        : field_(f), nvars_(nvars), p_(f.characteristic()), opts_(opts) {}

    void run(std::vector<SparsePoly> inputs) {
        // Pending inputs enter degree by degree, smallest last.
        std::sort(inputs.begin(), inputs.end(), [](const SparsePoly& a, const SparsePoly& b) {
            return b.mons.front() < a.mons.front();
        });
        std::vector<SparsePoly> pending = std::move(inputs);
        while (!unit_ && (!pairs_.empty() || !pending.empty())) {
            unsigned d = ~0U;
            for (const auto& pr : pairs_) d = std::min(d, pr.lcm.degree());
            if (!pending.empty()) d = std::min(d, pending.back().mons.front().degree());
            if (opts_.max_degree && d > opts_.max_degree) break;

            std::vector<CriticalPair> selected, rest;
            for (auto& pr : pairs_) (pr.lcm.degree() == d ? selected : rest).push_back(pr);
            pairs_ = std::move(rest);
            std::vector<SparsePoly> fresh;
            while (!pending.empty() && pending.back().mons.front().degree() == d) {
                fresh.push_back(std::move(pending.back()));
                pending.pop_back();
            }
            step(selected, fresh);
        }
    }

    std::vector<Polynomial<Zp>> basis(bool reduce) {
        if (unit_) return {Polynomial<Zp>::constant(field_, nvars_, Zp::one(field_))};
        std::vector<std::size_t> idx = minimal_indices(leads_, active_);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
        std::vector<Polynomial<Zp>> out;
        if (!reduce) {
            for (auto k : idx) out.push_back(to_polynomial(polys_[k]));
            return out;
        }

        MatrixBuilder mb(polys_, leads_, masks_, idx);
        for (auto k : idx) mb.add_pivot_or_todo({&polys_[k], Monomial()});
        mb.preprocess();
        const std::size_t n = mb.ncols();
        std::vector<SparseRow> rows;
        rows.reserve(mb.reducers().size());
        for (const auto& s : mb.reducers()) rows.push_back(mb.row_of(s));
        std::vector<const SparseRow*> pivot(n, nullptr);
        std::vector<std::size_t> row_at(n, 0);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            pivot[rows[k].cols.front()] = &rows[k];
            row_at[rows[k].cols.front()] = k;
        }

        // Rightmost pivots first, so every reducer used is already final.
        std::vector<u64> acc(n, 0);
        for (std::size_t c = n; c-- > 0;)
            if (pivot[c]) rows[row_at[c]] = reduce_row(rows[row_at[c]], pivot, acc, true);
        for (auto k : idx) {
            const auto& lead = leads_[k];
            for (std::size_t c = 0; c < n; ++c)
                if (pivot[c] && mb.monomial(static_cast<u32>(c)) == lead) {
                    out.push_back(to_polynomial(mb.to_poly(*pivot[c])));
                    break;
                }
        }
        return out;
    }

    void add_input(const Polynomial<Zp>& g, std::vector<SparsePoly>& into) const {
        if (g.is_zero()) return;
        SparsePoly s;
        for (const auto& t : g.terms()) {
            s.mons.push_back(t.mono);
            s.coeffs.push_back(t.coeff.value());
        }
        make_monic(s.coeffs);
        into.push_back(std::move(s));
    }

    std::uint64_t steps() const { return steps_; }

   private:
    void tick(u64 n = 1) {
        steps_ += n;
        if (steps_ > opts_.step_budget)
            throw BudgetExceeded("Groebner step budget of " + std::to_string(opts_.step_budget) + " exceeded");
    }

    void make_monic(std::vector<u32>& vals) const {
        if (vals.front() == 1) return;
        u64 inv = inverse_mod(vals.front(), p_);
        for (auto& v : vals) v = static_cast<u32>(v * inv % p_);
    }

    Polynomial<Zp> to_polynomial(const SparsePoly& s) const {
        std::vector<Term<Zp>> ts;
        ts.reserve(s.mons.size());
        for (std::size_t k = 0; k < s.mons.size(); ++k) ts.push_back({s.mons[k], Zp(p_, s.coeffs[k])});
        return Polynomial<Zp>::from_terms(field_, nvars_, std::move(ts));
    }

    /// Reduction of r against the pivots. With tail_only the leading entry
    /// is kept and only later columns are reduced. acc must be all zero on
    /// entry and is left that way.
    SparseRow reduce_row(const SparseRow& r, const std::vector<const SparseRow*>& pivot, std::vector<u64>& acc,
                         bool tail_only) {
        // p < 2^16 keeps every product below 2^32, so entries can absorb
        // 2^32 updates before the reduction on read.
        return p_ < (1U << 16) ? reduce_row_impl<true>(r, pivot, acc, tail_only)
                               : reduce_row_impl<false>(r, pivot, acc, tail_only);
    }

    template <bool Lazy>
    SparseRow reduce_row_impl(const SparseRow& r, const std::vector<const SparseRow*>& pivot, std::vector<u64>& acc,
                              bool tail_only) {
        SparseRow out;
        std::size_t first = 0;
        if (tail_only) {
            out.cols.push_back(r.cols.front());
            out.vals.push_back(r.vals.front());
            first = 1;
        }
        if (first == r.cols.size()) return out;
        for (std::size_t k = first; k < r.cols.size(); ++k) acc[r.cols[k]] = r.vals[k];
        std::size_t hi = r.cols.back();
        u64 ops = 0;
        for (std::size_t c = r.cols[first]; c <= hi; ++c) {
            if (acc[c] == 0) continue;
            const u32 v = static_cast<u32>(Lazy ? acc[c] % p_ : acc[c]);
            acc[c] = 0;
            if (v == 0) continue;
            if (const SparseRow* pr = pivot[c]) {
                const u64 m = p_ - v;
                const std::size_t len = pr->cols.size();
                const u32* cols = pr->cols.data();
                const u32* vals = pr->vals.data();
                for (std::size_t t = 1; t < len; ++t) {
                    if constexpr (Lazy) acc[cols[t]] += m * vals[t];
                    else acc[cols[t]] = (acc[cols[t]] + m * vals[t]) % p_;
                }
                hi = std::max<std::size_t>(hi, cols[len - 1]);
                ops += len;
            } else {
                out.cols.push_back(static_cast<u32>(c));
                out.vals.push_back(v);
            }
        }
        tick(1 + ops / 64);
        return out;
    }

    void step(const std::vector<CriticalPair>& selected, std::vector<SparsePoly>& fresh) {
        std::vector<std::size_t> pool;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) pool.push_back(k);
        MatrixBuilder mb(polys_, leads_, masks_, pool);
        for (const auto& pr : selected) {
            mb.add_pivot_or_todo({&polys_[pr.i], leads_[pr.i].quotient_of(pr.lcm)});
            mb.add_todo({&polys_[pr.j], leads_[pr.j].quotient_of(pr.lcm)});
        }
        for (const auto& g : fresh) mb.add_todo({&g, Monomial()});
        tick(selected.size());
        mb.preprocess();

        const std::size_t n = mb.ncols();
        std::vector<SparseRow> reducer_rows;
        reducer_rows.reserve(mb.reducers().size());
        for (const auto& s : mb.reducers()) reducer_rows.push_back(mb.row_of(s));
        std::vector<const SparseRow*> pivot(n, nullptr);
        for (const auto& r : reducer_rows) pivot[r.cols.front()] = &r;

        std::vector<SparseRow> todo;
        todo.reserve(mb.todo().size());
        for (const auto& s : mb.todo()) todo.push_back(mb.row_of(s));
        std::sort(todo.begin(), todo.end(),
                  [](const SparseRow& a, const SparseRow& b) { return a.cols.size() < b.cols.size(); });

        std::vector<u64> acc(n, 0);
        std::deque<SparseRow> fresh_rows;
        for (const auto& r : todo) {
            SparseRow red = reduce_row(r, pivot, acc, false);
            if (red.cols.empty()) continue;
            make_monic(red.vals);
            fresh_rows.push_back(std::move(red));
            pivot[fresh_rows.back().cols.front()] = &fresh_rows.back();
        }

        std::vector<SparsePoly> found;
        for (const auto& r : fresh_rows) found.push_back(mb.to_poly(r));
        std::sort(found.begin(), found.end(),
                  [](const SparsePoly& a, const SparsePoly& b) { return a.mons.front() < b.mons.front(); });
        for (auto& s : found) insert(std::move(s));
    }

    void insert(SparsePoly s) {
        if (unit_) return;
        if (s.mons.front().is_one()) {
            unit_ = true;
            return;
        }
        leads_.push_back(s.mons.front());
        masks_.push_back(s.mons.front().support_mask());
        polys_.push_back(std::move(s));
        active_.push_back(true);
        gebauer_moeller_update(leads_, active_, pairs_, polys_.size() - 1);
    }

    Field field_;
    std::size_t nvars_;
    u32 p_;
    GroebnerOptions opts_;
    std::vector<SparsePoly> polys_;
    std::vector<Monomial> leads_;
    std::vector<u32> masks_;
    std::vector<bool> active_;
    std::vector<CriticalPair> pairs_;
    std::uint64_t steps_ = 0;
    bool unit_ = false;
};

}  // namespace

F4Result f4_groebner(std::span<const Polynomial<Zp>> gens, const GroebnerOptions& opts, bool reduce) {
    F4Result out;
    if (gens.empty()) return out;
    F4 engine(gens[0].field(), gens[0].nvars(), opts);
    std::vector<SparsePoly> inputs;
    for (const auto& g : gens) engine.add_input(g, inputs);
    if (inputs.empty()) return out;
    engine.run(std::move(inputs));
    out.basis = engine.basis(reduce);
    out.steps = engine.steps();
    return out;
}

}  // namespace qsing::detail
