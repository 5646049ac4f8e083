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

#include "qsing/planes.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "qsing/enumerate.hpp"
#include "qsing/errors.hpp"
#include "qsing/points.hpp"

namespace qsing {

namespace {

using Vec = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return Zp(p, a).inverse().value(); }

// Base-p encoding; callers ensure p^n fits.
std::uint64_t encode(const Vec& v, std::uint32_t p) {
    std::uint64_t k = 0;
    for (auto c : v) k = k * p + c;
    return k;
}

void require_quintic_in_six(const Polynomial<Zp>& f, const char* what) {
    if (f.nvars() != 6 || !f.is_homogeneous() || f.degree() != 5)
        throw PreconditionError(std::string(what) + ": needs a quintic form in 6 variables (M = 5)");
}

std::vector<Polynomial<Zp>> subspace_images(const Field& field, const FpSubspace& s, std::size_t n) {
    std::vector<Polynomial<Zp>> images;
    const std::size_t k = s.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term<Zp>> ts;
        for (std::size_t r = 0; r < k; ++r)
            if (s.basis[r][i]) ts.push_back({Monomial::variable(r), Zp(s.p, s.basis[r][i])});
        images.push_back(Polynomial<Zp>::from_terms(field, k, std::move(ts)));
    }
    return images;
}

struct PointSet {
    std::uint32_t p;
    std::vector<Vec> points;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    std::vector<std::uint32_t> inverse;

    long find(Vec v) const {
        auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
        if (lead != v.end() && *lead != 1) {
            const std::uint64_t s = inverse[*lead];
            for (auto& c : v) c = static_cast<std::uint32_t>(c * s % p);
        }
        auto it = index.find(encode(v, p));
        return it == index.end() ? -1 : long(it->second);
    }
};

PointSet hypersurface_points(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts) {
    const std::uint32_t p = f.field().characteristic();
    if (!f.field().is_prime()) throw PreconditionError("subspace search: needs a prime field");
    const std::uint64_t estimate = projective_point_count(p, f.nvars() - 1);
    if (estimate == 0 || estimate > (UINT64_MAX >> 1) / estimate || estimate * estimate > opts.work_budget)
        throw BudgetExceeded("subspace search over F_" + std::to_string(p) + ": estimated work exceeds budget " +
                             std::to_string(opts.work_budget));
    PointSet s{p, enumerate_points(f, UINT64_MAX), {}, std::vector<std::uint32_t>(p, 0)};
    for (std::uint32_t a = 1; a < p; ++a) s.inverse[a] = inv_mod(a, p);
    for (std::uint32_t i = 0; i < s.points.size(); ++i) s.index.emplace(encode(s.points[i], p), i);
    return s;
}

// Calls on_line(L) for each F_p-line on {f = 0}, each exactly once; stops when it returns false.
template <class Fn>
void for_each_line(const Polynomial<Zp>& f, const PointSet& S, Fn&& on_line) {
    const std::uint32_t p = S.p;
    const std::size_t n = f.nvars();
    // A line through a lies on F only if grad f(a) . b = 0 (the t-coefficient of f(a + t b)).
    std::vector<Vec> grad(S.points.size(), Vec(n));
    if (!f.is_zero()) {
        FpFormEvaluator ev(f);
        for (std::size_t i = 0; i < S.points.size(); ++i) {
            ev.load(S.points[i]);
            for (std::size_t c = 0; c < n; ++c) grad[i][c] = ev.partial(c);
        }
    }
    std::set<std::vector<Vec>> found;
    Vec x(n);
    for (std::uint32_t i = 0; i < S.points.size(); ++i) {
        const Vec& a = S.points[i];
        for (std::uint32_t j = i + 1; j < S.points.size(); ++j) {
            const Vec& b = S.points[j];
            std::uint64_t polar = 0;
            for (std::size_t c = 0; c < n; ++c) polar += std::uint64_t(grad[i][c]) * b[c] % p;
            if (polar % p != 0) continue;
            bool inside = true;
            for (std::uint32_t t = 1; t < p && inside; ++t) {
                for (std::size_t c = 0; c < n; ++c) x[c] = static_cast<std::uint32_t>((a[c] + std::uint64_t(t) * b[c]) % p);
                inside = S.find(x) >= 0;
            }
            if (!inside) continue;
            FpSubspace line = span_of(p, {a, b});
            if (!found.insert(line.basis).second) continue;
            if (!vanishes_on(f, line)) continue;
            if (!on_line(line)) return;
        }
    }
}

}  // namespace

FpSubspace span_of(std::uint32_t p, std::vector<Vec> rows) {
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (auto& c : rows[r]) c %= p;
        const std::uint64_t s = inv_mod(rows[r][col], p);
        for (auto& c : rows[r]) c = static_cast<std::uint32_t>(c * s % p);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r) continue;
            const std::uint64_t m = rows[o][col] % p;
            if (m == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                rows[o][c] = static_cast<std::uint32_t>((rows[o][c] % p + (p - m) * rows[r][c]) % p);
        }
        ++r;
    }
    rows.resize(r);
    return {p, std::move(rows)};
}

FpSubspace annihilator(const FpSubspace& s, std::size_t n) {
    const std::uint32_t p = s.p;
    std::vector<std::size_t> pivots;
    for (const auto& row : s.basis)
        pivots.push_back(std::find_if(row.begin(), row.end(), [](std::uint32_t c) { return c != 0; }) - row.begin());
    std::vector<Vec> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < s.basis.size(); ++r) v[pivots[r]] = (p - s.basis[r][free]) % p;
        out.push_back(std::move(v));
    }
    return span_of(p, std::move(out));
}

bool vanishes_on(const Polynomial<Zp>& f, const FpSubspace& s) {
    if (s.dim() == 0) return true;
    return f.substitute(subspace_images(f.field(), s, f.nvars())).is_zero();
}

std::vector<FpSubspace> lines_on_hypersurface(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts) {
    const PointSet S = hypersurface_points(f, opts);
    std::vector<FpSubspace> lines;
    for_each_line(f, S, [&](const FpSubspace& l) {
        lines.push_back(l);
        return true;
    });
    std::sort(lines.begin(), lines.end(), [](const FpSubspace& a, const FpSubspace& b) { return a.basis < b.basis; });
    return lines;
}

PlaneCheck check_no_planes_M5(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts) {
    require_quintic_in_six(f, "check_no_planes_M5");
    const PointSet S = hypersurface_points(f, opts);
    const std::uint32_t p = S.p;
    PlaneCheck out;
    // A plane on F is covered by F_p-lines on F, so it is the span of two
    // intersecting lines that the line search reports.
    std::vector<FpSubspace> lines;
    std::set<std::vector<Vec>> tried;
    for_each_line(f, S, [&](const FpSubspace& line) {
        ++out.lines_examined;
        for (const auto& other : lines) {
            std::vector<Vec> rows = line.basis;
            rows.insert(rows.end(), other.basis.begin(), other.basis.end());
            FpSubspace plane = span_of(p, std::move(rows));
            if (plane.dim() != 3 || !tried.insert(plane.basis).second) continue;
            bool inside = true;
            for_each_projective_point(p, 3, [&](const std::vector<std::uint32_t>& c) {
                Vec x(f.nvars(), 0);
                for (std::size_t k = 0; k < 3; ++k)
                    for (std::size_t i = 0; i < x.size(); ++i)
                        x[i] = static_cast<std::uint32_t>((x[i] + std::uint64_t(c[k]) * plane.basis[k][i]) % p);
                inside = S.find(x) >= 0;
                return inside;
            });
            if (inside && vanishes_on(f, plane)) {
                out.no_planes = false;
                out.witness = std::move(plane);
                return false;
            }
        }
        lines.push_back(line);
        return true;
    });
    return out;
}

SingularLineCheck check_no_singular_line_in_3space_M5(const Polynomial<Zp>& f, const SubspaceSearchOptions& opts) {
    require_quintic_in_six(f, "check_no_singular_line_in_3space_M5");
    const PointSet S = hypersurface_points(f, opts);
    const std::uint32_t p = S.p;
    const std::size_t n = f.nvars();
    std::vector<Polynomial<Zp>> grad;
    for (std::size_t i = 0; i < n; ++i) grad.push_back(f.partial_derivative(i));

    SingularLineCheck out;
    for_each_line(f, S, [&](const FpSubspace& line) {
        ++out.lines_examined;
        const auto images = subspace_images(f.field(), line, n);
        // Row k collects the coefficients of s^k t^(4-k) across the partials.
        std::vector<Vec> rows(5, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial<Zp> along = grad[i].substitute(images);
            for (const auto& t : along.terms()) rows[t.mono[0]][i] = t.coeff.value();
        }
        FpSubspace v = span_of(p, std::move(rows));
        if (v.dim() > 2) return true;
        // Pad v to a 2-dimensional subspace of the annihilator of the line;
        // its own annihilator is then a 3-space through the line.
        std::vector<Vec> normal = v.basis;
        for (const auto& w : annihilator(line, n).basis) {
            if (normal.size() == 2) break;
            auto trial = normal;
            trial.push_back(w);
            if (span_of(p, trial).dim() > normal.size()) normal = std::move(trial);
        }
        out.no_singular_line = false;
        out.line = line;
        out.three_space = annihilator(span_of(p, std::move(normal)), n);
        return false;
    });
    return out;
}

}  // namespace qsing
