#pragma once

#include <span>
#include <vector>

#include "goodset/fiber.hpp"

namespace goodset {

struct MaximalClassification {
    Point point;
    bool is_maximal = false;
    bool is_relative = false;
    bool is_absolute = false;
    int p = 0;
    int q = 0;
};

/// p(E, alpha): the largest n in [0, r] with F_A(E, alpha) empty for every
/// nonempty A of size at most n.
inline int p_value(const GoodSet& e, const Point& alpha) {
    const std::size_t r = e.dim();
    require_subset_rank(r);
    std::vector<bool> empty_at(r + 1, true);
    for (Mask a = 1; a <= full_mask(r); ++a)
        if (!fiber_empty(e, alpha, a)) empty_at[popcount(a)] = false;
    int p = 0;
    while (p < static_cast<int>(r) && empty_at[p + 1]) ++p;
    return p;
}

/// q(E, alpha): the least n in [1, r + 1] with F_A(E, alpha) nonempty for every
/// A of size at least n; r + 1 when F_I(E, alpha) = {alpha} ∩ E is empty.
inline int q_value(const GoodSet& e, const Point& alpha) {
    const std::size_t r = e.dim();
    require_subset_rank(r);
    std::vector<bool> full_at(r + 1, true);
    for (Mask a = 1; a <= full_mask(r); ++a)
        if (fiber_empty(e, alpha, a)) full_at[popcount(a)] = false;
    int q = static_cast<int>(r) + 1;
    while (q > 1 && full_at[q - 1]) --q;
    return q;
}

/// Classification from the fiber definitions alone (no r = 1 convention).
inline MaximalClassification classify(const GoodSet& e, const Point& alpha) {
    const std::size_t r = e.dim();
    require_subset_rank(r);
    MaximalClassification c;
    c.point = alpha;
    c.p = p_value(e, alpha);
    c.q = q_value(e, alpha);
    c.is_maximal = e.contains(alpha) && full_fiber_empty(e, alpha);
    if (!c.is_maximal) return c;
    c.is_relative = true;
    c.is_absolute = true;
    const Mask all = full_mask(r);
    for (Mask j = 1; j <= all; ++j) {
        bool empty = fiber_empty(e, alpha, j);
        if (popcount(j) >= 2 && empty) c.is_relative = false;
        if (j != all && !empty) c.is_absolute = false;
    }
    return c;
}

/// M(E) with relative/absolute flags, scanning the region m <= x < c. For
/// r = 1 the maximals are the gaps, reported as both relative and absolute.
inline std::vector<MaximalClassification> maximal_points(const GoodSet& e) {
    std::vector<MaximalClassification> out;
    const Point hi = e.conductor() - ones(e.dim());
    if (e.dim() == 1) {
        for_each_in_box(e.min(), hi, [&](const Point& x) {
            if (e.contains(x)) return;
            MaximalClassification c{x, true, true, true, p_value(e, x), q_value(e, x)};
            out.push_back(c);
        });
        return out;
    }
    for_each_in_box(e.min(), hi, [&](const Point& x) {
        if (!e.contains(x) || !full_fiber_empty(e, x)) return;
        out.push_back(classify(e, x));
    });
    return out;
}

inline std::vector<Point> maximals(const GoodSet& e) {
    std::vector<Point> out;
    for (auto& c : maximal_points(e)) out.push_back(c.point);
    return out;
}

inline std::vector<Point> relative_maximals(const GoodSet& e) {
    std::vector<Point> out;
    for (auto& c : maximal_points(e))
        if (c.is_relative) out.push_back(c.point);
    return out;
}

inline std::vector<Point> absolute_maximals(const GoodSet& e) {
    std::vector<Point> out;
    for (auto& c : maximal_points(e))
        if (c.is_absolute) out.push_back(c.point);
    return out;
}

/// alpha lies in F(Z^r, beta): equal to beta in one coordinate, larger in all others.
inline bool in_lattice_fiber(const Point& alpha, const Point& beta) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != beta[i]) continue;
        bool above = true;
        for (std::size_t k = 0; k < alpha.size() && above; ++k)
            if (k != i && alpha[k] <= beta[k]) above = false;
        if (above) return true;
    }
    return false;
}

/// Rebuild E ∩ [lo, hi] from its (r-1)-projections and relative maximals:
/// alpha ∈ E iff every projection contains pr_J(alpha) and alpha avoids the
/// lattice fibers of all relative maximals. Projections are matched to their
/// label sets, which must be exactly the (r-1)-subsets of `labels`.
inline GoodSet generate_from_relative_maximals(const Labels& labels, std::span<const GoodSet> projections,
                                               std::span<const Point> rm, const Point& lo, const Point& hi) {
    const std::size_t r = labels.size();
    if (lo.size() != r) throw dimension_mismatch(r, lo.size());
    if (!all_le(lo, hi)) throw precondition_error("generate: empty box");
    std::vector<std::vector<std::size_t>> proj_pos;
    for (const auto& pj : projections) {
        if (pj.dim() + 1 != r) throw precondition_error("generate: projection is not of dimension r-1");
        std::vector<std::size_t> pos;
        for (int l : pj.labels()) {
            auto it = std::find(labels.begin(), labels.end(), l);
            if (it == labels.end()) throw precondition_error("generate: unknown projection label");
            pos.push_back(static_cast<std::size_t>(it - labels.begin()));
        }
        proj_pos.push_back(std::move(pos));
    }
    if (r > 1 && projections.size() != r)
        throw precondition_error("generate: need one projection per omitted coordinate");

    std::vector<Point> pts;
    for_each_in_box(lo, hi, [&](const Point& a) {
        for (std::size_t t = 0; t < projections.size(); ++t) {
            Point q(proj_pos[t].size());
            for (std::size_t k = 0; k < q.size(); ++k) q[k] = a[proj_pos[t][k]];
            if (!projections[t].contains(q)) return;
        }
        for (const auto& b : rm) {
            if (r == 1 ? a == b : in_lattice_fiber(a, b)) return;
        }
        pts.push_back(a);
    });
    if (pts.empty()) throw precondition_error("generate: no point of the box survives");
    ValidateOptions opts;
    opts.labels = labels;
    opts.normalize_conductor = true;
    return validate_good_set(r, std::move(pts), opts);
}

/// F(S, f(S)) = ∅, which holds for every semigroup of values.
inline bool frobenius_fiber_check(const GoodSet& s) { return full_fiber_empty(s, frobenius(s)); }

}  // namespace goodset
