#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "goodset/maximals.hpp"

namespace goodset {

/// ℓ(E(alpha)/E(alpha + e_i)) for the position i: 1 iff the closed fiber F̄_i(E, alpha) is nonempty.
inline int ell_step(const GoodSet& e, const Point& alpha, std::size_t i) {
    if (i >= e.dim()) throw precondition_error("ell_step: position out of range");
    return fiber_empty(e, alpha, Mask{1} << i, FiberKind::closed) ? 0 : 1;
}

/// Sum of ell_step along the saturated chain from min(E) to gamma whose steps
/// are the given positions, taken in order. The steps must add up to gamma − min(E).
inline std::int64_t ell_along_chain(const GoodSet& e, const Point& gamma, std::span<const std::size_t> steps) {
    Point cur = e.min();
    std::int64_t total = 0;
    for (std::size_t k : steps) {
        total += ell_step(e, cur, k);
        cur[k] += 1;
    }
    if (cur != gamma) throw precondition_error("ell_along_chain: steps do not end at " + to_string(gamma));
    return total;
}

/// The canonical chain: raise coordinate 1 up to gamma_1, then coordinate 2, and so on.
inline std::vector<std::size_t> canonical_chain(const Point& from, const Point& to) {
    std::vector<std::size_t> steps;
    for (std::size_t k = 0; k < from.size(); ++k)
        for (Coord x = from[k]; x < to[k]; ++x) steps.push_back(k);
    return steps;
}

/// ℓ(I/I(gamma)) for the ideal with value set E.
inline std::int64_t ell_truncation(const GoodSet& e, const Point& gamma) {
    gamma.check_same(e.min());
    if (!all_le(e.min(), gamma))
        throw precondition_error("ell_truncation: gamma " + to_string(gamma) + " is not >= min(E)");
    auto steps = canonical_chain(e.min(), gamma);
    return ell_along_chain(e, gamma, steps);
}

/// ℓ(I/J) for value sets D ⊆ E, evaluated at gamma = join(c(D), c(E)).
inline std::int64_t colength(const GoodSet& e, const GoodSet& d) {
    if (!is_subset(d, e)) throw precondition_error("colength: D is not contained in E");
    const Point gamma = join(d.conductor(), e.conductor());
    return ell_truncation(e, gamma) - ell_truncation(d, gamma);
}

namespace detail {

inline std::int64_t gap_count(const GoodSet& e1) {
    std::int64_t n = 0;
    for (Coord x = e1.min()[0]; x < e1.conductor()[0]; ++x)
        if (!e1.contains(Point{x})) ++n;
    return n;
}

inline void require_above_conductor(const GoodSet& e, const Point& gamma, const char* who) {
    gamma.check_same(e.min());
    if (!all_le(e.conductor(), gamma))
        throw precondition_error(std::string(who) + ": gamma " + to_string(gamma) + " is not >= c(E)");
}

}  // namespace detail

/// Closed formula for r = 2:
/// (gamma_1 − m_1) − #gaps(E_1) + (gamma_2 − m_2) − #gaps(E_2) − #M(E).
inline std::int64_t colength_r2_formula(const GoodSet& e, const Point& gamma) {
    if (e.dim() != 2) throw precondition_error("colength_r2_formula: needs r = 2");
    detail::require_above_conductor(e, gamma, "colength_r2_formula");
    std::int64_t total = -static_cast<std::int64_t>(maximals(e).size());
    for (std::size_t i = 0; i < 2; ++i) {
        GoodSet ei = project(e, {e.labels()[i]});
        total += (gamma[i] - e.min()[i]) - detail::gap_count(ei);
    }
    return total;
}

/// Recursion on the last coordinate: the value for the first r − 1 coordinates,
/// plus (gamma_r − m_r) − #gaps(E_r) − #(union over J ∋ r, #J ≥ 2 of pr_r(RM(E_J))).
inline std::int64_t colength_recursive_formula(const GoodSet& e, const Point& gamma) {
    detail::require_above_conductor(e, gamma, "colength_recursive_formula");
    const std::size_t r = e.dim();
    const auto& labels = e.labels();
    if (r == 1) return (gamma[0] - e.min()[0]) - detail::gap_count(e);
    require_subset_rank(r);

    Labels head(labels.begin(), labels.end() - 1);
    GoodSet front = project(e, std::span<const int>(head));
    Point gamma_front(std::vector<Coord>(gamma.begin(), gamma.end() - 1));
    std::int64_t total = colength_recursive_formula(front, gamma_front);

    const int last = labels.back();
    GoodSet er = project(e, {last});
    total += (gamma[r - 1] - e.min()[r - 1]) - detail::gap_count(er);

    std::set<Coord> shadow;
    const Mask last_bit = Mask{1} << (r - 1);
    for (Mask j = last_bit + 1; j <= full_mask(r); ++j) {
        if (!(j & last_bit) || popcount(j) < 2) continue;
        Labels sub = e.labels_of(j);
        const GoodSet ej = popcount(j) == static_cast<int>(r) ? e : project(e, std::span<const int>(sub));
        for (const auto& b : relative_maximals(ej)) shadow.insert(b[b.size() - 1]);
    }
    return total - static_cast<std::int64_t>(shadow.size());
}

/// δ = ℓ(Õ/O), the colength of S in N^r.
inline std::int64_t delta_invariant(const GoodSet& s) { return colength(natural_set(s.labels()), s); }

/// dim O/C = dim Õ/O, with O/C measured as ℓ(O/O(c(S))).
inline bool gorenstein_length_test(const GoodSet& s) {
    return delta_invariant(s) == ell_truncation(s, s.conductor());
}

}  // namespace goodset
