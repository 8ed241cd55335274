#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "goodset/check.hpp"
#include "goodset/colength.hpp"
#include "goodset/maximals.hpp"

namespace goodset {

using Box = std::pair<Point, Point>;

struct SymmetryWitness {
    Point alpha;
    /// True when alpha ∈ S but F(S, f − alpha) ≠ ∅; false when alpha ∉ S and the fiber is empty.
    bool in_s = false;
};

struct SymmetryResult {
    bool symmetric = true;
    std::vector<SymmetryWitness> witnesses;
};

/// alpha ∈ S ⟺ F(S, f(S) − alpha) = ∅ for every alpha in [min(S), c(S)]; both
/// sides are unchanged when alpha is clamped to the conductor.
inline SymmetryResult symmetry_check(const GoodSet& s) {
    SymmetryResult res;
    const Point f = frobenius(s);
    for_each_in_box(s.min(), s.conductor(), [&](const Point& a) {
        bool in = s.contains(a);
        bool empty = full_fiber_empty(s, f - a);
        if (in != empty) res.witnesses.push_back({a, in});
    });
    res.symmetric = res.witnesses.empty();
    return res;
}

/// {beta : F(E, f(S) − beta) = ∅}, computed on [c(S) − c(E), c(S) − m_E] and
/// packaged as a good set. Equals the value set of the dual ideal when S is symmetric.
/// Throws ValidationError if the result is not a good set.
inline GoodSet pol_transform(const GoodSet& e, const GoodSet& s) {
    if (e.dim() != s.dim()) throw dimension_mismatch(s.dim(), e.dim());
    const Point f = frobenius(s);
    const Point lo = s.conductor() - e.conductor();
    const Point hi = s.conductor() - e.min();
    std::vector<Point> pts;
    for_each_in_box(lo, hi, [&](const Point& b) {
        if (full_fiber_empty(e, f - b)) pts.push_back(b);
    });
    ValidateOptions opts;
    opts.labels = e.labels();
    opts.normalize_conductor = true;
    return validate_good_set(e.dim(), std::move(pts), opts);
}

/// E + E* ⊆ S.
inline CheckResult sum_containment_check(const GoodSet& e, const GoodSet& estar, const GoodSet& s) {
    CheckResult res{"sum_containment", "E + E* subset of S", true, {}, {}};
    if (auto bad = detail::sum_escape(e, estar, s))
        res.fail({bad->first, bad->second, bad->first + bad->second}, "sum is not in S");
    return res;
}

inline Box default_duality_box(const GoodSet& e, const GoodSet& s) {
    const Point one = ones(s.dim());
    return {e.min() - one, s.conductor() + one};
}

struct LocalDualityReport {
    /// ℓ_E(alpha, e_i) + ℓ_E*(c(S) − alpha − e_i, e_i) ≤ 1.
    CheckResult inequality;
    /// The same sum equals 1 everywhere.
    CheckResult equality;
};

inline LocalDualityReport local_duality_check(const GoodSet& e, const GoodSet& estar, const GoodSet& s,
                                              std::optional<Box> box = std::nullopt) {
    const std::size_t r = s.dim();
    auto [lo, hi] = box.value_or(default_duality_box(e, s));
    LocalDualityReport rep;
    rep.inequality = {"local_duality_le", "l_E(a,e_i) + l_E*(c(S)-a-e_i, e_i) <= 1", true, {}, {}};
    rep.equality = {"local_duality_eq", "l_E(a,e_i) + l_E*(c(S)-a-e_i, e_i) = 1", true, {}, {}};
    for_each_in_box(lo, hi, [&](const Point& a) {
        for (std::size_t i = 0; i < r; ++i) {
            Point b = s.conductor() - a - unit(r, i);
            int sum = ell_step(e, a, i) + ell_step(estar, b, i);
            Point ei = unit(r, i);
            if (sum > 1) rep.inequality.fail({a, ei}, "sum is " + std::to_string(sum));
            if (sum != 1) rep.equality.fail({a, ei}, "sum is " + std::to_string(sum));
        }
    });
    return rep;
}

struct PqDualityReport {
    CheckResult inequality;           ///< p(E, a) + q(E*, f − a) ≥ r + 1
    CheckResult equality;             ///< ... = r + 1
    CheckResult mirrored_inequality;  ///< p(E*, b) + q(E, f − b) ≥ r + 1
    CheckResult mirrored_equality;
};

namespace detail {

inline void pq_scan(const GoodSet& x, const GoodSet& y, const Point& f, const Box& box, CheckResult& ineq,
                    CheckResult& eq) {
    const int target = static_cast<int>(x.dim()) + 1;
    for_each_in_box(box.first, box.second, [&](const Point& a) {
        int sum = p_value(x, a) + q_value(y, f - a);
        if (sum < target) ineq.fail({a}, "p + q = " + std::to_string(sum));
        if (sum != target) eq.fail({a}, "p + q = " + std::to_string(sum));
    });
}

}  // namespace detail

inline PqDualityReport pq_duality_check(const GoodSet& e, const GoodSet& estar, const GoodSet& s,
                                        std::optional<Box> box = std::nullopt) {
    const Point f = frobenius(s);
    PqDualityReport rep;
    rep.inequality = {"pq_duality_ge", "p(E,a) + q(E*,f(S)-a) >= r+1", true, {}, {}};
    rep.equality = {"pq_duality_eq", "p(E,a) + q(E*,f(S)-a) = r+1", true, {}, {}};
    rep.mirrored_inequality = {"pq_duality_mirrored_ge", "p(E*,b) + q(E,f(S)-b) >= r+1", true, {}, {}};
    rep.mirrored_equality = {"pq_duality_mirrored_eq", "p(E*,b) + q(E,f(S)-b) = r+1", true, {}, {}};
    detail::pq_scan(e, estar, f, box.value_or(default_duality_box(e, s)), rep.inequality, rep.equality);
    detail::pq_scan(estar, e, f, box.value_or(default_duality_box(estar, s)), rep.mirrored_inequality,
                    rep.mirrored_equality);
    return rep;
}

struct MaximalSymmetryReport {
    CheckResult maximal_iff;   ///< beta ∈ M(E*) ⟺ f − beta ∈ E, for beta ∈ E*
    CheckResult absolute_iff;  ///< alpha ∈ AM(E) ⟺ f − alpha ∈ RM(E*)
    /// (alpha, beta) with alpha ∈ AM(E), beta = f − alpha ∈ RM(E*).
    std::vector<std::pair<Point, Point>> pairs;
};

/// Symmetry of maximals between E and E*. Maximality is taken literally from
/// the fibers, also for r = 1. Throws not_gorenstein when S is not symmetric.
inline MaximalSymmetryReport maximal_symmetry_check(const GoodSet& e, const GoodSet& estar, const GoodSet& s) {
    if (!symmetry_check(s).symmetric) throw not_gorenstein("maximal symmetry needs a symmetric semigroup");
    const Point f = frobenius(s);
    MaximalSymmetryReport rep;
    rep.maximal_iff = {"maximal_symmetry", "b in E*: b in M(E*) <=> f(S)-b in E", true, {}, {}};
    rep.absolute_iff = {"absolute_relative_symmetry", "a + b = f(S): a in AM(E) <=> b in RM(E*)", true, {}, {}};
    const Point hi = join(estar.conductor(), f - e.min());
    for_each_in_box(estar.min(), hi, [&](const Point& b) {
        if (!estar.contains(b)) return;
        const Point a = f - b;
        const auto cb = classify(estar, b);
        const bool a_in = e.contains(a);
        if (cb.is_maximal != a_in) rep.maximal_iff.fail({b, a}, cb.is_maximal ? "f-b not in E" : "b not maximal");
        if (!a_in) return;
        const auto ca = classify(e, a);
        if (ca.is_absolute != cb.is_relative)
            rep.absolute_iff.fail({a, b}, ca.is_absolute ? "b is not relative maximal" : "a is not absolute maximal");
        if (ca.is_absolute && cb.is_relative) rep.pairs.emplace_back(a, b);
    });
    std::sort(rep.pairs.begin(), rep.pairs.end());
    return rep;
}

/// For I ⊆ J with duals J* ⊆ I*: ℓ(J/I) = ℓ(I*/J*).
inline CheckResult bidual_colength_check(const GoodSet& e_i, const GoodSet& e_j, const GoodSet& estar_i,
                                         const GoodSet& estar_j) {
    if (!is_subset(e_i, e_j)) throw precondition_error("bidual check: E_I is not contained in E_J");
    if (!is_subset(estar_j, estar_i)) throw precondition_error("bidual check: E*_J is not contained in E*_I");
    CheckResult res{"bidual_colength", "l(J/I) = l(I*/J*)", true, {}, {}};
    const auto lhs = colength(e_j, e_i);
    const auto rhs = colength(estar_i, estar_j);
    res.detail = std::to_string(lhs) + " vs " + std::to_string(rhs);
    if (lhs != rhs) res.fail({}, "colengths differ: " + res.detail);
    return res;
}

}  // namespace goodset
