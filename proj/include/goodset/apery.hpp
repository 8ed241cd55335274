#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "goodset/check.hpp"
#include "goodset/fiber.hpp"

namespace goodset {

/// beta ∈ A_alpha(E), i.e. beta ∈ E and beta − alpha ∉ E.
inline bool apery_membership(const GoodSet& e, const Point& alpha, const Point& beta) {
    if (!e.contains(alpha)) throw precondition_error("apery: alpha " + to_string(alpha) + " is not in E");
    return e.contains(beta) && !e.contains(beta - alpha);
}

/// A_alpha(E) ∩ [min(E), hi], sorted.
inline std::vector<Point> apery_window(const GoodSet& e, const Point& alpha, const Point& hi) {
    if (!e.contains(alpha)) throw precondition_error("apery: alpha " + to_string(alpha) + " is not in E");
    if (!all_le(e.min(), hi)) throw precondition_error("apery: hi " + to_string(hi) + " is below min(E)");
    std::vector<Point> out;
    for_each_in_box(e.min(), hi, [&](const Point& b) {
        if (e.contains(b) && !e.contains(b - alpha)) out.push_back(b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

struct GapDecomposition {
    Point a;
    Coord rho = 0;
};

/// For beta ∉ S: the least rho ≥ 1 with beta + rho·alpha ∈ S, and a = beta + rho·alpha ∈ A_alpha.
inline GapDecomposition gap_decomposition(const GoodSet& s, const Point& alpha, const Point& beta) {
    const std::size_t r = s.dim();
    beta.check_same(alpha);
    if (!s.contains(alpha)) throw precondition_error("gap_decomposition: alpha is not in S");
    if (!all_le(ones(r), alpha))
        throw precondition_error("gap_decomposition: alpha must be positive in every coordinate");
    if (s.contains(beta)) throw precondition_error("gap_decomposition: beta " + to_string(beta) + " is in S");
    GapDecomposition g{beta, 0};
    do {
        g.a += alpha;
        ++g.rho;
    } while (!s.contains(g.a));
    return g;
}

/// a ∈ A_alpha(E) ⟹ ∅ ≠ F(E*, f(S) + alpha − a) ⊆ A_alpha(E*), for all a in the window.
/// With E = E* = S this is the Apéry characterization of symmetric semigroups.
inline CheckResult apery_symmetry_check(const GoodSet& e, const GoodSet& estar, const GoodSet& s, const Point& alpha,
                                        std::optional<std::pair<Point, Point>> window = std::nullopt) {
    if (!e.contains(alpha)) throw precondition_error("apery check: alpha is not in E");
    if (!estar.contains(alpha)) throw precondition_error("apery check: alpha is not in E*");
    const std::size_t r = s.dim();
    const Point f = frobenius(s);
    auto [lo, hi] = window.value_or(std::make_pair(e.min(), s.conductor() + alpha + ones(r)));

    CheckResult res;
    res.name = "apery_symmetry";
    res.statement = "a in A_alpha(E) => {} != F(E*, f(S)+alpha-a) subset of A_alpha(E*)";
    const Point top = estar.conductor() + alpha;
    for_each_in_box(lo, hi, [&](const Point& a) {
        if (!e.contains(a) || e.contains(a - alpha)) return true;
        const Point x = f + alpha - a;
        auto fib = full_fiber_points(estar, x, top);
        if (fib.empty()) {
            res.fail({a, x}, "fiber of f(S)+alpha-a in E* is empty");
            return false;
        }
        for (const auto& g : fib) {
            if (estar.contains(g - alpha)) {
                res.fail({a, x, g}, "fiber point is not in A_alpha(E*)");
                return false;
            }
        }
        return true;
    });
    return res;
}

}  // namespace goodset
