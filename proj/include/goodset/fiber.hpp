#pragma once

#include <optional>
#include <span>
#include <vector>

#include "goodset/good_set.hpp"

namespace goodset {

/// Open fibers F_J demand strictly larger coordinates off J, closed fibers
/// (F̄_J) only larger-or-equal ones.
enum class FiberKind { open, closed };

namespace detail {

/// Box holding every member of the fiber up to clamping: coordinates in J are
/// pinned to alpha, the rest run to max(alpha, top) + 1. Returns nullopt when
/// the fiber is empty for trivial reasons.
inline std::optional<std::pair<Point, Point>> fiber_box(const GoodSet& e, const Point& alpha, Mask j,
                                                        FiberKind kind, const Point& top) {
    const std::size_t r = e.dim();
    Point lo(r), hi(r);
    for (std::size_t k = 0; k < r; ++k) {
        if (j & (Mask{1} << k)) {
            if (alpha[k] < e.min()[k]) return std::nullopt;
            lo[k] = hi[k] = alpha[k];
        } else {
            lo[k] = std::max(kind == FiberKind::open ? alpha[k] + 1 : alpha[k], e.min()[k]);
            hi[k] = std::max(alpha[k], top[k]) + 1;
        }
    }
    return std::make_pair(lo, hi);
}

}  // namespace detail

/// Emptiness of F_J(E, alpha) (or F̄_J), J given as a position mask.
inline bool fiber_empty(const GoodSet& e, const Point& alpha, Mask j, FiberKind kind = FiberKind::open) {
    alpha.check_same(e.min());
    auto box = detail::fiber_box(e, alpha, j, kind, e.conductor());
    if (!box) return true;
    return !any_in_box(box->first, box->second, [&](const Point& p) { return e.contains(p); });
}

/// Members of F_J(E, alpha) inside [min, join(alpha, top) + e]; top defaults
/// to the conductor, for which the result is empty exactly when the fiber is.
inline std::vector<Point> fiber_points(const GoodSet& e, const Point& alpha, Mask j,
                                       FiberKind kind = FiberKind::open,
                                       std::optional<Point> top = std::nullopt) {
    alpha.check_same(e.min());
    std::vector<Point> out;
    auto box = detail::fiber_box(e, alpha, j, kind, top.value_or(e.conductor()));
    if (!box) return out;
    for_each_in_box(box->first, box->second, [&](const Point& p) {
        if (e.contains(p)) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Label-based front end of fiber_points.
inline std::vector<Point> fiber(const GoodSet& e, const Point& alpha, std::span<const int> subset,
                                FiberKind kind = FiberKind::open) {
    return fiber_points(e, alpha, e.mask_of(subset), kind);
}

inline std::vector<Point> fiber(const GoodSet& e, const Point& alpha, std::initializer_list<int> subset,
                                FiberKind kind = FiberKind::open) {
    return fiber(e, alpha, std::span<const int>(subset.begin(), subset.size()), kind);
}

/// F(E, alpha) = union over i of F_{i}(E, alpha) is empty.
inline bool full_fiber_empty(const GoodSet& e, const Point& alpha) {
    for (std::size_t i = 0; i < e.dim(); ++i)
        if (!fiber_empty(e, alpha, Mask{1} << i)) return false;
    return true;
}

inline std::vector<Point> full_fiber_points(const GoodSet& e, const Point& alpha,
                                            std::optional<Point> top = std::nullopt) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < e.dim(); ++i) {
        auto part = fiber_points(e, alpha, Mask{1} << i, FiberKind::open, top);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace goodset
