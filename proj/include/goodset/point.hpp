#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "goodset/error.hpp"

namespace goodset {

using Coord = std::int64_t;

/// A lattice point of Z^r. Arithmetic is componentwise; operator<=> is the
/// lexicographic order used for storage, the partial order is all_le().
class Point {
public:
    Point() = default;
    explicit Point(std::size_t r, Coord fill = 0) : c_(r, fill) {}
    Point(std::initializer_list<Coord> coords) : c_(coords) {}
    explicit Point(std::vector<Coord> coords) : c_(std::move(coords)) {}

    std::size_t size() const noexcept { return c_.size(); }
    Coord operator[](std::size_t k) const { return c_[k]; }
    Coord& operator[](std::size_t k) { return c_[k]; }
    const std::vector<Coord>& coords() const noexcept { return c_; }

    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }

    Point& operator+=(const Point& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Point& operator-=(const Point& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Point& operator*=(Coord s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(Coord s, Point a) { return a *= s; }
    friend Point operator-(Point a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

    void check_same(const Point& o) const {
        if (o.size() != size()) throw dimension_mismatch(size(), o.size());
    }

private:
    std::vector<Coord> c_;
};

inline std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(p[k]);
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

/// e_k, zero based.
inline Point unit(std::size_t r, std::size_t k) {
    Point e(r);
    e[k] = 1;
    return e;
}

inline Point ones(std::size_t r) { return Point(r, 1); }

inline Point meet(const Point& a, const Point& b) {
    a.check_same(b);
    Point m = a;
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::min(a[k], b[k]);
    return m;
}

inline Point join(const Point& a, const Point& b) {
    a.check_same(b);
    Point m = a;
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
    return m;
}

/// a <= b componentwise.
inline bool all_le(const Point& a, const Point& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

/// a < b in every coordinate.
inline bool all_lt(const Point& a, const Point& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] >= b[k]) return false;
    return true;
}

/// Visit every lattice point of the closed box [lo, hi]. The visitor may
/// return bool; returning false stops the walk and makes the call return false.
template <class F>
bool for_each_in_box(const Point& lo, const Point& hi, F&& visit) {
    lo.check_same(hi);
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (lo[k] > hi[k]) return true;
    Point p = lo;
    const std::size_t r = lo.size();
    while (true) {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, const Point&>, bool>) {
            if (!visit(static_cast<const Point&>(p))) return false;
        } else {
            visit(static_cast<const Point&>(p));
        }
        std::size_t k = 0;
        while (k < r) {
            if (p[k] < hi[k]) {
                ++p[k];
                break;
            }
            p[k] = lo[k];
            ++k;
        }
        if (k == r) return true;
    }
}

template <class Pred>
bool any_in_box(const Point& lo, const Point& hi, Pred&& pred) {
    return !for_each_in_box(lo, hi, [&](const Point& p) { return !pred(p); });
}

/// Position sets are bit masks over coordinate positions 0..r-1.
using Mask = std::uint32_t;

inline Mask full_mask(std::size_t r) { return r >= 32 ? ~Mask{0} : (Mask{1} << r) - 1; }

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Upper limit on r for operations that enumerate all subsets of positions.
/// Read from GOODSET_MAX_R (default 12).
inline std::size_t max_subset_rank() {
    if (const char* env = std::getenv("GOODSET_MAX_R")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v < 31) return static_cast<std::size_t>(v);
    }
    return 12;
}

inline void require_subset_rank(std::size_t r) {
    if (r > max_subset_rank())
        throw rank_cap_exceeded("subset enumeration for r=" + std::to_string(r) +
                                " exceeds GOODSET_MAX_R=" + std::to_string(max_subset_rank()));
}

}  // namespace goodset
