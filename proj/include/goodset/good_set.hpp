#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodset/point.hpp"

namespace goodset {

/// Original branch indices carried by a value set. Projections keep the
/// indices of the surviving branches, so label k always means branch k.
using Labels = std::vector<int>;

inline Labels default_labels(std::size_t r) {
    Labels l(r);
    std::iota(l.begin(), l.end(), 1);
    return l;
}

class ValidationError : public error {
public:
    enum class Kind {
        empty_input,
        dimension_mismatch,
        meet_closure,
        property_b,
        conductor_not_minimal,
        inconsistent_header,
        bad_labels,
    };

    ValidationError(Kind kind, std::string what, std::vector<Point> pair = {},
                    std::optional<int> label = std::nullopt)
        : error(std::move(what)), kind_(kind), pair_(std::move(pair)), label_(label) {}

    Kind kind() const noexcept { return kind_; }
    /// The offending pair for meet_closure / property_b.
    const std::vector<Point>& pair() const noexcept { return pair_; }
    /// Branch label for property_b (shared coordinate) and conductor_not_minimal.
    std::optional<int> label() const noexcept { return label_; }

private:
    Kind kind_;
    std::vector<Point> pair_;
    std::optional<int> label_;
};

inline const char* to_string(ValidationError::Kind k) {
    switch (k) {
        case ValidationError::Kind::empty_input: return "EmptyInput";
        case ValidationError::Kind::dimension_mismatch: return "DimensionMismatch";
        case ValidationError::Kind::meet_closure: return "MeetClosureViolation";
        case ValidationError::Kind::property_b: return "PropertyBViolation";
        case ValidationError::Kind::conductor_not_minimal: return "ConductorNotMinimal";
        case ValidationError::Kind::inconsistent_header: return "InconsistentHeader";
        case ValidationError::Kind::bad_labels: return "BadLabels";
    }
    return "?";
}

class GoodSet;

struct ValidateOptions {
    /// Defaults to 1..r.
    std::optional<Labels> labels;
    /// Lower a non-minimal conductor instead of rejecting the input.
    bool normalize_conductor = false;
};

GoodSet validate_good_set(std::size_t r, std::vector<Point> points, const ValidateOptions& opts = {});

/// Finite representation of a value set E in Z^r: its minimum, its conductor
/// and the small elements E ∩ [min, conductor]. Membership of an arbitrary
/// point is decided by clamping it to the conductor.
class GoodSet {
public:
    std::size_t dim() const noexcept { return min_.size(); }
    const Labels& labels() const noexcept { return labels_; }
    const Point& min() const noexcept { return min_; }
    const Point& conductor() const noexcept { return conductor_; }
    /// Sorted lexicographically.
    std::span<const Point> small() const noexcept { return small_; }

    bool contains(const Point& beta) const {
        if (beta.size() != dim()) throw dimension_mismatch(dim(), beta.size());
        if (!all_le(min_, beta)) return false;
        return std::binary_search(small_.begin(), small_.end(), meet(beta, conductor_));
    }

    /// Position of a branch label, throws precondition_error if absent.
    std::size_t position(int label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end())
            throw precondition_error("label " + std::to_string(label) + " not in value set");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    Mask mask_of(std::span<const int> subset) const {
        Mask m = 0;
        for (int l : subset) m |= Mask{1} << position(l);
        return m;
    }

    Labels labels_of(Mask m) const {
        Labels out;
        for (std::size_t k = 0; k < dim(); ++k)
            if (m & (Mask{1} << k)) out.push_back(labels_[k]);
        return out;
    }

    friend bool operator==(const GoodSet& a, const GoodSet& b) {
        return a.labels_ == b.labels_ && a.min_ == b.min_ && a.conductor_ == b.conductor_ &&
               a.small_ == b.small_;
    }

    /// Assemble from data already known to be canonical; used by operations
    /// whose output is good by construction. Lowers the conductor if needed.
    static GoodSet trusted(Labels labels, Point min, Point conductor, std::vector<Point> small) {
        std::sort(small.begin(), small.end());
        small.erase(std::unique(small.begin(), small.end()), small.end());
        GoodSet g;
        g.labels_ = std::move(labels);
        g.min_ = std::move(min);
        g.conductor_ = std::move(conductor);
        g.small_ = std::move(small);
        g.lower_conductor();
        return g;
    }

private:
    friend GoodSet validate_good_set(std::size_t, std::vector<Point>, const ValidateOptions&);

    /// First label i with conductor - e_i already a small element.
    std::optional<std::size_t> reducible_position() const {
        for (std::size_t k = 0; k < dim(); ++k) {
            Point c = conductor_;
            --c[k];
            if (c[k] >= min_[k] && std::binary_search(small_.begin(), small_.end(), c)) return k;
        }
        return std::nullopt;
    }

    void lower_conductor() {
        while (auto k = reducible_position()) {
            --conductor_[*k];
            std::erase_if(small_, [&](const Point& p) { return !all_le(p, conductor_); });
        }
    }

    Labels labels_;
    Point min_;
    Point conductor_;
    std::vector<Point> small_;
};

namespace detail {

/// Dense membership table over a box; index is mixed radix in positions.
class BoxBitmap {
public:
    BoxBitmap(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)), stride_(lo_.size()) {
        std::size_t n = 1;
        for (std::size_t k = 0; k < lo_.size(); ++k) {
            stride_[k] = n;
            n *= static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
        }
        bits_.assign(n, false);
    }
    bool inside(const Point& p) const { return all_le(lo_, p) && all_le(p, hi_); }
    std::size_t index(const Point& p) const {
        std::size_t i = 0;
        for (std::size_t k = 0; k < p.size(); ++k) i += stride_[k] * static_cast<std::size_t>(p[k] - lo_[k]);
        return i;
    }
    void set(const Point& p) { bits_[index(p)] = true; }
    bool test(const Point& p) const { return inside(p) && bits_[index(p)]; }
    const Point& lo() const { return lo_; }
    const Point& hi() const { return hi_; }

private:
    Point lo_, hi_;
    std::vector<std::size_t> stride_;
    std::vector<bool> bits_;
};

/// Search a Property (B) witness for the pair (a, b) sharing coordinate i,
/// inside the window table (which spans [min, conductor + e]).
inline bool has_property_b_witness(const BoxBitmap& window, const Point& a, const Point& b,
                                   std::size_t i) {
    const Point& top = window.hi();
    Point lo = meet(a, b), hi = lo;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k == i) {
            lo[k] = std::min(a[k] + 1, top[k]);
            hi[k] = top[k];
        } else if (a[k] == b[k]) {
            hi[k] = top[k];
        }
    }
    return any_in_box(lo, hi, [&](const Point& g) { return window.test(g); });
}

}  // namespace detail

/// Checks Properties (A) and (B) and conductor minimality, returning the
/// canonical representation. Property (B) is checked on every pair of members
/// in [min, conductor + e]; witnesses are searched in the same window, which
/// is complete because membership only depends on the clamp to the conductor.
inline GoodSet validate_good_set(std::size_t r, std::vector<Point> points, const ValidateOptions& opts) {
    using K = ValidationError::Kind;
    if (points.empty()) throw ValidationError(K::empty_input, "EmptyInput: no points given");
    for (const auto& p : points)
        if (p.size() != r)
            throw ValidationError(K::dimension_mismatch, "DimensionMismatch: point " + to_string(p) +
                                                             " is not of dimension " + std::to_string(r));
    Labels labels = opts.labels.value_or(default_labels(r));
    {
        Labels sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (labels.size() != r || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError(K::bad_labels, "BadLabels: need " + std::to_string(r) + " distinct labels");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Point lo = points.front(), hi = points.front();
    for (const auto& p : points) {
        lo = meet(lo, p);
        hi = join(hi, p);
    }

    for (std::size_t x = 0; x < points.size(); ++x)
        for (std::size_t y = x + 1; y < points.size(); ++y) {
            Point m = meet(points[x], points[y]);
            if (!std::binary_search(points.begin(), points.end(), m))
                throw ValidationError(K::meet_closure,
                                      "MeetClosureViolation: meet of " + to_string(points[x]) + " and " +
                                          to_string(points[y]) + " is missing",
                                      {points[x], points[y]});
        }

    GoodSet g;
    g.labels_ = std::move(labels);
    g.min_ = lo;
    g.conductor_ = hi;
    g.small_ = std::move(points);

    if (r > 1) {
        detail::BoxBitmap window(lo, hi + ones(r));
        std::vector<Point> members;
        for_each_in_box(window.lo(), window.hi(), [&](const Point& p) {
            if (g.contains(p)) {
                window.set(p);
                members.push_back(p);
            }
        });
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const Point& a = members[x];
                const Point& b = members[y];
                for (std::size_t i = 0; i < r; ++i) {
                    if (a[i] != b[i]) continue;
                    if (!detail::has_property_b_witness(window, a, b, i))
                        throw ValidationError(K::property_b,
                                              "PropertyBViolation: no witness for " + to_string(a) + ", " +
                                                  to_string(b) + " at coordinate " +
                                                  std::to_string(g.labels_[i]),
                                              {a, b}, g.labels_[i]);
                }
            }
    }

    if (auto k = g.reducible_position()) {
        if (!opts.normalize_conductor)
            throw ValidationError(K::conductor_not_minimal,
                                  "ConductorNotMinimal: conductor - e_" + std::to_string(g.labels_[*k]) +
                                      " is already a conductor",
                                  {}, g.labels_[*k]);
        g.lower_conductor();
    }
    return g;
}

/// The value set a + N^r (for a = 0 this is the value set of the normalization).
inline GoodSet orthant(const Point& a, Labels labels) {
    return GoodSet::trusted(std::move(labels), a, a, {a});
}

inline GoodSet orthant(const Point& a) { return orthant(a, default_labels(a.size())); }

/// N^r with the given labels.
inline GoodSet natural_set(const Labels& labels) { return orthant(Point(labels.size()), labels); }

inline Point frobenius(const GoodSet& s) { return s.conductor() - ones(s.dim()); }

inline GoodSet translate(const GoodSet& e, const Point& v) {
    std::vector<Point> pts(e.small().begin(), e.small().end());
    for (auto& p : pts) p += v;
    return GoodSet::trusted(e.labels(), e.min() + v, e.conductor() + v, std::move(pts));
}

/// pr_J(E) as a value set labelled by J. The conductor is recomputed and may
/// drop below the projection of c(E).
inline GoodSet project(const GoodSet& e, std::span<const int> subset) {
    if (subset.empty()) throw precondition_error("project: empty label subset");
    std::vector<std::size_t> pos;
    for (int l : subset) pos.push_back(e.position(l));
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    auto pr = [&](const Point& p) {
        Point q(pos.size());
        for (std::size_t k = 0; k < pos.size(); ++k) q[k] = p[pos[k]];
        return q;
    };
    Labels labels;
    for (auto k : pos) labels.push_back(e.labels()[k]);
    std::vector<Point> small;
    for (const auto& p : e.small()) small.push_back(pr(p));
    return GoodSet::trusted(std::move(labels), pr(e.min()), pr(e.conductor()), std::move(small));
}

inline GoodSet project(const GoodSet& e, std::initializer_list<int> subset) {
    return project(e, std::span<const int>(subset.begin(), subset.size()));
}

/// D ⊆ E for the represented (infinite) sets.
inline bool is_subset(const GoodSet& d, const GoodSet& e) {
    if (d.dim() != e.dim()) throw dimension_mismatch(e.dim(), d.dim());
    Point top = join(d.conductor(), e.conductor());
    return for_each_in_box(d.min(), top, [&](const Point& p) { return !d.contains(p) || e.contains(p); });
}

namespace detail {

/// a + b ∈ target for all a ∈ A, b ∈ B. Sums clamp to target's conductor, so
/// it suffices to let a range over A ∩ [m_A, max(c_A, c_T - m_B)] and likewise b.
inline std::optional<std::pair<Point, Point>> sum_escape(const GoodSet& a, const GoodSet& b,
                                                         const GoodSet& target) {
    Point top_a = join(a.conductor(), target.conductor() - b.min());
    Point top_b = join(b.conductor(), target.conductor() - a.min());
    std::vector<Point> bs;
    for_each_in_box(b.min(), top_b, [&](const Point& p) {
        if (b.contains(p)) bs.push_back(p);
    });
    std::optional<std::pair<Point, Point>> bad;
    for_each_in_box(a.min(), top_a, [&](const Point& p) {
        if (!a.contains(p)) return true;
        for (const auto& q : bs)
            if (!target.contains(p + q)) {
                bad.emplace(p, q);
                return false;
            }
        return true;
    });
    return bad;
}

}  // namespace detail

enum class AlgebraMode { semigroup, monomodule };

/// Semigroup mode: E ⊆ N^r, 0 ∈ E and E + E ⊆ E. Monomodule mode: S + E ⊆ E.
inline bool algebra_check(const GoodSet& e, AlgebraMode mode, const GoodSet* s = nullptr) {
    if (mode == AlgebraMode::semigroup) {
        Point zero(e.dim());
        if (!all_le(zero, e.min()) || !e.contains(zero)) return false;
        return !detail::sum_escape(e, e, e);
    }
    if (!s) throw precondition_error("algebra_check: monomodule mode needs the semigroup");
    if (s->dim() != e.dim()) throw dimension_mismatch(e.dim(), s->dim());
    return !detail::sum_escape(*s, e, e);
}

}  // namespace goodset
