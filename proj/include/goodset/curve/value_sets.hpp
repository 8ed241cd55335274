#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goodset/curve/curve_ring.hpp"
#include "goodset/curve/linalg.hpp"
#include "goodset/good_set.hpp"

namespace goodset::curve {

/// The requested box does not certify the conductor.
class BoundTooSmall : public error {
public:
    BoundTooSmall(const std::string& what, Point bound) : error(what), bound_(std::move(bound)) {}
    const Point& bound() const noexcept { return bound_; }

private:
    Point bound_;
};

/// Selects the ring itself in value_set().
struct Ring {};
using Module = std::variant<Ring, IdealSpec>;

namespace detail {

/// Coefficient vectors laid out branch-major; branch i covers exponents
/// [offset_i, offset_i + len_i).
struct Layout {
    Point offset;
    std::vector<std::size_t> len;

    std::size_t start(std::size_t b) const {
        return std::accumulate(len.begin(), len.begin() + static_cast<std::ptrdiff_t>(b), std::size_t{0});
    }
    std::size_t total() const { return std::accumulate(len.begin(), len.end(), std::size_t{0}); }
};

/// Echelon basis grown one row at a time.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    bool add(Row v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto p = piv_[k];
            if (v[p] == 0) continue;
            const Rational f = v[p];
            for (std::size_t j = p; j < cols_; ++j)
                if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
        }
        std::size_t p = 0;
        while (p < cols_ && v[p] == 0) ++p;
        if (p == cols_) return false;
        const Rational inv = Rational(1) / v[p];
        for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }
    const Matrix& rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t cols_;
    Matrix rows_;
    std::vector<std::size_t> piv_;
};

inline Coord max_coord(const Point& p) {
    Coord m = 0;
    for (auto x : p) m = std::max(m, x);
    return m;
}

inline std::size_t work_truncation(const CurveRing& curve, const Point& top) {
    Coord sum = 0;
    for (auto x : top) sum += std::max<Coord>(x, 0);
    return std::max<std::size_t>({curve.truncation(), static_cast<std::size_t>(sum) + 4,
                                  static_cast<std::size_t>(max_coord(top)) + 1});
}

/// All exponent vectors of the generators of total degree below `degree`.
inline void for_each_monomial(const std::vector<std::vector<TruncatedSeries>>& vars, std::size_t degree,
                              const std::function<void(const std::vector<TruncatedSeries>&)>& visit) {
    const std::size_t r = vars.size(), k = vars.front().size();
    const std::size_t t = vars.front().front().truncation();
    std::vector<TruncatedSeries> one(r, TruncatedSeries::constant(Rational(1), t));
    // depth-first over nondecreasing variable indices
    std::function<void(std::vector<TruncatedSeries>&, std::size_t, std::size_t)> rec =
        [&](std::vector<TruncatedSeries>& cur, std::size_t first, std::size_t deg) {
            visit(cur);
            if (deg + 1 >= degree) return;
            for (std::size_t v = first; v < k; ++v) {
                std::vector<TruncatedSeries> next;
                next.reserve(r);
                bool all_zero = true;
                for (std::size_t b = 0; b < r; ++b) {
                    next.push_back(cur[b] * vars[b][v]);
                    if (!next.back().is_zero()) all_zero = false;
                }
                if (all_zero) continue;
                rec(next, v, deg + 1);
            }
        };
    rec(one, 0, 0);
}

/// Echelon basis of O·{gens} modulo t^B (offset 0, len = B).
inline Echelon module_span(const CurveRing& curve, const std::vector<RingElement>& gens, const Point& b) {
    const std::size_t r = curve.dim();
    Layout lay{Point(r), {}};
    for (std::size_t i = 0; i < r; ++i) lay.len.push_back(static_cast<std::size_t>(b[i]));
    const std::size_t t = gens.front().components.front().truncation();
    auto vars = curve.variable_series(t);
    Echelon basis(lay.total());
    for_each_monomial(vars, static_cast<std::size_t>(max_coord(b)), [&](const std::vector<TruncatedSeries>& mono) {
        for (const auto& g : gens) {
            Row v(lay.total());
            std::size_t pos = 0;
            bool nonzero = false;
            for (std::size_t i = 0; i < r; ++i) {
                auto prod = g.components[i] * mono[i];
                for (std::size_t e = 0; e < lay.len[i]; ++e, ++pos) {
                    v[pos] = prod[e];
                    if (v[pos] != 0) nonzero = true;
                }
            }
            if (nonzero) basis.add(std::move(v));
        }
    });
    return basis;
}

/// dim of the subspace of `rows` with order ≥ beta on every branch.
class Filtration {
public:
    Filtration(Matrix rows, Layout lay) : rows_(std::move(rows)), lay_(std::move(lay)) {}

    std::size_t dim_at(const Point& beta) {
        auto it = cache_.find(beta);
        if (it != cache_.end()) return it->second;
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < lay_.len.size(); ++i) {
            const std::size_t s = lay_.start(i);
            const Coord below = std::clamp<Coord>(beta[i] - lay_.offset[i], 0, static_cast<Coord>(lay_.len[i]));
            for (Coord e = 0; e < below; ++e) cols.push_back(s + static_cast<std::size_t>(e));
        }
        const std::size_t d = rows_.size() - (cols.empty() ? 0 : rank(select_columns(rows_, cols)));
        cache_.emplace(beta, d);
        return d;
    }

    /// beta is the value of some vector: W(beta) strictly contains each W(beta + e_i).
    bool attained(const Point& beta) {
        const std::size_t here = dim_at(beta);
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (dim_at(beta + unit(beta.size(), i)) >= here) return false;
        return true;
    }

    std::vector<Point> values_in(const Point& lo, const Point& hi) {
        std::vector<Point> out;
        for_each_in_box(lo, hi, [&](const Point& p) {
            if (attained(p)) out.push_back(p);
        });
        return out;
    }

private:
    Matrix rows_;
    Layout lay_;
    std::map<Point, std::size_t> cache_;
};

inline std::vector<RingElement> numerators(const CurveRing& curve, const Module& m, std::size_t t) {
    std::vector<RingElement> out;
    if (std::holds_alternative<Ring>(m)) {
        out.push_back(curve.evaluate(Expression::parse("1"), t));
        return out;
    }
    for (const auto& g : std::get<IdealSpec>(m).generators) out.push_back(curve.evaluate(g, t));
    return out;
}

/// Per-branch multiplicity: least order of a generator on each branch.
inline Point multiplicity(const CurveRing& curve, std::size_t t) {
    auto vars = curve.variable_series(t);
    Point u(curve.dim());
    for (std::size_t b = 0; b < curve.dim(); ++b) {
        std::optional<std::size_t> best;
        for (const auto& s : vars[b])
            if (auto o = s.order()) best = best ? std::min(*best, *o) : *o;
        if (!best)
            throw error("every generator vanishes on branch " + std::to_string(curve.labels()[b]) +
                        " modulo t^" + std::to_string(t));
        u[b] = static_cast<Coord>(*best);
    }
    return u;
}

inline Point denominator_value(const CurveRing& curve, const Module& m, std::size_t t) {
    if (std::holds_alternative<Ring>(m) || !std::get<IdealSpec>(m).denominator) return Point(curve.dim());
    auto v = value(curve.evaluate(*std::get<IdealSpec>(m).denominator, t));
    if (!std::holds_alternative<Point>(v)) throw error("denominator is a zero divisor modulo t^" + std::to_string(t));
    return std::get<Point>(v);
}

inline std::string module_name(const Module& m) {
    return std::holds_alternative<Ring>(m) ? std::string("ring") : std::get<IdealSpec>(m).name;
}

}  // namespace detail

/// Value set of the ring or of a fractional ideal, read off the exact filtration
/// ranks of O·{generators} modulo t^(bound+1). For an ideal with a denominator d
/// the bound refers to the numerator module and the result is shifted by −v(d).
inline GoodSet value_set(const CurveRing& curve, const Module& m, const Point& bound) {
    const std::size_t r = curve.dim();
    if (bound.size() != r) throw dimension_mismatch(r, bound.size());
    for (auto x : bound)
        if (x < 0) throw precondition_error("bound must be nonnegative");
    const Point top = bound + ones(r);
    const std::size_t t = detail::work_truncation(curve, top);
    const Point u = detail::multiplicity(curve, t);
    auto gens = detail::numerators(curve, m, t);
    if (!has_regular_combination(gens)) throw error(detail::module_name(m) + ": generators vanish on a branch");

    auto basis = detail::module_span(curve, gens, top);
    detail::Layout lay{Point(r), {}};
    for (std::size_t i = 0; i < r; ++i) lay.len.push_back(static_cast<std::size_t>(top[i]));
    detail::Filtration filt(basis.rows(), lay);
    auto pts = filt.values_in(Point(r), bound);

    const std::string where = detail::module_name(m) + " with bound " + to_string(bound);
    if (pts.empty() || !filt.attained(bound)) throw BoundTooSmall(where + ": bound is not a value", bound);
    GoodSet e;
    try {
        ValidateOptions opts;
        opts.labels = curve.labels();
        opts.normalize_conductor = true;
        e = validate_good_set(r, pts, opts);
    } catch (const ValidationError& err) {
        throw BoundTooSmall(where + ": truncated values are not a good set (" + err.what() + ")", bound);
    }
    // t^c Õ ⊆ I once every value in [c, c + u] is attained (Nakayama over m_O·t^c Õ = t^(c+u) Õ)
    const Point need = e.conductor() + u;
    if (!all_le(need, bound)) throw BoundTooSmall(where + ": conductor " + to_string(e.conductor()) +
                                                       " needs bound ≥ " + to_string(need), bound);
    bool saturated = true;
    for_each_in_box(e.conductor(), need, [&](const Point& p) {
        if (!filt.attained(p)) saturated = false;
        return saturated;
    });
    if (!saturated) throw BoundTooSmall(where + ": box above candidate conductor not attained", bound);
    const Point shift = detail::denominator_value(curve, m, t);
    return shift == Point(r) ? e : translate(e, -shift);
}

/// Value set of the dual I* = (O : I), by solving for x with x·g ∈ O for every generator g.
/// x is sought with exponents in [c(S) − c(E), c(S) − m_E]; below is impossible and
/// higher terms never affect membership.
inline GoodSet dual_value_set(const CurveRing& curve, const Module& m, const Point& bound) {
    const std::size_t r = curve.dim();
    const GoodSet s = value_set(curve, Ring{}, bound);
    // work with the numerator module J; (O : J/d) = d·(O : J)
    Module num = m;
    if (auto* spec = std::get_if<IdealSpec>(&num)) spec->denominator.reset();
    const GoodSet e = value_set(curve, num, bound);
    const Point cs = s.conductor();
    const Point lo = cs - e.conductor();
    const Point hi = cs - e.min();
    const Point up = hi + ones(r);  // exclusive

    Coord span = 0;
    for (std::size_t i = 0; i < r; ++i) span = std::max(span, up[i] - std::min<Coord>(lo[i], 0));
    const std::size_t t = std::max({detail::work_truncation(curve, cs + ones(r)), static_cast<std::size_t>(span) + 1,
                                    static_cast<std::size_t>(detail::max_coord(e.conductor())) + 1});

    // annihilator of O modulo t^c(S): y ∈ O mod t^c  ⟺  N·y = 0
    auto ring_gens = detail::numerators(curve, Ring{}, t);
    auto o_basis = detail::module_span(curve, ring_gens, cs);
    detail::Layout olay{Point(r), {}};
    for (std::size_t i = 0; i < r; ++i) olay.len.push_back(static_cast<std::size_t>(cs[i]));
    const std::size_t ocols = olay.total();
    // vectors orthogonal to every row of the basis
    Matrix ann = null_space(o_basis.rows(), ocols);

    detail::Layout xlay{lo, {}};
    for (std::size_t i = 0; i < r; ++i) xlay.len.push_back(static_cast<std::size_t>(up[i] - lo[i]));
    const std::size_t xcols = xlay.total();

    Matrix constraints;
    for (const auto& g : detail::numerators(curve, num, t)) {
        // coefficients of x·g on branch i at exponent n, as a linear form in x
        std::vector<std::map<Coord, Row>> forms(r);
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t s0 = xlay.start(i);
            for (std::size_t k = 0; k < xlay.len[i]; ++k) {
                const Coord xe = lo[i] + static_cast<Coord>(k);
                for (std::size_t ge = 0; ge < t; ++ge) {
                    if (g.components[i][ge] == 0) continue;
                    const Coord n = xe + static_cast<Coord>(ge);
                    if (n >= cs[i]) break;
                    auto& row = forms[i][n];
                    if (row.empty()) row.assign(xcols, Rational(0));
                    row[s0 + k] += g.components[i][ge];
                }
            }
        }
        for (std::size_t i = 0; i < r; ++i)
            for (const auto& [n, row] : forms[i])
                if (n < 0) constraints.push_back(row);
        for (const auto& a : ann) {
            Row c(xcols);
            for (std::size_t i = 0; i < r; ++i) {
                const std::size_t o0 = olay.start(i);
                for (const auto& [n, row] : forms[i]) {
                    if (n < 0 || a[o0 + static_cast<std::size_t>(n)] == 0) continue;
                    const Rational w = a[o0 + static_cast<std::size_t>(n)];
                    for (std::size_t j = 0; j < xcols; ++j)
                        if (row[j] != 0) c[j] += w * row[j];
                }
            }
            constraints.push_back(std::move(c));
        }
    }
    Matrix sol = null_space(constraints, xcols);
    rref(sol);
    detail::Filtration filt(sol, xlay);
    auto pts = filt.values_in(lo, hi);
    if (pts.empty()) throw error("dual: no solutions in the window " + to_string(lo) + ".." + to_string(hi));
    ValidateOptions opts;
    opts.labels = curve.labels();
    opts.normalize_conductor = true;
    GoodSet out = validate_good_set(r, pts, opts);
    const Point shift = detail::denominator_value(curve, m, t);
    return shift == Point(r) ? out : translate(out, shift);
}

/// dim O/(P_J1 + P_J2), P_J = elements of O vanishing on the J-branches. Labels are branch labels.
inline Coord intersection_multiplicity(const CurveRing& curve, std::span<const int> j1, std::span<const int> j2,
                                       const Point& bound) {
    const std::size_t r = curve.dim();
    if (j1.empty() || j2.empty()) throw precondition_error("intersection multiplicity needs nonempty subsets");
    auto index_of = [&](int l) {
        auto it = std::find(curve.labels().begin(), curve.labels().end(), l);
        if (it == curve.labels().end()) throw precondition_error("unknown branch label " + std::to_string(l));
        return static_cast<std::size_t>(it - curve.labels().begin());
    };
    std::vector<bool> in1(r, false), in2(r, false);
    for (int l : j1) in1[index_of(l)] = true;
    for (int l : j2) {
        if (in1[index_of(l)]) throw precondition_error("subsets overlap at branch " + std::to_string(l));
        in2[index_of(l)] = true;
    }
    const GoodSet s = value_set(curve, Ring{}, bound);

    auto at = [&](const Point& b) -> Coord {
        const std::size_t t = detail::work_truncation(curve, b);
        auto basis = detail::module_span(curve, detail::numerators(curve, Ring{}, t), b);
        detail::Layout lay{Point(r), {}};
        for (std::size_t i = 0; i < r; ++i) lay.len.push_back(static_cast<std::size_t>(b[i]));
        const Matrix& w = basis.rows();
        auto vanishing_on = [&](const std::vector<bool>& mask) {
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < r; ++i)
                if (mask[i])
                    for (std::size_t e = 0; e < lay.len[i]; ++e) cols.push_back(lay.start(i) + e);
            if (cols.empty()) return w;
            Matrix restricted = select_columns(w, cols), tr(cols.size(), Row(w.size()));
            for (std::size_t k = 0; k < w.size(); ++k)
                for (std::size_t j = 0; j < cols.size(); ++j) tr[j][k] = restricted[k][j];
            return combine(null_space(tr, w.size()), w, lay.total());
        };
        Matrix sum = vanishing_on(in1);
        for (auto& row : vanishing_on(in2)) sum.push_back(std::move(row));
        return static_cast<Coord>(w.size()) - static_cast<Coord>(rank(sum));
    };
    const Coord a = at(s.conductor()), b = at(s.conductor() + 2 * ones(r));
    if (a != b)
        throw error("intersection multiplicity did not stabilize: " + std::to_string(a) + " vs " + std::to_string(b));
    return a;
}

inline Coord intersection_multiplicity(const CurveRing& curve, std::initializer_list<int> j1,
                                       std::initializer_list<int> j2, const Point& bound) {
    return intersection_multiplicity(curve, std::span<const int>(j1.begin(), j1.size()),
                                     std::span<const int>(j2.begin(), j2.size()), bound);
}

}  // namespace goodset::curve
