#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goodset/check.hpp"
#include "goodset/colength.hpp"
#include "goodset/curve/value_sets.hpp"
#include "goodset/duality.hpp"

namespace goodset::curve {

/// Retry value_set with the bound doubled until it certifies the conductor.
inline std::pair<GoodSet, Point> auto_value_set(const CurveRing& curve, const Module& m,
                                                std::optional<Point> start = std::nullopt, Coord limit = 64) {
    Point b = start.value_or(Point(curve.dim(), 4));
    for (;;) {
        try {
            return {value_set(curve, m, b), b};
        } catch (const BoundTooSmall&) {
            if (detail::max_coord(b) >= limit) throw;
            for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::min<Coord>(std::max<Coord>(2 * b[i], 1), limit);
        }
    }
}

struct PartitionRequest {
    Labels j;                 // empty means all branches
    std::vector<Labels> parts;  // empty means singletons
};

struct PartitionIdentity {
    Labels j;
    std::vector<Labels> parts;
    Rational lhs, rhs;
    bool asserted = false;  // only for J = I on a Gorenstein curve
    bool holds = false;
};

struct IdealSummary {
    std::string name;
    GoodSet values;
    std::optional<GoodSet> dual;
    std::vector<CheckResult> checks;
};

struct CurveInvariants {
    Point bound;
    GoodSet semigroup;
    Coord delta = 0;
    Coord conductor_colength = 0;  // ℓ(O/C)
    bool symmetric = false;
    bool length_test = false;
    std::map<Labels, Coord> delta_j;        // every nonempty J
    std::map<Labels, Coord> intersection_j; // I_J = I(C_J, C_{I∖J}); I_I = 0
    std::vector<PartitionIdentity> partitions;
    std::vector<IdealSummary> ideals;
    std::vector<CheckResult> checks;
};

namespace detail {

inline Labels labels_of_mask(const Labels& all, Mask m) {
    Labels out;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (m & (Mask{1} << k)) out.push_back(all[k]);
    return out;
}

inline Labels complement(const Labels& all, const Labels& j) {
    Labels out;
    for (int l : all)
        if (std::find(j.begin(), j.end(), l) == j.end()) out.push_back(l);
    return out;
}

inline std::string labels_text(const Labels& l) {
    std::string s = "{";
    for (std::size_t k = 0; k < l.size(); ++k) s += (k ? "," : "") + std::to_string(l[k]);
    return s + "}";
}

}  // namespace detail

inline CurveInvariants curve_invariants_report(const CurveRing& curve, std::optional<Point> bound = std::nullopt,
                                               std::vector<PartitionRequest> requests = {}) {
    const std::size_t r = curve.dim();
    require_subset_rank(r);
    const Labels& all = curve.labels();
    CurveInvariants rep;
    std::tie(rep.semigroup, rep.bound) = auto_value_set(curve, Ring{}, bound);
    const GoodSet& s = rep.semigroup;
    rep.delta = delta_invariant(s);
    rep.conductor_colength = colength(s, orthant(s.conductor(), s.labels()));
    rep.symmetric = symmetry_check(s).symmetric;
    rep.length_test = gorenstein_length_test(s);

    CheckResult proj{"subcurve_projection", "pr_J(S) = S(C_J) for every nonempty J", true, {}, {}};
    for (Mask m = 1; m <= full_mask(r); ++m) {
        const Labels j = detail::labels_of_mask(all, m);
        if (popcount(m) == static_cast<int>(r)) {
            rep.delta_j[j] = rep.delta;
            rep.intersection_j[j] = 0;
            continue;
        }
        auto sub = curve.subcurve(j);
        Point sb(j.size());
        for (std::size_t k = 0; k < j.size(); ++k)
            sb[k] = rep.bound[static_cast<std::size_t>(std::find(all.begin(), all.end(), j[k]) - all.begin())];
        const GoodSet sj = auto_value_set(sub, Ring{}, sb).first;
        rep.delta_j[j] = delta_invariant(sj);
        if (!(project(s, j) == sj)) proj.fail({}, "J = " + detail::labels_text(j));
        rep.intersection_j[j] = intersection_multiplicity(curve, j, detail::complement(all, j), rep.bound);
    }
    rep.checks.push_back(proj);

    CheckResult cond{"conductor_formula", "c(S)_i = I_i + 2·delta_i", true, {}, {}};
    if (!rep.symmetric) {
        cond.detail = "not asserted: semigroup is not symmetric";
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            const Labels one{all[i]};
            const Coord want = rep.intersection_j[one] + 2 * rep.delta_j[one];
            if (s.conductor()[i] != want)
                cond.fail({s.conductor()}, "branch " + std::to_string(all[i]) + ": " +
                                               std::to_string(s.conductor()[i]) + " vs " + std::to_string(want));
        }
    }
    rep.checks.push_back(cond);

    if (requests.empty()) requests.push_back({});
    CheckResult part{"partition_identity", "delta_J + I_J/2 = sum_k (delta_Tk + I_Tk/2)", true, {}, {}};
    for (auto req : requests) {
        if (req.j.empty()) req.j = all;
        if (req.parts.empty())
            for (int l : req.j) req.parts.push_back({l});
        std::multiset<int> covered;
        for (auto& t : req.parts) {
            std::sort(t.begin(), t.end());
            covered.insert(t.begin(), t.end());
        }
        std::sort(req.j.begin(), req.j.end());
        if (!std::equal(covered.begin(), covered.end(), req.j.begin(), req.j.end()))
            throw precondition_error("parts do not partition " + detail::labels_text(req.j));
        auto find = [&](const std::map<Labels, Coord>& table, const Labels& key) {
            auto it = table.find(key);
            if (it == table.end()) throw precondition_error("unknown subset " + detail::labels_text(key));
            return Rational(it->second);
        };
        PartitionIdentity pi{req.j, req.parts, 0, 0};
        pi.lhs = find(rep.delta_j, req.j) + find(rep.intersection_j, req.j) / 2;
        for (const auto& t : req.parts) pi.rhs += find(rep.delta_j, t) + find(rep.intersection_j, t) / 2;
        pi.holds = pi.lhs == pi.rhs;
        pi.asserted = req.j.size() == r && rep.symmetric;
        if (pi.asserted && !pi.holds)
            part.fail({}, detail::labels_text(req.j) + ": " + to_string(pi.lhs) + " vs " + to_string(pi.rhs));
        rep.partitions.push_back(std::move(pi));
    }
    rep.checks.push_back(part);

    for (const auto& [name, spec] : curve.ideals()) {
        IdealSummary sum{name, auto_value_set(curve, spec, rep.bound).first, std::nullopt, {}};
        const GoodSet& e = sum.values;
        CheckResult box{"ideal_bounds", "c(E) + N^r ⊆ E ⊆ m_E + N^r", true, {}, {}};
        for (const auto& p : e.small())
            if (!all_le(e.min(), p)) box.fail({p}, "below min");
        for_each_in_box(e.conductor(), e.conductor() + ones(r), [&](const Point& p) {
            if (!e.contains(p)) box.fail({p}, "missing above conductor");
        });
        sum.checks.push_back(box);
        try {
            sum.dual = dual_value_set(curve, spec, rep.bound);
        } catch (const BoundTooSmall&) {
            sum.dual = dual_value_set(curve, spec, auto_value_set(curve, spec, rep.bound).second);
        }
        auto sc = sum_containment_check(e, *sum.dual, s);
        sum.checks.push_back(sc);
        CheckResult pol{"dual_matches_transform", "v(O:I) = Pol(E) when S is symmetric", true, {}, {}};
        if (!rep.symmetric) {
            pol.detail = "not asserted: semigroup is not symmetric";
        } else {
            try {
                if (!(pol_transform(e, s) == *sum.dual)) pol.fail({}, "dual value set differs from the transform");
            } catch (const ValidationError& err) {
                pol.fail({}, err.what());
            }
        }
        sum.checks.push_back(pol);
        rep.ideals.push_back(std::move(sum));
    }
    return rep;
}

}  // namespace goodset::curve
