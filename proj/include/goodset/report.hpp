#pragma once

#include <optional>
#include <string>

#include "goodset/apery.hpp"
#include "goodset/colength.hpp"
#include "goodset/curve/invariants.hpp"
#include "goodset/duality.hpp"
#include "goodset/io.hpp"
#include "goodset/maximals.hpp"

namespace goodset::report {

using io::json;

inline constexpr const char* tool_version = "0.1.0";

inline json tool_json() { return json{{"name", "goodset"}, {"version", tool_version}}; }

inline json symmetry_json(const SymmetryResult& res) {
    json w = json::array();
    for (const auto& x : res.witnesses) w.push_back(json{{"alpha", io::to_json(x.alpha)}, {"in_s", x.in_s}});
    return json{{"symmetric", res.symmetric}, {"witnesses", w}};
}

inline json maximals_json(const GoodSet& e) {
    json out = json::array();
    for (const auto& m : maximal_points(e))
        out.push_back(json{{"point", io::to_json(m.point)},
                           {"relative", m.is_relative},
                           {"absolute", m.is_absolute},
                           {"p", m.p},
                           {"q", m.q}});
    return out;
}

inline json pq_table_json(const GoodSet& e) {
    json out = json::array();
    const Point one = ones(e.dim());
    for_each_in_box(e.min() - one, e.conductor() + one, [&](const Point& a) {
        out.push_back(json{{"point", io::to_json(a)}, {"p", p_value(e, a)}, {"q", q_value(e, a)}});
    });
    return out;
}

namespace detail {

inline CheckResult generation_round_trip(const GoodSet& e) {
    CheckResult res{"generation", "E is generated by its projections and RM(E)", true, {}, {}};
    std::vector<GoodSet> proj;
    if (e.dim() > 1)
        for (std::size_t skip = 0; skip < e.dim(); ++skip) {
            Labels l;
            for (std::size_t k = 0; k < e.dim(); ++k)
                if (k != skip) l.push_back(e.labels()[k]);
            proj.push_back(project(e, l));
        }
    auto rm = relative_maximals(e);
    GoodSet g = generate_from_relative_maximals(e.labels(), proj, rm, e.min(), e.conductor());
    if (!(g == e)) res.fail({}, "generated set differs");
    return res;
}

inline CheckResult colength_agreement(const GoodSet& e) {
    const Point gamma = e.conductor() + ones(e.dim());
    CheckResult res{"colength_formulas", "chain, closed and recursive formulas agree at c(E)+e", true, {}, {}};
    const auto chain = ell_truncation(e, gamma);
    const auto rec = colength_recursive_formula(e, gamma);
    res.detail = "chain " + std::to_string(chain) + ", recursive " + std::to_string(rec);
    if (rec != chain) res.fail({gamma}, "recursive formula differs");
    if (e.dim() == 2) {
        const auto closed = colength_r2_formula(e, gamma);
        res.detail += ", closed " + std::to_string(closed);
        if (closed != chain) res.fail({gamma}, "closed formula differs");
    }
    return res;
}

}  // namespace detail

/// The check battery for a triple (E, E*, S).
inline json duality_battery(const GoodSet& e, const GoodSet& estar, const GoodSet& s) {
    json checks = json::array();
    const bool sym = symmetry_check(s).symmetric;
    checks.push_back(io::to_json(sum_containment_check(e, estar, s)));
    auto ld = local_duality_check(e, estar, s);
    checks.push_back(io::to_json(ld.inequality));
    checks.push_back(io::to_json(ld.equality));
    auto pq = pq_duality_check(e, estar, s);
    checks.push_back(io::to_json(pq.inequality));
    checks.push_back(io::to_json(pq.equality));
    checks.push_back(io::to_json(pq.mirrored_inequality));
    checks.push_back(io::to_json(pq.mirrored_equality));
    if (sym) {
        auto ms = maximal_symmetry_check(e, estar, s);
        checks.push_back(io::to_json(ms.maximal_iff));
        checks.push_back(io::to_json(ms.absolute_iff));
    }
    // Apéry criterion over every nonzero alpha in S ∩ E ∩ E* below the conductor
    CheckResult ap{"apery_symmetry", "a in A_alpha(E) <=> F(E*, f(S)+alpha-a) subset of A_alpha(E*)", true, {}, {}};
    const Point zero(s.dim());
    std::size_t tried = 0;
    for (const auto& a : s.small()) {
        if (a == zero || !all_le(ones(s.dim()), a) || !e.contains(a) || !estar.contains(a)) continue;
        ++tried;
        auto c = apery_symmetry_check(e, estar, s, a);
        if (!c.passed)
            for (auto w : c.witnesses) {
                w.note = "alpha " + to_string(a) + ": " + w.note;
                ap.witnesses.push_back(std::move(w));
                ap.passed = false;
            }
    }
    ap.detail = std::to_string(tried) + " alpha tested";
    checks.push_back(io::to_json(ap));
    return checks;
}

struct AnalyzeOptions {
    std::optional<GoodSet> semigroup;  // reference semigroup for a monomodule
    bool transform = false;            // include Pol(E) and run the battery against it
};

inline json analyze(const GoodSet& e, const AnalyzeOptions& opt = {}) {
    json out;
    out["tool"] = tool_json();
    out["good_set"] = io::to_json(e);
    out["frobenius"] = io::to_json(frobenius(e));
    const bool is_sg = algebra_check(e, AlgebraMode::semigroup);
    out["is_semigroup"] = is_sg;
    std::optional<GoodSet> s = opt.semigroup;
    if (!s && is_sg) s = e;
    out["is_monomodule"] = s ? json(algebra_check(e, AlgebraMode::monomodule, &*s)) : json(nullptr);
    out["maximals"] = maximals_json(e);
    out["pq_table"] = pq_table_json(e);

    json checks = json::array();
    checks.push_back(io::to_json(detail::colength_agreement(e)));
    checks.push_back(io::to_json(detail::generation_round_trip(e)));
    if (s) {
        const auto sym = symmetry_check(*s);
        out["symmetry"] = symmetry_json(sym);
        out["delta"] = delta_invariant(*s);
        out["length_test"] = gorenstein_length_test(*s);
        CheckResult ff{"frobenius_fiber", "F(S, f(S)) is empty", frobenius_fiber_check(*s), {}, {}};
        checks.push_back(io::to_json(ff));
        GoodSet estar = e;
        if (opt.transform || !is_sg || opt.semigroup) {
            try {
                estar = pol_transform(e, *s);
                out["transform"] = io::to_json(estar);
            } catch (const ValidationError& err) {
                out["transform"] = json{{"error", err.what()}};
            }
        }
        for (auto& c : duality_battery(e, estar, *s)) checks.push_back(std::move(c));
    }
    out["checks"] = checks;
    return out;
}

inline json curve_report_json(const curve::CurveInvariants& rep) {
    auto labels_key = [](const Labels& l) {
        std::string k;
        for (std::size_t i = 0; i < l.size(); ++i) k += (i ? "," : "") + std::to_string(l[i]);
        return k;
    };
    json out;
    out["tool"] = tool_json();
    out["bound"] = io::to_json(rep.bound);
    out["semigroup"] = io::to_json(rep.semigroup);
    out["conductor"] = io::to_json(rep.semigroup.conductor());
    out["frobenius"] = io::to_json(frobenius(rep.semigroup));
    out["delta"] = rep.delta;
    out["conductor_colength"] = rep.conductor_colength;
    out["symmetric"] = rep.symmetric;
    out["length_test"] = rep.length_test;
    out["gorenstein"] = rep.symmetric && rep.length_test;
    json dj, ij;
    for (const auto& [j, v] : rep.delta_j) dj[labels_key(j)] = v;
    for (const auto& [j, v] : rep.intersection_j) ij[labels_key(j)] = v;
    out["delta_J"] = dj;
    out["intersection_J"] = ij;
    json parts = json::array();
    for (const auto& p : rep.partitions) {
        json ps = json::array();
        for (const auto& t : p.parts) ps.push_back(t);
        parts.push_back(json{{"J", p.j},
                             {"parts", ps},
                             {"lhs", curve::to_string(p.lhs)},
                             {"rhs", curve::to_string(p.rhs)},
                             {"equal", p.holds},
                             {"asserted", p.asserted}});
    }
    out["partitions"] = parts;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(io::to_json(c));
    out["checks"] = checks;
    json ideals = json::object();
    for (const auto& i : rep.ideals) {
        json ic = json::array();
        for (const auto& c : i.checks) ic.push_back(io::to_json(c));
        ideals[i.name] = json{{"values", io::to_json(i.values)},
                              {"dual", i.dual ? io::to_json(*i.dual) : json(nullptr)},
                              {"checks", ic}};
    }
    out["ideals"] = ideals;
    return out;
}

}  // namespace goodset::report
