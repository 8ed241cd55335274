#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goodset/curve/expression.hpp"
#include "goodset/good_set.hpp"

namespace goodset::curve {

/// Generator expressions of a fractional ideal, optionally over one denominator.
struct IdealSpec {
    std::string name;
    std::vector<Expression> generators;
    std::optional<Expression> denominator;
};

/// An element of O, as its images on every branch modulo t^T.
struct RingElement {
    std::vector<TruncatedSeries> components;
    std::string expression;
    std::vector<bool> zero_flags;  // component vanishes modulo t^T

    bool regular() const {
        for (bool z : zero_flags)
            if (z) return false;
        return true;
    }
};

/// Some combination is regular iff no branch kills every generator.
inline bool has_regular_combination(const std::vector<RingElement>& gens) {
    if (gens.empty()) return false;
    for (std::size_t b = 0; b < gens.front().zero_flags.size(); ++b) {
        bool live = false;
        for (const auto& g : gens) live |= !g.zero_flags[b];
        if (!live) return false;
    }
    return true;
}

struct ZeroDivisor {
    std::vector<int> branches;  // labels of the vanishing components
    std::string caveat;
};

using Value = std::variant<Point, ZeroDivisor>;

inline Value value(const RingElement& h) {
    Point v(h.components.size());
    ZeroDivisor z;
    for (std::size_t i = 0; i < h.components.size(); ++i) {
        if (auto o = h.components[i].order())
            v[i] = static_cast<Coord>(*o);
        else
            z.branches.push_back(static_cast<int>(i) + 1);
    }
    if (z.branches.empty()) return v;
    const std::size_t t = h.components.empty() ? 0 : h.components.front().truncation();
    z.caveat = "vanishing unverified beyond truncation t^" + std::to_string(t);
    return z;
}

/// Branch parametrizations of an algebroid curve: each ring generator is
/// assigned a series in t on every branch.
class CurveRing {
public:
    CurveRing(std::vector<std::string> variables, std::size_t truncation,
              const std::vector<std::map<std::string, std::string>>& branches,
              std::map<std::string, IdealSpec> ideals = {}, std::optional<Labels> labels = std::nullopt)
        : vars_(std::move(variables)), t_(truncation), ideals_(std::move(ideals)) {
        if (branches.empty()) throw error("curve needs at least one branch");
        if (vars_.empty()) throw error("curve needs at least one generator");
        if (t_ < 1) throw error("truncation must be positive");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == "t") throw error("'t' is reserved for the branch parameter");
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[i] == vars_[j]) throw error("duplicate generator '" + vars_[i] + "'");
        }
        for (std::size_t b = 0; b < branches.size(); ++b) {
            std::vector<Expression> exprs;
            for (const auto& v : vars_) {
                auto it = branches[b].find(v);
                if (it == branches[b].end())
                    throw error("generator '" + v + "' not assigned on branch " + std::to_string(b + 1));
                exprs.push_back(Expression::parse(it->second));
                for (const auto& n : exprs.back().names())
                    if (n != "t") throw unknown_name(n);
            }
            for (const auto& [k, _] : branches[b])
                if (std::find(vars_.begin(), vars_.end(), k) == vars_.end()) throw unknown_name(k);
            branches_.push_back(std::move(exprs));
        }
        labels_ = labels.value_or(default_labels(branches_.size()));
        if (labels_.size() != branches_.size()) throw error("label count differs from branch count");
        // generators must lie in the maximal ideal of every branch
        auto vals = variable_series(1);
        for (std::size_t b = 0; b < vals.size(); ++b)
            for (std::size_t k = 0; k < vars_.size(); ++k)
                if (!vals[b][k].is_zero())
                    throw error("generator '" + vars_[k] + "' has a nonzero constant term on branch " +
                                std::to_string(labels_[b]));
        for (const auto& [name, spec] : ideals_) check_ideal(spec);
    }

    std::size_t dim() const noexcept { return branches_.size(); }
    const Labels& labels() const noexcept { return labels_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t truncation() const noexcept { return t_; }
    const std::map<std::string, IdealSpec>& ideals() const noexcept { return ideals_; }

    const IdealSpec& ideal(const std::string& name) const {
        auto it = ideals_.find(name);
        if (it == ideals_.end()) throw error("no ideal named '" + name + "'");
        return it->second;
    }

    /// Series of every generator on every branch modulo t^T: [branch][generator].
    std::vector<std::vector<TruncatedSeries>> variable_series(std::size_t t) const {
        std::vector<std::vector<TruncatedSeries>> out;
        const TruncatedSeries param = TruncatedSeries::monomial(Rational(1), 1, t);
        for (const auto& exprs : branches_) {
            std::vector<TruncatedSeries> row;
            for (const auto& e : exprs)
                row.push_back(e.evaluate<TruncatedSeries>(
                    [&](const std::string&) { return param; },
                    [&](const Rational& q) { return TruncatedSeries::constant(q, t); }));
            out.push_back(std::move(row));
        }
        return out;
    }

    /// The sub-curve on the branches with the given labels (original labels kept).
    CurveRing subcurve(std::span<const int> subset) const {
        if (subset.empty()) throw precondition_error("subcurve needs a nonempty subset");
        CurveRing out = *this;
        out.branches_.clear();
        out.labels_.clear();
        for (int l : subset) {
            auto it = std::find(labels_.begin(), labels_.end(), l);
            if (it == labels_.end()) throw precondition_error("unknown branch label " + std::to_string(l));
            if (std::find(out.labels_.begin(), out.labels_.end(), l) != out.labels_.end())
                throw precondition_error("repeated branch label " + std::to_string(l));
            out.branches_.push_back(branches_[static_cast<std::size_t>(it - labels_.begin())]);
            out.labels_.push_back(l);
        }
        return out;
    }

    /// Same curve with a different working truncation.
    CurveRing with_truncation(std::size_t t) const {
        CurveRing out = *this;
        out.t_ = t;
        return out;
    }

    RingElement evaluate(const Expression& e, std::optional<std::size_t> t = std::nullopt) const {
        const std::size_t tt = t.value_or(t_);
        auto vals = variable_series(tt);
        RingElement h;
        h.expression = e.source();
        for (std::size_t b = 0; b < dim(); ++b) {
            h.components.push_back(e.evaluate<TruncatedSeries>(
                [&](const std::string& n) {
                    auto it = std::find(vars_.begin(), vars_.end(), n);
                    if (it == vars_.end()) throw unknown_name(n);
                    return vals[b][static_cast<std::size_t>(it - vars_.begin())];
                },
                [&](const Rational& q) { return TruncatedSeries::constant(q, tt); }));
            h.zero_flags.push_back(h.components.back().is_zero());
        }
        return h;
    }

private:
    void check_ideal(const IdealSpec& spec) const {
        if (spec.generators.empty()) throw error("ideal '" + spec.name + "' has no generators");
        auto known = [&](const Expression& e) {
            for (const auto& n : e.names())
                if (std::find(vars_.begin(), vars_.end(), n) == vars_.end()) throw unknown_name(n);
        };
        std::vector<RingElement> gens;
        for (const auto& g : spec.generators) {
            known(g);
            gens.push_back(evaluate(g));
        }
        if (!has_regular_combination(gens))
            throw error("ideal '" + spec.name + "' vanishes on a branch modulo t^" + std::to_string(t_));
        if (spec.denominator) {
            known(*spec.denominator);
            if (!evaluate(*spec.denominator).regular())
                throw error("denominator of ideal '" + spec.name + "' is a zero divisor");
        }
    }

    std::vector<std::string> vars_;
    std::size_t t_;
    std::vector<std::vector<Expression>> branches_;
    std::map<std::string, IdealSpec> ideals_;
    Labels labels_;
};

inline RingElement evaluate(const CurveRing& curve, std::string_view expr) {
    return curve.evaluate(Expression::parse(expr));
}

}  // namespace goodset::curve
