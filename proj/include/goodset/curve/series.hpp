#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "goodset/error.hpp"

namespace goodset::curve {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Power series in one variable t, known modulo t^T, with exact rational
/// coefficients. All arithmetic truncates at T.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t t) : c_(t) {}

    static TruncatedSeries constant(const Rational& a, std::size_t t) {
        TruncatedSeries s(t);
        if (t) s.c_[0] = a;
        return s;
    }
    static TruncatedSeries monomial(const Rational& a, std::size_t k, std::size_t t) {
        TruncatedSeries s(t);
        if (k < t) s.c_[k] = a;
        return s;
    }

    std::size_t truncation() const noexcept { return c_.size(); }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }

    /// Least index with a nonzero coefficient; nullopt when the series is zero modulo t^T.
    std::optional<std::size_t> order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return std::nullopt;
    }
    bool is_zero() const { return !order(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    TruncatedSeries& operator*=(const Rational& a) {
        for (auto& x : c_) x *= a;
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        const std::size_t t = a.c_.size();
        TruncatedSeries out(t);
        auto oa = a.order(), ob = b.order();
        if (!oa || !ob) return out;
        for (std::size_t i = *oa; i < t; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = *ob; i + j < t; ++j)
                if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries pow(unsigned n) const {
        TruncatedSeries out = constant(Rational(1), truncation()), base = *this;
        while (n) {
            if (n & 1u) out *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check(const TruncatedSeries& o) const {
        if (o.c_.size() != c_.size()) throw error("series truncation mismatch");
    }
    std::vector<Rational> c_;
};

}  // namespace goodset::curve
