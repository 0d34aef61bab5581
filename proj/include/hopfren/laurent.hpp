#pragma once

#include "hopfren/polynomial.hpp"

#include <limits>
#include <map>
#include <string>

namespace hopfren {

// Truncated Laurent series in the regulator eps with polynomial coefficients.
//
// Coefficients at powers above trunc_order() are unknown, not zero; reading
// them throws WindowUnderflow. A series whose trunc_order() equals kExact is
// known exactly (a Laurent polynomial). min_pow() is a lower bound for every
// stored power.
class LaurentSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    using Terms = std::map<int, Polynomial>;

    // The exact zero series.
    LaurentSeries() = default;
    LaurentSeries(const Polynomial &c, int pow = 0, int trunc_order = kExact); // NOLINT
    LaurentSeries(Terms terms, int min_pow, int trunc_order);

    static LaurentSeries zero(int trunc_order = kExact);
    static LaurentSeries one() { return LaurentSeries(Polynomial(1)); }
    // eps^pow, exactly.
    static LaurentSeries eps(int pow = 1) { return LaurentSeries(Polynomial(1), pow); }

    const Terms &terms() const { return terms_; }
    int min_pow() const { return min_pow_; }
    int trunc_order() const { return trunc_; }
    bool is_exact() const { return trunc_ == kExact; }

    // True when every known coefficient vanishes.
    bool is_zero() const { return terms_.empty(); }

    // Lowest stored power, or trunc_order()+1 when nothing is stored inside a
    // finite window. Exact zero reports kExact.
    int valuation() const;

    // Coefficient of eps^pow. Throws WindowUnderflow above the window.
    Polynomial coefficient(int pow) const;

    // Forgets everything above `order` (no-op when order >= trunc_order()).
    LaurentSeries truncated(int order) const;

    // Applies f coefficient-wise; zero results are dropped.
    template <typename F>
    LaurentSeries map_coefficients(F &&f) const
    {
        Terms out;
        for (const auto &[p, c] : terms_) {
            Polynomial v = f(p, c);
            if (!v.is_zero())
                out.emplace(p, std::move(v));
        }
        return LaurentSeries(std::move(out), min_pow_, trunc_);
    }

    bool contains(Symbol s) const;

    LaurentSeries &operator+=(const LaurentSeries &y);
    LaurentSeries &operator-=(const LaurentSeries &y);
    LaurentSeries &operator*=(const LaurentSeries &y);
    LaurentSeries &operator*=(const Rational &c);

    friend LaurentSeries operator+(LaurentSeries x, const LaurentSeries &y) { return x += y; }
    friend LaurentSeries operator-(LaurentSeries x, const LaurentSeries &y) { return x -= y; }
    friend LaurentSeries operator*(const LaurentSeries &x, const LaurentSeries &y);
    friend LaurentSeries operator*(LaurentSeries x, const Rational &c) { return x *= c; }
    friend LaurentSeries operator*(const Rational &c, LaurentSeries x) { return x *= c; }
    LaurentSeries operator-() const;

    // Structural equality: same window and same known coefficients.
    friend bool operator==(const LaurentSeries &x, const LaurentSeries &y)
    {
        return x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
    }

private:
    void normalize();

    Terms terms_;
    int min_pow_ = 0;
    int trunc_ = kExact;
};

// Equality on the common window min(x.trunc, y.trunc).
bool agree(const LaurentSeries &x, const LaurentSeries &y);

// Sum of x^k/k!; requires a finite window and no stored power <= 0.
LaurentSeries exp_series(const LaurentSeries &x);

LaurentSeries pow(const LaurentSeries &x, unsigned k);

// "1/2*eps^-2 - a*eps^-1 + a^2 + O(eps^4)".
std::string to_string(const LaurentSeries &x);

} // namespace hopfren
