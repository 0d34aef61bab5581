#include "hopfren/laurent.hpp"

#include "hopfren/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace hopfren {

namespace {

int saturate(std::int64_t v)
{
    if (v >= LaurentSeries::kExact)
        return LaurentSeries::kExact;
    if (v <= std::numeric_limits<int>::min())
        return std::numeric_limits<int>::min() + 1;
    return static_cast<int>(v);
}

// Window of a product term: unknown contributions start at T_x + v_y.
int shifted(int trunc, int valuation)
{
    if (trunc == LaurentSeries::kExact || valuation == LaurentSeries::kExact)
        return LaurentSeries::kExact;
    return saturate(std::int64_t(trunc) + valuation);
}

} // namespace

LaurentSeries::LaurentSeries(const Polynomial &c, int pow, int trunc_order)
    : min_pow_(pow), trunc_(trunc_order)
{
    if (!c.is_zero())
        terms_.emplace(pow, c);
    normalize();
}

LaurentSeries::LaurentSeries(Terms terms, int min_pow, int trunc_order)
    : terms_(std::move(terms)), min_pow_(min_pow), trunc_(trunc_order)
{
    if (!terms_.empty() && terms_.begin()->first < min_pow_)
        throw DomainError("stored power below declared min_pow");
    normalize();
}

LaurentSeries LaurentSeries::zero(int trunc_order)
{
    return LaurentSeries(Terms{}, 0, trunc_order);
}

void LaurentSeries::normalize()
{
    std::erase_if(terms_, [this](const auto &kv) { return kv.second.is_zero() || kv.first > trunc_; });
}

int LaurentSeries::valuation() const
{
    if (!terms_.empty())
        return terms_.begin()->first;
    if (trunc_ == kExact)
        return kExact;
    return trunc_ + 1;
}

Polynomial LaurentSeries::coefficient(int pow) const
{
    if (pow > trunc_)
        throw WindowUnderflow("coefficient of eps^" + std::to_string(pow) +
                              " requested beyond truncation order " + std::to_string(trunc_));
    auto it = terms_.find(pow);
    return it == terms_.end() ? Polynomial() : it->second;
}

LaurentSeries LaurentSeries::truncated(int order) const
{
    if (order >= trunc_)
        return *this;
    LaurentSeries r = *this;
    r.trunc_ = order;
    r.normalize();
    return r;
}

bool LaurentSeries::contains(Symbol s) const
{
    return std::any_of(terms_.begin(), terms_.end(), [s](const auto &kv) { return kv.second.contains(s); });
}

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &y)
{
    trunc_ = std::min(trunc_, y.trunc_);
    min_pow_ = std::min(min_pow_, y.min_pow_);
    for (const auto &[p, c] : y.terms_) {
        if (p > trunc_)
            continue;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted)
            it->second += c;
    }
    normalize();
    return *this;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &y)
{
    return *this += -y;
}

LaurentSeries operator*(const LaurentSeries &x, const LaurentSeries &y)
{
    LaurentSeries r;
    r.trunc_ = std::min(shifted(x.trunc_, y.valuation()), shifted(y.trunc_, x.valuation()));
    r.min_pow_ = saturate(std::int64_t(x.min_pow_) + y.min_pow_);
    for (const auto &[px, cx] : x.terms_) {
        for (const auto &[py, cy] : y.terms_) {
            std::int64_t p = std::int64_t(px) + py;
            if (p > r.trunc_)
                break;
            auto [it, inserted] = r.terms_.try_emplace(static_cast<int>(p));
            it->second += cx * cy;
        }
    }
    r.normalize();
    return r;
}

LaurentSeries &LaurentSeries::operator*=(const LaurentSeries &y)
{
    *this = *this * y;
    return *this;
}

LaurentSeries &LaurentSeries::operator*=(const Rational &c)
{
    for (auto &kv : terms_)
        kv.second *= c;
    normalize();
    return *this;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto &kv : r.terms_)
        kv.second = -kv.second;
    return r;
}

bool agree(const LaurentSeries &x, const LaurentSeries &y)
{
    int window = std::min(x.trunc_order(), y.trunc_order());
    return x.truncated(window).terms() == y.truncated(window).terms();
}

LaurentSeries exp_series(const LaurentSeries &x)
{
    if (x.is_zero() && x.is_exact())
        return LaurentSeries::one();
    if (!x.terms().empty() && x.terms().begin()->first <= 0)
        throw DomainError("exp_series needs a series without constant or pole part");
    if (x.is_exact())
        throw DomainError("exp_series needs a finite truncation order");

    // x has valuation >= 1, so x^k only contributes from eps^k on.
    LaurentSeries sum = LaurentSeries::one().truncated(x.trunc_order());
    LaurentSeries term = LaurentSeries::one();
    for (int k = 1; k <= x.trunc_order(); ++k) {
        term = term * x;
        term *= Rational(1, k);
        sum += term;
    }
    return sum;
}

LaurentSeries pow(const LaurentSeries &x, unsigned k)
{
    LaurentSeries r = LaurentSeries::one();
    for (unsigned i = 0; i < k; ++i)
        r = r * x;
    return r;
}

std::string to_string(const LaurentSeries &x)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[p, c] : x.terms()) {
        std::string coeff = to_string(c);
        bool compound = c.terms().size() > 1;
        bool negative = !compound && coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (compound)
            coeff = "(" + coeff + ")";
        if (p == 0) {
            os << coeff;
        } else {
            if (coeff != "1")
                os << coeff << '*';
            os << "eps";
            if (p != 1)
                os << '^' << p;
        }
    }
    if (first)
        os << '0';
    if (!x.is_exact())
        os << " + O(eps^" << (x.trunc_order() + 1) << ')';
    return os.str();
}

} // namespace hopfren
