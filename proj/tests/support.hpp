#pragma once

#include "hopfren/json_io.hpp"
#include "hopfren/random.hpp"
#include "hopfren/toy.hpp"

#include <gtest/gtest.h>

namespace hopfren::test {

inline Rational Q(long p, long q = 1) { return make_rational(p, q); }
inline Polynomial A(unsigned k = 1) { return pow(Polynomial(symbols::a()), k); }
inline Polynomial B(unsigned k = 1) { return pow(Polynomial(symbols::b()), k); }

// c * eps^p, exact.
inline LaurentSeries E(int p, const Polynomial &c = Polynomial(1)) { return LaurentSeries(c, p); }

// x is known through eps^k and matches want there.
inline ::testing::AssertionResult same_through(const LaurentSeries &x, const LaurentSeries &want, int k)
{
    if (x.trunc_order() < k)
        return ::testing::AssertionFailure() << to_string(x) << " is not known through eps^" << k;
    if (x.truncated(k) != want.truncated(k))
        return ::testing::AssertionFailure() << to_string(x) << " differs from " << to_string(want);
    return ::testing::AssertionSuccess();
}

inline Monomial gen(const AlgebraPtr &h, const std::string &id) { return Monomial::of(h->index(id)); }

inline HopfElement el(const AlgebraPtr &h, const std::string &id) { return HopfElement::generator(h, id); }

inline std::string show(const CheckReport &r)
{
    return r.check + " " + to_string(r.outcome) + " " + r.detail + " " + r.witness.dump();
}

} // namespace hopfren::test
