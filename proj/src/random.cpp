#include "hopfren/random.hpp"

namespace hopfren {

namespace {

long draw(Rng &rng, long lo, long hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

} // namespace

Rational small_rational(Rng &rng)
{
    return make_rational(draw(rng, -9, 9), draw(rng, 1, 9));
}

Polynomial random_polynomial(Rng &rng, int terms, unsigned max_exp, bool with_b)
{
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        auto i = static_cast<std::uint32_t>(draw(rng, 0, max_exp));
        auto k = with_b ? static_cast<std::uint32_t>(draw(rng, 0, max_exp)) : 0u;
        p += Polynomial::term(small_rational(rng),
                              PowerProduct({{symbols::a(), i}, {symbols::b(), k}}));
    }
    return p;
}

LaurentSeries random_series(Rng &rng, int min_pow, int max_pow, bool with_b)
{
    LaurentSeries::Terms terms;
    for (int p = min_pow; p <= max_pow; ++p) {
        if (draw(rng, 0, 3) == 0)
            continue;
        Polynomial c = random_polynomial(rng, 2, 2, with_b);
        if (!c.is_zero())
            terms.emplace(p, std::move(c));
    }
    return LaurentSeries(std::move(terms), min_pow, LaurentSeries::kExact);
}

} // namespace hopfren
