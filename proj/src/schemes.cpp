#include "hopfren/schemes.hpp"

#include "hopfren/errors.hpp"
#include "hopfren/json_io.hpp"
#include "hopfren/random.hpp"

namespace hopfren {

LaurentSeries ms_project(const LaurentSeries &x)
{
    LaurentSeries::Terms poles;
    for (const auto &[p, c] : x.terms())
        if (p <= -1)
            poles.emplace(p, c);
    int trunc = x.trunc_order() >= -1 ? LaurentSeries::kExact : x.trunc_order();
    return LaurentSeries(std::move(poles), std::min(x.min_pow(), 0), trunc);
}

LaurentSeries jet_project(const LaurentSeries &x, int m)
{
    if (m < 1)
        throw DomainError("jet order must be positive");
    if (x.trunc_order() < m)
        throw WindowUnderflow("jet projection of order " + std::to_string(m) + " needs the series through eps^" +
                              std::to_string(m) + ", known only through eps^" + std::to_string(x.trunc_order()));
    LaurentSeries::Terms out;
    for (const auto &[p, c] : x.terms()) {
        if (p <= -1)
            out.emplace(p, c);
        else if (p >= 1 && p <= m) {
            Polynomial at_q = c.substitute(symbols::a(), symbols::b());
            if (!at_q.is_zero())
                out.emplace(p, std::move(at_q));
        }
    }
    return LaurentSeries(std::move(out), std::min(x.min_pow(), 0), LaurentSeries::kExact);
}

Scheme::Scheme(Kind kind, int m, std::string name, Projector minus)
    : kind_(kind), jet_order_(m), name_(std::move(name)), minus_(std::move(minus))
{
}

Scheme Scheme::ms()
{
    return Scheme(Kind::ms, 0, "ms", ms_project);
}

Scheme Scheme::jet(int m)
{
    if (m < 1)
        throw DomainError("jet order must be positive");
    return Scheme(Kind::jet, m, "jet(" + std::to_string(m) + ")",
                  [m](const LaurentSeries &x) { return jet_project(x, m); });
}

Scheme Scheme::custom(std::string name, Projector minus)
{
    return Scheme(Kind::custom, 0, std::move(name), std::move(minus));
}

LaurentSeries Scheme::minus(const LaurentSeries &x) const
{
    return minus_(x);
}

std::vector<LaurentSeries> basis_samples(const Scheme &s)
{
    std::vector<LaurentSeries> out;
    for (int j = -2; j <= s.jet_order() + 1; ++j)
        for (std::uint32_t i = 0; i <= 2; ++i)
            for (std::uint32_t k = 0; k <= 2; ++k)
                out.emplace_back(Polynomial::term(1, PowerProduct({{symbols::a(), i}, {symbols::b(), k}})), j);
    return out;
}

std::vector<SeriesPair> all_pairs(const std::vector<LaurentSeries> &xs)
{
    std::vector<SeriesPair> out;
    out.reserve(xs.size() * xs.size());
    for (const auto &x : xs)
        for (const auto &y : xs)
            out.emplace_back(x, y);
    return out;
}

std::vector<LaurentSeries> random_samples(std::uint64_t seed, int count, int min_pow, int max_pow)
{
    Rng rng(seed);
    std::vector<LaurentSeries> out;
    for (int i = 0; i < count; ++i)
        out.push_back(random_series(rng, min_pow, max_pow));
    return out;
}

LaurentSeries rb_defect(const Scheme &s, const LaurentSeries &x, const LaurentSeries &y)
{
    LaurentSeries tx = s.minus(x), ty = s.minus(y);
    return tx * ty + s.minus(x * y) - s.minus(tx * y + x * ty);
}

namespace {

nlohmann::json pair_witness(const LaurentSeries &x, const LaurentSeries &y, const std::string &what,
                            const LaurentSeries &value)
{
    return {{"x", to_json(x)},
            {"y", to_json(y)},
            {"x_text", to_string(x)},
            {"y_text", to_string(y)},
            {what, to_json(value)},
            {what + "_text", to_string(value)}};
}

template <typename F>
CheckReport scan_pairs(std::string name, const std::vector<SeriesPair> &samples, const std::string &what, F &&f)
{
    for (const auto &[x, y] : samples) {
        LaurentSeries v = f(x, y);
        if (!v.is_zero())
            return CheckReport::fail(std::move(name), pair_witness(x, y, what, v));
    }
    return CheckReport::pass(std::move(name), std::to_string(samples.size()) + " pairs");
}

} // namespace

CheckReport check_rb(const Scheme &s, const std::vector<SeriesPair> &samples)
{
    return scan_pairs("rota-baxter(" + s.name() + ")", samples, "defect",
                      [&](const auto &x, const auto &y) { return rb_defect(s, x, y); });
}

CheckReport check_plus_subalgebra(const Scheme &s, const std::vector<SeriesPair> &samples)
{
    return scan_pairs("plus-subalgebra(" + s.name() + ")", samples, "minus_part",
                      [&](const auto &x, const auto &y) { return s.minus(s.plus(x) * s.plus(y)); });
}

CheckReport check_minus_subalgebra(const Scheme &s, const std::vector<SeriesPair> &samples)
{
    return scan_pairs("minus-subalgebra(" + s.name() + ")", samples, "plus_part",
                      [&](const auto &x, const auto &y) { return s.plus(s.minus(x) * s.minus(y)); });
}

CheckReport check_projector(const Scheme &s, const std::vector<LaurentSeries> &samples)
{
    const std::string name = "projector(" + s.name() + ")";
    auto fail = [&](const LaurentSeries &x, const std::string &law, const LaurentSeries &v) {
        return CheckReport::fail(name, {{"x", to_json(x)}, {"x_text", to_string(x)}, {"law", law},
                                        {"residue", to_json(v)}, {"residue_text", to_string(v)}});
    };
    for (const auto &x : samples) {
        LaurentSeries m = s.minus(x), p = s.plus(x);
        if (auto v = s.minus(m) - m; !v.is_zero())
            return fail(x, "P-P- = P-", v);
        if (auto v = s.plus(p) - p; !v.is_zero())
            return fail(x, "P+P+ = P+", v);
        if (auto v = s.minus(p); !v.is_zero())
            return fail(x, "P-P+ = 0", v);
        if (auto v = s.plus(m); !v.is_zero())
            return fail(x, "P+P- = 0", v);
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto &x = samples[i], &y = samples[i + 1];
        if (auto v = s.minus(x + y) - s.minus(x) - s.minus(y); !v.is_zero())
            return fail(x, "linearity", v);
    }
    return CheckReport::pass(name, std::to_string(samples.size()) + " series");
}

} // namespace hopfren
