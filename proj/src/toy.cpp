#include "hopfren/toy.hpp"

#include "hopfren/errors.hpp"

namespace hopfren {

namespace {

Polynomial power_of(Symbol s, unsigned k)
{
    return Polynomial::term(1, PowerProduct::of(s, k));
}

std::string tree(int n)
{
    return "t" + std::to_string(n);
}

} // namespace

LaurentSeries toy_value(int n, int eps_window)
{
    if (n < 1)
        throw DomainError("toy value needs n >= 1");
    LaurentSeries exponent(Polynomial(symbols::a()) * Rational(-n), 1, eps_window);
    return LaurentSeries::eps(-n) * exp_series(exponent) * (1 / factorial(n));
}

Character toy_character(AlgebraPtr ladder, int eps_window)
{
    std::vector<LaurentSeries> v;
    for (int n = 1; n <= ladder->truncation(); ++n)
        v.push_back(toy_value(n, eps_window));
    return Character(std::move(ladder), std::move(v));
}

LaurentSeries toy_f(const Scheme &s)
{
    LaurentSeries f = LaurentSeries::one();
    if (s.kind() != Scheme::Kind::jet)
        return f;
    for (int j = 2; j <= s.jet_order() + 1; ++j) {
        Rational c = (j % 2 == 0 ? 1 : -1) / factorial(j);
        f += LaurentSeries(power_of(symbols::b(), j) * c, j);
    }
    return f;
}

LaurentSeries toy_counterterm(int n, const Scheme &s)
{
    return pow(-toy_f(s), n) * LaurentSeries::eps(-n) * (1 / factorial(n));
}

LaurentSeries toy_eta_plus(const Scheme &s, int eps_window)
{
    int m = s.kind() == Scheme::Kind::jet ? s.jet_order() : 0;
    LaurentSeries::Terms terms;
    for (int i = 0; i <= eps_window - 1; ++i) {
        Rational c = ((i + 1) % 2 == 0 ? 1 : -1) / factorial(i + 1);
        Polynomial p = power_of(symbols::a(), i + 1);
        if (i >= 1 && i <= m)
            p -= power_of(symbols::b(), i + 1);
        terms.emplace(i, p * c);
    }
    return LaurentSeries(std::move(terms), 0, eps_window - 1);
}

LaurentSeries toy_regular(int n, const Scheme &s, int eps_window)
{
    return pow(toy_eta_plus(s, eps_window), n) * (1 / factorial(n));
}

CheckReport check_toy_closed_forms(const RenormTrace &t, int eps_window)
{
    const std::string name = "toy-closed-forms(" + t.scheme.name() + "," + std::to_string(t.degree()) + ")";
    auto mismatch = [&](int n, const std::string &what, const LaurentSeries &got, const LaurentSeries &want) {
        return CheckReport::fail(name, {{"n", n}, {"quantity", what}, {"computed", to_string(got)},
                                        {"closed_form", to_string(want)}});
    };
    const auto &h = *t.algebra();
    LaurentSeries psi1 = t.phi[tree(1)];
    for (int n = 1; n <= t.degree(); ++n) {
        Monomial tn = Monomial::of(h.index(tree(n)));
        LaurentSeries group_like = pow(psi1, n) * (1 / factorial(n));
        if (!agree(t.phi(tn), group_like))
            return mismatch(n, "psi(t_n) = psi(t_1)^n/n!", t.phi(tn), group_like);
        if (n >= 2 && !t.counterfactor[n](tn).is_zero())
            return mismatch(n, "Upsilon_n(t_n)", t.counterfactor[n](tn), LaurentSeries());
        LaurentSeries ct = toy_counterterm(n, t.scheme);
        if (!agree(t.counterterm[n](tn), ct))
            return mismatch(n, "Upsilon(n)(t_n)", t.counterterm[n](tn), ct);
        LaurentSeries reg = toy_regular(n, t.scheme, eps_window);
        if (!agree(t.regular[n](tn), reg))
            return mismatch(n, "psi_n^+(t_n)", t.regular[n](tn), reg);
    }
    return CheckReport::pass(name);
}

} // namespace hopfren
