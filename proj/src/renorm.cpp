#include "hopfren/renorm.hpp"

#include "hopfren/errors.hpp"
#include "hopfren/json_io.hpp"

namespace hopfren {

namespace {

// mu = P_- o phi o pi_n, checked to be an infinitesimal character.
LinearForm divergent_part(const Character &phi, int n, const Scheme &s)
{
    if (n < 1)
        throw DomainError("counterfactor order must be positive");
    CheckReport reg = is_n_regular(phi.form(), s, n - 1);
    if (!reg.passed())
        throw NotRegular("character is not " + std::to_string(n - 1) + "-regular: " + reg.witness.dump());
    LinearForm mu = phi.form().degree_part(n).map([&](const LaurentSeries &x) { return s.minus(x); });
    CheckReport inf = is_infinitesimal(mu);
    if (!inf.passed())
        throw InvariantViolation("divergent part at order " + std::to_string(n) +
                                 " is not an infinitesimal character: " + inf.witness.dump());
    return mu;
}

Character exp_minus(const LinearForm &mu)
{
    return conv_exp(InfinitesimalCharacter::from_generators(-mu));
}

// Restriction to monomials of degree <= n.
LinearForm up_to(const LinearForm &f, int n)
{
    LinearForm r(f.algebra());
    for (int d = 0; d <= n; ++d)
        r += f.degree_part(d);
    return r;
}

nlohmann::json ids(const HopfAlgebra &h, const Monomial &m)
{
    return h.monomial_ids(m);
}

} // namespace

Character counterfactor(const Character &phi, int n, const Scheme &s)
{
    return exp_minus(divergent_part(phi, n, s));
}

RenormTrace exponential_renormalize(const Character &phi, const Scheme &s)
{
    CheckReport sub = check_plus_subalgebra(s, all_pairs(basis_samples(s)));
    if (!sub.passed())
        throw DomainError("scheme " + s.name() + " fails the plus-subalgebra check: " + sub.witness.dump());

    const AlgebraPtr &h = phi.algebra();
    Character e = Character::unit(h);
    RenormTrace t{s, phi, {LinearForm(h)}, {e}, {e}, {phi}};
    for (int n = 1; n <= h->truncation(); ++n) {
        LinearForm mu = divergent_part(t.regular.back(), n, s);
        Character up = exp_minus(mu);
        t.mu.push_back(std::move(mu));
        t.regular.push_back(convolve(up, t.regular.back()));
        t.counterterm.push_back(convolve(up, t.counterterm.back()));
        t.counterfactor.push_back(std::move(up));
    }
    return t;
}

CheckReport step_subtraction_identity(const RenormTrace &t, int n)
{
    const auto &h = *t.algebra();
    const std::string name = "subtraction-identity(" + std::to_string(n) + ")";
    if (n < 1 || n > t.degree())
        throw DomainError("step " + std::to_string(n) + " outside the trace");
    const Scheme &s = t.scheme;

    for (const auto &y : h.basis(n)) {
        LaurentSeries lhs = t.regular[n](y);
        LaurentSeries rhs = s.plus(t.regular[n - 1](y));
        if (!agree(lhs, rhs))
            return CheckReport::fail(name, {{"form", "almost-regular"},
                                            {"monomial", ids(h, y)},
                                            {"lhs", to_string(lhs)},
                                            {"rhs", to_string(rhs)}});
    }
    if (n < 2)
        return CheckReport::pass(name);

    const Character &prev = t.regular[n - 2];
    LinearForm square = n == 2 ? convolve(t.mu[1], t.mu[1]) * Rational(1, 2) : LinearForm(t.algebra());
    for (const auto &y : h.basis(n)) {
        LaurentSeries expected = prev(y) + square(y);
        for (const auto &[k, c] : h.coproduct(y)) {
            if (h.degree(k.first) == n - 1 && h.degree(k.second) == 1)
                expected -= s.minus(prev(k.first)) * prev(k.second) * c;
        }
        LaurentSeries actual = t.regular[n - 1](y);
        if (!agree(actual, expected))
            return CheckReport::fail(name, {{"form", "preparation"},
                                            {"monomial", ids(h, y)},
                                            {"lhs", to_string(actual)},
                                            {"rhs", to_string(expected)}});
    }
    return CheckReport::pass(name);
}

CheckReport check_trace(const RenormTrace &t)
{
    std::vector<CheckReport> parts;
    const Scheme &s = t.scheme;
    for (int n = 1; n <= t.degree(); ++n) {
        const std::string step = "(" + std::to_string(n) + ")";
        parts.push_back(is_n_regular(t.regular[n].form(), s, n));
        parts.push_back(compare_forms("stable-below" + step, up_to(t.regular[n].form(), n - 1),
                                      up_to(t.regular[n - 1].form(), n - 1)));
        parts.push_back(compare_forms("counterterm-product" + step, t.counterterm[n].form(),
                                      convolve(t.counterfactor[n].form(), t.counterterm[n - 1].form())));
        parts.push_back(compare_forms("counterterm-action" + step, t.regular[n].form(),
                                      convolve(t.counterterm[n].form(), t.phi.form())));
        parts.push_back(step_subtraction_identity(t, n));
    }
    return combine("trace(" + s.name() + "," + std::to_string(t.degree()) + ")", parts);
}

// ---------------------------------------------------------------------------
// Bogoliubov

BogoliubovResult bogoliubov(const Character &phi, const Scheme &s)
{
    const AlgebraPtr &h = phi.algebra();
    BogoliubovResult r{LinearForm::counit(h), LinearForm::counit(h), true, {}};
    r.rota_baxter = check_rb(s, all_pairs(basis_samples(s))).passed();
    if (!r.rota_baxter)
        r.warnings.push_back("scheme " + s.name() + " is not Rota-Baxter; the counterterm need not be a character");

    for (int d = 1; d <= h->truncation(); ++d) {
        for (const auto &y : h->basis(d)) {
            LaurentSeries bar = phi(y);
            for (const auto &[k, c] : h->coproduct(y)) {
                if (k.first.is_unit() || k.second.is_unit())
                    continue;
                bar += r.counterterm(k.first) * phi(k.second) * c;
            }
            LaurentSeries minus = s.minus(bar);
            r.counterterm.set(y, -minus);
            r.renormalized.set(y, bar - minus);
        }
    }
    return r;
}

CheckReport check_bwh_reconstruction(const Character &phi, const BogoliubovResult &b)
{
    return compare_forms("bwh-reconstruction", convolve(conv_inverse(b.counterterm), b.renormalized), phi.form());
}

CheckReport compare_bphz(const RenormTrace &t, const BogoliubovResult &b)
{
    const std::string name = "bphz-equivalence(" + t.scheme.name() + "," + std::to_string(t.degree()) + ")";
    if (!b.rota_baxter)
        return CheckReport::skipped(name, "not Rota–Baxter");
    const auto &h = *t.algebra();
    for (int n = 1; n <= t.degree(); ++n) {
        for (int d = 0; d <= n; ++d) {
            for (const auto &y : h.basis(d)) {
                LaurentSeries ct = t.counterterm[n](y), rn = t.regular[n](y);
                if (!agree(ct, b.counterterm(y)))
                    return CheckReport::fail(name, {{"n", n},
                                                    {"monomial", ids(h, y)},
                                                    {"part", "counterterm"},
                                                    {"exponential", to_string(ct)},
                                                    {"bogoliubov", to_string(b.counterterm(y))}});
                if (!agree(rn, b.renormalized(y)))
                    return CheckReport::fail(name, {{"n", n},
                                                    {"monomial", ids(h, y)},
                                                    {"part", "renormalized"},
                                                    {"exponential", to_string(rn)},
                                                    {"bogoliubov", to_string(b.renormalized(y))}});
            }
        }
    }
    return CheckReport::pass(name);
}

CheckReport compare_bphz(const Character &phi, const Scheme &s)
{
    BogoliubovResult b = bogoliubov(phi, s);
    if (!b.rota_baxter)
        return CheckReport::skipped("bphz-equivalence(" + s.name() + ")", "not Rota–Baxter");
    return compare_bphz(exponential_renormalize(phi, s), b);
}

// ---------------------------------------------------------------------------
// Locality, lemtech

CheckReport locality_check(std::span<const Character> counterfactors, const std::vector<Symbol> &forbidden)
{
    std::string name = "locality(";
    for (std::size_t i = 0; i < forbidden.size(); ++i)
        name += (i ? "," : "") + forbidden[i].name();
    name += ")";
    for (std::size_t i = 0; i < counterfactors.size(); ++i) {
        const auto &c = counterfactors[i];
        const auto &h = *c.algebra();
        for (const auto &[m, v] : c.form().values()) {
            for (auto sym : forbidden) {
                if (v.contains(sym))
                    return CheckReport::fail(name, {{"index", i},
                                                    {"monomial", ids(h, m)},
                                                    {"symbol", sym.name()},
                                                    {"value", to_string(v)}});
            }
        }
    }
    return CheckReport::pass(name, std::to_string(counterfactors.size()) + " characters");
}

CheckReport locality_check(const RenormTrace &t, const std::vector<Symbol> &forbidden)
{
    std::vector<Character> all(t.counterfactor.begin() + 1, t.counterfactor.end());
    all.insert(all.end(), t.counterterm.begin() + 1, t.counterterm.end());
    CheckReport r = locality_check(std::span<const Character>(all), forbidden);
    if (!r.passed()) {
        std::size_t i = r.witness["index"].get<std::size_t>();
        std::size_t N = t.counterfactor.size() - 1;
        r.witness.erase("index");
        r.witness[i < N ? "counterfactor" : "counterterm"] = (i % N) + 1;
    }
    return r;
}

CheckReport check_lemtech(const Character &phi, const Character &xi, const Scheme &s, int n)
{
    const std::string name = "lemtech(" + s.name() + "," + std::to_string(n) + ")";
    const int N = phi.algebra()->truncation();
    if (n + 1 > N)
        throw DomainError("lemtech needs n + 1 <= N");
    if (CheckReport r = is_n_regular(phi.form(), s, n); !r.passed())
        return combine(name, {r});
    if (CheckReport r = is_n_regular(xi.form(), s, N); !r.passed())
        return combine(name, {r});
    auto minus = [&](const LaurentSeries &x) { return s.minus(x); };
    LinearForm lhs = convolve(phi, xi).form().degree_part(n + 1).map(minus);
    LinearForm rhs = phi.form().degree_part(n + 1).map(minus);
    CheckReport r = compare_forms(name, lhs, rhs);
    if (r.passed())
        r.detail = std::to_string(phi.algebra()->basis(n + 1).size()) + " monomials";
    return r;
}

Character random_regular_character(AlgebraPtr algebra, const Scheme &s, std::uint64_t seed)
{
    Character raw = random_character(algebra, seed, {.pole_depth = 1, .max_pow = s.jet_order() + 2, .with_b = true});
    std::vector<LaurentSeries> v;
    for (const auto &x : raw.generator_values())
        v.push_back(s.plus(x));
    return Character(std::move(algebra), std::move(v));
}

// ---------------------------------------------------------------------------
// Series in g

GSeries GSeries::identity(int order)
{
    std::vector<LaurentSeries> c(order + 1);
    if (order >= 1)
        c[1] = LaurentSeries::one();
    return GSeries(std::move(c));
}

GSeries GSeries::truncated(int order) const
{
    if (order >= this->order())
        return *this;
    return GSeries(std::vector<LaurentSeries>(c_.begin(), c_.begin() + order + 1));
}

GSeries operator+(const GSeries &x, const GSeries &y)
{
    int order = std::min(x.order(), y.order());
    std::vector<LaurentSeries> c;
    for (int k = 0; k <= order; ++k)
        c.push_back(x[k] + y[k]);
    return GSeries(std::move(c));
}

GSeries operator*(const GSeries &x, const GSeries &y)
{
    int order = std::min(x.order(), y.order());
    std::vector<LaurentSeries> c(order + 1);
    for (int i = 0; i <= order; ++i) {
        if (x[i].is_zero() && x[i].is_exact())
            continue;
        for (int j = 0; i + j <= order; ++j)
            c[i + j] += x[i] * y[j];
    }
    return GSeries(std::move(c));
}

bool agree(const GSeries &x, const GSeries &y)
{
    int order = std::min(x.order(), y.order());
    for (int k = 0; k <= order; ++k)
        if (!agree(x[k], y[k]))
            return false;
    return true;
}

std::string to_string(const GSeries &x)
{
    std::string out;
    for (int k = 0; k <= x.order(); ++k) {
        if (x[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "[" + to_string(x[k]) + "]";
        if (k > 0)
            out += k == 1 ? "*g" : "*g^" + std::to_string(k);
    }
    if (out.empty())
        out = "0";
    return out + " + O(g^" + std::to_string(x.order() + 1) + ")";
}

PowerSeriesG::PowerSeriesG(GSeries s) : s_(std::move(s))
{
    if (s_.order() < 1)
        throw NotComposable("series in g must be known through g^1");
    if (!s_[0].is_zero())
        throw NotComposable("series in g has a constant term: " + to_string(s_[0]));
    if (!(s_[1] - LaurentSeries::one()).is_zero())
        throw NotComposable("linear coefficient must be 1, got " + to_string(s_[1]));
}

PowerSeriesG compose(const PowerSeriesG &f, const PowerSeriesG &h)
{
    int order = std::min(f.order(), h.order());
    std::vector<GSeries> hp{h.series().truncated(order)};
    for (int k = 1; k < order; ++k)
        hp.push_back(hp.back() * hp[0]); // hp[k] = h^{k+1}
    std::vector<LaurentSeries> c(order + 1);
    for (int n = 0; n < order; ++n)
        for (int k = 0; k <= n; ++k)
            c[n + 1] += f.a(k) * hp[k][n + 1];
    return PowerSeriesG(GSeries(std::move(c)));
}

GSeries substitute(const GSeries &outer, const PowerSeriesG &inner)
{
    int order = std::min(outer.order(), inner.order());
    GSeries h = inner.series().truncated(order);
    std::vector<LaurentSeries> one(order + 1);
    one[0] = LaurentSeries::one();
    GSeries power(std::move(one));
    std::vector<LaurentSeries> zero(order + 1);
    GSeries sum(std::move(zero));
    for (int k = 0; k <= order; ++k) {
        std::vector<LaurentSeries> scaled(order + 1);
        for (int j = 0; j <= order; ++j)
            scaled[j] = outer[k] * power[j];
        sum = sum + GSeries(std::move(scaled));
        power = power * h;
    }
    return sum;
}

GSeries graded_value(const Character &phi, const std::vector<HopfElement> &parts, int shift)
{
    std::vector<LaurentSeries> c(parts.size() + shift);
    for (std::size_t k = 0; k < parts.size(); ++k)
        c[k + shift] = phi(parts[k]);
    return GSeries(std::move(c));
}

PowerSeriesG bare_coupling(const RenormTrace &t, const std::vector<HopfElement> &alpha, int l)
{
    if (l < 0 || l > t.degree())
        throw DomainError("bare coupling order " + std::to_string(l) + " outside the trace");
    return PowerSeriesG(graded_value(t.counterfactor[l], alpha, 1));
}

PowerSeriesG composed_bare_couplings(const RenormTrace &t, const std::vector<HopfElement> &alpha, int n)
{
    if (n == 0)
        return bare_coupling(t, alpha, 0);
    PowerSeriesG g = bare_coupling(t, alpha, n);
    for (int l = n - 1; l >= 1; --l)
        g = compose(bare_coupling(t, alpha, l), g);
    return g;
}

namespace {

CheckReport compare_g(std::string name, const GSeries &lhs, const GSeries &rhs)
{
    int order = std::min(lhs.order(), rhs.order());
    for (int k = 0; k <= order; ++k)
        if (!agree(lhs[k], rhs[k]))
            return CheckReport::fail(std::move(name),
                                     {{"g_power", k}, {"lhs", to_string(lhs[k])}, {"rhs", to_string(rhs[k])}});
    return CheckReport::pass(std::move(name), "through g^" + std::to_string(order));
}

} // namespace

CheckReport verify_counterterm_composition(const RenormTrace &t, const std::vector<HopfElement> &alpha, int n)
{
    GSeries lhs = graded_value(t.counterterm.at(n), alpha, 1);
    GSeries rhs = composed_bare_couplings(t, alpha, n).series();
    return compare_g("counterterm-composition(" + std::to_string(n) + ")", lhs, rhs);
}

CheckReport verify_dyson_factorization(const RenormTrace &t, const FdbSeries &s, int n)
{
    GSeries lhs = graded_value(t.regular.at(n), s.f, 0);
    PowerSeriesG g = composed_bare_couplings(t, s.alpha, n);
    GSeries rhs = graded_value(t.counterterm.at(n), s.f, 0) * substitute(graded_value(t.phi, s.f, 0), g);
    return compare_g("dyson-factorization(" + std::to_string(n) + ")", lhs, rhs);
}

CheckReport check_convolution_composition(int N, std::uint64_t seed)
{
    AlgebraPtr h = fdb_algebra(N);
    Character phi = random_character(h, seed), psi = random_character(h, seed + 1);
    Character conv = convolve(phi, psi);
    std::vector<HopfElement> a{HopfElement::unit(h)};
    for (int n = 1; n <= N; ++n)
        a.push_back(HopfElement::generator(h, "a" + std::to_string(n)));
    PowerSeriesG F(graded_value(phi, a, 1)), H(graded_value(psi, a, 1));
    PowerSeriesG HF = compose(H, F);
    GSeries lhs = graded_value(conv, a, 1);
    return compare_g("convolution-composition(" + std::to_string(N) + ")", lhs, HF.series());
}

nlohmann::json to_json(const RenormTrace &t, const std::vector<CheckReport> &checks)
{
    nlohmann::json steps = nlohmann::json::array();
    for (int n = 1; n <= t.degree(); ++n)
        steps.push_back({{"n", n},
                         {"counterfactor", to_json(t.counterfactor[n])},
                         {"counterterm", to_json(t.counterterm[n])},
                         {"regular", to_json(t.regular[n])}});
    nlohmann::json reports = nlohmann::json::array();
    for (const auto &c : checks)
        reports.push_back(to_json(c));
    return {{"algebra", t.algebra()->name()},
            {"degree", t.degree()},
            {"scheme", t.scheme.name()},
            {"character", to_json(t.phi)},
            {"steps", std::move(steps)},
            {"checks", std::move(reports)}};
}

} // namespace hopfren
