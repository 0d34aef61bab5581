#include "hopfren/characters.hpp"

#include "hopfren/errors.hpp"
#include "hopfren/json_io.hpp"
#include "hopfren/random.hpp"

namespace hopfren {

namespace {

bool is_exact_zero(const LaurentSeries &x)
{
    return x.is_zero() && x.is_exact();
}

void require_same(const AlgebraPtr &x, const AlgebraPtr &y)
{
    if (x != y)
        throw AlgebraMismatch("linear forms on different algebras (" + x->name() + " vs " + y->name() + ")");
}

nlohmann::json monomial_json(const HopfAlgebra &h, const Monomial &m)
{
    return h.monomial_ids(m);
}

} // namespace

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

LinearForm::LinearForm(AlgebraPtr algebra, Values values) : algebra_(std::move(algebra))
{
    for (auto &[m, v] : values)
        set(m, std::move(v));
}

LinearForm LinearForm::counit(AlgebraPtr algebra)
{
    LinearForm e(std::move(algebra));
    e.set(Monomial(), LaurentSeries::one());
    return e;
}

LaurentSeries LinearForm::operator()(const Monomial &m) const
{
    auto it = values_.find(m);
    if (it != values_.end())
        return it->second;
    if (algebra_->degree(m) > algebra_->truncation())
        throw DomainError("linear form evaluated above the truncation degree");
    return {};
}

LaurentSeries LinearForm::operator()(const HopfElement &x) const
{
    require_same(algebra_, x.algebra());
    LaurentSeries sum;
    for (const auto &[m, c] : x.terms()) {
        auto it = values_.find(m);
        if (it != values_.end())
            sum += it->second * c;
    }
    return sum;
}

void LinearForm::set(const Monomial &m, LaurentSeries v)
{
    if (algebra_->degree(m) > algebra_->truncation())
        throw DomainError("linear form value above the truncation degree");
    if (is_exact_zero(v))
        values_.erase(m);
    else
        values_.insert_or_assign(m, std::move(v));
}

LinearForm LinearForm::degree_part(int n) const
{
    LinearForm r(algebra_);
    for (const auto &[m, v] : values_)
        if (algebra_->degree(m) == n)
            r.values_.emplace(m, v);
    return r;
}

LinearForm &LinearForm::operator+=(const LinearForm &y)
{
    require_same(algebra_, y.algebra_);
    for (const auto &[m, v] : y.values_) {
        auto it = values_.find(m);
        if (it == values_.end())
            values_.emplace(m, v);
        else if (LaurentSeries s = it->second + v; is_exact_zero(s))
            values_.erase(it);
        else
            it->second = std::move(s);
    }
    return *this;
}

LinearForm &LinearForm::operator-=(const LinearForm &y)
{
    return *this += -y;
}

LinearForm &LinearForm::operator*=(const Rational &c)
{
    if (c == 0) {
        values_.clear();
        return *this;
    }
    for (auto &kv : values_)
        kv.second *= c;
    return *this;
}

LinearForm LinearForm::operator-() const
{
    LinearForm r = *this;
    for (auto &kv : r.values_)
        kv.second = -kv.second;
    return r;
}

// ---------------------------------------------------------------------------
// Character, InfinitesimalCharacter

Character::Character(AlgebraPtr algebra, std::vector<LaurentSeries> values)
    : generators_(std::move(values)), form_(algebra)
{
    if (generators_.size() != algebra->generators().size())
        throw DomainError("character needs one value per generator");
    std::map<Monomial, LaurentSeries> table;
    for (int d = 0; d <= algebra->truncation(); ++d) {
        for (const auto &m : algebra->basis(d)) {
            LaurentSeries v;
            if (m.is_unit()) {
                v = LaurentSeries::one();
            } else {
                std::vector<std::uint32_t> rest(m.factors().begin() + 1, m.factors().end());
                v = generators_[m.factors().front()] * table.at(Monomial(std::move(rest)));
            }
            form_.set(m, v);
            table.emplace(m, std::move(v));
        }
    }
}

Character Character::from_ids(AlgebraPtr algebra, const std::map<std::string, LaurentSeries> &values)
{
    std::vector<LaurentSeries> v(algebra->generators().size());
    for (const auto &[id, x] : values)
        v[algebra->index(id)] = x;
    return Character(std::move(algebra), std::move(v));
}

Character Character::unit(AlgebraPtr algebra)
{
    std::vector<LaurentSeries> v(algebra->generators().size());
    return Character(std::move(algebra), std::move(v));
}

const LaurentSeries &Character::operator[](const std::string &id) const
{
    return generators_.at(algebra()->index(id));
}

InfinitesimalCharacter::InfinitesimalCharacter(AlgebraPtr algebra, std::vector<LaurentSeries> values)
    : generators_(std::move(values)), form_(algebra)
{
    if (generators_.size() != algebra->generators().size())
        throw DomainError("infinitesimal character needs one value per generator");
    for (std::uint32_t i = 0; i < generators_.size(); ++i)
        form_.set(Monomial::of(i), generators_[i]);
}

InfinitesimalCharacter InfinitesimalCharacter::from_generators(const LinearForm &f)
{
    std::vector<LaurentSeries> v;
    for (std::uint32_t i = 0; i < f.algebra()->generators().size(); ++i)
        v.push_back(f(Monomial::of(i)));
    return InfinitesimalCharacter(f.algebra(), std::move(v));
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

LaurentSeries convolve_at(const LinearForm &f, const LinearForm &g, const TensorTerms &delta)
{
    LaurentSeries sum;
    for (const auto &[k, c] : delta) {
        auto fl = f.values().find(k.first);
        if (fl == f.values().end())
            continue;
        auto gr = g.values().find(k.second);
        if (gr == g.values().end())
            continue;
        sum += fl->second * gr->second * c;
    }
    return sum;
}

} // namespace

LinearForm convolve(const LinearForm &f, const LinearForm &g)
{
    require_same(f.algebra(), g.algebra());
    const auto &h = *f.algebra();
    LinearForm r(f.algebra());
    for (int d = 0; d <= h.truncation(); ++d)
        for (const auto &m : h.basis(d))
            r.set(m, convolve_at(f, g, h.coproduct(m)));
    return r;
}

Character convolve(const Character &f, const Character &g)
{
    require_same(f.algebra(), g.algebra());
    const auto &h = *f.algebra();
    std::vector<LaurentSeries> v;
    for (std::uint32_t i = 0; i < h.generators().size(); ++i)
        v.push_back(convolve_at(f.form(), g.form(), h.table(i)));
    return Character(f.algebra(), std::move(v));
}

Character conv_exp(const InfinitesimalCharacter &mu)
{
    const AlgebraPtr &h = mu.algebra();
    LinearForm power = LinearForm::counit(h);
    LinearForm sum = power;
    for (int k = 1; k <= h->truncation(); ++k) {
        power = convolve(power, mu.form()) * Rational(1, k);
        sum += power;
    }
    std::vector<LaurentSeries> v;
    for (std::uint32_t i = 0; i < h->generators().size(); ++i)
        v.push_back(sum(Monomial::of(i)));
    Character c(h, std::move(v));
    if (auto m = first_disagreement(c.form(), sum))
        throw InvariantViolation("convolution exponential is not multiplicative at " + h->monomial_string(*m));
    return c;
}

LinearForm conv_inverse(const LinearForm &f)
{
    const AlgebraPtr &h = f.algebra();
    LaurentSeries at_unit = f(Monomial());
    if (!(at_unit == LaurentSeries::one()))
        throw DomainError("convolution inverse needs f(1) = 1");
    LinearForm e = LinearForm::counit(h);
    LinearForm d = e - f;
    LinearForm power = e, sum = e;
    for (int k = 1; k <= h->truncation(); ++k) {
        power = convolve(power, d);
        sum += power;
    }
    return sum;
}

Character conv_inverse(const Character &phi)
{
    LinearForm inv = conv_inverse(phi.form());
    std::vector<LaurentSeries> v;
    for (std::uint32_t i = 0; i < phi.algebra()->generators().size(); ++i)
        v.push_back(inv(Monomial::of(i)));
    return Character(phi.algebra(), std::move(v));
}

// ---------------------------------------------------------------------------
// Predicates

std::optional<Monomial> first_disagreement(const LinearForm &f, const LinearForm &g)
{
    require_same(f.algebra(), g.algebra());
    for (const auto &m : f.algebra()->basis_up_to(f.algebra()->truncation()))
        if (!agree(f(m), g(m)))
            return m;
    return std::nullopt;
}

bool agree(const LinearForm &f, const LinearForm &g)
{
    return !first_disagreement(f, g);
}

CheckReport compare_forms(std::string name, const LinearForm &f, const LinearForm &g)
{
    if (auto m = first_disagreement(f, g)) {
        const auto &h = *f.algebra();
        return CheckReport::fail(std::move(name), {{"monomial", monomial_json(h, *m)},
                                                   {"lhs", to_string(f(*m))},
                                                   {"rhs", to_string(g(*m))}});
    }
    return CheckReport::pass(std::move(name));
}

namespace {

template <typename F>
CheckReport scan_products(std::string name, const LinearForm &f, F &&expected)
{
    const auto &h = *f.algebra();
    auto mons = h.basis_up_to(h.truncation());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const auto &x = mons[i];
        if (x.is_unit())
            continue;
        for (std::size_t j = i; j < mons.size(); ++j) {
            const auto &y = mons[j];
            if (y.is_unit() || h.degree(x) + h.degree(y) > h.truncation())
                continue;
            LaurentSeries lhs = f(x * y), rhs = expected(x, y);
            if (!agree(lhs, rhs))
                return CheckReport::fail(std::move(name), {{"x", monomial_json(h, x)},
                                                           {"y", monomial_json(h, y)},
                                                           {"f(xy)", to_string(lhs)},
                                                           {"expected", to_string(rhs)}});
        }
    }
    return CheckReport::pass(std::move(name));
}

} // namespace

CheckReport is_character(const LinearForm &f)
{
    const std::string name = "is-character(" + f.algebra()->name() + ")";
    if (!(f(Monomial()) == LaurentSeries::one()))
        return CheckReport::fail(name, {{"x", nlohmann::json::array()}, {"f(1)", to_string(f(Monomial()))}});
    return scan_products(name, f, [&](const Monomial &x, const Monomial &y) { return f(x) * f(y); });
}

CheckReport is_infinitesimal(const LinearForm &f)
{
    const std::string name = "is-infinitesimal(" + f.algebra()->name() + ")";
    if (!f(Monomial()).is_zero())
        return CheckReport::fail(name, {{"x", nlohmann::json::array()}, {"f(1)", to_string(f(Monomial()))}});
    return scan_products(name, f, [](const Monomial &, const Monomial &) { return LaurentSeries(); });
}

CheckReport is_n_regular(const LinearForm &f, const Scheme &s, int n)
{
    const auto &h = *f.algebra();
    const std::string name = "regular(" + s.name() + "," + std::to_string(n) + ")";
    for (int d = 1; d <= std::min(n, h.truncation()); ++d) {
        for (const auto &m : h.basis(d)) {
            LaurentSeries v = f(m);
            LaurentSeries divergent = s.minus(v);
            if (!divergent.is_zero())
                return CheckReport::fail(name, {{"monomial", monomial_json(h, m)},
                                                {"value", to_string(v)},
                                                {"minus_part", to_string(divergent)}});
        }
    }
    return CheckReport::pass(name);
}

Character random_character(AlgebraPtr algebra, std::uint64_t seed, RandomCharacterOptions opts)
{
    Rng rng(seed);
    std::vector<LaurentSeries> v;
    for (const auto &g : algebra->generators())
        v.push_back(random_series(rng, -g.degree * opts.pole_depth, opts.max_pow, opts.with_b));
    return Character(std::move(algebra), std::move(v));
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Character &c)
{
    const auto &h = *c.algebra();
    nlohmann::json values = nlohmann::json::array();
    for (std::uint32_t i = 0; i < h.generators().size(); ++i)
        values.push_back({{"generator", h.generators()[i].id}, {"series", to_json(c.generator_values()[i])}});
    return {{"algebra", h.name()}, {"values", std::move(values)}};
}

Character character_from_json(AlgebraPtr algebra, const nlohmann::json &j)
{
    if (j.at("algebra").get<std::string>() != algebra->name())
        throw AlgebraMismatch("character JSON is for algebra '" + j.at("algebra").get<std::string>() + "'");
    std::map<std::string, LaurentSeries> values;
    for (const auto &v : j.at("values"))
        values.emplace(v.at("generator").get<std::string>(), series_from_json(v.at("series")));
    return Character::from_ids(std::move(algebra), values);
}

nlohmann::json to_json(const LinearForm &f)
{
    const auto &h = *f.algebra();
    nlohmann::json values = nlohmann::json::array();
    for (const auto &m : h.basis_up_to(h.truncation())) {
        auto it = f.values().find(m);
        if (it != f.values().end())
            values.push_back({{"monomial", monomial_json(h, m)}, {"series", to_json(it->second)}});
    }
    return {{"algebra", h.name()}, {"values", std::move(values)}};
}

} // namespace hopfren
