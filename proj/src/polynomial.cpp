#include "hopfren/polynomial.hpp"

#include "hopfren/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace hopfren {

namespace {

struct SymbolTable {
    std::mutex mutex;
    std::deque<std::string> names; // deque keeps references stable
    std::unordered_map<std::string, std::uint32_t> ids;

    SymbolTable()
    {
        for (const char *reserved : {"a", "b", "g"})
            intern(reserved);
    }

    std::uint32_t intern(std::string_view name)
    {
        std::string key(name);
        auto it = ids.find(key);
        if (it != ids.end())
            return it->second;
        auto id = static_cast<std::uint32_t>(names.size());
        names.push_back(key);
        ids.emplace(std::move(key), id);
        return id;
    }
};

SymbolTable &table()
{
    static SymbolTable t;
    return t;
}

} // namespace

Symbol::Symbol(std::string_view name)
{
    if (name.empty())
        throw DomainError("empty symbol name");
    auto &t = table();
    std::lock_guard lock(t.mutex);
    id_ = t.intern(name);
}

const std::string &Symbol::name() const
{
    auto &t = table();
    std::lock_guard lock(t.mutex);
    return t.names[id_];
}

namespace symbols {
Symbol a() { return Symbol("a"); }
Symbol b() { return Symbol("b"); }
Symbol g() { return Symbol("g"); }
} // namespace symbols

PowerProduct::PowerProduct(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor &x, const Factor &y) { return x.first < y.first; });
    for (const auto &[s, e] : factors) {
        if (e == 0)
            continue;
        if (!factors_.empty() && factors_.back().first == s)
            factors_.back().second += e;
        else
            factors_.emplace_back(s, e);
    }
}

PowerProduct PowerProduct::of(Symbol s, std::uint32_t exp)
{
    return PowerProduct({{s, exp}});
}

std::uint32_t PowerProduct::exponent(Symbol s) const
{
    for (const auto &[sym, e] : factors_)
        if (sym == s)
            return e;
    return 0;
}

std::uint64_t PowerProduct::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto &f : factors_)
        d += f.second;
    return d;
}

PowerProduct operator*(const PowerProduct &x, const PowerProduct &y)
{
    PowerProduct r;
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() || j != y.factors_.end()) {
        if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first))
            r.factors_.push_back(*i++);
        else if (i == x.factors_.end() || j->first < i->first)
            r.factors_.push_back(*j++);
        else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial::Polynomial(const Rational &c)
{
    if (c != 0)
        terms_.emplace(PowerProduct{}, c);
}

Polynomial::Polynomial(Symbol s)
{
    terms_.emplace(PowerProduct::of(s), Rational(1));
}

Polynomial::Polynomial(Terms terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
}

Polynomial Polynomial::term(const Rational &c, PowerProduct pp)
{
    Polynomial p;
    p.add_term(pp, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const
{
    auto it = terms_.find(PowerProduct{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::contains(Symbol s) const
{
    return degree_in(s) > 0;
}

std::uint32_t Polynomial::degree_in(Symbol s) const
{
    std::uint32_t d = 0;
    for (const auto &[pp, c] : terms_)
        d = std::max(d, pp.exponent(s));
    return d;
}

Polynomial Polynomial::substitute(Symbol from, Symbol to) const
{
    Polynomial r;
    for (const auto &[pp, c] : terms_) {
        std::vector<PowerProduct::Factor> f = pp.factors();
        for (auto &factor : f)
            if (factor.first == from)
                factor.first = to;
        r.add_term(PowerProduct(std::move(f)), c);
    }
    return r;
}

Polynomial Polynomial::substitute(Symbol s, const Polynomial &value) const
{
    Polynomial r;
    for (const auto &[pp, c] : terms_) {
        std::vector<PowerProduct::Factor> rest;
        std::uint32_t e = 0;
        for (const auto &factor : pp.factors()) {
            if (factor.first == s)
                e = factor.second;
            else
                rest.push_back(factor);
        }
        r += term(c, PowerProduct(std::move(rest))) * pow(value, e);
    }
    return r;
}

void Polynomial::add_term(const PowerProduct &pp, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(pp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &y)
{
    for (const auto &[pp, c] : y.terms_)
        add_term(pp, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &y)
{
    for (const auto &[pp, c] : y.terms_)
        add_term(pp, -c);
    return *this;
}

Polynomial operator*(const Polynomial &x, const Polynomial &y)
{
    Polynomial r;
    for (const auto &[px, cx] : x.terms_)
        for (const auto &[py, cy] : y.terms_)
            r.add_term(px * py, cx * cy);
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &y)
{
    *this = *this * y;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto &kv : terms_)
            kv.second *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &kv : r.terms_)
        kv.second = -kv.second;
    return r;
}

Polynomial pow(const Polynomial &x, unsigned k)
{
    Polynomial r(Rational(1));
    Polynomial base = x;
    while (k > 0) {
        if (k & 1u)
            r *= base;
        k >>= 1u;
        if (k > 0)
            base *= base;
    }
    return r;
}

namespace {

std::string power_product_string(const PowerProduct &pp)
{
    std::vector<std::pair<std::string, std::uint32_t>> named;
    for (const auto &[s, e] : pp.factors())
        named.emplace_back(s.name(), e);
    std::sort(named.begin(), named.end());
    std::string out;
    for (const auto &[name, e] : named) {
        if (!out.empty())
            out += '*';
        out += name;
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

} // namespace

std::string to_string(const Polynomial &p)
{
    if (p.is_zero())
        return "0";

    // Display order: by total degree, then by the rendered monomial.
    std::vector<std::tuple<std::uint64_t, std::string, Rational>> rows;
    for (const auto &[pp, c] : p.terms())
        rows.emplace_back(pp.total_degree(), power_product_string(pp), c);
    std::sort(rows.begin(), rows.end(), [](const auto &x, const auto &y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });

    std::ostringstream os;
    bool first = true;
    for (const auto &[deg, mono, c] : rows) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << to_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << to_string(mag) << '*' << mono;
    }
    return os.str();
}

} // namespace hopfren
