#include "hopfren/hopf.hpp"

#include "hopfren/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace hopfren {

Monomial::Monomial(std::vector<std::uint32_t> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end());
}

Monomial operator*(const Monomial &x, const Monomial &y)
{
    Monomial r;
    r.factors_.reserve(x.factors_.size() + y.factors_.size());
    std::merge(x.factors_.begin(), x.factors_.end(), y.factors_.begin(), y.factors_.end(),
               std::back_inserter(r.factors_));
    return r;
}

// ---------------------------------------------------------------------------
// HopfAlgebra

std::shared_ptr<const HopfAlgebra> HopfAlgebra::polynomial_ring(std::string name, std::vector<Generator> generators,
                                                                int truncation)
{
    if (truncation < 1)
        throw DomainError("truncation degree must be at least 1");
    auto h = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
    h->name_ = std::move(name);
    h->generators_ = std::move(generators);
    h->truncation_ = truncation;
    for (std::uint32_t i = 0; i < h->generators_.size(); ++i) {
        const auto &g = h->generators_[i];
        if (g.degree < 1)
            throw DomainError("generator '" + g.id + "' must have positive degree");
        if (g.degree > truncation)
            throw DomainError("generator '" + g.id + "' exceeds the truncation degree");
        if (!h->ids_.emplace(g.id, i).second)
            throw DomainError("duplicate generator id '" + g.id + "'");
    }
    h->build_basis();
    return h;
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::create(std::string name, std::vector<Generator> generators,
                                                       std::vector<TensorTerms> table, int truncation)
{
    auto ring = polynomial_ring(std::move(name), std::move(generators), truncation);
    auto h = std::shared_ptr<HopfAlgebra>(new HopfAlgebra(*ring));
    if (table.size() != h->generators_.size())
        throw DomainError("coproduct table must have one entry per generator");

    for (std::uint32_t i = 0; i < table.size(); ++i) {
        const auto &gen = h->generators_[i];
        Monomial x = Monomial::of(i);
        bool left_end = false, right_end = false;
        for (const auto &[key, c] : table[i]) {
            const auto &[l, r] = key;
            if (c == 0)
                throw DomainError("zero coefficient stored in coproduct of '" + gen.id + "'");
            if (h->degree(l) + h->degree(r) != gen.degree)
                throw DomainError("coproduct of '" + gen.id + "' is not graded");
            if (l == x && r.is_unit() && c == 1)
                left_end = true;
            else if (l.is_unit() && r == x && c == 1)
                right_end = true;
            else if (l.is_unit() || r.is_unit())
                throw DomainError("coproduct of '" + gen.id + "' has a stray term against the unit");
        }
        if (!left_end || !right_end)
            throw DomainError("coproduct of '" + gen.id + "' lacks x(x)1 + 1(x)x");
    }
    h->table_ = std::move(table);
    h->build_coproducts();
    return h;
}

std::uint32_t HopfAlgebra::index(const std::string &id) const
{
    auto i = find(id);
    if (!i)
        throw DomainError("unknown generator '" + id + "' in algebra " + name_);
    return *i;
}

std::optional<std::uint32_t> HopfAlgebra::find(const std::string &id) const
{
    auto it = ids_.find(id);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

int HopfAlgebra::degree(const Monomial &m) const
{
    int d = 0;
    for (auto g : m.factors())
        d += generators_.at(g).degree;
    return d;
}

const std::vector<Monomial> &HopfAlgebra::basis(int d) const
{
    if (d < 0 || d > truncation_)
        throw DomainError("basis degree " + std::to_string(d) + " outside 0.." + std::to_string(truncation_));
    return basis_[d];
}

std::vector<Monomial> HopfAlgebra::basis_up_to(int d) const
{
    std::vector<Monomial> out;
    for (int k = 0; k <= std::min(d, truncation_); ++k)
        out.insert(out.end(), basis_[k].begin(), basis_[k].end());
    return out;
}

const TensorTerms &HopfAlgebra::table(std::uint32_t generator) const
{
    if (table_.empty())
        throw DomainError("algebra " + name_ + " has no coproduct");
    return table_.at(generator);
}

const TensorTerms &HopfAlgebra::coproduct(const Monomial &m) const
{
    auto it = coproducts_.find(m);
    if (it == coproducts_.end())
        throw DomainError("coproduct requested outside the truncated basis of " + name_);
    return it->second;
}

void HopfAlgebra::build_basis()
{
    basis_.assign(truncation_ + 1, {});
    std::vector<std::uint32_t> current;
    std::function<void(std::uint32_t, int)> extend = [&](std::uint32_t start, int deg) {
        basis_[deg].emplace_back(current);
        for (std::uint32_t g = start; g < generators_.size(); ++g) {
            int d = deg + generators_[g].degree;
            if (d > truncation_)
                continue;
            current.push_back(g);
            extend(g, d);
            current.pop_back();
        }
    };
    extend(0, 0);
    for (auto &b : basis_)
        std::sort(b.begin(), b.end());
}

void HopfAlgebra::build_coproducts()
{
    for (int d = 0; d <= truncation_; ++d) {
        for (const auto &m : basis_[d]) {
            if (m.is_unit()) {
                coproducts_[m] = {{{Monomial(), Monomial()}, Rational(1)}};
                continue;
            }
            std::vector<std::uint32_t> rest(m.factors().begin() + 1, m.factors().end());
            const TensorTerms &head = table_[m.factors().front()];
            const TensorTerms &tail = coproducts_.at(Monomial(rest));
            TensorTerms out;
            for (const auto &[k1, c1] : head) {
                for (const auto &[k2, c2] : tail) {
                    TensorKey k{k1.first * k2.first, k1.second * k2.second};
                    auto [it, inserted] = out.try_emplace(k, c1 * c2);
                    if (!inserted)
                        it->second += c1 * c2;
                }
            }
            std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
            coproducts_[m] = std::move(out);
        }
    }
}

std::string HopfAlgebra::monomial_string(const Monomial &m) const
{
    if (m.is_unit())
        return "1";
    std::string out;
    for (auto g : m.factors()) {
        if (!out.empty())
            out += '*';
        out += generators_.at(g).id;
    }
    return out;
}

std::vector<std::string> HopfAlgebra::monomial_ids(const Monomial &m) const
{
    std::vector<std::string> ids;
    for (auto g : m.factors())
        ids.push_back(generators_.at(g).id);
    return ids;
}

Monomial HopfAlgebra::monomial_from_ids(const std::vector<std::string> &ids) const
{
    std::vector<std::uint32_t> f;
    for (const auto &id : ids)
        f.push_back(index(id));
    return Monomial(std::move(f));
}

// ---------------------------------------------------------------------------
// HopfElement

namespace {

void require_same(const AlgebraPtr &x, const AlgebraPtr &y)
{
    if (x != y)
        throw AlgebraMismatch("operands belong to different algebras (" + (x ? x->name() : "?") + " vs " +
                              (y ? y->name() : "?") + ")");
}

} // namespace

HopfElement::HopfElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

HopfElement::HopfElement(AlgebraPtr algebra, Terms terms) : algebra_(std::move(algebra))
{
    for (const auto &[m, c] : terms)
        add(m, c);
}

HopfElement HopfElement::unit(AlgebraPtr algebra)
{
    return monomial(std::move(algebra), Monomial());
}

HopfElement HopfElement::generator(AlgebraPtr algebra, const std::string &id)
{
    auto i = algebra->index(id);
    return monomial(std::move(algebra), Monomial::of(i));
}

HopfElement HopfElement::monomial(AlgebraPtr algebra, Monomial m, const Rational &c)
{
    HopfElement x(std::move(algebra));
    x.add(m, c);
    return x;
}

void HopfElement::add(const Monomial &m, const Rational &c)
{
    if (c == 0)
        return;
    if (algebra_->degree(m) > algebra_->truncation()) {
        ++discarded_;
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

HopfElement HopfElement::degree_part(int d) const
{
    HopfElement r(algebra_);
    for (const auto &[m, c] : terms_)
        if (algebra_->degree(m) == d)
            r.terms_.emplace(m, c);
    return r;
}

HopfElement HopfElement::rehome(AlgebraPtr other) const
{
    if (other->generators().size() != algebra_->generators().size())
        throw AlgebraMismatch("cannot move element between algebras with different generators");
    HopfElement r(std::move(other));
    for (const auto &[m, c] : terms_)
        r.add(m, c);
    r.discarded_ += discarded_;
    return r;
}

HopfElement &HopfElement::operator+=(const HopfElement &y)
{
    require_same(algebra_, y.algebra_);
    for (const auto &[m, c] : y.terms_)
        add(m, c);
    discarded_ += y.discarded_;
    return *this;
}

HopfElement &HopfElement::operator-=(const HopfElement &y)
{
    require_same(algebra_, y.algebra_);
    for (const auto &[m, c] : y.terms_)
        add(m, -c);
    discarded_ += y.discarded_;
    return *this;
}

HopfElement &HopfElement::operator*=(const Rational &c)
{
    if (c == 0)
        terms_.clear();
    for (auto &kv : terms_)
        kv.second *= c;
    return *this;
}

HopfElement operator*(const HopfElement &x, const HopfElement &y)
{
    require_same(x.algebra_, y.algebra_);
    HopfElement r(x.algebra_);
    r.discarded_ = x.discarded_ + y.discarded_;
    for (const auto &[mx, cx] : x.terms_)
        for (const auto &[my, cy] : y.terms_)
            r.add(mx * my, cx * cy);
    return r;
}

HopfElement HopfElement::operator-() const
{
    HopfElement r = *this;
    for (auto &kv : r.terms_)
        kv.second = -kv.second;
    return r;
}

HopfElement product(const HopfElement &x, const HopfElement &y)
{
    return x * y;
}

HopfElement pow(const HopfElement &x, unsigned k)
{
    HopfElement r = HopfElement::unit(x.algebra());
    for (unsigned i = 0; i < k; ++i)
        r = r * x;
    return r;
}

HopfElement inverse(const HopfElement &x)
{
    if (counit(x) != 1)
        throw DomainError("formal inverse needs counit 1");
    HopfElement y = HopfElement::unit(x.algebra()) - x;
    HopfElement sum = HopfElement::unit(x.algebra());
    HopfElement power = sum;
    for (int k = 1; k <= x.algebra()->truncation(); ++k) {
        power = power * y;
        sum += power;
    }
    return sum;
}

Rational counit(const HopfElement &x)
{
    auto it = x.terms().find(Monomial());
    return it == x.terms().end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

TensorElement::TensorElement(AlgebraPtr algebra, TensorTerms terms) : algebra_(std::move(algebra))
{
    for (const auto &[k, c] : terms)
        add(k, c);
}

void TensorElement::add(const TensorKey &k, const Rational &c)
{
    if (c == 0)
        return;
    if (algebra_->degree(k.first) + algebra_->degree(k.second) > algebra_->truncation()) {
        ++discarded_;
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement TensorElement::tensor(const HopfElement &x, const HopfElement &y)
{
    require_same(x.algebra(), y.algebra());
    TensorElement t(x.algebra());
    t.discarded_ = x.discarded() + y.discarded();
    for (const auto &[mx, cx] : x.terms())
        for (const auto &[my, cy] : y.terms())
            t.add({mx, my}, cx * cy);
    return t;
}

TensorElement TensorElement::flip() const
{
    TensorElement t(algebra_);
    for (const auto &[k, c] : terms_)
        t.terms_.emplace(TensorKey{k.second, k.first}, c);
    t.discarded_ = discarded_;
    return t;
}

TensorElement &TensorElement::operator+=(const TensorElement &y)
{
    require_same(algebra_, y.algebra_);
    for (const auto &[k, c] : y.terms_)
        add(k, c);
    discarded_ += y.discarded_;
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &y)
{
    require_same(algebra_, y.algebra_);
    for (const auto &[k, c] : y.terms_)
        add(k, -c);
    discarded_ += y.discarded_;
    return *this;
}

TensorElement &TensorElement::operator*=(const Rational &c)
{
    if (c == 0)
        terms_.clear();
    for (auto &kv : terms_)
        kv.second *= c;
    return *this;
}

TensorElement operator*(const TensorElement &x, const TensorElement &y)
{
    require_same(x.algebra_, y.algebra_);
    TensorElement r(x.algebra_);
    r.discarded_ = x.discarded_ + y.discarded_;
    for (const auto &[kx, cx] : x.terms_)
        for (const auto &[ky, cy] : y.terms_)
            r.add({kx.first * ky.first, kx.second * ky.second}, cx * cy);
    return r;
}

TensorElement coproduct(const HopfElement &x)
{
    const auto &h = *x.algebra();
    TensorElement t(x.algebra());
    for (const auto &[m, c] : x.terms()) {
        TensorTerms scaled = h.coproduct(m);
        for (auto &kv : scaled)
            kv.second *= c;
        t += TensorElement(x.algebra(), std::move(scaled));
    }
    return t;
}

TensorElement reduced_coproduct(const HopfElement &x)
{
    HopfElement one = HopfElement::unit(x.algebra());
    return coproduct(x) - TensorElement::tensor(x, one) - TensorElement::tensor(one, x);
}

std::string to_string(const HopfElement &x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : x.terms()) {
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string ms = x.algebra()->monomial_string(m);
        if (m.is_unit())
            os << to_string(mag);
        else if (mag == 1)
            os << ms;
        else
            os << to_string(mag) << '*' << ms;
    }
    return os.str();
}

std::string to_string(const TensorElement &x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto &h = *x.algebra();
    for (const auto &[k, c] : x.terms()) {
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1)
            os << to_string(mag) << '*';
        os << h.monomial_string(k.first) << "(x)" << h.monomial_string(k.second);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

using TripleKey = std::array<Monomial, 3>;
using TripleTerms = std::map<TripleKey, Rational>;

void accumulate(TripleTerms &t, const TripleKey &k, const Rational &c)
{
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

nlohmann::json ids_json(const HopfAlgebra &h, const Monomial &m)
{
    return h.monomial_ids(m);
}

// First key where two sparse maps disagree.
template <typename Map>
std::optional<typename Map::key_type> first_difference(const Map &x, const Map &y)
{
    for (const auto &[k, c] : x) {
        auto it = y.find(k);
        if (it == y.end() || it->second != c)
            return k;
    }
    for (const auto &[k, c] : y)
        if (!x.contains(k))
            return k;
    return std::nullopt;
}

template <typename Map>
Rational lookup(const Map &m, const typename Map::key_type &k)
{
    auto it = m.find(k);
    return it == m.end() ? Rational(0) : it->second;
}

} // namespace

CheckReport check_hopf_axioms(const HopfAlgebra &h)
{
    const std::string name = "hopf-axioms(" + h.name() + "," + std::to_string(h.truncation()) + ")";
    for (std::uint32_t i = 0; i < h.generators().size(); ++i) {
        const auto &gen = h.generators()[i];
        const TensorTerms &delta = h.table(i);
        Monomial x = Monomial::of(i);

        for (const auto &[k, c] : delta) {
            if (h.degree(k.first) + h.degree(k.second) != gen.degree)
                return CheckReport::fail(name,
                                         {{"generator", gen.id},
                                          {"law", "grading"},
                                          {"left", ids_json(h, k.first)},
                                          {"right", ids_json(h, k.second)}});
        }

        // (eps (x) id) Delta = id = (id (x) eps) Delta
        std::map<Monomial, Rational> left_counit, right_counit;
        for (const auto &[k, c] : delta) {
            if (k.first.is_unit())
                left_counit[k.second] += c;
            if (k.second.is_unit())
                right_counit[k.first] += c;
        }
        std::erase_if(left_counit, [](const auto &kv) { return kv.second == 0; });
        std::erase_if(right_counit, [](const auto &kv) { return kv.second == 0; });
        const std::map<Monomial, Rational> identity{{x, Rational(1)}};
        if (left_counit != identity || right_counit != identity)
            return CheckReport::fail(name, {{"generator", gen.id}, {"law", "counit"}});

        // (Delta (x) id) Delta = (id (x) Delta) Delta
        TripleTerms lhs, rhs;
        for (const auto &[k, c] : delta) {
            for (const auto &[k1, c1] : h.coproduct(k.first))
                accumulate(lhs, {k1.first, k1.second, k.second}, c * c1);
            for (const auto &[k2, c2] : h.coproduct(k.second))
                accumulate(rhs, {k.first, k2.first, k2.second}, c * c2);
        }
        if (auto diff = first_difference(lhs, rhs)) {
            const auto &t = *diff;
            return CheckReport::fail(name,
                                     {{"generator", gen.id},
                                      {"law", "coassociativity"},
                                      {"term", {ids_json(h, t[0]), ids_json(h, t[1]), ids_json(h, t[2])}},
                                      {"lhs", to_string(lookup(lhs, t))},
                                      {"rhs", to_string(lookup(rhs, t))}});
        }
    }
    return CheckReport::pass(name, std::to_string(h.generators().size()) + " generators");
}

CheckReport check_cocommutative(const HopfAlgebra &h)
{
    const std::string name = "cocommutativity(" + h.name() + "," + std::to_string(h.truncation()) + ")";
    for (std::uint32_t i = 0; i < h.generators().size(); ++i) {
        const TensorTerms &delta = h.table(i);
        for (const auto &[k, c] : delta) {
            auto it = delta.find({k.second, k.first});
            if (it == delta.end() || it->second != c)
                return CheckReport::fail(name,
                                         {{"generator", h.generators()[i].id},
                                          {"left", ids_json(h, k.first)},
                                          {"right", ids_json(h, k.second)}});
        }
    }
    return CheckReport::pass(name);
}

CheckReport check_hopf_morphism(const HopfAlgebra &source, std::span<const HopfElement> images)
{
    const std::string name = "hopf-morphism(" + source.name() + ")";
    if (images.size() != source.generators().size())
        throw DomainError("one image per source generator required");
    if (images.empty())
        return CheckReport::pass(name);
    const AlgebraPtr &target = images.front().algebra();

    auto image_of = [&](const Monomial &m) {
        HopfElement r = HopfElement::unit(target);
        for (auto g : m.factors())
            r = r * images[g];
        return r;
    };

    for (std::uint32_t i = 0; i < images.size(); ++i) {
        TensorElement lhs = coproduct(images[i]);
        TensorElement rhs(target);
        for (const auto &[k, c] : source.table(i)) {
            TensorElement t = TensorElement::tensor(image_of(k.first), image_of(k.second));
            t *= c;
            rhs += t;
        }
        if (auto diff = first_difference(lhs.terms(), rhs.terms())) {
            return CheckReport::fail(name,
                                     {{"generator", source.generators()[i].id},
                                      {"left", ids_json(*target, diff->first)},
                                      {"right", ids_json(*target, diff->second)},
                                      {"lhs", to_string(lookup(lhs.terms(), *diff))},
                                      {"rhs", to_string(lookup(rhs.terms(), *diff))}});
        }
    }
    return CheckReport::pass(name, std::to_string(images.size()) + " generators");
}

CheckReport check_fdb_formula(std::span<const HopfElement> alpha)
{
    if (alpha.empty())
        throw DomainError("empty series");
    const AlgebraPtr &h = alpha.front().algebra();
    const std::string name = "fdb-formula(" + h->name() + "," + std::to_string(h->truncation()) + ")";
    if (alpha.front() != HopfElement::unit(h))
        return CheckReport::fail(name, {{"reason", "degree-0 part is not the unit"}});

    HopfElement total(h);
    for (const auto &a : alpha)
        total += a;

    TensorElement lhs = coproduct(total);
    TensorElement rhs(h);
    HopfElement power = total;
    for (std::size_t n = 0; n < alpha.size(); ++n) {
        rhs += TensorElement::tensor(power, alpha[n]);
        power = power * total;
    }
    if (auto diff = first_difference(lhs.terms(), rhs.terms())) {
        return CheckReport::fail(name,
                                 {{"left", ids_json(*h, diff->first)},
                                  {"right", ids_json(*h, diff->second)},
                                  {"lhs", to_string(lookup(lhs.terms(), *diff))},
                                  {"rhs", to_string(lookup(rhs.terms(), *diff))}});
    }
    return CheckReport::pass(name);
}

} // namespace hopfren
