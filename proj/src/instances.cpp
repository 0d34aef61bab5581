#include "hopfren/instances.hpp"

#include "hopfren/errors.hpp"

#include <functional>

namespace hopfren {

namespace {

std::vector<Generator> numbered(const std::string &stem, int N)
{
    std::vector<Generator> gens;
    for (int n = 1; n <= N; ++n)
        gens.push_back({stem + std::to_string(n), n});
    return gens;
}

void add_term(TensorTerms &t, const Monomial &l, const Monomial &r, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = t.try_emplace({l, r}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

// Table entry sum_k left[k] (x) right_k where right_k is a single generator
// monomial (or the unit for k = 0), scaled by sign.
void add_tensor(TensorTerms &t, const HopfElement &left, const Monomial &right, const Rational &sign)
{
    for (const auto &[m, c] : left.terms())
        add_term(t, m, right, sign * c);
}

std::vector<HopfElement> graded_parts(const HopfElement &x)
{
    std::vector<HopfElement> parts;
    for (int d = 0; d <= x.algebra()->truncation(); ++d)
        parts.push_back(x.degree_part(d));
    return parts;
}

} // namespace

AlgebraPtr ladder_algebra(int N)
{
    if (N < 1)
        throw DomainError("ladder algebra needs N >= 1");
    std::vector<TensorTerms> table(N);
    for (int n = 1; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            Monomial l = n - k == 0 ? Monomial() : Monomial::of(n - k - 1);
            Monomial r = k == 0 ? Monomial() : Monomial::of(k - 1);
            add_term(table[n - 1], l, r, 1);
        }
    }
    return HopfAlgebra::create("ladder", numbered("t", N), std::move(table), N);
}

AlgebraPtr fdb_algebra(int N)
{
    if (N < 1)
        throw DomainError("Faa di Bruno algebra needs N >= 1");
    std::vector<TensorTerms> table(N);
    for (int n = 1; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            Monomial right = k == 0 ? Monomial() : Monomial::of(k - 1);
            // weak compositions l_0 + ... + l_k = n - k
            std::vector<std::uint32_t> factors;
            std::function<void(int, int)> parts = [&](int slot, int remaining) {
                if (slot == k) {
                    if (remaining > 0)
                        factors.push_back(remaining - 1);
                    add_term(table[n - 1], Monomial(factors), right, 1);
                    if (remaining > 0)
                        factors.pop_back();
                    return;
                }
                for (int l = 0; l <= remaining; ++l) {
                    if (l > 0)
                        factors.push_back(l - 1);
                    parts(slot + 1, remaining - l);
                    if (l > 0)
                        factors.pop_back();
                }
            };
            parts(0, n - k);
        }
    }
    return HopfAlgebra::create("fdb", numbered("a", N), std::move(table), N);
}

CheckReport check_fdb_series(const FdbSeries &s)
{
    if (s.alpha.empty() || s.f.size() != s.alpha.size())
        throw DomainError("FdB series need matching nonempty component lists");
    const AlgebraPtr &h = s.alpha.front().algebra();
    const std::string name = "fdb-series(" + h->name() + "," + std::to_string(h->truncation()) + ")";

    CheckReport alpha_part = check_fdb_formula(s.alpha);
    if (!alpha_part.passed())
        return combine(name, {alpha_part});

    HopfElement f(h), alpha(h);
    for (std::size_t k = 0; k < s.f.size(); ++k) {
        f += s.f[k];
        alpha += s.alpha[k];
    }
    TensorElement lhs = coproduct(f);
    TensorElement rhs(h);
    HopfElement left = f;
    for (const auto &fk : s.f) {
        rhs += TensorElement::tensor(left, fk);
        left = left * alpha;
    }
    if (lhs != rhs) {
        TensorElement diff = lhs - rhs;
        const auto &[key, c] = *diff.terms().begin();
        return CheckReport::fail(name,
                                 {{"series", "f"},
                                  {"left", h->monomial_ids(key.first)},
                                  {"right", h->monomial_ids(key.second)},
                                  {"difference", to_string(c)}});
    }
    return CheckReport::pass(name);
}

FdbSeries CouplingAlgebra::vertex_series() const
{
    return {graded_parts(z_g), gamma};
}

FdbSeries CouplingAlgebra::propagator_series() const
{
    return {graded_parts(z_phi), gamma};
}

CouplingAlgebra coupling_algebra(int N)
{
    if (N < 1)
        throw DomainError("coupling algebra needs N >= 1");
    std::vector<Generator> gens;
    for (int k = 1; k <= N; ++k) {
        gens.push_back({"G4_" + std::to_string(k), k});
        gens.push_back({"G2_" + std::to_string(k), k});
    }
    auto g4 = [](int k) { return std::uint32_t(2 * (k - 1)); };
    auto g2 = [](int k) { return std::uint32_t(2 * (k - 1) + 1); };

    AlgebraPtr ring = HopfAlgebra::polynomial_ring("coupling", gens, N);
    HopfElement one = HopfElement::unit(ring);
    HopfElement z_g = one, z_phi = one;
    for (int k = 1; k <= N; ++k) {
        z_g += HopfElement::monomial(ring, Monomial::of(g4(k)));
        z_phi -= HopfElement::monomial(ring, Monomial::of(g2(k)));
    }
    HopfElement inv = inverse(z_phi);
    HopfElement z_B = z_g * inv * inv;

    std::vector<TensorTerms> table(2 * N);
    std::vector<HopfElement> zb_pow{one};
    for (int k = 1; k <= N; ++k)
        zb_pow.push_back(zb_pow.back() * z_B);
    for (int n = 1; n <= N; ++n) {
        TensorTerms &t4 = table[g4(n)];
        for (int k = 0; k <= n; ++k) {
            Monomial right = k == 0 ? Monomial() : Monomial::of(g4(k));
            add_tensor(t4, (zb_pow[k] * z_g).degree_part(n - k), right, 1);
        }
        TensorTerms &t2 = table[g2(n)];
        // Delta(-G2_n) = (z_phi)_n (x) 1 - sum_{k>0} (z_B^k z_phi)_{n-k} (x) G2_k
        add_tensor(t2, z_phi.degree_part(n), Monomial(), -1);
        for (int k = 1; k <= n; ++k)
            add_tensor(t2, (zb_pow[k] * z_phi).degree_part(n - k), Monomial::of(g2(k)), 1);
    }

    AlgebraPtr h;
    try {
        h = HopfAlgebra::create("coupling", gens, std::move(table), N);
    } catch (const DomainError &e) {
        throw ExtractionInconsistency(std::string("extracted coupling table is malformed: ") + e.what());
    }
    CheckReport axioms = check_hopf_axioms(*h);
    if (!axioms.passed())
        throw ExtractionInconsistency("extracted coupling table fails the Hopf axioms: " + axioms.witness.dump());

    CouplingAlgebra c{h, z_g.rehome(h), z_phi.rehome(h), z_B.rehome(h), {}};
    c.gamma = graded_parts(c.z_B);
    return c;
}

CheckReport check_coupling_identities(const CouplingAlgebra &c)
{
    const AlgebraPtr &h = c.algebra;
    const std::string name = "coupling-identities(" + std::to_string(h->truncation()) + ")";
    if (c.z_B * c.z_phi * c.z_phi != c.z_g)
        return CheckReport::fail(name, {{"identity", "z_B z_phi^2 = z_g"},
                                        {"difference", to_string(c.z_B * c.z_phi * c.z_phi - c.z_g)}});
    for (int k = 1; k <= h->truncation(); ++k) {
        HopfElement linear(h);
        for (const auto &[m, coeff] : c.gamma[k].terms())
            if (m.is_generator())
                linear += HopfElement::monomial(h, m, coeff);
        HopfElement expected = HopfElement::generator(h, "G4_" + std::to_string(k)) +
                               HopfElement::generator(h, "G2_" + std::to_string(k)) * Rational(2);
        if (linear != expected)
            return CheckReport::fail(name, {{"identity", "linear part of Gamma_k"},
                                            {"k", k},
                                            {"linear_part", to_string(linear)}});
    }
    return CheckReport::pass(name);
}

AbstractFdbAlgebra abstract_fdb_algebra(int N)
{
    if (N < 1)
        throw DomainError("abstract FdB algebra needs N >= 1");
    std::vector<Generator> gens;
    for (int k = 1; k <= N; ++k) {
        gens.push_back({"f" + std::to_string(k), k});
        gens.push_back({"alpha" + std::to_string(k), k});
    }
    auto fi = [](int k) { return std::uint32_t(2 * (k - 1)); };
    auto ai = [](int k) { return std::uint32_t(2 * (k - 1) + 1); };

    AlgebraPtr ring = HopfAlgebra::polynomial_ring("abstract-fdb", gens, N);
    HopfElement one = HopfElement::unit(ring);
    HopfElement f = one, alpha = one;
    for (int k = 1; k <= N; ++k) {
        f += HopfElement::monomial(ring, Monomial::of(fi(k)));
        alpha += HopfElement::monomial(ring, Monomial::of(ai(k)));
    }

    std::vector<TensorTerms> table(2 * N);
    std::vector<HopfElement> alpha_pow{one};
    for (int k = 1; k <= N + 1; ++k)
        alpha_pow.push_back(alpha_pow.back() * alpha);
    for (int n = 1; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            Monomial fk = k == 0 ? Monomial() : Monomial::of(fi(k));
            Monomial ak = k == 0 ? Monomial() : Monomial::of(ai(k));
            add_tensor(table[fi(n)], (f * alpha_pow[k]).degree_part(n - k), fk, 1);
            add_tensor(table[ai(n)], alpha_pow[k + 1].degree_part(n - k), ak, 1);
        }
    }
    AlgebraPtr h = HopfAlgebra::create("abstract-fdb", gens, std::move(table), N);
    return {h, {graded_parts(f.rehome(h)), graded_parts(alpha.rehome(h))}};
}

CheckReport fdb_morphism_check(int N)
{
    AlgebraPtr source = fdb_algebra(N);
    CouplingAlgebra target = coupling_algebra(N);
    std::vector<HopfElement> images(target.gamma.begin() + 1, target.gamma.end());
    CheckReport r = check_hopf_morphism(*source, images);
    r.check = "fdb-morphism(" + std::to_string(N) + ")";
    return r;
}

nlohmann::json coproduct_table_json(const HopfAlgebra &h)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint32_t i = 0; i < h.generators().size(); ++i) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[k, c] : h.table(i))
            terms.push_back(
                {{"left", h.monomial_ids(k.first)}, {"right", h.monomial_ids(k.second)}, {"coeff", to_string(c)}});
        rows.push_back({{"generator", h.generators()[i].id}, {"tensor_terms", std::move(terms)}});
    }
    return rows;
}

} // namespace hopfren
