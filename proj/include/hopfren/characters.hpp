#pragma once

#include "hopfren/hopf.hpp"
#include "hopfren/laurent.hpp"
#include "hopfren/schemes.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfren {

// A linear map H -> A given by its values on every basis monomial of degree
// <= N. Monomials without an entry map to the exact zero series.
class LinearForm {
public:
    using Values = std::map<Monomial, LaurentSeries>;

    explicit LinearForm(AlgebraPtr algebra);
    LinearForm(AlgebraPtr algebra, Values values);

    static LinearForm zero(AlgebraPtr algebra) { return LinearForm(std::move(algebra)); }
    // The convolution unit e = eta o counit.
    static LinearForm counit(AlgebraPtr algebra);

    const AlgebraPtr &algebra() const { return algebra_; }
    const Values &values() const { return values_; }
    LaurentSeries operator()(const Monomial &m) const;
    LaurentSeries operator()(const HopfElement &x) const;
    void set(const Monomial &m, LaurentSeries v);

    // f o pi_n: keeps only the values on degree-n monomials.
    LinearForm degree_part(int n) const;

    // Post-composition T o f with a map on A.
    template <typename F>
    LinearForm map(F &&f) const
    {
        LinearForm r(algebra_);
        for (const auto &[m, v] : values_)
            r.set(m, f(v));
        return r;
    }

    LinearForm &operator+=(const LinearForm &y);
    LinearForm &operator-=(const LinearForm &y);
    LinearForm &operator*=(const Rational &c);

    friend LinearForm operator+(LinearForm x, const LinearForm &y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm &y) { return x -= y; }
    friend LinearForm operator*(LinearForm x, const Rational &c) { return x *= c; }
    friend LinearForm operator*(const Rational &c, LinearForm x) { return x *= c; }
    LinearForm operator-() const;

private:
    AlgebraPtr algebra_;
    Values values_;
};

// An algebra map H -> A, determined by its generator values. The values on
// all basis monomials are tabulated once at construction.
class Character {
public:
    // values[i] is the value on generator i.
    Character(AlgebraPtr algebra, std::vector<LaurentSeries> values);
    // By generator id; absent generators map to zero.
    static Character from_ids(AlgebraPtr algebra, const std::map<std::string, LaurentSeries> &values);
    static Character unit(AlgebraPtr algebra);

    const AlgebraPtr &algebra() const { return form_.algebra(); }
    const std::vector<LaurentSeries> &generator_values() const { return generators_; }
    const LaurentSeries &operator[](const std::string &id) const;
    LaurentSeries operator()(const Monomial &m) const { return form_(m); }
    LaurentSeries operator()(const HopfElement &x) const { return form_(x); }
    const LinearForm &form() const { return form_; }

private:
    std::vector<LaurentSeries> generators_;
    LinearForm form_;
};

// A linear map vanishing on 1 and on all products, given on generators.
class InfinitesimalCharacter {
public:
    InfinitesimalCharacter(AlgebraPtr algebra, std::vector<LaurentSeries> values);
    // Restriction of f to the generators.
    static InfinitesimalCharacter from_generators(const LinearForm &f);

    const AlgebraPtr &algebra() const { return form_.algebra(); }
    const std::vector<LaurentSeries> &generator_values() const { return generators_; }
    const LinearForm &form() const { return form_; }

private:
    std::vector<LaurentSeries> generators_;
    LinearForm form_;
};

LinearForm convolve(const LinearForm &f, const LinearForm &g);
// Evaluated on generators only.
Character convolve(const Character &f, const Character &g);

// sum_{k <= N} mu^{*k}/k!. Throws InvariantViolation if the sum is not
// multiplicative.
Character conv_exp(const InfinitesimalCharacter &mu);
// sum_{k <= N} (e - f)^{*k}; requires f(1) = 1.
LinearForm conv_inverse(const LinearForm &f);
Character conv_inverse(const Character &phi);

// First monomial of degree <= N on which f and g disagree (within the
// common window of each value).
std::optional<Monomial> first_disagreement(const LinearForm &f, const LinearForm &g);
bool agree(const LinearForm &f, const LinearForm &g);
CheckReport compare_forms(std::string name, const LinearForm &f, const LinearForm &g);

// f(1) = 1 and f(xy) = f(x)f(y) on all monomial pairs with deg x + deg y <= N.
CheckReport is_character(const LinearForm &f);
// f(1) = 0 and f(xy) = 0 on all such pairs of non-unit monomials.
CheckReport is_infinitesimal(const LinearForm &f);
// P_+ f = f on every monomial of degree 1..n.
CheckReport is_n_regular(const LinearForm &f, const Scheme &s, int n);

// Seeded character with small rational coefficients: the value on a
// generator of degree d is an exact Laurent polynomial supported in
// [-d*pole_depth, max_pow].
struct RandomCharacterOptions {
    int pole_depth = 1;
    int max_pow = 2;
    bool with_b = false;
};
Character random_character(AlgebraPtr algebra, std::uint64_t seed, RandomCharacterOptions opts = {});

nlohmann::json to_json(const Character &c);
Character character_from_json(AlgebraPtr algebra, const nlohmann::json &j);
// {algebra, values: [{monomial: [ids], series}]} over the nonzero values.
nlohmann::json to_json(const LinearForm &f);

} // namespace hopfren
