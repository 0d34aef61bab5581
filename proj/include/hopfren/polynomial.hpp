#pragma once

#include "hopfren/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfren {

// Interned symbol name. All symbols share one process-wide table, so any two
// polynomials are always over compatible symbol sets.
class Symbol {
public:
    explicit Symbol(std::string_view name);

    const std::string &name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Symbol, Symbol) = default;
    friend auto operator<=>(Symbol, Symbol) = default;

private:
    std::uint32_t id_;
};

namespace symbols {
// a = log(p/mu), b = log(q/mu), g = coupling.
Symbol a();
Symbol b();
Symbol g();
} // namespace symbols

// A power product x1^e1 ... xk^ek with positive exponents, sorted by symbol id.
class PowerProduct {
public:
    using Factor = std::pair<Symbol, std::uint32_t>;

    PowerProduct() = default;
    explicit PowerProduct(std::vector<Factor> factors);

    static PowerProduct of(Symbol s, std::uint32_t exp = 1);

    const std::vector<Factor> &factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint32_t exponent(Symbol s) const;
    std::uint64_t total_degree() const;

    friend PowerProduct operator*(const PowerProduct &x, const PowerProduct &y);

    friend bool operator==(const PowerProduct &, const PowerProduct &) = default;
    friend auto operator<=>(const PowerProduct &, const PowerProduct &) = default;

private:
    std::vector<Factor> factors_;
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<PowerProduct, Rational>;

    Polynomial() = default;
    Polynomial(const Rational &c); // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {} // NOLINT
    explicit Polynomial(Symbol s);
    explicit Polynomial(Terms terms);

    static Polynomial term(const Rational &c, PowerProduct pp);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    bool contains(Symbol s) const;
    std::uint32_t degree_in(Symbol s) const;

    // Replaces every occurrence of `from` by `to`.
    Polynomial substitute(Symbol from, Symbol to) const;
    // Replaces every occurrence of `s` by the polynomial `value`.
    Polynomial substitute(Symbol s, const Polynomial &value) const;

    Polynomial &operator+=(const Polynomial &y);
    Polynomial &operator-=(const Polynomial &y);
    Polynomial &operator*=(const Polynomial &y);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial x, const Polynomial &y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial &y) { return x -= y; }
    friend Polynomial operator*(const Polynomial &x, const Polynomial &y);
    friend Polynomial operator*(Polynomial x, const Rational &c) { return x *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial x) { return x *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void add_term(const PowerProduct &pp, const Rational &c);

    Terms terms_;
};

Polynomial pow(const Polynomial &x, unsigned k);

// Human-readable form such as "1/2*a^2 - a*b + 3".
std::string to_string(const Polynomial &p);

} // namespace hopfren
