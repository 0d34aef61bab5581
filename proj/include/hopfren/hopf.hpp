#pragma once

#include "hopfren/rational.hpp"
#include "hopfren/report.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hopfren {

struct Generator {
    std::string id;
    int degree = 1;
};

// Commutative monomial in the generators of one algebra: a sorted multiset
// of generator indices. The empty monomial is the unit.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> factors);

    static Monomial of(std::uint32_t generator) { return Monomial({generator}); }

    const std::vector<std::uint32_t> &factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    bool is_generator() const { return factors_.size() == 1; }

    friend Monomial operator*(const Monomial &x, const Monomial &y);

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::vector<std::uint32_t> factors_;
};

using TensorKey = std::pair<Monomial, Monomial>;
using TensorTerms = std::map<TensorKey, Rational>;

// Graded connected commutative Hopf algebra, free on its generators, with the
// coproduct given as a table on generators and extended multiplicatively.
// Everything lives in the quotient by degrees above truncation(). Immutable
// after construction.
class HopfAlgebra {
public:
    // Builds the algebra and precomputes the coproduct of every basis
    // monomial. Each table entry must be graded and of the form
    // x(x)1 + 1(x)x + (terms of bidegree (j, n-j), 0 < j < n).
    static std::shared_ptr<const HopfAlgebra> create(std::string name, std::vector<Generator> generators,
                                                     std::vector<TensorTerms> table, int truncation);

    // Same generators and truncation but no coproduct: a scratch polynomial
    // ring used while a table is being extracted.
    static std::shared_ptr<const HopfAlgebra> polynomial_ring(std::string name, std::vector<Generator> generators,
                                                              int truncation);

    const std::string &name() const { return name_; }
    int truncation() const { return truncation_; }
    const std::vector<Generator> &generators() const { return generators_; }
    std::uint32_t index(const std::string &id) const;
    std::optional<std::uint32_t> find(const std::string &id) const;

    int degree(const Monomial &m) const;
    // Monomials of degree exactly d (d <= truncation()), in a fixed order.
    const std::vector<Monomial> &basis(int d) const;
    std::vector<Monomial> basis_up_to(int d) const;

    bool has_coproduct() const { return !table_.empty(); }
    const TensorTerms &table(std::uint32_t generator) const;
    const TensorTerms &coproduct(const Monomial &m) const;

    std::string monomial_string(const Monomial &m) const;
    std::vector<std::string> monomial_ids(const Monomial &m) const;
    Monomial monomial_from_ids(const std::vector<std::string> &ids) const;

private:
    HopfAlgebra() = default;
    void build_basis();
    void build_coproducts();

    std::string name_;
    std::vector<Generator> generators_;
    std::map<std::string, std::uint32_t> ids_;
    std::vector<TensorTerms> table_;
    int truncation_ = 0;
    std::vector<std::vector<Monomial>> basis_;
    std::map<Monomial, TensorTerms> coproducts_;
};

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

// Rational combination of monomials. Products drop monomials above the
// truncation degree; the number of dropped terms is carried in discarded().
class HopfElement {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit HopfElement(AlgebraPtr algebra);
    HopfElement(AlgebraPtr algebra, Terms terms);

    static HopfElement unit(AlgebraPtr algebra);
    static HopfElement generator(AlgebraPtr algebra, const std::string &id);
    static HopfElement monomial(AlgebraPtr algebra, Monomial m, const Rational &c = 1);

    const AlgebraPtr &algebra() const { return algebra_; }
    const Terms &terms() const { return terms_; }
    std::size_t discarded() const { return discarded_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneous component of degree d.
    HopfElement degree_part(int d) const;
    // Same terms viewed in another algebra with identical generators.
    HopfElement rehome(AlgebraPtr other) const;

    HopfElement &operator+=(const HopfElement &y);
    HopfElement &operator-=(const HopfElement &y);
    HopfElement &operator*=(const Rational &c);

    friend HopfElement operator+(HopfElement x, const HopfElement &y) { return x += y; }
    friend HopfElement operator-(HopfElement x, const HopfElement &y) { return x -= y; }
    friend HopfElement operator*(const HopfElement &x, const HopfElement &y);
    friend HopfElement operator*(HopfElement x, const Rational &c) { return x *= c; }
    friend HopfElement operator*(const Rational &c, HopfElement x) { return x *= c; }
    HopfElement operator-() const;

    friend bool operator==(const HopfElement &x, const HopfElement &y)
    {
        return x.algebra_ == y.algebra_ && x.terms_ == y.terms_;
    }

private:
    void add(const Monomial &m, const Rational &c);

    AlgebraPtr algebra_;
    Terms terms_;
    std::size_t discarded_ = 0;
};

HopfElement product(const HopfElement &x, const HopfElement &y);
HopfElement pow(const HopfElement &x, unsigned k);
// Formal inverse sum_k (1 - x)^k; requires counit(x) == 1.
HopfElement inverse(const HopfElement &x);
Rational counit(const HopfElement &x);

class TensorElement {
public:
    explicit TensorElement(AlgebraPtr algebra);
    TensorElement(AlgebraPtr algebra, TensorTerms terms);

    static TensorElement tensor(const HopfElement &x, const HopfElement &y);

    const AlgebraPtr &algebra() const { return algebra_; }
    const TensorTerms &terms() const { return terms_; }
    std::size_t discarded() const { return discarded_; }
    bool is_zero() const { return terms_.empty(); }

    // Tensor flip x(x)y -> y(x)x.
    TensorElement flip() const;

    TensorElement &operator+=(const TensorElement &y);
    TensorElement &operator-=(const TensorElement &y);
    TensorElement &operator*=(const Rational &c);

    friend TensorElement operator+(TensorElement x, const TensorElement &y) { return x += y; }
    friend TensorElement operator-(TensorElement x, const TensorElement &y) { return x -= y; }
    // Componentwise product; terms of total degree above truncation dropped.
    friend TensorElement operator*(const TensorElement &x, const TensorElement &y);

    friend bool operator==(const TensorElement &x, const TensorElement &y)
    {
        return x.algebra_ == y.algebra_ && x.terms_ == y.terms_;
    }

private:
    void add(const TensorKey &k, const Rational &c);

    AlgebraPtr algebra_;
    TensorTerms terms_;
    std::size_t discarded_ = 0;
};

TensorElement coproduct(const HopfElement &x);
// Delta(x) - x(x)1 - 1(x)x.
TensorElement reduced_coproduct(const HopfElement &x);

std::string to_string(const HopfElement &x);
std::string to_string(const TensorElement &x);

// Coassociativity, both counit laws and grading, generator by generator.
CheckReport check_hopf_axioms(const HopfAlgebra &h);
CheckReport check_cocommutative(const HopfAlgebra &h);

// Checks Delta(phi(x)) = (phi (x) phi)(Delta_source(x)) on every generator x
// of `source`, where phi is the algebra map sending generator i to images[i].
CheckReport check_hopf_morphism(const HopfAlgebra &source, std::span<const HopfElement> images);

// Checks Delta(alpha) = sum_n alpha^{n+1} (x) alpha_n for alpha = sum_n alpha_n,
// alpha[0] the unit, through the truncation degree.
CheckReport check_fdb_formula(std::span<const HopfElement> alpha);

} // namespace hopfren
