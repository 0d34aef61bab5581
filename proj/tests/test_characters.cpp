#include "support.hpp"

#include "hopfren/errors.hpp"

namespace hopfren::test {
namespace {

LaurentSeries c_value() { return E(-1, Q(2)) + E(0, A()) + E(1, Q(-1, 3) * A(2)); }

TEST(Convolution, CounitIsTheUnit)
{
    for (std::uint64_t seed : {1, 2, 3}) {
        Character phi = random_character(abstract_fdb_algebra(3).algebra, seed);
        LinearForm e = LinearForm::counit(phi.algebra());
        EXPECT_TRUE(agree(convolve(e, phi.form()), phi.form()));
        EXPECT_TRUE(agree(convolve(phi.form(), e), phi.form()));
    }
}

TEST(Convolution, PrimitiveElementAddsValues)
{
    AlgebraPtr h = ladder_algebra(2);
    Character psi = toy_character(h, 5);
    Scheme s = Scheme::jet(1);
    Character up = counterfactor(psi, 1, s);
    Monomial t1 = gen(h, "t1");
    EXPECT_EQ(convolve(up, psi)(t1), psi(t1) + up(t1));
}

TEST(Convolution, LadderRuleIsCauchyProduct)
{
    AlgebraPtr h = ladder_algebra(5);
    Character x = random_character(h, 4), y = random_character(h, 5);
    LinearForm xy = convolve(x.form(), y.form());
    for (int n = 1; n <= 5; ++n) {
        LaurentSeries expected = LaurentSeries::zero();
        for (int k = 0; k <= n; ++k) {
            LaurentSeries l = n - k == 0 ? LaurentSeries::one() : x["t" + std::to_string(n - k)];
            LaurentSeries r = k == 0 ? LaurentSeries::one() : y["t" + std::to_string(k)];
            expected += l * r;
        }
        EXPECT_EQ(xy(gen(h, "t" + std::to_string(n))), expected) << n;
    }
}

TEST(Convolution, AssociativeOnRandomTriples)
{
    AlgebraPtr h = abstract_fdb_algebra(3).algebra;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        LinearForm f = random_character(h, seed).form(), g = random_character(h, seed + 10).form(),
                   k = random_character(h, seed + 20).form();
        f.set(Monomial({0, 0}), E(1, A()));
        EXPECT_TRUE(agree(convolve(convolve(f, g), k), convolve(f, convolve(g, k))));
    }
}

TEST(Convolution, CharactersFormAGroup)
{
    AlgebraPtr h = abstract_fdb_algebra(4).algebra;
    Character f = random_character(h, 8), g = random_character(h, 9);
    CheckReport r = is_character(convolve(f.form(), g.form()));
    EXPECT_TRUE(r.passed()) << show(r);
    EXPECT_TRUE(agree(convolve(f, g).form(), convolve(f.form(), g.form())));
}

TEST(Convolution, LadderCharactersCommute)
{
    AlgebraPtr h = ladder_algebra(5);
    Character f = random_character(h, 21), g = random_character(h, 22);
    EXPECT_TRUE(agree(convolve(f, g).form(), convolve(g, f).form()));
}

TEST(Convolution, HigherCounterfactorKeepsLowerDegrees)
{
    AlgebraPtr h = ladder_algebra(4);
    Scheme s = Scheme::ms();
    RenormTrace t = exponential_renormalize(toy_character(h, 7), s);
    for (int n = 1; n < 4; ++n) {
        Character next = convolve(t.counterfactor[n + 1], t.regular[n]);
        for (const Monomial &m : h->basis_up_to(n))
            EXPECT_EQ(next(m), t.regular[n](m));
    }
}

TEST(ConvExp, ZeroGivesCounit)
{
    AlgebraPtr h = ladder_algebra(3);
    InfinitesimalCharacter zero(h, std::vector<LaurentSeries>(3));
    EXPECT_TRUE(agree(conv_exp(zero).form(), LinearForm::counit(h)));
}

TEST(ConvExp, DegreeOneSupport)
{
    AlgebraPtr h = ladder_algebra(3);
    LaurentSeries c = c_value();
    InfinitesimalCharacter mu(h, {c, LaurentSeries(), LaurentSeries()});
    Character e = conv_exp(mu);
    EXPECT_EQ(e["t1"], c);
    EXPECT_EQ(e["t2"], Q(1, 2) * c * c);
    EXPECT_EQ(e["t3"], Q(1, 6) * c * c * c);
}

TEST(ConvExp, ToyCounterfactorAtOrderOne)
{
    AlgebraPtr h = ladder_algebra(3);
    Character psi = toy_character(h, 6);
    Scheme s = Scheme::jet(1);
    LinearForm mu = psi.form().degree_part(1).map([&](const LaurentSeries &x) { return s.minus(x); });
    Character up = conv_exp(InfinitesimalCharacter::from_generators(-mu));
    EXPECT_EQ(up["t1"], -(E(-1) + Q(1, 2) * E(1, B(2))));
}

TEST(ConvExp, ExpOfMinusIsInverse)
{
    AlgebraPtr h = abstract_fdb_algebra(4).algebra;
    Rng rng(13);
    std::vector<LaurentSeries> v;
    for (std::size_t i = 0; i < h->generators().size(); ++i)
        v.push_back(random_series(rng, -2, 2));
    InfinitesimalCharacter mu(h, v);
    std::vector<LaurentSeries> minus;
    for (const auto &x : v)
        minus.push_back(-x);
    Character e1 = conv_exp(mu), e2 = conv_exp(InfinitesimalCharacter(h, minus));
    EXPECT_TRUE(is_character(e1.form()).passed());
    EXPECT_TRUE(agree(convolve(e1, e2).form(), LinearForm::counit(h)));
}

TEST(ConvInverse, Examples)
{
    AlgebraPtr h = ladder_algebra(3);
    EXPECT_TRUE(agree(conv_inverse(Character::unit(h)).form(), LinearForm::counit(h)));
    LaurentSeries c = c_value();
    Character phi = Character::from_ids(h, {{"t1", c}});
    EXPECT_EQ(conv_inverse(phi)["t2"], c * c);
    for (std::uint64_t seed : {3, 4}) {
        Character r = random_character(abstract_fdb_algebra(4).algebra, seed);
        Character inv = conv_inverse(r);
        EXPECT_TRUE(agree(convolve(inv.form(), r.form()), LinearForm::counit(r.algebra())));
        EXPECT_TRUE(agree(convolve(r.form(), inv.form()), LinearForm::counit(r.algebra())));
        EXPECT_TRUE(agree(conv_inverse(r.form()), inv.form()));
    }
}

TEST(Predicates, CharacterAndInfinitesimal)
{
    AlgebraPtr h = ladder_algebra(3);
    Character psi = toy_character(h, 6);
    EXPECT_TRUE(is_character(psi.form()).passed());
    LinearForm broken = psi.form();
    broken.set(Monomial({0, 0}), E(0, A()));
    CheckReport r = is_character(broken);
    EXPECT_EQ(r.outcome, Outcome::fail);
    EXPECT_FALSE(r.witness.is_null());

    Scheme s = Scheme::jet(1);
    RenormTrace t = exponential_renormalize(psi, s);
    for (int n = 1; n < 3; ++n) {
        LinearForm mu = t.regular[n].form().degree_part(n + 1).map([&](const LaurentSeries &x) { return s.minus(x); });
        EXPECT_TRUE(is_infinitesimal(mu).passed()) << n;
    }
    EXPECT_FALSE(is_infinitesimal(psi.form()).passed());
}

TEST(Predicates, Regularity)
{
    AlgebraPtr h = ladder_algebra(3);
    Scheme ms = Scheme::ms();
    EXPECT_TRUE(is_n_regular(LinearForm::counit(h), ms, 3).passed());
    Character psi = toy_character(h, 6);
    EXPECT_FALSE(is_n_regular(psi.form(), ms, 1).passed());
    Character plus1 = convolve(counterfactor(psi, 1, ms), psi);
    EXPECT_TRUE(is_n_regular(plus1.form(), ms, 1).passed());
    Character phi = random_character(abstract_fdb_algebra(3).algebra, 2);
    Character phi1 = convolve(counterfactor(phi, 1, ms), phi);
    EXPECT_TRUE(is_n_regular(phi1.form(), ms, 1).passed());
    EXPECT_FALSE(is_n_regular(phi1.form(), ms, 2).passed());
}

TEST(Characters, JsonRoundTrip)
{
    AlgebraPtr h = abstract_fdb_algebra(3).algebra;
    Character phi = random_character(h, 17, {.pole_depth = 2, .max_pow = 3, .with_b = true});
    nlohmann::json j = to_json(phi);
    EXPECT_EQ(j["algebra"], "abstract-fdb");
    EXPECT_EQ(j["values"][0]["generator"], "f1");
    Character back = character_from_json(h, nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.generator_values(), phi.generator_values());
}

TEST(Characters, RandomCharactersAreSeeded)
{
    AlgebraPtr h = ladder_algebra(4);
    EXPECT_EQ(random_character(h, 5).generator_values(), random_character(h, 5).generator_values());
    EXPECT_NE(random_character(h, 5).generator_values(), random_character(h, 6).generator_values());
}

} // namespace
} // namespace hopfren::test
