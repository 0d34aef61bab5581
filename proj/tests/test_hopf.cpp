#include "support.hpp"

#include "hopfren/errors.hpp"

namespace hopfren::test {
namespace {

TensorElement tensor(const HopfElement &x, const HopfElement &y) { return TensorElement::tensor(x, y); }

TEST(Hopf, ProductAndUnit)
{
    AlgebraPtr h = ladder_algebra(3);
    HopfElement t1 = el(h, "t1");
    HopfElement sq = t1 * t1;
    ASSERT_EQ(sq.terms().size(), 1u);
    EXPECT_EQ(sq.terms().begin()->first, Monomial({0, 0}));
    EXPECT_EQ(HopfElement::unit(h) * el(h, "t2"), el(h, "t2"));
}

TEST(Hopf, ProductTruncatesAndCountsDiscards)
{
    CouplingAlgebra z = coupling_algebra(2);
    AlgebraPtr h = z.algebra;
    HopfElement g1 = el(h, "G2_1"), g2 = el(h, "G2_2");
    HopfElement sq = z.z_phi * z.z_phi;
    EXPECT_EQ(sq, HopfElement::unit(h) - Q(2) * g1 - Q(2) * g2 + g1 * g1);
    EXPECT_GT(sq.discarded(), 0u);
}

TEST(Hopf, ProductAcrossAlgebrasThrows)
{
    AlgebraPtr h1 = ladder_algebra(2), h2 = ladder_algebra(2);
    EXPECT_THROW(el(h1, "t1") * el(h2, "t1"), AlgebraMismatch);
}

TEST(Hopf, LadderCoproducts)
{
    AlgebraPtr h = ladder_algebra(4);
    HopfElement one = HopfElement::unit(h), t1 = el(h, "t1"), t2 = el(h, "t2"), t3 = el(h, "t3"), t4 = el(h, "t4");
    EXPECT_EQ(coproduct(t3), tensor(t3, one) + tensor(one, t3) + tensor(t2, t1) + tensor(t1, t2));
    EXPECT_EQ(coproduct(t2), tensor(t2, one) + tensor(one, t2) + tensor(t1, t1));
    EXPECT_EQ(coproduct(one), tensor(one, one));
    TensorElement d1 = tensor(t1, one) + tensor(one, t1);
    EXPECT_EQ(coproduct(t1 * t1), d1 * d1);
    EXPECT_EQ(coproduct(t1 * t1), tensor(t1 * t1, one) + tensor(Q(2) * t1, t1) + tensor(one, t1 * t1));
    EXPECT_TRUE(reduced_coproduct(t1).is_zero());
    EXPECT_EQ(reduced_coproduct(t2), tensor(t1, t1));
    EXPECT_EQ(reduced_coproduct(t4), tensor(t3, t1) + tensor(t2, t2) + tensor(t1, t3));
}

TEST(Hopf, Counit)
{
    AlgebraPtr h = ladder_algebra(3);
    EXPECT_EQ(counit(HopfElement::unit(h)), Q(1));
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(counit(el(h, "t" + std::to_string(n))), Q(0));
    EXPECT_EQ(counit(Q(3) * HopfElement::unit(h) + Q(2) * el(h, "t1")), Q(3));
}

TEST(Hopf, LadderOfDegreeOneIsPrimitive)
{
    AlgebraPtr h = ladder_algebra(1);
    ASSERT_EQ(h->generators().size(), 1u);
    EXPECT_TRUE(reduced_coproduct(el(h, "t1")).is_zero());
    EXPECT_TRUE(check_hopf_axioms(*h).passed());
}

TEST(Hopf, AxiomsHoldOnAllInstances)
{
    for (AlgebraPtr h : {ladder_algebra(4), ladder_algebra(6), fdb_algebra(6), coupling_algebra(5).algebra,
                         abstract_fdb_algebra(5).algebra}) {
        CheckReport r = check_hopf_axioms(*h);
        EXPECT_TRUE(r.passed()) << show(r);
    }
    EXPECT_TRUE(check_cocommutative(*ladder_algebra(6)).passed());
    EXPECT_FALSE(check_cocommutative(*fdb_algebra(3)).passed());
}

TEST(Hopf, CorruptedTableFailsCoassociativity)
{
    AlgebraPtr good = ladder_algebra(4);
    std::vector<TensorTerms> table;
    for (std::uint32_t i = 0; i < good->generators().size(); ++i)
        table.push_back(good->table(i));
    table[2].erase({Monomial::of(1), Monomial::of(0)});
    AlgebraPtr bad = HopfAlgebra::create("corrupt", good->generators(), table, 4);
    CheckReport r = check_hopf_axioms(*bad);
    EXPECT_EQ(r.outcome, Outcome::fail);
    EXPECT_FALSE(r.witness.is_null());
}

TEST(Hopf, CreateRejectsUngradedTables)
{
    AlgebraPtr good = ladder_algebra(2);
    std::vector<TensorTerms> table{good->table(0), good->table(1)};
    table[1][{Monomial::of(0), Monomial()}] = Q(1);
    EXPECT_THROW(HopfAlgebra::create("bad", good->generators(), table, 2), DomainError);
}

TEST(Fdb, LowDegreeCoproductsFromTheDoubleSum)
{
    AlgebraPtr h = fdb_algebra(3);
    HopfElement one = HopfElement::unit(h), a1 = el(h, "a1"), a2 = el(h, "a2"), a3 = el(h, "a3");
    EXPECT_EQ(coproduct(a1), tensor(a1, one) + tensor(one, a1));
    EXPECT_EQ(coproduct(a2), tensor(a2, one) + tensor(Q(2) * a1, a1) + tensor(one, a2));
    EXPECT_EQ(coproduct(a3), tensor(a3, one) + tensor(Q(2) * a2 + a1 * a1, a1) + tensor(Q(3) * a1, a2) +
                                 tensor(one, a3));
}

TEST(Fdb, FormulaForTheTotalSeries)
{
    AlgebraPtr h = fdb_algebra(6);
    std::vector<HopfElement> a{HopfElement::unit(h)};
    for (int n = 1; n <= 6; ++n)
        a.push_back(el(h, "a" + std::to_string(n)));
    EXPECT_TRUE(check_fdb_formula(a).passed());
    std::swap(a[1], a[2]);
    EXPECT_FALSE(check_fdb_formula(a).passed());
}

TEST(Coupling, ZFactorIdentities)
{
    CouplingAlgebra z = coupling_algebra(4);
    EXPECT_EQ(z.gamma[0], HopfElement::unit(z.algebra));
    EXPECT_EQ(z.z_B * z.z_phi * z.z_phi, z.z_g);
    for (int k = 1; k <= 4; ++k) {
        std::string s = std::to_string(k);
        HopfElement linear(z.algebra);
        for (const auto &[m, c] : z.gamma[k].terms())
            if (m.is_generator())
                linear += HopfElement::monomial(z.algebra, m, c);
        EXPECT_EQ(linear, el(z.algebra, "G4_" + s) + Q(2) * el(z.algebra, "G2_" + s));
    }
    EXPECT_TRUE(check_coupling_identities(z).passed());
}

TEST(Coupling, GammaSatisfiesFdbFormula)
{
    CouplingAlgebra z = coupling_algebra(5);
    EXPECT_TRUE(check_fdb_formula(z.gamma).passed());
    EXPECT_TRUE(check_fdb_series(z.vertex_series()).passed());
    EXPECT_TRUE(check_fdb_series(z.propagator_series()).passed());
}

TEST(Coupling, LowDegreeGeneratorCoproducts)
{
    CouplingAlgebra z = coupling_algebra(2);
    AlgebraPtr h = z.algebra;
    HopfElement one = HopfElement::unit(h);
    HopfElement g41 = el(h, "G4_1"), g21 = el(h, "G2_1"), g42 = el(h, "G4_2");
    // degree-2 part of sum_k z_B^k z_g (x) G4_k: (Gamma_1 + G4_1) (x) G4_1
    EXPECT_EQ(reduced_coproduct(g42), tensor(Q(2) * g41 + Q(2) * g21, g41));
    EXPECT_TRUE(reduced_coproduct(g21).is_zero());
    EXPECT_EQ(coproduct(g41), tensor(g41, one) + tensor(one, g41));
}

TEST(Morphism, FdbToCoupling)
{
    EXPECT_TRUE(fdb_morphism_check(1).passed());
    CheckReport r = fdb_morphism_check(5);
    EXPECT_TRUE(r.passed()) << show(r);
}

TEST(Morphism, CorruptedImageFails)
{
    CouplingAlgebra z = coupling_algebra(4);
    AlgebraPtr source = fdb_algebra(4);
    std::vector<HopfElement> images(z.gamma.begin() + 1, z.gamma.end());
    EXPECT_TRUE(check_hopf_morphism(*source, images).passed());
    images[1] = z.gamma[2] + z.gamma[1] * z.gamma[1];
    CheckReport r = check_hopf_morphism(*source, images);
    EXPECT_EQ(r.outcome, Outcome::fail);
    EXPECT_FALSE(r.witness.is_null());
}

TEST(AbstractFdb, SeriesSatisfyBothIdentities)
{
    for (int N = 1; N <= 5; ++N)
        EXPECT_TRUE(check_fdb_series(abstract_fdb_algebra(N).series).passed()) << N;
}

TEST(Dump, CoproductTableJson)
{
    AlgebraPtr h = ladder_algebra(4);
    nlohmann::json rows = coproduct_table_json(*h);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[2]["generator"], "t3");
    EXPECT_EQ(rows[2]["tensor_terms"].size(), 4u);
    bool found = false;
    for (const auto &t : rows[2]["tensor_terms"])
        if (t["left"] == nlohmann::json{"t2"} && t["right"] == nlohmann::json{"t1"}) {
            found = true;
            EXPECT_EQ(t["coeff"], "1");
        }
    EXPECT_TRUE(found);
    nlohmann::json fdb = coproduct_table_json(*fdb_algebra(2));
    for (const auto &t : fdb[1]["tensor_terms"]) {
        if (t["left"] == nlohmann::json{"a1"}) {
            EXPECT_EQ(t["coeff"], "2");
        }
    }
}

} // namespace
} // namespace hopfren::test
