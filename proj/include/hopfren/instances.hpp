#pragma once

#include "hopfren/hopf.hpp"

#include <string>
#include <vector>

namespace hopfren {

// Ladder trees t_1..t_N with Delta(t_n) = sum_{k=0}^{n} t_{n-k} (x) t_k, t_0 = 1.
AlgebraPtr ladder_algebra(int N);

// Faa di Bruno algebra a_1..a_N, a_0 = 1, with the coproduct evaluated
// literally from the double sum over weak compositions.
AlgebraPtr fdb_algebra(int N);

// A pair of series f = sum_k f[k], alpha = sum_k alpha[k] (index = degree,
// index 0 the unit) satisfying
//   Delta(alpha) = sum_k alpha^{k+1} (x) alpha_k,
//   Delta(f)     = sum_k f alpha^k   (x) f_k.
struct FdbSeries {
    std::vector<HopfElement> f;
    std::vector<HopfElement> alpha;
};

// Checks both coproduct identities of an FdbSeries through the truncation.
CheckReport check_fdb_series(const FdbSeries &s);

// Z-factor algebra: generators G4_k, G2_k (k = 1..N, both of degree k).
struct CouplingAlgebra {
    AlgebraPtr algebra;
    HopfElement z_g;   // 1 + sum G4_k
    HopfElement z_phi; // 1 - sum G2_k
    HopfElement z_B;   // z_g * z_phi^{-2}
    // gamma[k] is the degree-k part of z_B; gamma[0] = 1.
    std::vector<HopfElement> gamma;

    // f = z_g, alpha = z_B.
    FdbSeries vertex_series() const;
    // f = z_phi, alpha = z_B.
    FdbSeries propagator_series() const;
};

// Builds the coproduct table by graded extraction from
//   Delta(z_g)   = sum_k z_B^k z_g (x) G4_k,
//   Delta(z_phi) = z_phi (x) 1 - sum_{k>0} z_B^k z_phi (x) G2_k,
// and throws ExtractionInconsistency if the result is not coassociative.
CouplingAlgebra coupling_algebra(int N);

// z_B z_phi^2 = z_g, and the linear part of Gamma_k is G4_k + 2 G2_k.
CheckReport check_coupling_identities(const CouplingAlgebra &c);

// Generators f_k and alpha_k (k = 1..N) whose coproduct is defined so that
// the returned series form an FdbSeries.
struct AbstractFdbAlgebra {
    AlgebraPtr algebra;
    FdbSeries series;
};

AbstractFdbAlgebra abstract_fdb_algebra(int N);

// Phi: a_n -> Gamma_n from fdb_algebra(N) into coupling_algebra(N).
CheckReport fdb_morphism_check(int N);

// Coproduct table rows {generator, tensor_terms: [{left, right, coeff}]}.
nlohmann::json coproduct_table_json(const HopfAlgebra &h);

} // namespace hopfren
