#pragma once

#include "hopfren/characters.hpp"
#include "hopfren/instances.hpp"
#include "hopfren/schemes.hpp"

#include <span>
#include <string>
#include <vector>

namespace hopfren {

// Output of the exponential method. Every vector is indexed by the step
// n = 0..N; entry 0 holds the starting point (mu = 0, counterfactor and
// counterterm e, regular = phi).
struct RenormTrace {
    Scheme scheme;
    Character phi;
    std::vector<LinearForm> mu;            // P_- o phi_{n-1}^+ o pi_n
    std::vector<Character> counterfactor;  // Upsilon_n^-
    std::vector<Character> counterterm;    // Upsilon(n) = Upsilon_n^- * Upsilon(n-1)
    std::vector<Character> regular;        // phi_n^+ = Upsilon_n^- * phi_{n-1}^+

    const AlgebraPtr &algebra() const { return phi.algebra(); }
    int degree() const { return static_cast<int>(regular.size()) - 1; }
};

// exp*(-P_- o phi o pi_n). Throws NotRegular unless phi is (n-1)-regular and
// InvariantViolation if the exponent is not an infinitesimal character.
Character counterfactor(const Character &phi, int n, const Scheme &s);

// Runs the exponential method through the truncation degree. Throws
// DomainError when the scheme fails the plus-subalgebra check.
RenormTrace exponential_renormalize(const Character &phi, const Scheme &s);

// phi_n^+(y) = P_+(phi_{n-1}^+(y)) on degree-n monomials, and the expansion
//   phi_{n-1}^+(y) = phi_{n-2}^+(y) - P_-(phi_{n-2}^+(y'_{n-1})) phi_{n-2}^+(y''_1)
// for n >= 2, which at n = 2 picks up the extra term (mu_1 * mu_1)(y)/2.
CheckReport step_subtraction_identity(const RenormTrace &t, int n);

// Regularity, agreement below n, Upsilon(n) * phi = phi_n^+, and the
// subtraction identity for every step.
CheckReport check_trace(const RenormTrace &t);

struct BogoliubovResult {
    LinearForm counterterm;  // phi_-
    LinearForm renormalized; // phi_+ = phi_- * phi
    bool rota_baxter = true;
    std::vector<std::string> warnings;
};

// Degree-by-degree recursion on monomial tables:
//   bar(y) = phi(y) + sum' phi_-(y') phi(y''),  phi_- = -P_- bar,  phi_+ = P_+ bar.
BogoliubovResult bogoliubov(const Character &phi, const Scheme &s);

// phi_-^{-1} * phi_+ = phi.
CheckReport check_bwh_reconstruction(const Character &phi, const BogoliubovResult &b);

// Upsilon(n) = phi_- and phi_n^+ = phi_+ on all monomials of degree <= n,
// for every n. Skipped for schemes that are not Rota-Baxter.
CheckReport compare_bphz(const RenormTrace &t, const BogoliubovResult &b);
CheckReport compare_bphz(const Character &phi, const Scheme &s);

// Every counterfactor value is free of the forbidden symbols.
CheckReport locality_check(const RenormTrace &t, const std::vector<Symbol> &forbidden);
CheckReport locality_check(std::span<const Character> counterfactors, const std::vector<Symbol> &forbidden);

// P_- o (phi * xi)_{n+1} = P_- o phi_{n+1} for n-regular phi and regular xi.
CheckReport check_lemtech(const Character &phi, const Character &xi, const Scheme &s, int n);
// A regular character: P_+ applied to seeded random generator values.
Character random_regular_character(AlgebraPtr algebra, const Scheme &s, std::uint64_t seed);

// Truncated power series in g with coefficients in A: c[k] multiplies g^k,
// known for k <= order().
class GSeries {
public:
    GSeries() = default;
    explicit GSeries(std::vector<LaurentSeries> coeffs) : c_(std::move(coeffs)) {}

    static GSeries identity(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<LaurentSeries> &coefficients() const { return c_; }
    const LaurentSeries &operator[](int k) const { return c_.at(k); }
    GSeries truncated(int order) const;

    friend GSeries operator+(const GSeries &x, const GSeries &y);
    friend GSeries operator*(const GSeries &x, const GSeries &y);

private:
    std::vector<LaurentSeries> c_;
};

// Equality of coefficients through the common order, each within its window.
bool agree(const GSeries &x, const GSeries &y);
std::string to_string(const GSeries &x);

// g + sum_n a_n g^{n+1}. Construction throws NotComposable unless the
// constant term vanishes and the linear term is 1.
class PowerSeriesG {
public:
    explicit PowerSeriesG(GSeries s);

    const GSeries &series() const { return s_; }
    int order() const { return s_.order(); }
    // a_n, the coefficient of g^{n+1}.
    const LaurentSeries &a(int n) const { return s_[n + 1]; }

private:
    GSeries s_;
};

// f(h(g)) with coefficients sum_k a_k(f) [g^{n+1}] h^{k+1}.
PowerSeriesG compose(const PowerSeriesG &f, const PowerSeriesG &h);
// outer(inner(g)) for an arbitrary outer series.
GSeries substitute(const GSeries &outer, const PowerSeriesG &inner);

// sum_k g^{k + shift} phi(parts[k]).
GSeries graded_value(const Character &phi, const std::vector<HopfElement> &parts, int shift);

// g_(l): coefficient of g^{k+1} is Upsilon_l^-(alpha_k).
PowerSeriesG bare_coupling(const RenormTrace &t, const std::vector<HopfElement> &alpha, int l);
// g_(1) o (g_(2) o ... o g_(n)), outermost the lowest order; g for n = 0.
PowerSeriesG composed_bare_couplings(const RenormTrace &t, const std::vector<HopfElement> &alpha, int n);

// Upsilon(n)(g alpha) = g_(1) o ... o g_(n), through g^{N+1}.
CheckReport verify_counterterm_composition(const RenormTrace &t, const std::vector<HopfElement> &alpha, int n);
// phi_n^+(f)(g) = Upsilon(n)(f)(g) * phi(f)(g_(1) o ... o g_(n)(g)), through g^N.
CheckReport verify_dyson_factorization(const RenormTrace &t, const FdbSeries &s, int n);

// On fdb_algebra(N): (phi * psi)(a_n) is the coefficient of x^{n+1} in
// H(F(x)), F = x + sum phi(a_n) x^{n+1}, H likewise from psi.
CheckReport check_convolution_composition(int N, std::uint64_t seed);

nlohmann::json to_json(const RenormTrace &t, const std::vector<CheckReport> &checks);

} // namespace hopfren
