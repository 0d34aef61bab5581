#pragma once

#include "hopfren/laurent.hpp"
#include "hopfren/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfren {

// Pole part. When x is known through eps^-1 the result is exact, otherwise
// it keeps x's window.
LaurentSeries ms_project(const LaurentSeries &x);

// Pole part plus the eps^1..eps^m coefficients with a replaced by b (the
// coefficient functions evaluated at the reference scale). Exact; throws
// WindowUnderflow when trunc_order(x) < m.
LaurentSeries jet_project(const LaurentSeries &x, int m);

// A subtraction scheme given by its projector P_-; P_+ = id - P_-.
class Scheme {
public:
    enum class Kind { ms, jet, custom };
    using Projector = std::function<LaurentSeries(const LaurentSeries &)>;

    static Scheme ms();
    static Scheme jet(int m);
    // Arbitrary projector, for experiments and negative controls.
    static Scheme custom(std::string name, Projector minus);

    Kind kind() const { return kind_; }
    int jet_order() const { return jet_order_; }
    const std::string &name() const { return name_; }

    LaurentSeries minus(const LaurentSeries &x) const;
    LaurentSeries plus(const LaurentSeries &x) const { return x - minus(x); }

private:
    Scheme(Kind kind, int m, std::string name, Projector minus);

    Kind kind_;
    int jet_order_;
    std::string name_;
    Projector minus_;
};

using SeriesPair = std::pair<LaurentSeries, LaurentSeries>;

// eps^j a^i b^k for j in [-2, jet_order + 1] (jet_order 0 for MS) and
// i, k in {0, 1, 2}, all exact.
std::vector<LaurentSeries> basis_samples(const Scheme &s);
std::vector<SeriesPair> all_pairs(const std::vector<LaurentSeries> &xs);
// Exact Laurent polynomials with small rational coefficients in a and b.
std::vector<LaurentSeries> random_samples(std::uint64_t seed, int count, int min_pow, int max_pow);

// T(x)T(y) + T(xy) - T(T(x)y + xT(y)) with T = P_-.
LaurentSeries rb_defect(const Scheme &s, const LaurentSeries &x, const LaurentSeries &y);

CheckReport check_rb(const Scheme &s, const std::vector<SeriesPair> &samples);
// P_-(P_+(x) P_+(y)) = 0.
CheckReport check_plus_subalgebra(const Scheme &s, const std::vector<SeriesPair> &samples);
// P_+(P_-(x) P_-(y)) = 0; holds for MS, fails for jet schemes.
CheckReport check_minus_subalgebra(const Scheme &s, const std::vector<SeriesPair> &samples);
// P_-^2 = P_-, P_+^2 = P_+, P_+P_- = P_-P_+ = 0 and linearity on pairs.
CheckReport check_projector(const Scheme &s, const std::vector<LaurentSeries> &samples);

} // namespace hopfren
