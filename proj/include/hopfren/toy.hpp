#pragma once

#include "hopfren/renorm.hpp"

namespace hopfren {

// psi(t_n) = exp(-n eps a) / (n! eps^n), known through eps^{window - n}.
LaurentSeries toy_value(int n, int eps_window);
Character toy_character(AlgebraPtr ladder, int eps_window);

// f = 1 + sum_{j=2}^{m+1} (-1)^j eps^j b^j / j! (f = 1 for MS).
LaurentSeries toy_f(const Scheme &s);
// (-f)^n / (n! eps^n).
LaurentSeries toy_counterterm(int n, const Scheme &s);
// P_+(psi(t_1)) = sum_i (-1)^{i+1} eps^i (a^{i+1} - [1 <= i <= m] b^{i+1}) / (i+1)!,
// known through eps^{eps_window - 1}.
LaurentSeries toy_eta_plus(const Scheme &s, int eps_window);
// eta_+^n / n!.
LaurentSeries toy_regular(int n, const Scheme &s, int eps_window);

// Closed forms against a trace of the toy character: psi(t_n) = psi(t_1)^n/n!,
// Upsilon_n^-(t_n) = 0 for n >= 2, Upsilon(n)(t_n) and phi_n^+(t_n).
CheckReport check_toy_closed_forms(const RenormTrace &t, int eps_window);

} // namespace hopfren
