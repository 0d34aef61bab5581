#include "hopfren/rational.hpp"

#include "hopfren/errors.hpp"

namespace hopfren {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw DomainError("not a rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw DomainError("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str(10);
}

std::string numerator_string(const Rational &q)
{
    return q.get_num().get_str(10);
}

std::string denominator_string(const Rational &q)
{
    return q.get_den().get_str(10);
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

} // namespace hopfren
