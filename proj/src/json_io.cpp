#include "hopfren/json_io.hpp"

#include "hopfren/errors.hpp"

namespace hopfren {

nlohmann::json to_json(const Polynomial &p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[pp, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto &[sym, e] : pp.factors())
            mono[sym.name()] = e;
        out.push_back({{"monomial", std::move(mono)}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json &j)
{
    Polynomial p;
    for (const auto &t : j) {
        std::vector<PowerProduct::Factor> factors;
        for (const auto &[name, e] : t.at("monomial").items())
            factors.emplace_back(Symbol(name), e.get<std::uint32_t>());
        Rational c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
        p += Polynomial::term(c, PowerProduct(std::move(factors)));
    }
    return p;
}

nlohmann::json to_json(const LaurentSeries &x)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[pow, c] : x.terms())
        terms.push_back({{"pow", pow}, {"poly", to_json(c)}});
    nlohmann::json out;
    out["min_pow"] = x.min_pow();
    out["trunc_order"] = x.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(x.trunc_order());
    out["terms"] = std::move(terms);
    return out;
}

LaurentSeries series_from_json(const nlohmann::json &j)
{
    LaurentSeries::Terms terms;
    for (const auto &t : j.at("terms")) {
        int pow = t.at("pow").get<int>();
        if (!terms.emplace(pow, polynomial_from_json(t.at("poly"))).second)
            throw DomainError("duplicate power " + std::to_string(pow) + " in series JSON");
    }
    const auto &trunc = j.at("trunc_order");
    int order = trunc.is_null() ? LaurentSeries::kExact : trunc.get<int>();
    return LaurentSeries(std::move(terms), j.at("min_pow").get<int>(), order);
}

} // namespace hopfren
