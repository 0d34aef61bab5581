#include "hopfren/report.hpp"

#include "hopfren/errors.hpp"

namespace hopfren {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::skipped:
        return "skipped";
    case Outcome::expected_fail:
        return "expected-fail";
    }
    return "fail";
}

CheckReport CheckReport::pass(std::string check, std::string detail)
{
    return {std::move(check), Outcome::pass, nullptr, std::move(detail)};
}

CheckReport CheckReport::fail(std::string check, nlohmann::json witness, std::string detail)
{
    return {std::move(check), Outcome::fail, std::move(witness), std::move(detail)};
}

CheckReport CheckReport::skipped(std::string check, std::string reason)
{
    return {std::move(check), Outcome::skipped, nullptr, std::move(reason)};
}

nlohmann::json to_json(const CheckReport &r)
{
    nlohmann::json j;
    j["check"] = r.check;
    j["pass"] = r.passed();
    j["status"] = to_string(r.outcome);
    j["witness"] = r.witness;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

CheckReport report_from_json(const nlohmann::json &j)
{
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    std::string status = j.at("status").get<std::string>();
    if (status == "pass")
        r.outcome = Outcome::pass;
    else if (status == "fail")
        r.outcome = Outcome::fail;
    else if (status == "skipped")
        r.outcome = Outcome::skipped;
    else if (status == "expected-fail")
        r.outcome = Outcome::expected_fail;
    else
        throw DomainError("unknown report status '" + status + "'");
    r.witness = j.at("witness");
    if (j.contains("detail"))
        r.detail = j["detail"].get<std::string>();
    return r;
}

CheckReport combine(std::string check, const std::vector<CheckReport> &parts)
{
    for (const auto &p : parts) {
        if (p.outcome == Outcome::fail) {
            nlohmann::json w = {{"part", p.check}, {"witness", p.witness}};
            return CheckReport::fail(std::move(check), std::move(w), p.detail);
        }
    }
    return CheckReport::pass(std::move(check), std::to_string(parts.size()) + " parts");
}

} // namespace hopfren
