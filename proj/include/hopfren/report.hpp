#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace hopfren {

enum class Outcome {
    pass,
    fail,
    skipped,
    // A failure that confirms a known negative property (e.g. a scheme that
    // is not Rota-Baxter failing the Rota-Baxter identity).
    expected_fail,
};

std::string to_string(Outcome o);

// Result of a verification routine. Failures carry a witness describing the
// first counterexample found.
struct CheckReport {
    std::string check;
    Outcome outcome = Outcome::pass;
    nlohmann::json witness; // null when there is none
    std::string detail;

    bool passed() const { return outcome == Outcome::pass; }
    // Pass, skip and expected failure are all acceptable outcomes.
    bool ok() const { return outcome != Outcome::fail; }

    static CheckReport pass(std::string check, std::string detail = {});
    static CheckReport fail(std::string check, nlohmann::json witness, std::string detail = {});
    static CheckReport skipped(std::string check, std::string reason);
};

nlohmann::json to_json(const CheckReport &r);
CheckReport report_from_json(const nlohmann::json &j);

// Folds several reports into one: fails at the first failing part.
CheckReport combine(std::string check, const std::vector<CheckReport> &parts);

} // namespace hopfren
