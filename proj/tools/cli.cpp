#include "cli.hpp"

#include "hopfren/errors.hpp"
#include "hopfren/json_io.hpp"
#include "hopfren/renorm.hpp"
#include "hopfren/toy.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hopfren::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string algebra = "ladder";
    std::optional<int> degree;
    std::string scheme = "ms";
    std::optional<int> jet_order;
    std::optional<int> eps_window;
    std::string output = "table";
    std::uint64_t seed = 1;
    bool rb = false;
    std::string out_path;

    int N = 0;
    int m = 0;
    int W = 0;
};

struct Result {
    nlohmann::json json;
    std::string table;
    int code = 0;
};

Scheme make_scheme(const RunConfig &c)
{
    return c.scheme == "jet" ? Scheme::jet(c.m) : Scheme::ms();
}

void finalize(RunConfig &c, int default_degree)
{
    c.N = c.degree.value_or(default_degree);
    if (c.N < 1)
        throw UsageError("--degree must be at least 1");
    if (c.scheme == "jet") {
        c.m = c.jet_order.value_or(1);
        if (c.m < 1)
            throw UsageError("--jet-order must be at least 1");
    }
    c.W = c.eps_window.value_or(c.N + c.m + 2);
    if (c.W < c.N + c.m + 1)
        throw UsageError(fmt::format("--eps-window must be at least degree + jet order + 1 = {}", c.N + c.m + 1));
    if (const char *env = std::getenv("HOPF_RENORM_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            c.seed = std::stoull(env, &used);
            if (env[used] != '\0')
                throw std::invalid_argument(env);
        } catch (const std::exception &) {
            throw UsageError(fmt::format("HOPF_RENORM_SEED is not an unsigned integer: '{}'", env));
        }
    }
}

nlohmann::json config_json(const RunConfig &c)
{
    nlohmann::json j = {{"algebra", c.algebra}, {"degree", c.N}, {"scheme", c.scheme}, {"seed", c.seed}};
    if (c.scheme == "jet")
        j["jet_order"] = c.m;
    j["eps_window"] = c.W;
    return j;
}

// ---------------------------------------------------------------------------
// Report plumbing

CheckReport expect_failure(CheckReport r, const std::string &why)
{
    if (r.outcome == Outcome::fail) {
        r.outcome = Outcome::expected_fail;
        r.detail = why;
    } else {
        r = CheckReport::fail(r.check, nullptr, "expected a failure (" + why + ") but the check passed");
    }
    return r;
}

CheckReport labelled(CheckReport r, const std::string &label)
{
    r.check += " [" + label + "]";
    return r;
}

std::string overall(const std::vector<CheckReport> &checks)
{
    bool expected = false;
    for (const auto &c : checks) {
        if (c.outcome == Outcome::fail)
            return "fail";
        expected = expected || c.outcome == Outcome::expected_fail;
    }
    return expected ? "expected-fail: confirms non-RB" : "pass";
}

int exit_code(const std::vector<CheckReport> &checks)
{
    return overall(checks) == "fail" ? 1 : 0;
}

nlohmann::json checks_json(const std::vector<CheckReport> &checks)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &c : checks)
        out.push_back(to_json(c));
    return out;
}

std::string checks_table(const std::vector<CheckReport> &checks)
{
    std::string out;
    std::size_t width = 0;
    for (const auto &c : checks)
        width = std::max(width, c.check.size());
    for (const auto &c : checks) {
        out += fmt::format("  {:<14}{:<{}}  {}\n", to_string(c.outcome), c.check, width, c.detail);
        if (!c.witness.is_null())
            out += fmt::format("    witness: {}\n", c.witness.dump());
    }
    out += fmt::format("overall: {}\n", overall(checks));
    return out;
}

// ---------------------------------------------------------------------------
// Check suites

void scheme_suite(const Scheme &s, std::uint64_t seed, std::vector<CheckReport> &out)
{
    auto basis = basis_samples(s);
    auto pairs = all_pairs(basis);
    auto random = random_samples(seed, 24, -3, s.jet_order() + 2);
    out.push_back(labelled(check_projector(s, basis), "basis"));
    out.push_back(labelled(check_projector(s, random), "random"));
    out.push_back(labelled(check_plus_subalgebra(s, pairs), "basis"));
    out.push_back(labelled(check_plus_subalgebra(s, all_pairs(random)), "random"));
    CheckReport rb = check_rb(s, pairs);
    CheckReport minus = check_minus_subalgebra(s, pairs);
    if (s.kind() == Scheme::Kind::jet) {
        rb = expect_failure(rb, "confirms non-RB");
        minus = expect_failure(minus, "image of P_- is not a subalgebra");
    }
    out.push_back(rb);
    out.push_back(minus);
}

std::vector<CheckReport> ladder_suite(const RunConfig &c)
{
    Scheme s = make_scheme(c);
    AlgebraPtr h = ladder_algebra(c.N);
    std::vector<CheckReport> out{check_hopf_axioms(*h), check_cocommutative(*h)};
    scheme_suite(s, c.seed, out);

    Character psi = toy_character(h, c.W);
    RenormTrace t = exponential_renormalize(psi, s);
    out.push_back(labelled(check_trace(t), "toy"));
    out.push_back(check_toy_closed_forms(t, c.W));
    out.push_back(labelled(locality_check(t, {symbols::a()}), "toy"));
    out.push_back(labelled(compare_bphz(t, bogoliubov(psi, s)), "toy"));

    Character phi = random_character(h, c.seed);
    RenormTrace rt = exponential_renormalize(phi, s);
    BogoliubovResult b = bogoliubov(phi, s);
    out.push_back(labelled(check_trace(rt), "random"));
    out.push_back(labelled(compare_bphz(rt, b), "random"));
    if (b.rota_baxter)
        out.push_back(check_bwh_reconstruction(phi, b));
    if (c.N >= 2)
        out.push_back(check_lemtech(rt.regular[c.N - 1], random_regular_character(h, s, c.seed + 1), s, c.N - 1));
    return out;
}

std::vector<CheckReport> fdb_suite(const RunConfig &c)
{
    AlgebraPtr h = fdb_algebra(c.N);
    std::vector<HopfElement> a{HopfElement::unit(h)};
    for (int n = 1; n <= c.N; ++n)
        a.push_back(HopfElement::generator(h, "a" + std::to_string(n)));
    return {check_hopf_axioms(*h), check_fdb_formula(a), check_convolution_composition(c.N, c.seed)};
}

std::vector<CheckReport> coupling_suite(const RunConfig &c)
{
    CouplingAlgebra z = coupling_algebra(c.N);
    return {check_hopf_axioms(*z.algebra),
            check_fdb_formula(z.gamma),
            labelled(check_fdb_series(z.vertex_series()), "vertex"),
            labelled(check_fdb_series(z.propagator_series()), "propagator"),
            check_coupling_identities(z),
            fdb_morphism_check(c.N)};
}

std::vector<CheckReport> abstract_suite(const RunConfig &c)
{
    Scheme s = make_scheme(c);
    AbstractFdbAlgebra A = abstract_fdb_algebra(c.N);
    std::vector<CheckReport> out{check_hopf_axioms(*A.algebra), check_fdb_series(A.series)};
    Character phi = random_character(A.algebra, c.seed);
    RenormTrace t = exponential_renormalize(phi, s);
    out.push_back(check_trace(t));
    out.push_back(compare_bphz(t, bogoliubov(phi, s)));
    std::vector<CheckReport> comp, dyson;
    for (int n = 0; n <= c.N; ++n) {
        comp.push_back(verify_counterterm_composition(t, A.series.alpha, n));
        dyson.push_back(verify_dyson_factorization(t, A.series, n));
    }
    out.push_back(combine("counterterm-composition(0.." + std::to_string(c.N) + ")", comp));
    out.push_back(combine("dyson-factorization(0.." + std::to_string(c.N) + ")", dyson));
    if (c.N >= 2)
        out.push_back(check_lemtech(t.regular[c.N - 1], random_regular_character(A.algebra, s, c.seed + 1), s,
                                    c.N - 1));
    return out;
}

Result cmd_check(const RunConfig &c)
{
    std::vector<CheckReport> checks;
    std::string suite;
    if (c.rb) {
        suite = "scheme " + make_scheme(c).name();
        scheme_suite(make_scheme(c), c.seed, checks);
    } else {
        suite = c.algebra;
        if (c.algebra == "ladder")
            checks = ladder_suite(c);
        else if (c.algebra == "fdb")
            checks = fdb_suite(c);
        else if (c.algebra == "coupling")
            checks = coupling_suite(c);
        else
            checks = abstract_suite(c);
    }
    Result r;
    r.json = {{"command", "check"},
              {"suite", suite},
              {"config", config_json(c)},
              {"checks", checks_json(checks)},
              {"status", overall(checks)}};
    r.table = fmt::format("check suite: {} (N = {}, scheme {}, seed {})\n", suite, c.N, make_scheme(c).name(),
                          c.seed) +
              checks_table(checks);
    r.code = exit_code(checks);
    return r;
}

// ---------------------------------------------------------------------------
// toy

Result cmd_toy(const RunConfig &c)
{
    if (c.algebra != "ladder")
        throw UsageError("toy runs on the ladder algebra only");
    Scheme s = make_scheme(c);
    AlgebraPtr h = ladder_algebra(c.N);
    Character psi = toy_character(h, c.W);
    RenormTrace t = exponential_renormalize(psi, s);
    std::vector<CheckReport> checks{check_toy_closed_forms(t, c.W), check_trace(t), locality_check(t, {symbols::a()}),
                                    compare_bphz(t, bogoliubov(psi, s))};

    nlohmann::json rows = nlohmann::json::array();
    std::string table =
        fmt::format("toy model on ladder trees: N = {}, scheme {}, eps window {}\n", c.N, s.name(), c.W);
    for (int n = 1; n <= c.N; ++n) {
        Monomial tn = Monomial::of(h->index("t" + std::to_string(n)));
        std::vector<std::pair<std::string, LaurentSeries>> values{
            {fmt::format("psi(t_{})", n), psi(tn)},
            {fmt::format("Upsilon_{}(t_{})", n, n), t.counterfactor[n](tn)},
            {fmt::format("Upsilon({})(t_{})", n, n), t.counterterm[n](tn)},
            {fmt::format("psi_{}^+(t_{})", n, n), t.regular[n](tn)},
        };
        table += fmt::format("n = {}\n", n);
        for (const auto &[label, v] : values)
            table += fmt::format("  {:<18} = {}\n", label, to_string(v));
        rows.push_back({{"n", n},
                        {"psi", to_json(values[0].second)},
                        {"counterfactor", to_json(values[1].second)},
                        {"counterterm", to_json(values[2].second)},
                        {"regular", to_json(values[3].second)}});
    }
    table += "checks\n" + checks_table(checks);

    Result r;
    r.json = {{"command", "toy"},
              {"config", config_json(c)},
              {"rows", std::move(rows)},
              {"checks", checks_json(checks)},
              {"status", overall(checks)}};
    r.table = std::move(table);
    r.code = exit_code(checks);
    return r;
}

// ---------------------------------------------------------------------------
// dumps

AlgebraPtr build_algebra(const RunConfig &c)
{
    if (c.algebra == "ladder")
        return ladder_algebra(c.N);
    if (c.algebra == "fdb")
        return fdb_algebra(c.N);
    if (c.algebra == "coupling")
        return coupling_algebra(c.N).algebra;
    return abstract_fdb_algebra(c.N).algebra;
}

Result cmd_dump_hopf(const RunConfig &c)
{
    AlgebraPtr h = build_algebra(c);
    nlohmann::json gens = nlohmann::json::array();
    std::string table = fmt::format("{} algebra, truncation N = {}\n", h->name(), c.N);
    for (std::uint32_t i = 0; i < h->generators().size(); ++i) {
        const auto &g = h->generators()[i];
        gens.push_back({{"id", g.id}, {"degree", g.degree}});
        table += fmt::format("Delta({}) = {}\n", g.id, to_string(TensorElement(h, h->table(i))));
    }
    Result r;
    r.json = {{"algebra", h->name()},
              {"degree", c.N},
              {"generators", std::move(gens)},
              {"coproduct", coproduct_table_json(*h)}};
    r.table = std::move(table);
    return r;
}

Result cmd_dump_trace(const RunConfig &c)
{
    Scheme s = make_scheme(c);
    AlgebraPtr h = build_algebra(c);
    bool toy = c.algebra == "ladder";
    Character phi = toy ? toy_character(h, c.W) : random_character(h, c.seed);
    RenormTrace t = exponential_renormalize(phi, s);
    std::vector<CheckReport> checks{check_trace(t)};
    if (toy) {
        checks.push_back(check_toy_closed_forms(t, c.W));
        checks.push_back(locality_check(t, {symbols::a()}));
    }

    std::string table = fmt::format("exponential method on {} (N = {}, scheme {}, {})\n", h->name(), c.N, s.name(),
                                    toy ? "toy character" : fmt::format("random character, seed {}", c.seed));
    for (int n = 1; n <= t.degree(); ++n) {
        table += fmt::format("step {}\n", n);
        for (std::uint32_t i = 0; i < h->generators().size(); ++i) {
            const std::string &id = h->generators()[i].id;
            table += fmt::format("  Upsilon_{}({}) = {}\n", n, id, to_string(t.counterfactor[n].generator_values()[i]));
            table += fmt::format("  Upsilon({})({}) = {}\n", n, id, to_string(t.counterterm[n].generator_values()[i]));
            table += fmt::format("  phi_{}^+({}) = {}\n", n, id, to_string(t.regular[n].generator_values()[i]));
        }
    }
    table += "checks\n" + checks_table(checks);

    Result r;
    r.json = to_json(t, checks);
    r.json["config"] = config_json(c);
    r.json["status"] = overall(checks);
    r.table = std::move(table);
    r.code = exit_code(checks);
    return r;
}

void add_common(CLI::App *sub, RunConfig &c)
{
    sub->add_option("--algebra", c.algebra, "ladder | fdb | coupling | abstract-fdb")
        ->check(CLI::IsMember({"ladder", "fdb", "coupling", "abstract-fdb"}));
    sub->add_option("--degree", c.degree, "truncation degree N");
    sub->add_option("--scheme", c.scheme, "ms | jet")->check(CLI::IsMember({"ms", "jet"}));
    sub->add_option("--jet-order", c.jet_order, "jet order m of the jet scheme");
    sub->add_option("--eps-window", c.eps_window, "relative eps precision of the toy character");
    sub->add_option("--output", c.output, "table | json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--seed", c.seed, "seed for random characters (HOPF_RENORM_SEED overrides)");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exponential renormalization on combinatorial Hopf algebras", "hopf-renorm"};
    app.require_subcommand(1);
    RunConfig c;

    auto *toy = app.add_subcommand("toy", "renormalize the ladder-tree toy model");
    auto *check = app.add_subcommand("check", "run a property suite");
    auto *dump_hopf = app.add_subcommand("dump-hopf", "write the coproduct table as JSON");
    auto *dump_trace = app.add_subcommand("dump-trace", "write an exponential-method trace as JSON");
    for (auto *sub : {toy, check, dump_hopf, dump_trace})
        add_common(sub, c);
    check->add_flag("--rb", c.rb, "only the subtraction-scheme suite (Rota-Baxter identity and projector laws)");
    for (auto *sub : {dump_hopf, dump_trace})
        sub->add_option("--out", c.out_path, "write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Result r;
    bool dump = false;
    try {
        if (toy->parsed()) {
            finalize(c, 3);
            r = cmd_toy(c);
        } else if (check->parsed()) {
            finalize(c, 4);
            r = cmd_check(c);
        } else if (dump_hopf->parsed()) {
            finalize(c, 4);
            r = cmd_dump_hopf(c);
            dump = true;
        } else {
            finalize(c, 3);
            r = cmd_dump_trace(c);
            dump = true;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = c.output == "json" || (dump && !c.out_path.empty()) ? r.json.dump(2) + "\n" : r.table;
    if (dump && !c.out_path.empty()) {
        std::ofstream file(c.out_path);
        file << text;
        if (!file) {
            err << "error: cannot write " << c.out_path << "\n";
            return 1;
        }
    } else {
        out << text;
    }
    return r.code;
}

} // namespace hopfren::cli
