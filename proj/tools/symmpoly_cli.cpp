#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmpoly/expansion.hpp"
#include "symmpoly/garland.hpp"
#include "symmpoly/newton_girard.hpp"
#include "symmpoly/oracle.hpp"
#include "symmpoly/partition.hpp"
#include "symmpoly/sweep.hpp"

namespace {

using nlohmann::json;
using namespace symmpoly;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

json rational_json(const Rational& q)
{
    return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json partition_json(const Partition& p)
{
    return json(p.to_flat());
}

template <class Tag>
json expansion_json(const Expansion<Tag>& x, bool longest_first)
{
    json terms = json::array();
    for (const auto& [mu, c] : sorted_terms_for_display(x, longest_first))
        terms.push_back({{"partition", partition_json(mu)},
                         {"coeff", rational_json(c)}});
    return terms;
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

int cmd_expand(const std::string& lambda_text, int vars, bool as_json)
{
    Partition lambda = parse_partition(lambda_text);
    SparsePoly f = expand_m(lambda, vars);
    if (as_json) {
        json terms = json::array();
        for (const auto& [e, c] : f.terms())
            terms.push_back({{"exponents", e}, {"coeff", rational_json(c)}});
        emit({{"command", "expand"},
              {"lambda", partition_json(lambda)},
              {"vars", vars},
              {"terms", terms}});
    } else {
        for (const std::string& line : render_poly_lines(f))
            std::cout << line << "\n";
    }
    return 0;
}

int cmd_m2p(const std::string& lambda_text, bool as_json)
{
    Partition lambda = parse_partition(lambda_text);
    if (lambda.empty()) {
        std::cerr << "m2p: the empty partition is not accepted\n";
        return kExitUsage;
    }
    PExpansion x = m_to_p(lambda);
    if (as_json)
        emit({{"command", "m2p"},
              {"lambda", partition_json(lambda)},
              {"terms", expansion_json(x, true)}});
    else
        std::cout << render_pexpansion(x) << "\n";
    return 0;
}

int cmd_e2p(int k, bool as_json)
{
    PExpansion x = e_to_p(k);
    if (as_json)
        emit({{"command", "e2p"}, {"k", k}, {"terms", expansion_json(x, true)}});
    else
        std::cout << render_pexpansion(x) << "\n";
    return 0;
}

int cmd_pieri(int a, const std::string& lambda_text, bool as_json)
{
    Partition lambda = parse_partition(lambda_text);
    MExpansion x = pieri_power_times_monomial(a, lambda);
    if (as_json)
        emit({{"command", "pieri"},
              {"a", a},
              {"lambda", partition_json(lambda)},
              {"terms", expansion_json(x, false)}});
    else
        std::cout << render_mexpansion(x) << "\n";
    return 0;
}

int cmd_garland(const std::string& lambda_text, bool as_json)
{
    Partition lambda = parse_partition(lambda_text);
    if (lambda.empty()) {
        std::cerr << "garland: the empty partition is not accepted\n";
        return kExitUsage;
    }
    std::vector<std::string> lines = render_garland(lambda);
    if (as_json)
        emit({{"command", "garland"},
              {"lambda", partition_json(lambda)},
              {"lines", lines}});
    else
        for (const std::string& line : lines)
            std::cout << line << "\n";
    return 0;
}

int cmd_verify(int max_weight, const std::string& policy, int jobs, bool as_json)
{
    SweepReport report =
        run_verification_sweep(max_weight, policy == "extended", jobs);
    if (as_json) {
        json failures = json::array();
        for (const SweepFailure& f : report.failures)
            failures.push_back({{"lambda", partition_json(f.lambda)},
                                {"n", f.n},
                                {"kind", f.kind},
                                {"monomial", f.monomial},
                                {"lhs", rational_json(f.lhs)},
                                {"rhs", rational_json(f.rhs)}});
        emit({{"command", "verify"},
              {"max_weight", report.bound},
              {"policy", policy},
              {"partitions", report.partitions},
              {"checked", report.checked},
              {"failures", failures}});
    } else {
        for (const SweepFailure& f : report.failures) {
            std::cout << "FAIL " << f.kind << " lambda=("
                      << partition_to_string(f.lambda) << ")";
            if (f.n > 0)
                std::cout << " n=" << f.n << " at " << f.monomial << ": lhs "
                          << rational_to_string(f.lhs) << " vs rhs "
                          << rational_to_string(f.rhs);
            std::cout << "\n";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f", report.wall_seconds);
        std::cout << "verify: weight <= " << report.bound << ", "
                  << report.partitions << " partitions, " << report.checked
                  << " identity checks, " << report.failures.size()
                  << " failures (" << timing << " s)\n";
    }
    return report.failures.empty() ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Newton-Girard engine for monomial symmetric polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string lambda_text;
    int vars = 0;
    auto* expand =
        app.add_subcommand("expand", "expand m_lambda in n variables");
    expand->add_option("lambda", lambda_text, "partition, e.g. \"2,1\" or \"2^2,1\"")
        ->required();
    expand->add_option("--vars", vars, "number of variables")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* m2p = app.add_subcommand("m2p", "convert m_lambda to the power-sum basis");
    m2p->add_option("lambda", lambda_text)->required();

    int e_degree = 0;
    auto* e2p = app.add_subcommand("e2p", "convert e_k to the power-sum basis");
    e2p->add_option("k", e_degree)->required()->check(CLI::PositiveNumber);

    int pieri_a = 0;
    auto* pieri =
        app.add_subcommand("pieri", "expand the product p_a * m_lambda");
    pieri->add_option("a", pieri_a)->required()->check(CLI::PositiveNumber);
    pieri->add_option("lambda", lambda_text)->required();

    auto* garland =
        app.add_subcommand("garland", "render the current-algebra form");
    garland->add_option("lambda", lambda_text)->required();

    int max_weight = 0;
    int jobs = 1;
    std::string policy = "paper";
    auto* verify =
        app.add_subcommand("verify", "verification sweep over all partitions");
    verify->add_option("--max-weight", max_weight, "partition weight bound")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--policy", policy, "variable-count policy")
        ->check(CLI::IsMember({"paper", "extended"}));
    verify->add_option("--jobs", jobs, "worker thread count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (expand->parsed())
            return cmd_expand(lambda_text, vars, as_json);
        if (m2p->parsed())
            return cmd_m2p(lambda_text, as_json);
        if (e2p->parsed())
            return cmd_e2p(e_degree, as_json);
        if (pieri->parsed())
            return cmd_pieri(pieri_a, lambda_text, as_json);
        if (garland->parsed())
            return cmd_garland(lambda_text, as_json);
        if (verify->parsed())
            return cmd_verify(max_weight, policy, jobs, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
