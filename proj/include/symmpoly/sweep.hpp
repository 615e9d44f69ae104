#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "symmpoly/newton_girard.hpp"
#include "symmpoly/oracle.hpp"
#include "symmpoly/partition.hpp"

namespace symmpoly {

struct SweepFailure {
    Partition lambda;
    int n;                 // 0 for checks not tied to a variable count
    std::string kind;      // "oracle", "formal", "classical"
    std::string monomial;  // witness, empty when not applicable
    Rational lhs;
    Rational rhs;
};

/* Outcome of a verification sweep over all nonempty partitions of
 * weight <= bound. checked counts (lambda, n) oracle comparisons. */
struct SweepReport {
    int bound = 0;
    long partitions = 0;
    long checked = 0;
    std::vector<SweepFailure> failures;
    double wall_seconds = 0.0;
};

namespace detail {

inline std::string monomial_to_string(const std::vector<int>& e)
{
    std::string s;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
            if (!s.empty())
                s += "*";
            s += "x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        }
    return s.empty() ? "1" : s;
}

/* Term-for-term comparison against the classical recurrence: for
 * lambda = (1^k) the u = (i) term must carry sign (-1)^(i-1),
 * coefficient 1, power degree i, residual (1^(k-i)). */
inline bool matches_classical_recurrence(const Partition& lambda)
{
    const int k = lambda.length();
    std::vector<TheoremTerm> terms = theorem_terms(lambda);
    if (static_cast<int>(terms.size()) != k)
        return false;
    for (int i = 1; i <= k; ++i) {
        const TheoremTerm& t = terms[static_cast<size_t>(i - 1)];
        Partition expected_residual =
            Partition::from_list(std::vector<int>(static_cast<size_t>(k - i), 1));
        if (t.sign != (i % 2 == 1 ? 1 : -1) || t.coeff != 1 ||
            t.power_degree != i || t.residual != expected_residual)
            return false;
    }
    return e_to_p(k) == m_to_p(lambda);
}

inline void check_partition(const Partition& lambda, bool extended,
                            SweepReport& report)
{
    std::vector<int> variable_counts;
    const int l = lambda.length();
    if (extended)
        variable_counts.push_back(std::max(1, l - 1));
    variable_counts.push_back(l);
    variable_counts.push_back(l + 1);
    for (int n : variable_counts) {
        VerifyResult r = verify_theorem(lambda, n);
        ++report.checked;
        if (!r.ok)
            report.failures.push_back({lambda, n, "oracle",
                                       monomial_to_string(r.witness->monomial),
                                       r.witness->lhs_coeff,
                                       r.witness->rhs_coeff});
    }
    if (!theorem_holds_formally(lambda))
        report.failures.push_back({lambda, 0, "formal", "", 0, 0});
    if (lambda.runs().size() == 1 && lambda.runs()[0].value == 1 &&
        !matches_classical_recurrence(lambda))
        report.failures.push_back({lambda, 0, "classical", "", 0, 0});
}

} // namespace detail

/* Runs the full verification for every nonempty partition of weight
 * <= bound: the oracle comparison at each applicable variable count, the
 * formal-ring replay, and for (1^k) the collapse to the classical
 * recurrence. Partitions are independent work items distributed over the
 * given number of threads; the failure list is sorted before return so
 * the report is deterministic regardless of scheduling. */
inline SweepReport run_verification_sweep(int bound, bool extended, int jobs)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<Partition> all = partitions_up_to_weight(bound);
    jobs = std::max(1, jobs);

    std::vector<SweepReport> partials(static_cast<size_t>(jobs));
    std::atomic<size_t> next{0};
    auto worker = [&](SweepReport& local) {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= all.size())
                return;
            detail::check_partition(all[i], extended, local);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t)
        threads.emplace_back(worker, std::ref(partials[static_cast<size_t>(t)]));
    worker(partials[0]);
    for (std::thread& t : threads)
        t.join();

    SweepReport report;
    report.bound = bound;
    report.partitions = static_cast<long>(all.size());
    for (SweepReport& partial : partials) {
        report.checked += partial.checked;
        for (SweepFailure& f : partial.failures)
            report.failures.push_back(std::move(f));
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) {
                  PartitionOrder less;
                  if (a.lambda != b.lambda)
                      return less(a.lambda, b.lambda);
                  if (a.n != b.n)
                      return a.n < b.n;
                  return a.kind < b.kind;
              });
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

} // namespace symmpoly
