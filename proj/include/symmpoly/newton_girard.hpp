#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symmpoly/expansion.hpp"
#include "symmpoly/oracle.hpp"
#include "symmpoly/partition.hpp"
#include "symmpoly/rational.hpp"

namespace symmpoly {

/* One summand of the generalized recurrence
 * l(lambda)·m_lambda = sum of sign·coeff·p_{power_degree}·m_residual
 * over the nonzero weak compositions bounded by lambda's multiplicities. */
struct TheoremTerm {
    int sign;                 // (-1)^(|u|-1)
    BigInt coeff;             // multinomial(u)
    int power_degree;         // a·u, always >= 1
    Partition residual;       // (a_1^{r_1-u_1}, ..., a_k^{r_k-u_k})
    WeakComposition composition;
};

/* One term per nonzero weak composition, in enumeration order. Rejects
 * the empty partition: the identity would degenerate to 0 = 0 and a
 * silent success would mask caller bugs. */
inline std::vector<TheoremTerm> theorem_terms(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("theorem terms undefined for the empty partition");
    std::vector<TheoremTerm> terms;
    for (const WeakComposition& u : enumerate_weak_compositions(lambda)) {
        TheoremTerm t;
        t.sign = u.total() % 2 == 1 ? 1 : -1;
        t.coeff = multinomial(u);
        t.power_degree = static_cast<int>(weighted_degree(lambda, u));
        Partition residual = lambda;
        for (size_t i = 0; i < u.entries.size(); ++i)
            for (int j = 0; j < u.entries[i]; ++j)
                residual = residual.with_part_removed(lambda.runs()[i].value);
        t.residual = std::move(residual);
        t.composition = u;
        terms.push_back(std::move(t));
    }
    return terms;
}

struct VerifyWitness {
    std::vector<int> monomial;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

struct VerifyResult {
    bool ok;
    std::optional<VerifyWitness> witness;
};

/* Checks the identity concretely in n variables via the oracle: both
 * sides are expanded as sparse polynomials with no use of the product
 * rule. On failure reports the first differing monomial with both
 * coefficients. */
inline VerifyResult verify_theorem(const Partition& lambda, int n)
{
    SparsePoly lhs = Rational(lambda.length()) * expand_m(lambda, n);
    SparsePoly rhs(n);
    for (const TheoremTerm& t : theorem_terms(lambda)) {
        Rational c = Rational(t.sign) * Rational(t.coeff);
        rhs += c * poly_mul(expand_p(t.power_degree, n), expand_m(t.residual, n));
    }
    if (lhs == rhs)
        return {true, std::nullopt};
    SparsePoly diff = lhs + Rational(-1) * rhs;
    const auto& [monomial, delta] = *diff.terms().begin();
    return {false, VerifyWitness{monomial, lhs.coeff_of(monomial),
                                 rhs.coeff_of(monomial)}};
}

/* Replays the identity inside the abstract ring, using only the product
 * rule exactly as the proof does: the right side must collapse to
 * l(lambda)·m_lambda. */
inline bool theorem_holds_formally(const Partition& lambda)
{
    MExpansion rhs;
    for (const TheoremTerm& t : theorem_terms(lambda)) {
        Rational c = Rational(t.sign) * Rational(t.coeff);
        rhs += c * pieri_power_times_monomial(t.power_degree, t.residual);
    }
    return rhs == Rational(lambda.length()) * MExpansion::single(lambda);
}

/* m_lambda in the power-sum basis, by recursively dividing the identity
 * by l(lambda) until the residual is empty. Memoized; entries are
 * immutable once computed, so concurrent duplicate computation is
 * idempotent. */
inline PExpansion m_to_p(const Partition& lambda)
{
    static std::map<Partition, PExpansion, PartitionOrder> memo;
    static std::mutex memo_mutex;

    if (lambda.empty())
        return PExpansion::constant(1);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(lambda);
        if (it != memo.end())
            return it->second;
    }
    PExpansion result;
    Rational inv_length(1, lambda.length());
    for (const TheoremTerm& t : theorem_terms(lambda)) {
        Rational c = inv_length * Rational(t.sign) * Rational(t.coeff);
        PExpansion residual_expansion = m_to_p(t.residual);
        for (const auto& [mu, rc] : residual_expansion.terms())
            result.add_term(mu.with_part_added(t.power_degree), c * rc);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(lambda, std::move(result)).first->second;
}

/* e_k in the power-sum basis via the classical recurrence
 * k·e_k = sum over i of (-1)^(i-1)·p_i·e_{k-i}, with e_0 = 1. */
inline PExpansion e_to_p(int k)
{
    if (k < 1)
        throw std::invalid_argument("elementary degree must be positive");
    std::vector<PExpansion> e(static_cast<size_t>(k) + 1);
    e[0] = PExpansion::constant(1);
    for (int d = 1; d <= k; ++d) {
        PExpansion sum;
        for (int i = 1; i <= d; ++i) {
            Rational c(i % 2 == 1 ? 1 : -1, d);
            for (const auto& [mu, rc] : e[static_cast<size_t>(d - i)].terms())
                sum.add_term(mu.with_part_added(i), c * rc);
        }
        e[static_cast<size_t>(d)] = std::move(sum);
    }
    return e[static_cast<size_t>(k)];
}

} // namespace symmpoly
