#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symmpoly/expansion.hpp"
#include "symmpoly/partition.hpp"
#include "symmpoly/rational.hpp"

namespace symmpoly {

/* Exponent tuples ordered by total degree, then lexicographically
 * descending, so term iteration and rendering are reproducible. */
struct GradedLexOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const
    {
        long long da = std::accumulate(a.begin(), a.end(), 0LL);
        long long db = std::accumulate(b.begin(), b.end(), 0LL);
        if (da != db)
            return da < db;
        return a > b;
    }
};

/* Sparse multivariate polynomial in a fixed number of variables with
 * exact rational coefficients. The verification oracle's value type.
 * Deliberately naive and independent of the expansion ring: it shares no
 * code with the product rule it is used to check. */
class SparsePoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexOrder>;

    explicit SparsePoly(int nvars) : nvars_(nvars)
    {
        if (nvars < 1)
            throw std::invalid_argument("variable count must be positive");
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff_of(const std::vector<int>& exponents) const
    {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const std::vector<int>& exponents, const Rational& c)
    {
        if (static_cast<int>(exponents.size()) != nvars_)
            throw std::invalid_argument("exponent arity mismatch");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(exponents, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& other)
    {
        if (other.nvars_ != nvars_)
            throw std::invalid_argument("variable count mismatch");
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b)
    {
        a += b;
        return a;
    }

    friend SparsePoly operator*(const Rational& c, const SparsePoly& f)
    {
        SparsePoly out(f.nvars_);
        if (c == 0)
            return out;
        for (const auto& [e, coeff] : f.terms_)
            out.terms_.emplace(e, c * coeff);
        return out;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    int nvars_;
    TermMap terms_;
};

/* Exact convolution product. Arity mismatch is a usage error. */
inline SparsePoly poly_mul(const SparsePoly& f, const SparsePoly& g)
{
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("variable count mismatch");
    SparsePoly out(f.nvars());
    std::vector<int> e(static_cast<size_t>(f.nvars()));
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ef[i] + eg[i];
            out.add_term(e, cf * cg);
        }
    return out;
}

/* m_lambda in n variables: the sum over all distinct rearrangements of
 * lambda's parts padded with zeros to n entries, coefficient 1 each.
 * Zero when the partition has more parts than variables. Rearrangements
 * are generated directly as multiset permutations, never by filtering
 * the full n! set. */
inline SparsePoly expand_m(const Partition& lambda, int n)
{
    SparsePoly out(n);
    if (lambda.length() > n)
        return out;
    std::vector<int> exponents = lambda.to_flat();
    exponents.resize(static_cast<size_t>(n), 0);
    std::sort(exponents.begin(), exponents.end());
    do {
        out.add_term(exponents, 1);
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    return out;
}

/* p_k = x_1^k + ... + x_n^k. */
inline SparsePoly expand_p(int k, int n)
{
    if (k < 1)
        throw std::invalid_argument("power-sum degree must be positive");
    SparsePoly out(n);
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        e[static_cast<size_t>(i)] = k;
        out.add_term(e, 1);
        e[static_cast<size_t>(i)] = 0;
    }
    return out;
}

/* Truncation of an abstract m-expansion to n variables. Partitions with
 * more than n parts contribute nothing. */
inline SparsePoly specialize(const MExpansion& x, int n)
{
    SparsePoly out(n);
    for (const auto& [mu, c] : x.terms())
        out += c * expand_m(mu, n);
    return out;
}

inline Rational evaluate(const SparsePoly& f, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != f.nvars())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int j = 0; j < e[i]; ++j)
                term *= point[i];
        total += term;
    }
    return total;
}

/* One line per term, graded-lex order: "2*x1^1*x2^1"; a constant term is
 * the bare coefficient; the zero polynomial is the single line "0". */
inline std::vector<std::string> render_poly_lines(const SparsePoly& f)
{
    if (f.is_zero())
        return {"0"};
    std::vector<std::string> lines;
    for (const auto& [e, c] : f.terms()) {
        std::string s = rational_to_string(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                s += "*x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        lines.push_back(std::move(s));
    }
    return lines;
}

} // namespace symmpoly
