#pragma once

#include <map>
#include <string>
#include <vector>

#include "symmpoly/partition.hpp"
#include "symmpoly/rational.hpp"

namespace symmpoly {

/* Finite formal linear combination of basis elements indexed by
 * partitions, with exact rational coefficients. Zero coefficients are
 * never stored; the empty partition indexes the constant 1. The tag
 * distinguishes the monomial basis (m_lambda) from power-sum products
 * (p_mu = p_{mu_1} ... p_{mu_l}). */
template <class Tag>
class Expansion {
public:
    using TermMap = std::map<Partition, Rational, PartitionOrder>;

    Expansion() = default;

    static Expansion single(const Partition& key, Rational coeff = 1)
    {
        Expansion x;
        x.add_term(key, coeff);
        return x;
    }

    static Expansion constant(Rational c)
    {
        return single(Partition{}, std::move(c));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& key, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Expansion& operator+=(const Expansion& other)
    {
        for (const auto& [key, c] : other.terms_)
            add_term(key, c);
        return *this;
    }

    friend Expansion operator+(Expansion a, const Expansion& b)
    {
        a += b;
        return a;
    }

    friend Expansion operator*(const Rational& c, const Expansion& x)
    {
        Expansion out;
        if (c == 0)
            return out;
        for (const auto& [key, coeff] : x.terms_)
            out.terms_.emplace(key, c * coeff);
        return out;
    }

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    TermMap terms_;
};

using MExpansion = Expansion<struct MBasisTag>;
using PExpansion = Expansion<struct PBasisTag>;

/* m-basis expansion of p_a * m_lambda, consolidated single-pass rule:
 * for each candidate source value v in {0} union {distinct parts},
 * replace one part of value v by v + a (v = 0 appends a new part a);
 * the coefficient of the resulting basis element is the multiplicity of
 * v + a in it. Distinct v always give distinct output partitions. */
inline MExpansion pieri_power_times_monomial(int a, const Partition& lambda)
{
    MExpansion out;
    std::vector<int> sources{0};
    for (const Partition::Run& r : lambda.runs())
        sources.push_back(r.value);
    for (int v : sources) {
        Partition mu = v == 0 ? lambda.with_part_added(a)
                              : lambda.with_part_removed(v).with_part_added(v + a);
        out.add_term(mu, Rational(mu.multiplicity_of(v + a)));
    }
    return out;
}

/* The same product computed as the literal four-sum expansion: the new
 * standalone part, the part-augmentation sum over i, the delta_{a,b_j}
 * multiplicity bump, and the delta_{a+b_p,b_q} transfer sum. Overlapping
 * contributions accumulate additively after canonicalization. Kept as an
 * independent cross-check of the consolidated rule. */
inline MExpansion pieri_literal_four_sums(int a, const Partition& lambda)
{
    MExpansion out;
    const auto& runs = lambda.runs();

    out.add_term(lambda.with_part_added(a), 1);

    for (const Partition::Run& ri : runs)
        out.add_term(lambda.with_part_removed(ri.value).with_part_added(ri.value + a),
                     1);

    for (const Partition::Run& rj : runs)
        if (a == rj.value)
            out.add_term(lambda.with_part_added(rj.value), Rational(rj.mult));

    for (const Partition::Run& rp : runs)
        for (const Partition::Run& rq : runs)
            if (a + rp.value == rq.value)
                out.add_term(lambda.with_part_removed(rp.value)
                                 .with_part_added(rq.value),
                             Rational(rq.mult));

    return out;
}

/* Linear extension of the product rule: p_a times an arbitrary
 * m-expansion. */
inline MExpansion mexp_mul_power(int a, const MExpansion& x)
{
    MExpansion out;
    for (const auto& [mu, c] : x.terms())
        out += c * pieri_power_times_monomial(a, mu);
    return out;
}

namespace detail {

inline void append_signed_term(std::string& s, bool first, bool negative,
                               const std::string& body)
{
    if (first)
        s += negative ? "−" : "";
    else
        s += negative ? " − " : " + ";
    s += body;
}

} // namespace detail

/* Display order: m-expansions use the canonical partition order;
 * p-expansions list equal-weight terms longest first (p_1^k down to
 * p_k), matching the usual way the classical recurrence is unrolled. */
template <class Tag>
std::vector<std::pair<Partition, Rational>>
sorted_terms_for_display(const Expansion<Tag>& x, bool longest_first)
{
    std::vector<std::pair<Partition, Rational>> terms(x.terms().begin(),
                                                      x.terms().end());
    if (longest_first)
        std::stable_sort(terms.begin(), terms.end(),
                         [](const auto& a, const auto& b) {
                             if (a.first.weight() != b.first.weight())
                                 return a.first.weight() < b.first.weight();
                             if (a.first.length() != b.first.length())
                                 return a.first.length() > b.first.length();
                             return a.first.to_flat() < b.first.to_flat();
                         });
    return terms;
}

/* Rendering grammar shared by both bases: "m[2,1] + 2·m[1,1,1]",
 * "1/2·p[1,1] − 1/2·p[2]". The empty partition renders as a bare
 * coefficient. */
template <class Tag>
std::string render_expansion(const Expansion<Tag>& x, const std::string& basis)
{
    if (x.is_zero())
        return "0";
    auto terms = sorted_terms_for_display(x, basis == "p");
    std::string s;
    bool first = true;
    for (const auto& term : terms) {
        const auto& [mu, c] = term;
        Rational abs = c < 0 ? Rational(-c) : c;
        std::string body;
        if (mu.empty())
            body = rational_to_string(abs);
        else if (abs == 1)
            body = basis + "[" + partition_to_flat_string(mu) + "]";
        else
            body = rational_to_string(abs) + "·" + basis + "[" +
                   partition_to_flat_string(mu) + "]";
        detail::append_signed_term(s, first, c < 0, body);
        first = false;
    }
    return s;
}

inline std::string render_mexpansion(const MExpansion& x)
{
    return render_expansion(x, "m");
}

inline std::string render_pexpansion(const PExpansion& x)
{
    return render_expansion(x, "p");
}

} // namespace symmpoly
