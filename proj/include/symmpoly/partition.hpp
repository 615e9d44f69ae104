#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symmpoly/rational.hpp"

namespace symmpoly {

/* Integer partition in exponent form: strictly decreasing distinct part
 * values with positive multiplicities. The empty run list is the empty
 * partition. Canonical form is unique, so equality is memberwise. */
class Partition {
public:
    struct Run {
        int value;
        int mult;
        friend bool operator==(const Run&, const Run&) = default;
    };

    Partition() = default;

    /* Canonicalizes any finite list of nonnegative integers: zeros are
     * dropped, values sorted descending, runs compressed. */
    static Partition from_list(std::vector<int> values)
    {
        for (int v : values)
            if (v < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
        std::sort(values.begin(), values.end(), std::greater<int>());
        Partition p;
        for (int v : values) {
            if (v == 0)
                break;
            if (!p.runs_.empty() && p.runs_.back().value == v)
                ++p.runs_.back().mult;
            else
                p.runs_.push_back({v, 1});
        }
        return p;
    }

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    int distinct_count() const { return static_cast<int>(runs_.size()); }

    /* Number of parts counted with multiplicity. */
    int length() const
    {
        int l = 0;
        for (const Run& r : runs_)
            l += r.mult;
        return l;
    }

    /* Sum of all parts. */
    long long weight() const
    {
        long long w = 0;
        for (const Run& r : runs_)
            w += static_cast<long long>(r.value) * r.mult;
        return w;
    }

    int multiplicity_of(int value) const
    {
        for (const Run& r : runs_)
            if (r.value == value)
                return r.mult;
        return 0;
    }

    std::vector<int> to_flat() const
    {
        std::vector<int> flat;
        flat.reserve(static_cast<size_t>(length()));
        for (const Run& r : runs_)
            flat.insert(flat.end(), static_cast<size_t>(r.mult), r.value);
        return flat;
    }

    /* Returns this partition with one extra part of the given value. */
    Partition with_part_added(int value) const
    {
        if (value <= 0)
            throw std::invalid_argument("part value must be positive");
        Partition p = *this;
        auto it = std::find_if(p.runs_.begin(), p.runs_.end(),
                               [&](const Run& r) { return r.value <= value; });
        if (it != p.runs_.end() && it->value == value)
            ++it->mult;
        else
            p.runs_.insert(it, {value, 1});
        return p;
    }

    /* Returns this partition with one part of the given value removed.
     * The value must be present. */
    Partition with_part_removed(int value) const
    {
        Partition p = *this;
        auto it = std::find_if(p.runs_.begin(), p.runs_.end(),
                               [&](const Run& r) { return r.value == value; });
        if (it == p.runs_.end())
            throw std::invalid_argument("part value not present");
        if (--it->mult == 0)
            p.runs_.erase(it);
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Run> runs_;
};

/* Canonical strict ordering used for expansion term maps and all
 * deterministic iteration: weight, then length, then flat parts
 * lexicographically descending. */
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.to_flat() > b.to_flat();
    }
};

/* Tuple u of nonnegative integers, componentwise bounded by the paired
 * partition's multiplicities. */
struct WeakComposition {
    std::vector<int> entries;

    int total() const
    {
        return std::accumulate(entries.begin(), entries.end(), 0);
    }

    bool is_zero() const
    {
        return std::all_of(entries.begin(), entries.end(),
                           [](int u) { return u == 0; });
    }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

/* Sum of a_i * u_i over the distinct parts of the paired partition. */
inline long long weighted_degree(const Partition& lambda, const WeakComposition& u)
{
    long long d = 0;
    for (size_t i = 0; i < u.entries.size(); ++i)
        d += static_cast<long long>(lambda.runs()[i].value) * u.entries[i];
    return d;
}

/* All nonzero u with 0 <= u_i <= r_i, colexicographic ascending (first
 * entry varies fastest). Count is prod(r_i + 1) - 1. */
inline std::vector<WeakComposition> enumerate_weak_compositions(const Partition& lambda)
{
    const size_t k = static_cast<size_t>(lambda.distinct_count());
    std::vector<WeakComposition> out;
    std::vector<int> u(k, 0);
    for (;;) {
        size_t i = 0;
        while (i < k && u[i] == lambda.runs()[i].mult)
            u[i++] = 0;
        if (i == k)
            break;
        ++u[i];
        out.push_back(WeakComposition{u});
    }
    return out;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/* |u|! / (u_1! ... u_k!) as a product of binomials of the partial sums,
 * which keeps intermediates no larger than the result. */
inline BigInt multinomial(const WeakComposition& u)
{
    BigInt result = 1;
    int partial = 0;
    for (int e : u.entries) {
        partial += e;
        result *= binomial(partial, e);
    }
    return result;
}

namespace detail {

inline void partitions_of(int w, int max_part, std::vector<int>& prefix,
                          std::vector<Partition>& out)
{
    if (w == 0) {
        out.push_back(Partition::from_list(prefix));
        return;
    }
    for (int part = std::min(w, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_of(w - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/* Every nonempty partition of weight <= bound, exactly once, ordered by
 * weight and then by flat parts lexicographically descending. */
inline std::vector<Partition> partitions_up_to_weight(int bound)
{
    if (bound < 1)
        throw std::invalid_argument("weight bound must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int w = 1; w <= bound; ++w)
        detail::partitions_of(w, w, prefix, out);
    return out;
}

/* Canonical text form: "2^2,1" (multiplicity 1 omitted), "()" for the
 * empty partition. */
inline std::string partition_to_string(const Partition& p)
{
    if (p.empty())
        return "()";
    std::string s;
    for (const Partition::Run& r : p.runs()) {
        if (!s.empty())
            s += ",";
        s += std::to_string(r.value);
        if (r.mult != 1)
            s += "^" + std::to_string(r.mult);
    }
    return s;
}

/* Flat comma-separated form: "2,1,1"; empty string for the empty
 * partition. */
inline std::string partition_to_flat_string(const Partition& p)
{
    std::string s;
    for (int v : p.to_flat()) {
        if (!s.empty())
            s += ",";
        s += std::to_string(v);
    }
    return s;
}

/* Accepts exponent form "2^3,1^2", flat form "3,2,2,1", and "()" or ""
 * for the empty partition. Zero parts are dropped. */
inline Partition parse_partition(const std::string& text)
{
    if (text.empty() || text == "()")
        return Partition{};
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        size_t caret = token.find('^');
        std::string value_text = token.substr(0, caret);
        std::string mult_text =
            caret == std::string::npos ? "1" : token.substr(caret + 1);
        int value = 0;
        int mult = 0;
        try {
            size_t used = 0;
            value = std::stoi(value_text, &used);
            if (used != value_text.size() || value_text.empty())
                throw std::invalid_argument(token);
            used = 0;
            mult = std::stoi(mult_text, &used);
            if (used != mult_text.size() || mult_text.empty())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition token '" + token + "'");
        }
        if (value < 0 || mult < 1)
            throw std::invalid_argument("bad partition token '" + token + "'");
        values.insert(values.end(), static_cast<size_t>(mult), value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Partition::from_list(std::move(values));
}

} // namespace symmpoly
