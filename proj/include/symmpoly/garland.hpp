#pragma once

#include <string>
#include <vector>

#include "symmpoly/newton_girard.hpp"
#include "symmpoly/partition.hpp"

namespace symmpoly {

/* Current-algebra rendering: the image of the recurrence under the map
 * sending p_j to (h⊗t^j), with basis elements written p(...) and, for
 * lambda = (1^k), the same identity in the Lambda notation. Purely
 * notational; no noncommutative algebra is modeled. */
inline std::vector<std::string> render_garland(const Partition& lambda)
{
    std::vector<std::string> lines;
    std::string s = std::to_string(lambda.length()) + "·p(" +
                    partition_to_flat_string(lambda) + ") = ";
    bool first = true;
    for (const TheoremTerm& t : theorem_terms(lambda)) {
        if (first)
            s += t.sign < 0 ? "−" : "";
        else
            s += t.sign < 0 ? " − " : " + ";
        first = false;
        if (t.coeff != 1)
            s += t.coeff.str();
        s += "(h⊗t^" + std::to_string(t.power_degree) + ")p(" +
             partition_to_flat_string(t.residual) + ")";
    }
    lines.push_back(std::move(s));

    if (lambda.runs().size() == 1 && lambda.runs()[0].value == 1) {
        const int k = lambda.length();
        std::string g = std::to_string(k) + "Λ_" + std::to_string(k) + " = ";
        for (int i = 1; i <= k; ++i) {
            if (i == 1)
                g += "";
            else
                g += i % 2 == 1 ? " + " : " − ";
            g += "(h⊗t^" + std::to_string(i) + ")Λ_" + std::to_string(k - i);
        }
        lines.push_back(std::move(g));
    }
    return lines;
}

} // namespace symmpoly
