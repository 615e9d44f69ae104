#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "symmpoly/oracle.hpp"

using namespace symmpoly;

namespace {

Partition P(std::vector<int> v)
{
    return Partition::from_list(std::move(v));
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// n! / prod over distinct padded exponent values of count!
BigInt distinct_rearrangement_count(const Partition& lambda, int n)
{
    std::map<int, int> counts;
    for (int v : lambda.to_flat())
        ++counts[v];
    counts[0] += n - lambda.length();
    BigInt denom = 1;
    for (const auto& [value, count] : counts)
        denom *= factorial(count);
    return factorial(n) / denom;
}

SparsePoly swap_variables(const SparsePoly& f, size_t i, size_t j)
{
    SparsePoly out(f.nvars());
    for (const auto& [key, c] : f.terms()) {
        std::vector<int> e = key;
        std::swap(e[i], e[j]);
        out.add_term(e, c);
    }
    return out;
}

SparsePoly random_poly(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> nterms(1, 4);
    SparsePoly f(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(static_cast<size_t>(n));
        for (int& x : e)
            x = expo(rng);
        f.add_term(e, coeff(rng));
    }
    return f;
}

} // namespace

TEST_CASE("expand_m small cases")
{
    SparsePoly f = expand_m(P({1, 1}), 2);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.coeff_of({1, 1}) == 1);

    SparsePoly g = expand_m(P({2, 1}), 3);
    CHECK(g.terms().size() == 6);
    for (const auto& [e, c] : g.terms())
        CHECK(c == 1);
    CHECK(g.coeff_of({2, 1, 0}) == 1);
    CHECK(g.coeff_of({0, 1, 2}) == 1);

    CHECK(expand_m(P({1, 1, 1}), 2).is_zero());
    CHECK(expand_m(P({}), 3).coeff_of({0, 0, 0}) == 1);
}

TEST_CASE("expand_p small cases")
{
    SparsePoly f = expand_p(1, 3);
    CHECK(f.terms().size() == 3);
    CHECK(f.coeff_of({1, 0, 0}) == 1);

    CHECK(expand_p(2, 1).coeff_of({2}) == 1);

    SparsePoly h = expand_p(3, 2);
    CHECK(h.terms().size() == 2);
    CHECK(h.coeff_of({3, 0}) == 1);
    CHECK(h.coeff_of({0, 3}) == 1);
}

TEST_CASE("poly_mul small cases")
{
    SparsePoly sum = expand_p(1, 2);
    SparsePoly sq = poly_mul(sum, sum);
    CHECK(sq.coeff_of({2, 0}) == 1);
    CHECK(sq.coeff_of({1, 1}) == 2);
    CHECK(sq.coeff_of({0, 2}) == 1);

    SparsePoly one(2);
    one.add_term({0, 0}, 1);
    CHECK(poly_mul(sq, one) == sq);

    // Smallest product-rule instance, by direct convolution.
    SparsePoly lhs = poly_mul(expand_p(1, 2), expand_m(P({1}), 2));
    SparsePoly rhs = expand_m(P({2}), 2) + Rational(2) * expand_m(P({1, 1}), 2);
    CHECK(lhs == rhs);

    CHECK_THROWS_AS(poly_mul(expand_p(1, 2), expand_p(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("specialize and evaluate")
{
    MExpansion x;
    x.add_term(P({2}), 1);
    x.add_term(P({1, 1}), 2);
    SparsePoly f = specialize(x, 2);
    CHECK(f.coeff_of({2, 0}) == 1);
    CHECK(f.coeff_of({1, 1}) == 2);
    CHECK(f.coeff_of({0, 2}) == 1);

    CHECK(specialize(MExpansion{}, 4).is_zero());
    CHECK(specialize(MExpansion::constant(5), 3).coeff_of({0, 0, 0}) == 5);

    SparsePoly xy(2);
    xy.add_term({1, 1}, 1);
    std::vector<Rational> pt{2, 3};
    CHECK(evaluate(xy, pt) == 6);
    CHECK(evaluate(SparsePoly(2), pt) == 0);
    std::vector<Rational> pt2{1, 2};
    SparsePoly sumsq(2);
    sumsq.add_term({2, 0}, 1);
    sumsq.add_term({0, 2}, 1);
    CHECK(evaluate(sumsq, pt2) == 5);
    CHECK_THROWS_AS(evaluate(xy, std::vector<Rational>{1}),
                    std::invalid_argument);
}

TEST_CASE("expand_m is symmetric and has unit coefficients")
{
    for (const Partition& lambda : partitions_up_to_weight(8))
        for (int n = lambda.length(); n <= 6; ++n) {
            SparsePoly f = expand_m(lambda, n);
            for (const auto& [e, c] : f.terms())
                CHECK(c == 1);
            for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i)
                CHECK(swap_variables(f, i, i + 1) == f);
        }
}

TEST_CASE("distinct rearrangement counts match the multiset formula")
{
    for (const Partition& lambda : partitions_up_to_weight(8))
        for (int n = lambda.length(); n <= 6; ++n)
            CHECK(BigInt(expand_m(lambda, n).terms().size()) ==
                  distinct_rearrangement_count(lambda, n));
}

TEST_CASE("equal-weight expansions have disjoint supports")
{
    for (int n = 2; n <= 5; ++n) {
        std::map<long long, std::set<std::vector<int>>> seen;
        for (const Partition& lambda : partitions_up_to_weight(7)) {
            if (lambda.length() > n)
                continue;
            SparsePoly f = expand_m(lambda, n);
            for (const auto& [e, c] : f.terms()) {
                CHECK(!seen[lambda.weight()].contains(e));
                seen[lambda.weight()].insert(e);
            }
        }
    }
}

TEST_CASE("product is commutative and associative")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = random_poly(rng, 3);
        SparsePoly g = random_poly(rng, 3);
        SparsePoly h = random_poly(rng, 3);
        CHECK(poly_mul(f, g) == poly_mul(g, f));
        CHECK(poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h)));
    }
}

TEST_CASE("line rendering")
{
    SparsePoly f = expand_m(P({2, 1}), 2);
    auto lines = render_poly_lines(f);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "1*x1^2*x2^1");
    CHECK(lines[1] == "1*x1^1*x2^2");
    CHECK(render_poly_lines(SparsePoly(2)) ==
          std::vector<std::string>{"0"});
}
