#include "doctest.h"

#include "selmat/combinat.hpp"

#include <random>
#include <set>

using namespace selmat;

namespace {

Permutation cyc(int k, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(k, cycles); }

// distinct exponent vectors of type lambda in n variables
long brute_monomials(const Partition& lambda, int n)
{
    std::vector<int> exps(n, 0);
    for (int i = 0; i < lambda.length() && i < n; ++i) exps[i] = lambda[i];
    if (lambda.length() > n) return 0;
    std::sort(exps.begin(), exps.end());
    long count = 0;
    do {
        ++count;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return count;
}

}  // namespace

TEST_CASE("partition enumeration")
{
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(partitions_of(4) == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                                     Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
    std::vector<size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int k = 0; k <= 10; ++k) {
        auto ps = partitions_of(k);
        CHECK(ps.size() == counts[k]);
        for (size_t i = 1; i < ps.size(); ++i) CHECK(revlex_before(ps[i - 1], ps[i]));
    }
}

TEST_CASE("partition parsing")
{
    CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
    CHECK(to_string(Partition{3, 1}) == "3,1");
    CHECK(to_string(Partition{}) == "0");
    CHECK(parse_partition("0") == Partition{});
    CHECK_THROWS(parse_partition("1,2"));
    CHECK_THROWS(parse_partition("a"));
    CHECK(Partition(std::vector<int>{1, 0, 3}) == Partition{3, 1});
}

TEST_CASE("dominance order")
{
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK_FALSE(dominance_leq(Partition{3}, Partition{1, 1, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), UnequalWeight);
    for (int k = 1; k <= 8; ++k) {
        auto ps = partitions_of(k);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = 0; j < i; ++j) CHECK_FALSE((dominance_leq(ps[j], ps[i]) && ps[i] != ps[j]));
    }
}

TEST_CASE("cycle types")
{
    CHECK(cycle_type(Permutation::identity(4)) == Partition{1, 1, 1, 1});
    CHECK(cycle_type(cyc(4, {{1, 2}, {3, 4}})) == Partition{2, 2});
    CHECK(cycle_type(cyc(4, {{2, 4, 3}})) == Partition{3, 1});
    CHECK(to_string(cyc(4, {{2, 4, 3}})) == "(2 4 3)");
    CHECK(to_string(Permutation::identity(3)) == "e");
    Permutation a = cyc(3, {{1, 2}}), b = cyc(3, {{2, 3}});
    CHECK((a * b)(2) == a(b(2)));
    CHECK((a * a.inverse()) == Permutation::identity(3));
    CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("coset types and pair partitions")
{
    CHECK(coset_type(Permutation::identity(4)) == Partition{1, 1});
    CHECK(coset_type(cyc(4, {{2, 3}})) == Partition{2});
    CHECK(coset_type(cyc(4, {{2, 4, 3}})) == Partition{2});

    CHECK(pair_partitions(1).size() == 1);
    CHECK(pair_partitions(3).size() == 15);
    std::set<Permutation> m2;
    for (const auto& p : pair_partitions(2)) m2.insert(p.as_permutation());
    CHECK(m2 == std::set<Permutation>{Permutation::identity(4), cyc(4, {{2, 3}}), cyc(4, {{2, 4, 3}})});
}

TEST_CASE("hyperoctahedral groups")
{
    CHECK(hyperoctahedral(1).size() == 2);
    CHECK(hyperoctahedral(3).size() == 48);
    auto h2 = hyperoctahedral(2);
    std::set<Permutation> closure{Permutation::identity(4)};
    std::vector<Permutation> gens = {cyc(4, {{1, 2}}), cyc(4, {{3, 4}}), cyc(4, {{1, 3}, {2, 4}})};
    for (bool grew = true; grew;) {
        grew = false;
        for (auto x : std::vector<Permutation>(closure.begin(), closure.end()))
            for (const auto& g : gens) grew |= closure.insert(x * g).second;
    }
    CHECK(std::set<Permutation>(h2.begin(), h2.end()) == closure);
}

TEST_CASE("coset type is constant on double cosets")
{
    for (const auto& s : all_permutations(4))
        for (const auto& z1 : hyperoctahedral(2))
            for (const auto& z2 : hyperoctahedral(2)) CHECK(coset_type(z1 * s * z2) == coset_type(s));

    std::map<Partition, int> sizes;
    for (const auto& s : all_permutations(4)) ++sizes[coset_type(s)];
    CHECK(sizes.size() == 2);
    CHECK(sizes[Partition{1, 1}] + sizes[Partition{2}] == 24);

    std::mt19937_64 rng(5);
    auto s6 = all_permutations(6);
    auto h3 = hyperoctahedral(3);
    std::uniform_int_distribution<size_t> ps(0, s6.size() - 1), hs(0, h3.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        const auto& s = s6[ps(rng)];
        CHECK(coset_type(h3[hs(rng)] * s * h3[hs(rng)]) == coset_type(s));
    }
}

TEST_CASE("characters reproduce the S_2, S_3, S_4 tables")
{
    using P = Partition;
    const std::vector<P> c2 = {P{1, 1}, P{2}};
    const std::vector<std::pair<P, std::vector<int>>> t2 = {{P{2}, {1, 1}}, {P{1, 1}, {1, -1}}};
    const std::vector<P> c3 = {P{1, 1, 1}, P{2, 1}, P{3}};
    const std::vector<std::pair<P, std::vector<int>>> t3 = {
        {P{3}, {1, 1, 1}}, {P{2, 1}, {2, 0, -1}}, {P{1, 1, 1}, {1, -1, 1}}};
    const std::vector<P> c4 = {P{1, 1, 1, 1}, P{2, 1, 1}, P{2, 2}, P{3, 1}, P{4}};
    const std::vector<std::pair<P, std::vector<int>>> t4 = {{P{4}, {1, 1, 1, 1, 1}},
                                                          {P{3, 1}, {3, 1, -1, 0, -1}},
                                                          {P{2, 2}, {2, 0, 2, -1, 0}},
                                                          {P{2, 1, 1}, {3, -1, -1, 0, 1}},
                                                          {P{1, 1, 1, 1}, {1, -1, 1, 1, -1}}};
    auto check = [](const std::vector<P>& cols, const std::vector<std::pair<P, std::vector<int>>>& rows) {
        auto table = character_table(cols.front().weight());
        for (const auto& [lambda, values] : rows)
            for (size_t j = 0; j < cols.size(); ++j) {
                CHECK(character(lambda, cols[j]) == values[j]);
                CHECK(table(lambda, cols[j]) == values[j]);
            }
    };
    check(c2, t2);
    check(c3, t3);
    check(c4, t4);
}

TEST_CASE("character orthogonality")
{
    for (int k = 1; k <= 8; ++k) {
        long sum = 0;
        for (const auto& lambda : partitions_of(k)) {
            long d = character(lambda, Partition(std::vector<int>(k, 1)));
            sum += d * d;
        }
        CHECK(Rational(sum) == factorial(k));
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(k)) {
                Rational s(0);
                for (const auto& mu : partitions_of(k)) s += Rational(character(a, mu) * character(b, mu)) / z_lambda(mu);
                CHECK(s == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("monomial principal specialization")
{
    CHECK(monomial_principal(Partition{1, 1}, 3) == 3);
    CHECK(monomial_principal(Partition{2, 1}, 3) == 6);
    CHECK(monomial_principal(Partition{2}, 1) == 1);
    CHECK(monomial_principal(Partition{1, 1, 1}, 2) == 0);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const auto& lambda : partitions_of(k))
                CHECK(monomial_principal(lambda, n) == brute_monomials(lambda, n));
}
