#include "tamecover/building.hpp"

#include <doctest.h>

#include <numeric>

using namespace tamecover;

namespace {

std::vector<SimplexType> compositions_of(long total)
{
    std::vector<SimplexType> out;
    std::vector<long> cur;
    // compositions in lexicographic order via recursion on the first part
    struct Rec {
        std::vector<SimplexType>& out;
        std::vector<long>& cur;
        void go(long rest)
        {
            if (rest == 0) {
                out.emplace_back(cur);
                return;
            }
            for (long first = 1; first <= rest; ++first) {
                cur.push_back(first);
                go(rest - first);
                cur.pop_back();
            }
        }
    } rec{out, cur};
    rec.go(total);
    return out;
}

} // namespace

TEST_CASE("star census matches the spec examples")
{
    const auto c1 = star_census(2, 1);
    CHECK(c1.at(SimplexType({1, 1})) == 3);
    CHECK(c1.at(SimplexType({2})) == 1);

    const auto c2 = star_census(2, 2);
    CHECK(c2.at(SimplexType({1, 2})) == 7);
    CHECK(c2.at(SimplexType({2, 1})) == 7);
    CHECK(c2.at(SimplexType({1, 1, 1})) == 21);
    CHECK(c2.at(SimplexType({3})) == 1);
}

TEST_CASE("star census equals Gaussian multinomials")
{
    for (std::uint64_t q : {2, 3})
        for (long d = 1; d <= 3; ++d) {
            const auto census = star_census(q, d);
            for (const auto& type : compositions_of(d + 1)) {
                BigInt expect = 1;
                long remaining = d + 1;
                for (long i = 0; i + 1 <= type.k(); ++i) {
                    expect *= gaussian_binomial(remaining, type.e[static_cast<std::size_t>(i)], q);
                    remaining -= type.e[static_cast<std::size_t>(i)];
                }
                REQUIRE(census.count(type) == 1);
                CHECK(census.at(type) == expect);
            }
        }
}

TEST_CASE("beta closed forms")
{
    CHECK(beta_values(2, SimplexType({1, 1})) == std::vector<BigInt>{2});
    CHECK(beta_values(2, SimplexType({1, 1, 1})) == std::vector<BigInt>{4, 2});
    CHECK(beta_values(3, SimplexType({2, 1})) == std::vector<BigInt>{24});
    CHECK(beta_values(2, SimplexType({2})).empty()); // vertex: k = 0
}

TEST_CASE("beta closed form equals exhaustive counting")
{
    for (std::uint64_t q : {2, 3})
        for (long d = 1; d <= 3; ++d)
            for (const auto& type : compositions_of(d + 1)) {
                if (type.k() < 1)
                    continue;
                CHECK(beta_values(q, type) == beta_values_counted(q, type));
            }
}

TEST_CASE("beta gcd identity")
{
    for (std::uint64_t q : {2, 3, 4, 5})
        for (long dp1 = 2; dp1 <= 7; ++dp1)
            for (const auto& type : compositions_of(dp1)) {
                if (type.k() < 1)
                    continue;
                const BigInt N = ipow(BigInt(q), static_cast<unsigned long>(dp1)) - 1;
                long m = dp1;
                for (long e : type.e)
                    m = std::gcd(m, e);
                std::vector<BigInt> values = {N};
                for (const auto& b : beta_values(q, type))
                    values.push_back(b);
                CHECK(gcd_list(values) == ipow(BigInt(q), static_cast<unsigned long>(m)) - 1);
            }
}

TEST_CASE("beta totals exhaust the nonzero vectors")
{
    for (std::uint64_t q : {2, 3, 4})
        for (long dp1 = 2; dp1 <= 5; ++dp1)
            for (const auto& type : compositions_of(dp1)) {
                const BigInt N = ipow(BigInt(q), static_cast<unsigned long>(dp1)) - 1;
                BigInt sum = 0;
                for (const auto& b : beta_values(q, type))
                    sum += b;
                // the missing block is the one on the trivial coordinate
                const long ek = type.e.back();
                const BigInt last = ipow(BigInt(q), static_cast<unsigned long>(ek)) - 1;
                CHECK(sum + last == N);
            }
}

TEST_CASE("level_of")
{
    CHECK(level_of({1, 0, 0}, SimplexType({1, 1, 1})) == 0);
    CHECK(level_of({1, 0, 0}, SimplexType({2, 1})) == 0);
    CHECK(level_of({0, 1, 1}, SimplexType({1, 1, 1})) == 2);
    CHECK(level_of({1, 1, 0}, SimplexType({2, 1})) == 0);
    CHECK_THROWS_AS(level_of({0, 0, 0}, SimplexType({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("m and the vanishing predicate")
{
    const auto r1 = m_and_vanishing(CharacterIndex(2, 1, 1), SimplexType({1, 1}));
    CHECK(r1.m == 1);
    CHECK(r1.vanishes);
    const auto r2 = m_and_vanishing(CharacterIndex(2, 1, 0), SimplexType({1, 1}));
    CHECK(r2.m == 1);
    CHECK_FALSE(r2.vanishes);
    const auto r3 = m_and_vanishing(CharacterIndex(2, 2, 1), SimplexType({1, 1, 1}));
    CHECK(r3.m == 1);
    CHECK(r3.vanishes);
    CHECK_THROWS_AS(m_and_vanishing(CharacterIndex(2, 1, 1), SimplexType({2})),
                    std::invalid_argument);
}

TEST_CASE("primitive characters kill every positive simplex type")
{
    for (std::uint64_t q : {2, 3, 4})
        for (long d = 1; d <= 4; ++d) {
            const BigInt N = ipow(BigInt(q), static_cast<unsigned long>(d + 1)) - 1;
            const auto types = compositions_of(d + 1);
            bool ok = true;
            for (BigInt j = 0; j < N; ++j) {
                const CharacterIndex chi(q, d, j);
                if (!is_primitive(chi))
                    continue;
                for (const auto& type : types) {
                    if (type.k() < 1)
                        continue;
                    if (!m_and_vanishing(chi, type).vanishes)
                        ok = false;
                }
            }
            CHECK_MESSAGE(ok, "vanishing fails for q=" << q << " d=" << d);
        }
}

TEST_CASE("bfs vertex counts")
{
    CHECK(bfs_vertices(2, 1, 0).labels.size() == 1);
    CHECK(bfs_vertices(2, 1, 1).labels.size() == 4);
    CHECK(bfs_vertices(3, 1, 2).labels.size() == 17);
    // regular tree of valence q+1
    for (std::uint64_t q : {2, 3})
        for (long R = 0; R <= 3; ++R) {
            std::uint64_t expect = 1, layer = q + 1;
            for (long i = 0; i < R; ++i) {
                expect += layer;
                layer *= q;
            }
            CHECK(bfs_vertices(q, 1, R).labels.size() == expect);
        }
}

TEST_CASE("bfs adjacency is the tree structure for d = 1")
{
    const auto B = bfs_vertices(2, 1, 2);
    REQUIRE(B.labels.size() == 10);
    CHECK(B.adjacency[0].size() == 3);
    // no cycles: edges = vertices - 1 within the truncation
    std::size_t edge_twice = 0;
    for (const auto& adj : B.adjacency)
        edge_twice += adj.size();
    CHECK(edge_twice == 2 * (B.labels.size() - 1));
    // depths count the spheres
    long c0 = 0, c1 = 0, c2 = 0;
    for (long dep : B.depth)
        (dep == 0 ? c0 : dep == 1 ? c1 : c2) += 1;
    CHECK(c0 == 1);
    CHECK(c1 == 3);
    CHECK(c2 == 6);
}

TEST_CASE("bfs budget")
{
    CHECK_THROWS_AS(bfs_vertices(3, 2, 3, 50), BudgetError);
}

TEST_CASE("vertex star in the building matches the flag census")
{
    // neighbors of the origin = proper nonzero subspaces of F_q^{d+1}
    for (std::uint64_t q : {2, 3}) {
        const auto B = bfs_vertices(q, 2, 1);
        BigInt expect = 0;
        const auto census = star_census(q, 2);
        for (const auto& [type, cnt] : census)
            if (type.k() == 1)
                expect += cnt;
        CHECK(BigInt(B.adjacency[0].size()) == expect);
    }
}

TEST_CASE("cech E1 for the tree")
{
    const auto rep = cech_e1(2, 1, 1, CharacterIndex(2, 1, 1));
    REQUIRE(rep.primitive);
    CHECK(rep.total_hd == BigInt(4));
    CHECK(rep.entries.at({0, 1}) == BigInt(4));
    CHECK(rep.entries.at({0, 0}) == BigInt(0));
    CHECK(rep.entries.at({1, 0}) == BigInt(0));
    CHECK(rep.entries.at({1, 1}) == BigInt(0));
    CHECK(rep.simplex_counts == std::vector<long>{4, 3});
}

TEST_CASE("cech E1 for the plane at radius zero")
{
    const auto rep = cech_e1(2, 2, 0, CharacterIndex(2, 2, 1));
    REQUIRE(rep.primitive);
    CHECK(rep.total_hd == BigInt(3));
    CHECK(rep.entries.at({0, 2}) == BigInt(3));
    CHECK(rep.simplex_counts == std::vector<long>{1, 0, 0});
}

TEST_CASE("cech refuses to fabricate non-primitive entries")
{
    const auto rep = cech_e1(2, 1, 1, CharacterIndex(2, 1, 0));
    CHECK_FALSE(rep.primitive);
    CHECK_FALSE(rep.total_hd.has_value());
    for (const auto& [rs, v] : rep.entries)
        CHECK_FALSE(v.has_value());
}

TEST_CASE("jl multiplicity")
{
    CHECK(jl_multiplicity(1) == 2);
    CHECK(jl_multiplicity(4) == 5);
    for (long d = 1; d <= 6; ++d)
        CHECK(jl_multiplicity(d) == d + 1);
    CHECK_THROWS_AS(jl_multiplicity(0), std::invalid_argument);
}
