#include "tamecover/derham.hpp"
#include "tamecover/torseur.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace tamecover;

namespace {

std::vector<TorseurClass> all_classes(long n, long d)
{
    std::vector<TorseurClass> out;
    long total = n;
    for (long i = 0; i < d; ++i)
        total *= n;
    for (long a = 0; a < n; ++a)
        for (long code = 0; code < total; ++code) {
            long c = code;
            std::vector<long> beta(static_cast<std::size_t>(d));
            for (long i = 0; i < d; ++i) {
                beta[static_cast<std::size_t>(i)] = c % n;
                c /= n;
            }
            out.emplace_back(n, a, beta);
        }
    return out;
}

} // namespace

TEST_CASE("addition examples")
{
    CHECK(add_classes(TorseurClass(4, 1, {1, 0}), TorseurClass(4, 0, {0, 1})) ==
          TorseurClass(4, 1, {1, 1}));
    CHECK(add_classes(TorseurClass(5, 2, {2}), TorseurClass(5, 3, {3})) == TorseurClass(5, 0, {0}));
    const TorseurClass c(6, 2, {3, 5});
    CHECK(add_classes(c, scalar_multiple(c, 5)) == TorseurClass(6, 0, {0, 0}));
    CHECK_THROWS_AS(add_classes(TorseurClass(4, 0, {1}), TorseurClass(5, 0, {1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(add_classes(TorseurClass(4, 0, {1}), TorseurClass(4, 0, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively for small n and d")
{
    for (long n : {2L, 3L, 4L})
        for (long d : {1L, 2L}) {
            const auto classes = all_classes(n, d);
            const TorseurClass zero(n, 0, std::vector<long>(static_cast<std::size_t>(d), 0));
            bool ok = true;
            for (const auto& a : classes) {
                if (!(add_classes(a, zero) == a))
                    ok = false;
                if (!(add_classes(a, scalar_multiple(a, n - 1)) == zero))
                    ok = false;
                for (const auto& b : classes) {
                    if (!(add_classes(a, b) == add_classes(b, a)))
                        ok = false;
                    for (const auto& c : classes)
                        if (!(add_classes(add_classes(a, b), c) == add_classes(a, add_classes(b, c))))
                            ok = false;
                }
            }
            CHECK_MESSAGE(ok, "group axioms fail for n=" << n << " d=" << d);
        }
}

TEST_CASE("pi0 examples")
{
    CHECK(pi0_of_class(TorseurClass(6, 0, {2, 4})) == 2);
    CHECK(pi0_of_class(TorseurClass(5, 3, {0, 0})) == 5);
    CHECK(pi0_of_class(TorseurClass(7, 0, {3})) == 1);
}

TEST_CASE("pi0 of multiples")
{
    for (long n = 1; n <= 8; ++n)
        for (const auto& c : all_classes(n, 2))
            for (long k = 0; k < n; ++k) {
                long expect = n;
                for (long b : c.beta_mod)
                    expect = std::gcd(expect, k * b % n);
                CHECK(pi0_of_class(scalar_multiple(c, k)) == expect);
            }
}

TEST_CASE("product splitting and recombination")
{
    const auto [s, c] = split_product_class(TorseurClass(4, 1, {1, 3}), {true, false});
    CHECK(s == TorseurClass(4, 1, {1, 0}));
    CHECK(c == TorseurClass(4, 0, {0, 3}));

    const auto [s0, c0] = split_product_class(TorseurClass(3, 0, {0, 0}), {true, false});
    CHECK(s0 == TorseurClass(3, 0, {0, 0}));
    CHECK(c0 == TorseurClass(3, 0, {0, 0}));

    for (long n : {2L, 3L, 4L})
        for (long d : {1L, 2L, 3L})
            for (const auto& cls : all_classes(n, d))
                for (long mask = 0; mask < (1L << d); ++mask) {
                    AxisOwnership own;
                    for (long i = 0; i < d; ++i)
                        own.push_back((mask >> i) & 1);
                    const auto [a, b] = split_product_class(cls, own);
                    CHECK(add_classes(a, b) == cls);
                }
}

TEST_CASE("etale rank matches the trivial-cover isotypic dimension")
{
    CHECK(etale_rank(2, 1) == 2);
    CHECK(etale_rank(3, 0) == 1);
    CHECK(etale_rank(3, 3) == 1);
    CHECK_THROWS_AS(etale_rank(2, 3), std::invalid_argument);
    for (long d = 1; d <= 4; ++d)
        for (long q = 0; q <= d; ++q)
            CHECK(etale_rank(d, q) == isotypic_dimension(CoverSpec::trivial(d), q, 0));
}
