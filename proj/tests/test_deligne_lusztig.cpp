#include "tamecover/dl.hpp"

#include <doctest.h>

#include <random>

using namespace tamecover;

namespace {

Point rand_point(std::mt19937_64& rng, const DLContext& ctx)
{
    Point z(static_cast<std::size_t>(ctx.params().d) + 1);
    std::uniform_int_distribution<std::uint64_t> dist(0, ctx.field().size() - 1);
    do {
        for (auto& c : z)
            c = dist(rng);
    } while (std::all_of(z.begin(), z.end(), [](std::uint64_t c) { return c == 0; }));
    return z;
}

} // namespace

TEST_CASE("unit vanishes exactly on rational hyperplanes")
{
    DLContext ctx(DLParams(2, 1, 1)); // F_2 coordinates
    CHECK(linear_form_product(ctx, {1, 1}) == 0);
    CHECK(linear_form_product(ctx, {0, 1}) == 0);
    CHECK(linear_form_product(ctx, {1, 0}) == 0);

    DLContext c4(DLParams(2, 1, 2)); // F_4: codes 0,1,2,3 with 2 = x
    const auto& F = c4.field();
    const std::uint64_t omega = 2;
    CHECK(linear_form_product(c4, {1, omega}) == F.from_int(1));
    CHECK(linear_form_product(c4, {0, omega}) == 0); // zero coordinate
}

TEST_CASE("moore determinant")
{
    DLContext c4(DLParams(2, 1, 2));
    const auto& F = c4.field();
    std::mt19937_64 rng(42);
    // d=1 expansion z0 z1^q - z0^q z1
    for (int t = 0; t < 50; ++t) {
        const Point z = rand_point(rng, c4);
        const std::uint64_t expect =
            F.sub(F.mul(z[0], F.pow(z[1], 2)), F.mul(F.pow(z[0], 2), z[1]));
        CHECK(moore_determinant(c4, z) == expect);
    }
    CHECK(moore_determinant(c4, {1, 2}) == F.from_int(1)); // omega^2 + omega = 1
    CHECK(moore_determinant(c4, {2, 2}) == 0);             // equal coordinates
}

TEST_CASE("moore identity exhaustively on small fields")
{
    for (auto [q, d, m] : {std::tuple<std::uint64_t, long, long>{2, 1, 1},
                           {2, 1, 2},
                           {2, 2, 1},
                           {3, 1, 1},
                           {3, 1, 2}}) {
        DLContext ctx(DLParams(q, d, m));
        const auto& F = ctx.field();
        const std::uint64_t fsz = F.size();
        std::uint64_t total = 1;
        for (long i = 0; i <= d; ++i)
            total *= fsz;
        bool ok = true;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t c = code;
            Point z(static_cast<std::size_t>(d + 1));
            for (long i = 0; i <= d; ++i) {
                z[static_cast<std::size_t>(i)] = c % fsz;
                c /= fsz;
            }
            const std::uint64_t lhs = F.pow(moore_determinant(ctx, z), q - 1);
            std::uint64_t rhs = linear_form_product(ctx, z); // = (-1)^d u
            if (d & 1)
                rhs = F.neg(rhs);
            if (lhs != rhs)
                ok = false;
        }
        CHECK_MESSAGE(ok, "moore identity fails for q=" << q << " d=" << d << " m=" << m);
    }
}

TEST_CASE("point counts")
{
    CHECK(enumerate_points(DLContext(DLParams(2, 1, 1))).dl_count == 0);
    CHECK(enumerate_points(DLContext(DLParams(2, 1, 1))).omega_count == 0);

    const auto c212 = enumerate_points(DLContext(DLParams(2, 1, 2)));
    CHECK(c212.dl_count == 6); // pinned after the first oracle run
    CHECK(c212.omega_count == 2);

    const auto c312 = enumerate_points(DLContext(DLParams(3, 1, 2)));
    CHECK(c312.dl_count == 48); // pinned: N * omega = 8 * 6
    CHECK(c312.omega_count == 6);
}

TEST_CASE("moore route and direct product agree pointwise")
{
    for (auto [q, d, m] :
         {std::tuple<std::uint64_t, long, long>{2, 2, 1}, {3, 1, 2}, {2, 1, 2}, {3, 2, 1}}) {
        DLContext ctx(DLParams(q, d, m));
        std::mt19937_64 rng(17);
        bool ok = true;
        for (int t = 0; t < 200; ++t) {
            const Point z = rand_point(rng, ctx);
            if (linear_form_product(ctx, z) != linear_form_product_via_moore(ctx, z))
                ok = false;
        }
        CHECK(ok);
    }
}

TEST_CASE("budget errors carry the required size")
{
    CHECK_THROWS_AS(DLContext(DLParams(2, 1, 30), 1 << 20), BudgetError);
    DLContext small(DLParams(2, 1, 2));
    CHECK_THROWS_AS(enumerate_points(small, 8), BudgetError);
    try {
        enumerate_points(small, 8);
    } catch (const BudgetError& e) {
        CHECK(e.required == 16);
    }
}

TEST_CASE("gl invariance")
{
    DLContext ctx(DLParams(2, 1, 2));
    std::mt19937_64 rng(5);
    const std::vector<std::vector<std::uint64_t>> id = {{1, 0}, {0, 1}};
    const std::vector<std::vector<std::uint64_t>> perm = {{0, 1}, {1, 0}};
    for (int t = 0; t < 20; ++t) {
        const Point z = rand_point(rng, ctx);
        CHECK(check_gl_invariance(ctx, id, z));
        CHECK(check_gl_invariance(ctx, perm, z));
    }
    // exhaustive over GL_2(F_2) x F_4^2
    bool ok = true;
    int invertible = 0;
    for (std::uint64_t a = 0; a < 2; ++a)
        for (std::uint64_t b = 0; b < 2; ++b)
            for (std::uint64_t c = 0; c < 2; ++c)
                for (std::uint64_t dd = 0; dd < 2; ++dd) {
                    if ((a * dd + b * c) % 2 == 0)
                        continue; // singular in characteristic 2
                    ++invertible;
                    const std::vector<std::vector<std::uint64_t>> g = {{a, b}, {c, dd}};
                    for (std::uint64_t code = 1; code < 16; ++code) {
                        const Point z = {code % 4, code / 4};
                        if (!check_gl_invariance(ctx, g, z))
                            ok = false;
                    }
                }
    CHECK(ok);
    CHECK(invertible == 6); // |GL_2(F_2)|
    CHECK_THROWS_AS(check_gl_invariance(ctx, {{1, 1}, {1, 1}}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_gl_invariance(ctx, {{2, 0}, {0, 1}}, {1, 2}),
                    std::invalid_argument); // entry outside F_2
}

TEST_CASE("free scaling action")
{
    const auto rep = check_free_scaling_action(DLContext(DLParams(2, 1, 2)));
    CHECK(rep.ok);
    CHECK(rep.scalar_order == 3);
    CHECK(rep.fiber_size == 3);
    CHECK(rep.image_count == 2);
    CHECK(rep.dl_count == 6);

    const auto rep31 = check_free_scaling_action(DLContext(DLParams(3, 1, 2)));
    CHECK(rep31.ok);
    CHECK(rep31.fiber_size == 8);
    CHECK(rep31.image_count == 6);
    CHECK(rep31.dl_count == 48);

    CHECK_THROWS_AS(check_free_scaling_action(DLContext(DLParams(2, 1, 3))), std::invalid_argument);
}
