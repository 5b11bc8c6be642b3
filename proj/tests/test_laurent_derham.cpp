#include "tamecover/derham.hpp"
#include "tamecover/forms.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace tamecover;
using namespace tamecover::testutil;

TEST_CASE("differential on the base torus")
{
    CoverSpec cv = CoverSpec::trivial(1);
    IsoForm w(cv, 0, 0);
    w.add_term(0, {1}, 1); // x1
    const IsoForm dw = differential(w);
    IsoForm expect(cv, 1, 0);
    expect.add_term(0b1, {1}, 1); // x1 dlog x1
    CHECK(dw == expect);

    IsoForm gen(cv, 1, 0);
    gen.add_term(0b1, {0}, 1); // dlog x1
    CHECK(differential(gen).is_zero());
}

TEST_CASE("differential kills the locally constant unit")
{
    // t^2 = x^2: t0 = t/x is locally constant, so d(t * x^{-1}) = 0
    CoverSpec cv(TorusSpec(1), 2, {2});
    IsoForm w(cv, 0, 1);
    w.add_term(0, {-1}, 1);
    CHECK(differential(w).is_zero());
}

TEST_CASE("integrate")
{
    CoverSpec cv = CoverSpec::trivial(1);
    IsoForm w(cv, 0, 0);
    w.add_term(0, {2}, 1);
    IsoForm expect(cv, 0, 0);
    expect.add_term(0, {2}, Rational(1, 2));
    CHECK(integrate(w, 1) == expect);

    IsoForm c(cv, 0, 0);
    c.add_term(0, {0}, 5);
    CHECK(integrate(c, 1).is_zero()); // constants drop

    CoverSpec cv2(TorusSpec(1), 2, {2});
    IsoForm tw(cv2, 0, 1);
    tw.add_term(0, {1}, 1); // t * x1
    IsoForm texpect(cv2, 0, 1);
    texpect.add_term(0, {1}, Rational(2, 4)); // n/(n*nu + iso*beta) = 2/4
    CHECK(integrate(tw, 1) == texpect);
}

TEST_CASE("reduce_to_class strips exact parts")
{
    CoverSpec cv = CoverSpec::trivial(2);
    IsoForm w(cv, 1, 0);
    w.add_term(0b01, {0, 0}, 3); // 3 dlog x1
    IsoForm xy(cv, 0, 0);
    xy.add_term(0, {1, 1}, 1); // x1 x2
    w = w + differential(xy);

    const auto res = reduce_to_class(w);
    REQUIRE(res.cls.coords.size() == 1);
    CHECK(res.cls.coords.at({0, 0b01}) == 3);
    CHECK(res.primitive == xy);
    CHECK(w - canonical_form(res.cls) == differential(res.primitive));
}

TEST_CASE("reduce_to_class of an exact form")
{
    CoverSpec cv = CoverSpec::trivial(1);
    IsoForm w(cv, 1, 0);
    w.add_term(0b1, {1}, 1); // x1 dlog x1 = d(x1)
    const auto res = reduce_to_class(w);
    CHECK(res.cls.coords.empty());
    IsoForm x1(cv, 0, 0);
    x1.add_term(0, {1}, 1);
    CHECK(res.primitive == x1);
}

TEST_CASE("reduce_to_class keeps locally constant multiples of generators")
{
    // t0^2 is the scalar lambda = 1 on this cover, so the input is dlog x2
    CoverSpec cv(TorusSpec(2), 2, {2, 0});
    REQUIRE(cv.pi0 == 2);
    IsoForm w(cv, 1, 0);
    w.add_term(0b10, {0, 0}, 1);
    const auto res = reduce_to_class(w);
    REQUIRE(res.cls.coords.size() == 1);
    CHECK(res.cls.coords.at({0, 0b10}) == 1);
    CHECK(res.primitive.is_zero());
}

TEST_CASE("reduce_to_class rejects non-closed input")
{
    CoverSpec cv = CoverSpec::trivial(2);
    IsoForm w(cv, 1, 0);
    w.add_term(0b01, {0, 1}, 1); // x2 dlog x1 is not closed
    CHECK_THROWS_AS(reduce_to_class(w), NotClosedError);
}

TEST_CASE("canonical generators are not exact")
{
    Rng rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const CoverSpec cv = rand_cover(rng);
        const long q = rand_range(rng, 0, cv.d());
        const long a = rand_range(rng, 0, cv.pi0 - 1);
        std::vector<AxisSet> masks;
        for (AxisSet I = 0; I < (AxisSet(1) << cv.d()); ++I)
            if (popcount(I) == q)
                masks.push_back(I);
        const AxisSet I = masks[static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(masks.size()) - 1))];
        const IsoForm gen = canonical_generator(cv, a, I, 1);
        const auto res = reduce_to_class(gen);
        REQUIRE(res.cls.coords.size() == 1);
        CHECK(res.cls.coords.at({a, I}) == 1);
        CHECK(res.primitive.is_zero());
    }
}

TEST_CASE("d of d vanishes on random forms")
{
    Rng rng(7002);
    for (int trial = 0; trial < 300; ++trial) {
        const CoverSpec cv = rand_cover(rng);
        const long q = rand_range(rng, 0, cv.d());
        const IsoForm w = rand_form(rng, cv, q, rand_range(rng, 0, cv.n - 1));
        CHECK(differential(differential(w)).is_zero());
    }
}

TEST_CASE("round trips recover coordinates exactly")
{
    Rng rng(7003);
    for (int trial = 0; trial < 200; ++trial) {
        const CoverSpec cv = rand_cover(rng);
        const long q = rand_range(rng, 0, cv.d());
        const long a = rand_range(rng, 0, cv.pi0 - 1);
        const RoundTrip rt = rand_round_trip(rng, cv, q, a);
        const auto res = reduce_to_class(rt.w);
        CHECK(res.cls.coords == rt.expected.coords);
        CHECK(reduction_identity(rt.w, res.cls, res.primitive));
    }
}

TEST_CASE("reduction never reads the radii metadata")
{
    Rng rng(7004);
    TorusSpec plain(2);
    TorusSpec decorated(2);
    decorated.log_s = {Rational(-3), Rational(-2)};
    decorated.log_r = {Rational(1), Rational(2)};
    decorated.log_rho = Rational(-1);
    decorated.log_mu = Rational(1);
    const CoverSpec c1(plain, 4, {2, 1});
    const CoverSpec c2(decorated, 4, {2, 1});
    for (int trial = 0; trial < 20; ++trial) {
        const long a = rand_range(rng, 0, c1.pi0 - 1);
        Rng rng_a = rng, rng_b = rng; // identical draws on both covers
        const RoundTrip rt1 = rand_round_trip(rng_a, c1, 1, a);
        const RoundTrip rt2 = rand_round_trip(rng_b, c2, 1, a);
        rng = rng_a;
        const auto r1 = reduce_to_class(rt1.w);
        const auto r2 = reduce_to_class(rt2.w);
        CHECK(r1.cls.coords == r2.cls.coords);
        CHECK(r1.primitive == r2.primitive);
    }
}

TEST_CASE("isotypic and total dimensions")
{
    const CoverSpec c64(TorusSpec(2), 6, {2, 4});
    CHECK(isotypic_dimension(c64, 1, 0) == 2);
    CHECK(isotypic_dimension(c64, 1, 1) == 0);
    CHECK(isotypic_dimension(CoverSpec::trivial(2), 2, 0) == 1);
    CHECK(cohomology_dimension(CoverSpec(TorusSpec(1), 2, {1}), 1) == 1);
    CHECK(cohomology_dimension(c64, 1) == 4);
    for (long q = 0; q <= 3; ++q)
        CHECK(cohomology_dimension(CoverSpec::trivial(3), q) == binomial(3, q));
}

TEST_CASE("isotypic dimensions partition the total")
{
    Rng rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        const CoverSpec cv = rand_cover(rng);
        for (long q = 0; q <= cv.d(); ++q) {
            long sum = 0;
            for (long i = 0; i < cv.n; ++i)
                sum += isotypic_dimension(cv, q, i);
            CHECK(sum == cohomology_dimension(cv, q));
        }
    }
}

TEST_CASE("koszul oracle examples")
{
    CHECK(koszul_oracle(CoverSpec::trivial(2), 1, ExponentBox::centered(2, 2)) == 2);
    CHECK(koszul_oracle(CoverSpec(TorusSpec(1), 2, {1}), 0, ExponentBox::centered(1, 3)) == 1);
    CHECK(koszul_oracle(CoverSpec(TorusSpec(2), 6, {2, 4}), 2, ExponentBox::centered(2, 4)) == 2);
}

TEST_CASE("koszul oracle agrees with the closed form on a sample")
{
    Rng rng(7006);
    for (int trial = 0; trial < 40; ++trial) {
        const CoverSpec cv = rand_cover(rng, 8, 2, 4);
        const auto all = koszul_oracle_all(cv, ExponentBox::centered(cv.d(), 4));
        for (long q = 0; q <= cv.d(); ++q)
            CHECK(all[static_cast<std::size_t>(q)] == cohomology_dimension(cv, q));
    }
}

TEST_CASE("degenerate dimension zero cover")
{
    const CoverSpec pt(TorusSpec(0), 5, {});
    CHECK(pt.pi0 == 5);
    CHECK(cohomology_dimension(pt, 0) == 5);
    CHECK(cohomology_dimension(pt, 1) == 0);
    CHECK(koszul_oracle(pt, 0, ExponentBox::centered(0, 0)) == 5);
}

TEST_CASE("kunneth examples")
{
    const CoverSpec a(TorusSpec(1), 3, {1});
    const CoverSpec b(TorusSpec(1), 3, {2});
    CHECK(kunneth_dimension(a, b, 0, 1) == 2);
    CHECK(kunneth_dimension(a, b, 1, 1) == 0);
    const CoverSpec t = CoverSpec::trivial(1);
    CHECK(kunneth_dimension(t, t, 0, 2) == 1);
    CHECK_THROWS_AS(kunneth_dimension(a, t, 0, 1), std::invalid_argument);
}

TEST_CASE("kunneth agrees with the concatenated cover")
{
    // independent route: glue the covers along the torsor sum and use the
    // closed-form isotypic dimension of the concatenated Kummer datum
    Rng rng(7007);
    for (long n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            const long da = rand_range(rng, 1, 2), db = rand_range(rng, 1, 2);
            std::vector<long> ba, bb;
            for (long i = 0; i < da; ++i)
                ba.push_back(rand_range(rng, -2, 2));
            for (long i = 0; i < db; ++i)
                bb.push_back(rand_range(rng, -2, 2));
            const CoverSpec A(TorusSpec(da), n, ba);
            const CoverSpec B(TorusSpec(db), n, bb);
            std::vector<long> bc = ba;
            bc.insert(bc.end(), bb.begin(), bb.end());
            const CoverSpec C(TorusSpec(da + db), n, bc);
            for (long iso = 0; iso < n; ++iso)
                for (long q = 0; q <= da + db; ++q)
                    CHECK(kunneth_dimension(A, B, iso, q) == isotypic_dimension(C, q, iso));
        }
}
