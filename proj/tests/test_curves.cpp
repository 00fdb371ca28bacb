#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dq/curves.hpp"
#include "dq/errors.hpp"
#include "support.hpp"

using dq::EPoint;
using dq::Params;
using dq::Rational;

TEST_CASE("params validation") {
    CHECK_NOTHROW(Params::checked(Rational(3), Rational(1012), Rational(5), Rational(7)));
    CHECK_NOTHROW(Params::from_base_point(Rational(-3), Rational(1), Rational(2)));
    CHECK(Params::from_base_point(Rational(-3), Rational(1), Rational(2)).m == Rational(28));

    CHECK_THROWS_AS(Params::checked(Rational(0), Rational(5), Rational(1), Rational(2)),
                    dq::InvalidParams);
    CHECK_THROWS_AS(Params::checked(Rational(3), Rational(1012), Rational(5), Rational(0)),
                    dq::InvalidParams);
    CHECK_THROWS_AS(Params::checked(Rational(3), Rational(1010), Rational(5), Rational(7)),
                    dq::InvalidParams);  // base point not on that curve
    // m = q²: x1²−q = q−... pick x1=3,y1=... (9−5)(y²−5)=25 → no; validate via from_base_point
    CHECK_THROWS_AS(Params::from_base_point(Rational(2), Rational(2), Rational(2)),
                    dq::InvalidParams);  // m = (4−2)² = 4 = q²
    CHECK_THROWS_AS(Params::from_base_point(Rational(4), Rational(2), Rational(3)),
                    dq::InvalidParams);  // x1² = q → m = 0
}

TEST_CASE("distinguished points R and S") {
    const Params p1 = Params::checked(Rational(1), Rational(2880), Rational(2), Rational(31));
    CHECK(dq::point_R(p1) == EPoint{Rational(2880), Rational(5760)});
    CHECK(dq::on_curve_E(p1, dq::point_R(p1)));

    const Params p2 = Params::checked(Rational(3), Rational(1012), Rational(5), Rational(7));
    CHECK(dq::point_R(p2) == EPoint{Rational(1012), Rational(6072)});
    // S = (7²·22²/5², 3·7·(5²+7²)·22²/5³)
    CHECK(dq::point_S(p2) ==
          EPoint{Rational(49 * 484, 25), Rational(3) * 7 * 74 * 484 / Rational(125)});
    CHECK(dq::on_curve_E(p2, dq::point_S(p2)));

    const Params p3 = Params::from_base_point(Rational(-3), Rational(1), Rational(2));
    CHECK(dq::point_S(p3) == EPoint{Rational(64), Rational(-480)});

    CHECK(!dq::on_curve_E(p2, EPoint{Rational(1), Rational(1)}));
    CHECK(dq::on_curve_D(p2, Rational(5), Rational(7)));
    CHECK(dq::on_curve_D(p2, Rational(7), Rational(5)));
    CHECK(!dq::on_curve_D(p2, Rational(5), Rational(8)));
}

TEST_CASE("R has exact order four with 2R = (0,0)") {
    dqtest::Rng rng(0xca11);
    for (int k = 0; k < 25; ++k) {
        const Params pr = rng.params();
        const auto curve = dq::curve_q(pr);
        const EPoint r = dq::point_R(pr);
        const EPoint r2 = curve.add(r, r);
        CHECK(r2 == EPoint{Rational(0), Rational(0)});
        CHECK(curve.add(r2, r2) == EPoint{});
        CHECK_FALSE(r2 == EPoint{});
        CHECK(dq::e_scalar_mul(pr, 4, r) == EPoint{});
        CHECK(dq::e_scalar_mul(pr, 1, r) == r);
        CHECK(dq::e_neg(pr, r) == EPoint{r.T, -r.W});
    }
}

TEST_CASE("group law: identity, inverses, commutativity, associativity") {
    dqtest::Rng rng(0x6a0b);
    for (int k = 0; k < 10; ++k) {
        const Params pr = rng.params();
        const auto curve = dq::curve_q(pr);
        const EPoint s = dq::point_S(pr), r = dq::point_R(pr);
        for (int t = 0; t < 12; ++t) {
            const EPoint a =
                curve.add(curve.mul(rng.integer(-3, 3), s), curve.mul(rng.integer(0, 3), r));
            const EPoint b =
                curve.add(curve.mul(rng.integer(-3, 3), s), curve.mul(rng.integer(0, 3), r));
            const EPoint c =
                curve.add(curve.mul(rng.integer(-3, 3), s), curve.mul(rng.integer(0, 3), r));
            CHECK(curve.add(a, EPoint{}) == a);
            CHECK(curve.add(a, curve.neg(a)) == EPoint{});
            CHECK(curve.add(a, b) == curve.add(b, a));
            CHECK(curve.add(curve.add(a, b), c) == curve.add(a, curve.add(b, c)));
            CHECK(curve.contains(curve.add(a, b)));
        }
    }
}

TEST_CASE("checked wrappers reject off-curve points") {
    const Params pr = Params::checked(Rational(3), Rational(1012), Rational(5), Rational(7));
    const EPoint bogus{Rational(1), Rational(1)};
    CHECK_THROWS_AS(dq::e_add(pr, bogus, dq::point_R(pr)), dq::PointNotOnCurve);
    CHECK_THROWS_AS(dq::e_neg(pr, bogus), dq::PointNotOnCurve);
    CHECK_THROWS_AS(dq::e_scalar_mul(pr, 2, bogus), dq::PointNotOnCurve);
}

TEST_CASE("scalar multiples against repeated addition") {
    dqtest::Rng rng(0x5ca1);
    const Params pr = rng.params();
    const auto curve = dq::curve_q(pr);
    const EPoint s = dq::point_S(pr);
    EPoint acc{};
    for (int n = 0; n <= 8; ++n) {
        CHECK(curve.mul(n, s) == acc);
        CHECK(curve.mul(-n, s) == curve.neg(acc));
        acc = curve.add(acc, s);
    }
    CHECK(curve.mul(0, s) == EPoint{});
}

TEST_CASE("divisor points of g over the quadratic extension") {
    dqtest::Rng rng(0xd1f0);
    int done = 0;
    while (done < 12) {
        const Params pr = rng.params(/*nonsquare_q=*/true);
        const auto curve = dq::curve_ext(pr);
        const auto dv = dq::g_divisor_ext(pr);
        for (const auto* p : {&dv.zero1, &dv.pole1, &dv.zero2, &dv.pole2})
            CHECK(curve.contains(*p));

        // conjugation swaps the two zeros and the two poles
        CHECK(dv.zero2.T == dv.zero1.T.conjugate());
        CHECK(dv.zero2.W == dv.zero1.W.conjugate());
        CHECK(dv.pole2.T == dv.pole1.T.conjugate());
        CHECK(dv.pole2.W == dv.pole1.W.conjugate());
        ++done;
    }
}

// 2·Z1 = 2·Z2 = S+2R, 2·P1 = 2·P2 = S, and adding R cycles Z1→P1→Z2→P2→Z1.
template <class F, class Curve, class Div, class Point>
static void check_divisor_identities(const Curve& curve, const Div& dv, const Point& s,
                                     const Point& r) {
    const Point s2r = curve.add(s, curve.add(r, r));
    CHECK(curve.add(dv.zero1, dv.zero1) == s2r);
    CHECK(curve.add(dv.zero2, dv.zero2) == s2r);
    CHECK(curve.add(dv.pole1, dv.pole1) == s);
    CHECK(curve.add(dv.pole2, dv.pole2) == s);
    CHECK(curve.add(dv.zero1, r) == dv.pole1);
    CHECK(curve.add(dv.pole1, r) == dv.zero2);
    CHECK(curve.add(dv.zero2, r) == dv.pole2);
    CHECK(curve.add(dv.pole2, r) == dv.zero1);
}

TEST_CASE("divisor point identities over Q(√q)") {
    dqtest::Rng rng(0x1dea);
    for (int k = 0; k < 12; ++k) {
        const Params pr = rng.params(/*nonsquare_q=*/true);
        const auto curve = dq::curve_ext(pr);
        check_divisor_identities<dq::QuadExtElem>(curve, dq::g_divisor_ext(pr),
                                                  dq::lift_ext(pr, dq::point_S(pr)),
                                                  dq::lift_ext(pr, dq::point_R(pr)));
    }
}

TEST_CASE("divisor points are rational when q is a square") {
    const Params pr = Params::from_base_point(Rational(4), Rational(3), Rational(5));
    const auto dv = dq::g_divisor_rational(pr);
    const auto curve = dq::curve_q(pr);
    for (const auto* p : {&dv.zero1, &dv.pole1, &dv.zero2, &dv.pole2}) CHECK(curve.contains(*p));
    // with √q = 2: zero1 = ((25−4)(3−2)², 2·5·2·(25−4)(3−2)²) = (21, 420)
    CHECK(dv.zero1 == dq::EPoint{Rational(21), Rational(420)});
    check_divisor_identities<Rational>(curve, dv, dq::point_S(pr), dq::point_R(pr));

    dqtest::Rng rng(0x509a);
    for (long qv : {1L, 4L, 9L}) {
        for (int k = 0; k < 4; ++k) {
            const Rational q(qv);
            const Rational x1 = rng.nonzero(9, 3), y1 = rng.nonzero(9, 3);
            Params p2{q, Rational(0), Rational(0), Rational(0)};
            try {
                p2 = Params::from_base_point(q, x1, y1);
            } catch (const dq::InvalidParams&) {
                --k;
                continue;
            }
            check_divisor_identities<Rational>(dq::curve_q(p2), dq::g_divisor_rational(p2),
                                               dq::point_S(p2), dq::point_R(p2));
        }
    }
}
