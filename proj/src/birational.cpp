#include "dq/birational.hpp"

#include <stdexcept>
#include <vector>

#include "dq/errors.hpp"
#include "dq/polyroots.hpp"

namespace dq {

EPoint f_map(const Params& pr, const DPoint& p) {
    if (!on_curve_D(pr, p)) throw PointNotOnCurve("f_map: point is not on the product curve");
    const Rational &x = p.x, &y = p.y, &q = pr.q, &x1 = pr.x1, &y1 = pr.y1;

    if (y == y1 || y == -y1) {
        // On the curve y = ±y1 forces x = ±x1, where the printed formulas
        // degenerate; these four images are pinned instead.
        const auto curve = curve_q(pr);
        if (y == y1) {
            if (x == x1) return {};  // infinity
            return point_S(pr);
        }
        const EPoint two_r = curve.add(point_R(pr), point_R(pr));  // (0,0)
        if (x == x1) return curve.add(point_S(pr), two_r);
        return two_r;
    }

    const Rational t = (sq(y1) - q) *
                       (2 * x1 * (sq(y) - q) * x + (sq(x1) + q) * sq(y) + sq(x1) * sq(y1) -
                        2 * sq(x1) * q - sq(y1) * q) /
                       sq(y - y1);
    const Rational w =
        t * (2 * y1 * x * (q - sq(y)) + 2 * x1 * y * (q - sq(y1))) / (sq(y) - sq(y1));
    return {t, w};
}

namespace {

// Images of the eight points (±x1,±y1), (±y1,±x1), where the generic inverse
// polynomial degenerates. Derived from the three printed anchors and the
// translation relations S−P ↔ (−x,y), P+R ↔ (−y,x).
struct Anchor {
    EPoint image;
    DPoint preimage;
};

std::vector<Anchor> anchor_table(const Params& pr) {
    const auto curve = curve_q(pr);
    const EPoint r = point_R(pr), s = point_S(pr);
    const EPoint r2 = curve.add(r, r), r3 = curve.add(r2, r);
    const Rational &x1 = pr.x1, &y1 = pr.y1;
    return {
        {r, {-y1, x1}},
        {r2, {-x1, -y1}},
        {r3, {y1, -x1}},
        {s, {-x1, y1}},
        {curve.add(s, r), {-y1, -x1}},
        {curve.add(s, r2), {x1, -y1}},
        {curve.add(s, r3), {y1, x1}},
    };
}

}  // namespace

DPoint f_inv(const Params& pr, const EPoint& p) {
    if (!on_curve_E(pr, p)) throw PointNotOnCurve("f_inv: point is not on the Weierstrass curve");
    const Rational &q = pr.q, &m = pr.m, &x1 = pr.x1, &y1 = pr.y1;
    if (p.inf) return {x1, y1};

    for (const Anchor& a : anchor_table(pr))
        if (p == a.image) return a.preimage;

    if (is_square(q)) {
        const GDivisor dv = g_divisor_rational(pr);
        for (const EPoint* sp : {&dv.zero1, &dv.pole1, &dv.zero2, &dv.pole2})
            if (p == *sp)
                throw NonAffineImage("f_inv: preimage lies at infinity on the projective closure");
    }

    // The T-formula is linear in x for fixed y: x = N(y) / (2x1(y²−q)).
    // Substituting into the curve equation leaves a quartic in y.
    const Rational alpha = p.T / (sq(y1) - q);
    const Rational n2 = alpha - sq(x1) - q;
    const Rational n1 = -2 * alpha * y1;
    const Rational n0 = alpha * sq(y1) - sq(x1) * sq(y1) + 2 * sq(x1) * q + sq(y1) * q;

    const Rational c4 = 4 * sq(x1);
    Poly f(5, Rational(0));
    f[0] = sq(n0) - c4 * (q * sq(q) - m * q);
    f[1] = 2 * n0 * n1;
    f[2] = sq(n1) + 2 * n0 * n2 - c4 * (m - 2 * sq(q));
    f[3] = 2 * n1 * n2;
    f[4] = sq(n2) - c4 * q;

    for (const Rational& y : rational_roots(f)) {
        if (sq(y) == q || y == y1 || y == -y1) continue;
        const Rational x = (n2 * sq(y) + n1 * y + n0) / (2 * x1 * (sq(y) - q));
        const DPoint cand{x, y};
        if (on_curve_D(pr, cand) && f_map(pr, cand) == p) return cand;
    }
    throw std::logic_error("f_inv: no rational preimage for a point that must have one");
}

Rational g_eval(const Params& pr, const EPoint& p) {
    if (!on_curve_E(pr, p)) throw PointNotOnCurve("g_eval: point is not on the Weierstrass curve");
    if (is_square(pr.q)) {
        const GDivisor dv = g_divisor_rational(pr);
        if (p == dv.pole1 || p == dv.pole2) throw PoleOfG("g has a pole at this point");
        if (p == dv.zero1 || p == dv.zero2) return Rational(0);
    }
    const DPoint pre = f_inv(pr, p);
    return (sq(pr.x1) - pr.q) * (sq(pre.x) - pr.q);
}

SquareClass g_square_class(const Params& pr, const EPoint& p) {
    return squarefree_part(g_eval(pr, p));
}

}  // namespace dq
