#include "dq/curves.hpp"

#include <string>

#include "dq/errors.hpp"

namespace dq {

namespace {

void validate(const Params& pr) {
    if (pr.q.is_zero()) throw InvalidParams("q must be nonzero");
    if (pr.x1.is_zero() || pr.y1.is_zero())
        throw InvalidParams("base point must avoid the axes (x1*y1 != 0)");
    if (pr.m.is_zero() || pr.m == sq(pr.q))
        throw InvalidParams("m in {0, q^2} does not give a genus-one curve");
    if ((sq(pr.x1) - pr.q) * (sq(pr.y1) - pr.q) != pr.m)
        throw InvalidParams("base point (x1,y1) is not on the curve of product m");
}

}  // namespace

Params Params::from_base_point(Rational q, Rational x1, Rational y1) {
    Rational m = (sq(x1) - q) * (sq(y1) - q);
    Params pr{std::move(q), std::move(m), std::move(x1), std::move(y1)};
    validate(pr);
    return pr;
}

Params Params::checked(Rational q, Rational m, Rational x1, Rational y1) {
    Params pr{std::move(q), std::move(m), std::move(x1), std::move(y1)};
    validate(pr);
    return pr;
}

ECurve<Rational> curve_q(const Params& pr) { return {pr.a2(), pr.a4()}; }

ECurve<QuadExtElem> curve_ext(const Params& pr) {
    const Rational zero(0);
    return {QuadExtElem(pr.a2(), zero, pr.q), QuadExtElem(pr.a4(), zero, pr.q)};
}

bool on_curve_E(const Params& pr, const EPoint& p) { return curve_q(pr).contains(p); }

bool on_curve_D(const Params& pr, const Rational& x, const Rational& y) {
    return (sq(x) - pr.q) * (sq(y) - pr.q) == pr.m;
}

EPoint point_R(const Params& pr) { return {pr.m, 2 * pr.m * pr.q}; }

EPoint point_S(const Params& pr) {
    const Rational w = sq(sq(pr.x1) - pr.q);
    return {sq(pr.y1) * w / sq(pr.x1),
            pr.q * pr.y1 * (sq(pr.x1) + sq(pr.y1)) * w / (sq(pr.x1) * pr.x1)};
}

namespace {

void require_on_curve(const Params& pr, const EPoint& p, const char* who) {
    if (!on_curve_E(pr, p))
        throw PointNotOnCurve(std::string(who) + ": point is not on the Weierstrass curve");
}

}  // namespace

EPoint e_add(const Params& pr, const EPoint& p, const EPoint& r) {
    require_on_curve(pr, p, "e_add");
    require_on_curve(pr, r, "e_add");
    return curve_q(pr).add(p, r);
}

EPoint e_neg(const Params& pr, const EPoint& p) {
    require_on_curve(pr, p, "e_neg");
    return curve_q(pr).neg(p);
}

EPoint e_scalar_mul(const Params& pr, long n, const EPoint& p) {
    require_on_curve(pr, p, "e_scalar_mul");
    return curve_q(pr).mul(n, p);
}

GDivisorExt g_divisor_ext(const Params& pr) {
    const Rational zero(0), one(1);
    const QuadExtElem q(pr.q, zero, pr.q), x1(pr.x1, zero, pr.q), y1(pr.y1, zero, pr.q);
    const QuadExtElem root(zero, one, pr.q);
    return g_divisor(q, x1, y1, root);
}

GDivisor g_divisor_rational(const Params& pr) {
    return g_divisor(pr.q, pr.x1, pr.y1, sqrt_exact(pr.q));
}

EPointExt lift_ext(const Params& pr, const EPoint& p) {
    if (p.inf) return {};
    const Rational zero(0);
    return {QuadExtElem(p.T, zero, pr.q), QuadExtElem(p.W, zero, pr.q)};
}

}  // namespace dq
