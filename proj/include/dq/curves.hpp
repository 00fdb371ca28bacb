#pragma once

#include <cstdlib>
#include <ostream>
#include <utility>

#include "dq/quadext.hpp"
#include "dq/rational.hpp"

namespace dq {

// Curve data for a fixed product m and base point (x1,y1) on
// (X²−q)(Y²−q) = m, together with the associated Weierstrass model
// W² = T³ + (4q²−2m)T² + m²T.
struct Params {
    Rational q, m, x1, y1;

    // Derives m from the base point.
    static Params from_base_point(Rational q, Rational x1, Rational y1);
    // Validates a full set: m must match the base point and avoid {0, q²}.
    static Params checked(Rational q, Rational m, Rational x1, Rational y1);

    Rational a2() const { return 4 * sq(q) - 2 * m; }  // T² coefficient
    Rational a4() const { return sq(m); }              // T coefficient

    friend bool operator==(const Params&, const Params&) = default;
};

// Affine point on (X²−q)(Y²−q) = m.
struct DPoint {
    Rational x, y;
    friend bool operator==(const DPoint&, const DPoint&) = default;
    friend std::ostream& operator<<(std::ostream& os, const DPoint& p) {
        return os << "(" << p.x << ", " << p.y << ")";
    }
};

// Affine point or infinity on W² = T³ + aT² + bT, over any exact field F.
template <class F>
struct EPointT {
    F T{}, W{};
    bool inf = true;

    EPointT() = default;  // point at infinity
    EPointT(F t, F w) : T(std::move(t)), W(std::move(w)), inf(false) {}

    friend bool operator==(const EPointT& p, const EPointT& r) {
        if (p.inf || r.inf) return p.inf == r.inf;
        return p.T == r.T && p.W == r.W;
    }
    friend std::ostream& operator<<(std::ostream& os, const EPointT& p) {
        if (p.inf) return os << "O";
        return os << "(" << p.T << ", " << p.W << ")";
    }
};

using EPoint = EPointT<Rational>;
using EPointExt = EPointT<QuadExtElem>;

// Chord-tangent group law on W² = T³ + aT² + bT, written against the exact
// field operations only (+, -, *, /, ==); no constants of F are assumed, so
// it instantiates for both Rational and QuadExtElem.
template <class F>
class ECurve {
  public:
    ECurve(F a, F b) : a_(std::move(a)), b_(std::move(b)) {}

    const F& a() const { return a_; }
    const F& b() const { return b_; }

    bool contains(const EPointT<F>& p) const {
        if (p.inf) return true;
        return p.W * p.W == (p.T * p.T + a_ * p.T + b_) * p.T;
    }

    EPointT<F> neg(const EPointT<F>& p) const {
        if (p.inf) return p;
        return {p.T, -p.W};
    }

    EPointT<F> add(const EPointT<F>& p, const EPointT<F>& r) const {
        if (p.inf) return r;
        if (r.inf) return p;
        F lambda{};
        if (p.T == r.T) {
            if (is_zero(p.W + r.W)) return {};
            // tangent slope (3T² + 2aT + b) / 2W
            const F tt = p.T * p.T;
            lambda = (tt + tt + tt + a_ * p.T + a_ * p.T + b_) / (p.W + p.W);
        } else {
            lambda = (r.W - p.W) / (r.T - p.T);
        }
        const F t3 = lambda * lambda - a_ - p.T - r.T;
        return {t3, lambda * (p.T - t3) - p.W};
    }

    EPointT<F> mul(long n, EPointT<F> p) const {
        if (n < 0) {
            p = neg(p);
            n = -n;
        }
        EPointT<F> acc{};
        while (n > 0) {
            if (n & 1) acc = add(acc, p);
            p = add(p, p);
            n >>= 1;
        }
        return acc;
    }

  private:
    F a_, b_;
};

ECurve<Rational> curve_q(const Params& pr);
// Same curve with coefficients lifted to Q(√q); q must not be a square.
ECurve<QuadExtElem> curve_ext(const Params& pr);

bool on_curve_E(const Params& pr, const EPoint& p);
bool on_curve_D(const Params& pr, const Rational& x, const Rational& y);
inline bool on_curve_D(const Params& pr, const DPoint& p) { return on_curve_D(pr, p.x, p.y); }

// (m, 2mq); has exact order four, with 2R = (0,0).
EPoint point_R(const Params& pr);
// (y1²(x1²−q)²/x1², q·y1(x1²+y1²)(x1²−q)²/x1³); generically of infinite order.
EPoint point_S(const Params& pr);

// Argument-checking wrappers around the group law (PointNotOnCurve).
EPoint e_add(const Params& pr, const EPoint& p, const EPoint& r);
EPoint e_neg(const Params& pr, const EPoint& p);
EPoint e_scalar_mul(const Params& pr, long n, const EPoint& p);

// The divisor of the square-class function g is 2(Z1)+2(Z2)-2(P1)-2(P2) for
// four points with coordinates in Q(√q): two zeros and two poles, swapped
// pairwise by conjugation. They satisfy 2·Z1 = 2·Z2 = S+2R, 2·P1 = 2·P2 = S,
// and adding R walks the cycle Z1 → P1 → Z2 → P2 → Z1.
template <class F>
struct GDivisorT {
    EPointT<F> zero1, pole1, zero2, pole2;
};

// Core formulas over any field containing a square root of q; the caller
// supplies lifted params and the chosen root.
template <class F>
GDivisorT<F> g_divisor(const F& q, const F& x1, const F& y1, const F& sqrt_q) {
    const F u = x1 - sqrt_q, v = x1 + sqrt_q;
    const F s = y1 + sqrt_q, t = y1 - sqrt_q;
    const F zc = (y1 * y1 - q), pc = (x1 * x1 - q);
    const F two_y = y1 + y1, two_x = x1 + x1;
    GDivisorT<F> d;
    d.zero1 = {zc * u * u, two_y * sqrt_q * zc * u * u};
    d.pole1 = {pc * t * t, -(two_x * sqrt_q * pc * t * t)};
    d.zero2 = {zc * v * v, -(two_y * sqrt_q * zc * v * v)};
    d.pole2 = {pc * s * s, two_x * sqrt_q * pc * s * s};
    return d;
}

using GDivisor = GDivisorT<Rational>;
using GDivisorExt = GDivisorT<QuadExtElem>;

// q not a square: points live in Q(√q) proper.
GDivisorExt g_divisor_ext(const Params& pr);
// q a square: all four points are rational.
GDivisor g_divisor_rational(const Params& pr);

// Embeds a rational point into E over Q(√q).
EPointExt lift_ext(const Params& pr, const EPoint& p);

// Four mutually distinct nonzero rationals whose pairwise products are q short
// of a square. Declared here; constructed and verified in quadruples.
struct Quadruple {
    Rational q, a, b, c, d;
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

}  // namespace dq
