#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dq/birational.hpp"
#include "dq/curves.hpp"
#include "dq/errors.hpp"
#include "dq/rational.hpp"

namespace dqtest {

// Seeded so every run exercises the same cases.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed = 0x5eedULL) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    dq::Rational rational(long num_mag, long den_max) {
        return dq::Rational(integer(-num_mag, num_mag), integer(1, den_max));
    }

    dq::Rational nonzero(long num_mag, long den_max) {
        for (;;) {
            const dq::Rational r = rational(num_mag, den_max);
            if (!r.is_zero()) return r;
        }
    }

    // A valid parameter set; optionally restricted to nonsquare q.
    dq::Params params(bool nonsquare_q = false) {
        for (;;) {
            const dq::Rational q = nonzero(8, 3);
            if (nonsquare_q && dq::is_square(q)) continue;
            const dq::Rational x1 = nonzero(8, 3), y1 = nonzero(8, 3);
            try {
                return dq::Params::from_base_point(q, x1, y1);
            } catch (const dq::InvalidParams&) {
            }
        }
    }

    // Parameter set where S has infinite order: rational torsion points have
    // order at most 12, so thirteen distinct multiples rule it out.
    dq::Params params_free_s(bool nonsquare_q = false) {
        for (;;) {
            const dq::Params pr = params(nonsquare_q);
            if (looks_free(pr)) return pr;
        }
    }

    static bool looks_free(const dq::Params& pr) {
        const auto curve = dq::curve_q(pr);
        const dq::EPoint s = dq::point_S(pr);
        std::vector<dq::EPoint> seen{dq::EPoint{}};
        dq::EPoint acc{};
        for (int k = 1; k <= 13; ++k) {
            acc = curve.add(acc, s);
            for (const auto& p : seen)
                if (p == acc) return false;
            seen.push_back(acc);
        }
        return true;
    }
};

// Points on the product curve generated away from the search path: the image
// of i·S under the inverse map, fanned out by the symmetries (x,y) ↦ (±x,±y),
// (±y,±x). The fan of one preimage already covers the whole translation
// orbit of i·S — eight points per index — so only i advances.
inline std::vector<dq::DPoint> sample_D_points(const dq::Params& pr, int imax, size_t want) {
    const auto curve = dq::curve_q(pr);
    const dq::EPoint s = dq::point_S(pr);
    std::vector<dq::DPoint> out;
    auto push = [&](const dq::DPoint& p) {
        for (const auto& o : out)
            if (o == p) return;
        out.push_back(p);
    };
    dq::EPoint acc{};
    for (int i = 1; i <= imax && out.size() < want; ++i) {
        acc = curve.add(acc, s);
        const dq::DPoint p = dq::f_inv(pr, acc);
        for (const dq::Rational& x : {p.x, -p.x})
            for (const dq::Rational& y : {p.y, -p.y}) {
                push({x, y});
                push({y, x});
            }
    }
    return out;
}

}  // namespace dqtest
