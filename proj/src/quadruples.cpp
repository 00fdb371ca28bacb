#include "dq/quadruples.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dq/errors.hpp"

namespace dq {

namespace {

// Deterministic total order for dedup; infinity first, then lexicographic.
bool epoint_less(const EPoint& a, const EPoint& b) {
    if (a.inf || b.inf) return a.inf && !b.inf;
    if (a.T != b.T) return a.T < b.T;
    return a.W < b.W;
}

}  // namespace

std::vector<EPoint> orbit(const Params& pr, const EPoint& p) {
    if (!on_curve_E(pr, p)) throw PointNotOnCurve("orbit: point is not on the Weierstrass curve");
    const auto curve = curve_q(pr);
    const EPoint r = point_R(pr), s = point_S(pr);
    std::vector<EPoint> out;
    EPoint t = p, u = curve.add(s, curve.neg(p));
    for (int k = 0; k < 4; ++k) {
        out.push_back(t);
        out.push_back(u);
        t = curve.add(t, r);
        u = curve.add(u, r);
    }
    std::sort(out.begin(), out.end(), epoint_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_nondegenerate(const Params& pr, const Triple& t) {
    const std::vector<EPoint> o1 = orbit(pr, t.q1), o2 = orbit(pr, t.q2), o3 = orbit(pr, t.q3);
    auto meets = [](const std::vector<EPoint>& a, const std::vector<EPoint>& b) {
        for (const EPoint& p : a)
            for (const EPoint& q : b)
                if (p == q) return true;
        return false;
    };
    return !meets(o1, o2) && !meets(o1, o3) && !meets(o2, o3);
}

bool square_condition(const Params& pr, const Triple& t) {
    const auto curve = curve_q(pr);
    const EPoint sum = curve.add(curve.add(t.q1, t.q2), t.q3);
    return is_square((sq(pr.y1) - pr.q) * g_eval(pr, sum));
}

Quadruple construct_from_triple(const Params& pr, const Triple& t, Sign sign) {
    if (!is_nondegenerate(pr, t))
        throw DegenerateTriple("orbits of the three points are not pairwise disjoint");
    if (!square_condition(pr, t))
        throw SquareConditionFails("(y1^2-q)*g(Q1+Q2+Q3) is not a rational square");

    const Rational g1 = g_eval(pr, t.q1), g2 = g_eval(pr, t.q2), g3 = g_eval(pr, t.q3);
    if (g1.is_zero() || g2.is_zero() || g3.is_zero())
        throw DegenerateTriple("a triple member is a zero of g, which forces a zero entry");

    const Rational k = sq(pr.x1) - pr.q;
    const Rational asq = g1 * g2 * g3 / (k * k * k * pr.m);
    if (!is_square(asq))
        throw std::logic_error("construct_from_triple: a^2 not a square despite hypothesis");

    Rational a = sqrt_exact(asq);
    if (sign == Sign::Minus) a = -a;
    const Quadruple qu{pr.q, a, g1 / (a * k), g2 / (a * k), g3 / (a * k)};

    if (qu.a * qu.b * qu.c * qu.d != pr.m)
        throw std::logic_error("construct_from_triple: product does not equal m");
    if (!verify_quadruple(qu).pass)
        throw DegenerateTriple("constructed entries collide or fail the square certificates");
    return qu;
}

Certificate verify_quadruple(const Rational& q, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d) {
    Certificate cert;
    cert.q = q;
    cert.entries = {a, b, c, d};

    cert.distinct_nonzero = true;
    for (int i = 0; i < 4; ++i) {
        if (cert.entries[i].is_zero()) cert.distinct_nonzero = false;
        for (int j = i + 1; j < 4; ++j)
            if (cert.entries[i] == cert.entries[j]) cert.distinct_nonzero = false;
    }

    bool all_square = true;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++k) {
            const Rational v = cert.entries[i] * cert.entries[j] + q;
            if (is_square(v))
                cert.roots[k] = sqrt_exact(v);
            else
                all_square = false;
        }
    cert.pass = cert.distinct_nonzero && all_square;
    return cert;
}

Triple quadruple_to_triple(const Params& pr, const Quadruple& qu) {
    if (qu.q != pr.q) throw InvalidParams("quadruple was certified for a different q");
    if (qu.a * qu.b * qu.c * qu.d != pr.m)
        throw ProductMismatch("quadruple product does not equal the params' m");
    const Certificate cert = verify_quadruple(qu);
    if (!cert.pass) throw InvalidParams("quadruple does not satisfy its own certificates");

    const auto root = [&](int k) { return *cert.roots[k]; };
    // roots order: (a,b),(a,c),(a,d),(b,c),(b,d),(c,d)
    const DPoint p1{root(0), root(5)}, p2{root(1), root(4)}, p3{root(2), root(3)};
    for (const DPoint* p : {&p1, &p2, &p3})
        if (!on_curve_D(pr, *p))
            throw MapUndefined("pair-product point does not lie on the product curve");
    return {f_map(pr, p1), f_map(pr, p2), f_map(pr, p3)};
}

ProductParametrization m_from_tu(const Rational& q, const Rational& t, const Rational& u) {
    if (q.is_zero()) throw InvalidParams("q must be nonzero");
    if (u.is_zero()) throw InvalidParams("u must be nonzero");
    const Rational x1 = (q + sq(u)) / (2 * u);
    const Rational m = (sq(t) - q) * sq((sq(u) - q) / (2 * u));
    if (x1.is_zero() || t.is_zero())
        throw InvalidParams("parameters give a base point on the axes");
    if (m.is_zero() || m == sq(q)) throw InvalidParams("parameters give m in {0, q^2}");
    return {m, x1, t};
}

Quadruple construct_family_quadruple(const Rational& q, const Rational& t, const Rational& u,
                                     Sign sign) {
    const ProductParametrization pp = m_from_tu(q, t, u);
    const Params pr = Params::checked(q, pp.m, pp.x1, pp.y1);
    const auto curve = curve_q(pr);
    const EPoint s = point_S(pr);
    const Triple triple{curve.add(s, point_R(pr)), curve.add(s, s),
                        curve.add(curve.add(s, s), s)};
    return construct_from_triple(pr, triple, sign);
}

AdmissibilityVerdict admissibility_check(const Params& pr, const std::vector<EPoint>& reps) {
    const auto curve = curve_q(pr);
    for (const EPoint& p : reps)
        if (!on_curve_E(pr, p))
            throw PointNotOnCurve("admissibility_check: representative not on the curve");

    // Auxiliary shift targets: T ↦ T+2X stays in T's coset mod 2E(Q).
    std::vector<EPoint> aux{point_S(pr), point_R(pr)};
    aux.insert(aux.end(), reps.begin(), reps.end());

    AdmissibilityVerdict verdict;
    const Rational lead = sq(pr.y1) - pr.q;
    for (const EPoint& rep : reps) {
        ++verdict.coset_reps_checked;
        std::optional<Rational> value;
        EPoint at = rep;
        for (size_t k = 0; k <= aux.size() && !value; ++k) {
            try {
                const Rational g = g_eval(pr, at);
                if (!g.is_zero()) value = g;
            } catch (const PoleOfG&) {
            }
            if (!value && k < aux.size())
                at = curve.add(rep, curve.mul(2, aux[k]));
        }
        if (!value) {
            verdict.unresolved.push_back(rep);
            continue;
        }
        if (is_square(lead * *value)) {
            verdict.status = Admissibility::Exists;
            verdict.witness = rep;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace dq
