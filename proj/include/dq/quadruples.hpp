#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dq/birational.hpp"
#include "dq/curves.hpp"

namespace dq {

struct Triple {
    EPoint q1, q2, q3;
};

enum class Sign { Plus, Minus };

// Outcome of checking the six pair products of a candidate quadruple.
// Root i is the nonnegative square root of the i-th pair product plus q,
// pairs ordered (a,b),(a,c),(a,d),(b,c),(b,d),(c,d); absent when that
// product+q is not a square.
struct Certificate {
    Rational q;
    std::array<Rational, 4> entries;
    std::array<std::optional<Rational>, 6> roots;
    bool distinct_nonzero = false;
    bool pass = false;
};

enum class Admissibility { Exists, NoneAmongSupplied };

struct AdmissibilityVerdict {
    Admissibility status = Admissibility::NoneAmongSupplied;
    std::optional<EPoint> witness;  // (y1²−q)·g(witness) is a nonzero square
    int coset_reps_checked = 0;
    std::vector<EPoint> unresolved;  // reps at poles/zeros of g with no usable shift
};

// Orbit of p under the order-8 translation group generated by p ↦ p+R and
// p ↦ S−p; deduplicated, deterministic order, size divides 8.
std::vector<EPoint> orbit(const Params& pr, const EPoint& p);

// True iff the three orbits are pairwise disjoint — the condition for the
// four constructed entries to be distinct.
bool is_nondegenerate(const Params& pr, const Triple& t);

// The square hypothesis on a triple: (y1²−q)·g(Q1+Q2+Q3) is a square.
bool square_condition(const Params& pr, const Triple& t);

// a = ±sqrt(g(Q1)g(Q2)g(Q3) / ((x1²−q)³·m)), b,c,d = g(Qi)/(a(x1²−q)).
// The result always verifies and has product m.
Quadruple construct_from_triple(const Params& pr, const Triple& t, Sign sign = Sign::Plus);

Certificate verify_quadruple(const Rational& q, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d);
inline Certificate verify_quadruple(const Quadruple& qu) {
    return verify_quadruple(qu.q, qu.a, qu.b, qu.c, qu.d);
}

// The converse direction: the three curve points f(t12,t34), f(t13,t24),
// f(t14,t23) with all roots taken nonnegative. Requires abcd = m.
Triple quadruple_to_triple(const Params& pr, const Quadruple& qu);

struct ProductParametrization {
    Rational m, x1, y1;
};

// x1 = (q+u²)/(2u), y1 = t, m = (t²−q)·((u²−q)/(2u))²; by construction
// x1²−q is a rational square, which makes R an admissibility witness.
ProductParametrization m_from_tu(const Rational& q, const Rational& t, const Rational& u);

// The explicit family: the constructor applied to the triple (S+R, 2S, 3S)
// over the base point from m_from_tu.
Quadruple construct_family_quadruple(const Rational& q, const Rational& t, const Rational& u,
                                     Sign sign = Sign::Plus);

// Scans supplied coset representatives for one whose class makes
// (y1²−q)·g(T) a nonzero square. Representatives where g has a pole or zero
// are retried at T+2X (same class) for auxiliary X; if no shift lands, the
// representative is reported unresolved. A NoneAmongSupplied verdict proves
// nothing unless the list covers all of E(Q)/2E(Q) — coverage is recorded,
// not verified.
AdmissibilityVerdict admissibility_check(const Params& pr, const std::vector<EPoint>& reps);

}  // namespace dq
