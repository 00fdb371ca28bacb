#pragma once

#include <gmpxx.h>

#include <iosfwd>

#include "dq/rational.hpp"

namespace dq {

// Canonical representative of a nonzero rational modulo nonzero rational
// squares: a squarefree integer carrying the sign. Two nonzero rationals lie
// in the same class iff their SquareClass values compare equal.
struct SquareClass {
    mpz_class d;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend std::ostream& operator<<(std::ostream& os, const SquareClass& c);
};

// Deterministic primality test. Proven exact below 3.317e24; BPSW plus 64
// Miller-Rabin rounds above that (no counterexample is known).
bool is_prime(const mpz_class& n);

// Squarefree part of a nonzero integer: the unique squarefree d with
// n = d * s^2 for an integer s. Sign travels with d.
mpz_class squarefree_part_int(const mpz_class& n);

// Square class of a nonzero rational r = n/d, computed as the squarefree
// part of n*d (same class, integer input). Throws ZeroInput on 0.
SquareClass squarefree_part(const Rational& r);

}  // namespace dq
