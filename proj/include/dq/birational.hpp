#pragma once

#include "dq/curves.hpp"
#include "dq/squareclass.hpp"

namespace dq {

// The correspondence f between the product curve and the Weierstrass model,
// its inverse, and the square-class function g(P) = (x1²−q)·((x∘f⁻¹(P))²−q).

// Total on affine points of the product curve; the base point goes to
// infinity, (−y1,x1) to R, (−x1,y1) to S.
EPoint f_map(const Params& pr, const DPoint& p);

// Unique affine preimage of a rational point. Throws NonAffineImage for the
// (at most four, rational only when q is a square) points whose preimage
// lies at infinity on the projective closure.
DPoint f_inv(const Params& pr, const EPoint& p);

// Exact value of g; 0 at its two zeros, PoleOfG at its two poles (both
// reachable over Q only when q is a square).
Rational g_eval(const Params& pr, const EPoint& p);

// squarefree_part(g_eval(p)); the class is invariant on cosets mod 2E(Q).
SquareClass g_square_class(const Params& pr, const EPoint& p);

}  // namespace dq
