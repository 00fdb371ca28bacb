#pragma once

#include <vector>

#include "dq/rational.hpp"

namespace dq {

// Dense univariate polynomial over Q, coefficient of y^i at index i.
using Poly = std::vector<Rational>;

Rational poly_eval(const Poly& c, const Rational& y);

// All distinct rational roots, ascending. Exact for any degree, though the
// callers here stay at degree <= 4. Throws ZeroInput on the zero polynomial.
std::vector<Rational> rational_roots(const Poly& c);

}  // namespace dq
