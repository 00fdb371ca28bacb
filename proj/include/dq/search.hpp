#pragma once

#include <optional>
#include <vector>

#include "dq/curves.hpp"
#include "dq/quadruples.hpp"

namespace dq {

// Naive height: max(|numerator|, denominator) in lowest terms.
struct HeightBound {
    long h = 1;
    explicit HeightBound(long bound) : h(bound) {
        if (bound < 1) throw InvalidParams("height bound must be positive");
    }
    bool admits(const Rational& r) const { return height(r) <= h; }
};

// Number of workers for the parallel scans: DQ_THREADS when set, otherwise
// the hardware concurrency.
int worker_count();

// All affine points (x,y) on (X²−q)(Y²−q)=m with height(x) ≤ H, in a
// canonical order independent of worker count.
std::vector<DPoint> search_D_points(const Rational& q, const Rational& m, HeightBound bound);

// First searched point whose x-coordinate has x²−q square — a base point
// making x1²−q a square, which is the existence criterion's normal form.
// Absence up to the bound proves nothing.
std::optional<DPoint> find_square_base_point(const Rational& q, const Rational& m,
                                             HeightBound bound);

// Exhaustive D(q)-quadruple search over entries p/s with |p| ≤ num_bound,
// s ≤ den_bound (positive entries unless signed_entries), by extending
// square-compatible pairs. Every result passes verify_quadruple.
std::vector<Quadruple> brute_force_quadruples(const Rational& q, long num_bound, long den_bound,
                                              bool signed_entries = false);

}  // namespace dq
