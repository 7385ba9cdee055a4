#ifndef CIRCFOREST_ROOTS_HPP
#define CIRCFOREST_ROOTS_HPP

#include <vector>

#include "circforest/int_poly.hpp"
#include "circforest/precision.hpp"

namespace circforest {

enum class CircleSide { inside, on_circle, outside };

/// One approximate root with a certified inclusion radius: the disk
/// |z - value| <= radius contains exactly one true root of the input.
struct RootEstimate {
  Complex value;
  Real radius;
  CircleSide side;
};

struct RootSet {
  std::vector<RootEstimate> roots;  // one entry per root, multiplicity expanded
  Real radius_bound;                // max of the certified radii
};

/// All complex roots of q (nonzero, any degree) by Aberth-Ehrlich
/// simultaneous iteration at the budget's precision, with a posteriori
/// certified radii and strict unit-circle classification.  Repeated roots
/// are split off by squarefree (Yun) decomposition first and re-expanded
/// with their multiplicities.  Roots exactly at +-1 are recognized by exact
/// evaluation and classified on_circle; any other disk that cannot be
/// certified strictly inside or outside the circle raises
/// PrecisionExhausted, and the caller retries at a doubled budget.
///
/// The iteration is a Jacobi sweep (all corrections from one snapshot), so
/// the parallel variant is bit-for-bit identical to the serial one.
RootSet find_roots(const IntPoly& q, const PrecisionBudget& budget);
RootSet find_roots_serial(const IntPoly& q, const PrecisionBudget& budget);

/// True when every root has a partner within certified distance of its
/// reciprocal 1/z; holds for monicized associated polynomials.
bool reciprocal_pairing_ok(const RootSet& rs);

}  // namespace circforest

#endif
