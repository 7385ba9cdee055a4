#ifndef CIRCFOREST_UNITY_HPP
#define CIRCFOREST_UNITY_HPP

#include <gmpxx.h>

#include "circforest/int_poly.hpp"

namespace circforest {

/// Exact signed product prod_{j=0..m-1} Q(eps_m^j) over all m-th roots of
/// unity, i.e. Res(z^m - 1, Q).  Computed without complex arithmetic as the
/// determinant of the integer circulant Q(S_m), S_m the cyclic shift.
mpz_class product_over_unity_roots(const IntPoly& q, unsigned long m);

}  // namespace circforest

#endif
