#ifndef CIRCFOREST_CHEBYSHEV_HPP
#define CIRCFOREST_CHEBYSHEV_HPP

#include <gmpxx.h>

#include "circforest/precision.hpp"

namespace circforest {

/// T_n(x), Chebyshev polynomial of the first kind.  Exact for rational x;
/// evaluated at the argument's precision otherwise.  Uses the three-term
/// recurrence, switching to binary powering of the transfer matrix
/// [[2x,-1],[1,0]] for large n.
mpq_class chebyshev_T(unsigned long n, const mpq_class& x);
Real chebyshev_T(unsigned long n, const Real& x);
Complex chebyshev_T(unsigned long n, const Complex& x);

/// |T_n((z + 1/z)/2) - (z^n + z^-n)/2|; zero in exact arithmetic.
Real chebyshev_halfsum_gap(const Complex& z, unsigned long n);

}  // namespace circforest

#endif
