#ifndef CIRCFOREST_ARITH_HPP
#define CIRCFOREST_ARITH_HPP

#include <gmpxx.h>

#include <utility>

#include "circforest/spec.hpp"

namespace circforest {

/// input = square_free * cofactor_root^2 with square_free square-free.
struct SquareFreeDecomposition {
  mpz_class input;
  mpz_class square_free;
  mpz_class cofactor_root;
};

/// Full factorization by trial division up to 10^6 followed by Pollard rho
/// (Brent cycling, deterministic parameters); FactorizationIncomplete when
/// a composite cofactor survives the iteration budget.
SquareFreeDecomposition squarefree_part(const mpz_class& m);

/// Number of odd s_i; the half step is never counted.
unsigned long odd_step_count(const CirculantSpec& spec);

/// Even valency: 1 for odd n, square-free part of 4p+1 for even n.
/// Odd valency: square-free part of 4p+1 for even n, of 4p+3 for odd n.
mpz_class predicted_multiplier(const CirculantSpec& spec);

/// f = multiplier * a^2 verification record for one (spec, f) pair.
struct SquareStructure {
  CirculantSpec spec;
  unsigned long odd_steps;
  mpz_class multiplier;
  mpz_class root;  // a, meaningful only when holds
  bool holds;
};

/// Checks that f is multiplier times a perfect square; exact integer
/// square-root test, no floating point involved.
SquareStructure verify_square_structure(const CirculantSpec& spec,
                                        const mpz_class& f);

/// (F_n, L_n) by the standard recurrences.
std::pair<mpz_class, mpz_class> fibonacci_lucas(unsigned long n);

}  // namespace circforest

#endif
