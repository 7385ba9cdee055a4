#ifndef CIRCFOREST_MAHLER_HPP
#define CIRCFOREST_MAHLER_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "circforest/laurent_poly.hpp"
#include "circforest/precision.hpp"
#include "circforest/spec.hpp"

namespace circforest {

enum class MahlerMethod { root_product, quadrature };

std::string mahler_method_name(MahlerMethod m);

/// High-precision Mahler measure with a certified two-sided error bound.
struct MahlerEstimate {
  Real value;
  Real error_bound;
  MahlerMethod method;
};

/// M(P) = |leading coefficient| * prod of root moduli exceeding 1, from
/// certified root enclosures; retries internally at doubled precision up
/// to the budget ceiling.  Roots on the unit circle are rejected.
MahlerEstimate mahler_root_product(const LaurentPoly& p,
                                   PrecisionBudget budget = PrecisionBudget());

/// M(P) = exp of the mean of log|P| over the unit circle, by trapezoidal
/// quadrature on the periodic integrand with node doubling from 64 until
/// two successive levels agree within tol (nodes capped at 2^20, then
/// ToleranceNotReached).  The error bound is four times the last
/// inter-level difference.
MahlerEstimate mahler_quadrature(const LaurentPoly& p, const Real& tol,
                                 PrecisionBudget budget = PrecisionBudget());

/// Both estimators for the family's growth measure — M(P) for the
/// even-valency family, M(P-1) * M(P+1) for the half-step family — as
/// (root product, quadrature), after checking that they agree within the
/// combined error bounds.
std::pair<MahlerEstimate, MahlerEstimate> mahler_estimates(
    const CirculantSpec& spec, PrecisionBudget budget = PrecisionBudget(),
    double quad_tol = 1e-10);

/// Growth constant of the forest counts: the root-product estimate from
/// mahler_estimates (the tighter of the two).
MahlerEstimate asymptotic_constant(const CirculantSpec& spec,
                                   PrecisionBudget budget = PrecisionBudget(),
                                   double quad_tol = 1e-10);

struct ConvergenceRow {
  unsigned long n;
  mpz_class f;     // exact count, resultant method
  Real ratio;      // f / A^n
  Real nth_root;   // f^(1/n)
};

/// Exact counts against the asymptotic prediction A^n for every valid
/// order up to n_max.  final_ratio_within_tol records whether
/// |f/A^n - 1| <= 10^-6 at the largest tabulated n.
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  MahlerEstimate limit_constant;
  bool final_ratio_within_tol;
};

ConvergenceReport convergence_report(const CirculantSpec& spec,
                                     unsigned long n_max,
                                     PrecisionBudget budget = PrecisionBudget());

}  // namespace circforest

#endif
