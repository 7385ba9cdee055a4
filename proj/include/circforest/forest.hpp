#ifndef CIRCFOREST_FOREST_HPP
#define CIRCFOREST_FOREST_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circforest/bigmatrix.hpp"
#include "circforest/precision.hpp"
#include "circforest/spec.hpp"

namespace circforest {

enum class CountMethod { determinant, resultant, chebyshev };

std::string method_name(CountMethod m);

/// Exact rooted-spanning-forest count with method provenance.  residual is
/// the rounding distance of the floating product and is present only for
/// the chebyshev method; accepted results always have residual < 0.25.
struct ForestCount {
  mpz_class value;
  CountMethod method;
  std::optional<double> residual;
};

/// index j together with the eigenvalue of I + L at the j-th root of unity.
struct SpectrumEntry {
  unsigned long index;
  Real value;
};

/// counts[t] is the number of rooted spanning forests with t+1 trees, so
/// the vector runs over forest sizes 1..|V| and sums to the forest count.
struct ForestSizeVector {
  std::vector<mpz_class> counts;
};

/// The circulant matrix I + L(G): diagonal 2k+1 (even valency) or 2k+2
/// (odd), -1 at offsets +-s_i, and -1 at offset n for the half step.
/// Row sums are all 1.
BigMatrix laplacian_plus_identity(const CirculantSpec& spec);

/// Exact det(I + L) by fraction-free elimination; the oracle method.
ForestCount count_by_determinant(const CirculantSpec& spec,
                                 std::size_t cap = 4096);

/// Even valency: |prod_j Ptilde(eps_n^j)| for the monicized associated
/// polynomial.  Odd valency: |prod_n (P-1)| * |prod_{2n} (P+1)| / |prod_n
/// (P+1)| with every factor an exact circulant determinant; the division is
/// exact, anything else signals a bug.
ForestCount count_by_resultant(const CirculantSpec& spec);

/// Product of z^n + z^{-n} - 2 (and + 2 for the half-step factor) over the
/// outside-circle roots of the monicized associated polynomial(s), rounded
/// to the nearest integer.  Retries at doubled precision until both the
/// rounding residual and the propagated root-radius error drop below 0.25,
/// and reports PrecisionExhausted past the budget ceiling.
ForestCount count_by_chebyshev(const CirculantSpec& spec,
                               PrecisionBudget budget = PrecisionBudget());

/// Eigenvalue lambda_j of I + L via the associated polynomial at the j-th
/// root of unity (with the alternating half-step correction when present).
SpectrumEntry eigenvalue(const CirculantSpec& spec, unsigned long j,
                         const PrecisionBudget& budget = PrecisionBudget());

/// Number of spanning trees, det of the Laplacian with one vertex struck
/// out (used as the internal cross-check for counts_by_size).
mpz_class spanning_tree_count(const CirculantSpec& spec);

/// Per-size rooted forest counts: absolute values of the characteristic
/// polynomial coefficients of L, by the division-free Berkowitz scheme.
/// Cross-checked internally against det(I + L) and the spanning-tree count.
ForestSizeVector counts_by_size(const CirculantSpec& spec,
                                std::size_t cap = 512);

}  // namespace circforest

#endif
