#include "circforest/unity.hpp"

#include "circforest/bigmatrix.hpp"
#include "circforest/errors.hpp"

namespace circforest {

mpz_class product_over_unity_roots(const IntPoly& q, unsigned long m) {
  if (m == 0) throw InputError("InvalidInput", "unity order m must be >= 1");
  if (q.is_zero())
    throw InputError("InvalidInput", "zero polynomial has no unity product");

  // Q(S_m) is circulant: its (i,j) entry depends on (j - i) mod m only,
  // with first-row entries c_t = sum of q's coefficients of degree = t mod m.
  std::vector<mpz_class> c(m);
  const auto& coeffs = q.coeffs();
  for (std::size_t d = 0; d < coeffs.size(); ++d) c[d % m] += coeffs[d];

  BigMatrix mat(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mat.at(i, j) = c[(j + m - i) % m];
  return det_bareiss(std::move(mat));
}

}  // namespace circforest
