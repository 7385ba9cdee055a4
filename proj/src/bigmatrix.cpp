#include "circforest/bigmatrix.hpp"

#include <cstdint>
#include <utility>

#include "circforest/errors.hpp"

namespace circforest {

BigMatrix BigMatrix::identity(std::size_t side) {
  BigMatrix m(side);
  for (std::size_t i = 0; i < side; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  if (side_ == 0 || r >= side_ || c >= side_)
    throw InternalError("InternalInconsistency", "minor index out of range");
  BigMatrix m(side_ - 1);
  for (std::size_t i = 0, mi = 0; i < side_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < side_; ++j) {
      if (j == c) continue;
      m.at(mi, mj) = at(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

namespace {

// One-step Bareiss elimination.  Every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact; row swaps happen
// only on a zero pivot and just flip the sign.  The update of each row below
// the pivot is independent, which is where the parallel variant splits.
mpz_class det_bareiss_impl(BigMatrix& m, bool parallel) {
  const std::size_t n = m.side();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    const std::int64_t lo = static_cast<std::int64_t>(k) + 1;
    const std::int64_t hi = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      mpz_class t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m.at(k, k) * m.at(ii, j) - m.at(ii, k) * m.at(k, j);
        mpz_divexact(m.at(ii, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(ii, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign == 1 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

// Samuelson-Berkowitz: grow the leading principal submatrix one row and
// column at a time.  For size r+1 with corner a = A[r][r], left row R,
// upper column C and block M, the characteristic polynomial advances by
// convolution with the Toeplitz column t = (1, -a, -RC, -RMC, -RM^2C, ...).
IntPoly charpoly_impl(const BigMatrix& a, bool parallel) {
  const std::size_t n = a.side();
  std::vector<mpz_class> p{mpz_class(1)};  // char poly of the empty matrix
  std::vector<mpz_class> t, v, w, q;
  for (std::size_t r = 0; r < n; ++r) {
    t.assign(r + 2, mpz_class(0));
    t[0] = 1;
    t[1] = -a.at(r, r);
    if (r >= 1) {
      v.resize(r);
      w.resize(r);
      for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);
      for (std::size_t j = 2; j <= r + 1; ++j) {
        mpz_class dot = 0;
        for (std::size_t i = 0; i < r; ++i) dot += a.at(r, i) * v[i];
        t[j] = -dot;
        if (j <= r) {
          const std::int64_t rows = static_cast<std::int64_t>(r);
#pragma omp parallel for schedule(static) if (parallel)
          for (std::int64_t i = 0; i < rows; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            mpz_class s = 0;
            for (std::size_t jj = 0; jj < r; ++jj) s += a.at(ii, jj) * v[jj];
            w[ii] = std::move(s);
          }
          std::swap(v, w);
        }
      }
    }
    q.assign(r + 2, mpz_class(0));
    const std::int64_t len = static_cast<std::int64_t>(r) + 2;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < len; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      mpz_class s = 0;
      for (std::size_t j = 0; j <= ii && j < t.size(); ++j) {
        const std::size_t pi = ii - j;
        if (pi < p.size()) s += t[j] * p[pi];
      }
      q[ii] = std::move(s);
    }
    std::swap(p, q);
  }
  return IntPoly(std::vector<mpz_class>(p.rbegin(), p.rend()));
}

}  // namespace

mpz_class det_bareiss_serial(BigMatrix m) { return det_bareiss_impl(m, false); }
mpz_class det_bareiss(BigMatrix m) { return det_bareiss_impl(m, true); }

IntPoly charpoly_berkowitz_serial(const BigMatrix& a) {
  return charpoly_impl(a, false);
}
IntPoly charpoly_berkowitz(const BigMatrix& a) { return charpoly_impl(a, true); }

}  // namespace circforest
