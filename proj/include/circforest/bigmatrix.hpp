#ifndef CIRCFOREST_BIGMATRIX_HPP
#define CIRCFOREST_BIGMATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "circforest/int_poly.hpp"

namespace circforest {

/// Dense square matrix of arbitrary-precision integers, row major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t side) : side_(side), cells_(side * side) {}

  static BigMatrix identity(std::size_t side);

  std::size_t side() const { return side_; }

  mpz_class& at(std::size_t i, std::size_t j) { return cells_[i * side_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return cells_[i * side_ + j];
  }

  /// Submatrix with row r and column c struck out.
  BigMatrix minor_matrix(std::size_t r, std::size_t c) const;

  friend bool operator==(const BigMatrix& a, const BigMatrix& b) {
    return a.side_ == b.side_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t side_ = 0;
  std::vector<mpz_class> cells_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting on zero pivots only.  The parallel variant distributes the row
/// updates across threads; both produce identical results bit for bit.
mpz_class det_bareiss_serial(BigMatrix m);
mpz_class det_bareiss(BigMatrix m);

/// Characteristic polynomial det(lambda*I - A), monic of degree side(),
/// by the division-free Samuelson-Berkowitz scheme.  Coefficients come
/// back lowest degree first.  The parallel variant splits the inner
/// matrix-vector products and the Toeplitz convolution by row; results are
/// identical bit for bit with the serial one.
IntPoly charpoly_berkowitz_serial(const BigMatrix& a);
IntPoly charpoly_berkowitz(const BigMatrix& a);

}  // namespace circforest

#endif
