#ifndef CIRCFOREST_INT_POLY_HPP
#define CIRCFOREST_INT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "circforest/precision.hpp"

namespace circforest {

/// Dense univariate polynomial over the integers, coefficients stored
/// lowest degree first.  The zero polynomial has an empty coefficient
/// vector and degree() == -1; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(mpz_class c);
  /// c * z^d
  static IntPoly monomial(unsigned d, mpz_class c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const;
  mpz_class max_abs_coeff() const;

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  Complex eval(const Complex& z) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
  mpz_class content() const;
  /// self / content, normalized to a positive leading coefficient.
  IntPoly primitive_part() const;

  /// Primitive polynomial gcd with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);
  /// Quotient a / b when the division is exact over the integers;
  /// throws InternalError otherwise.
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

  /// Yun decomposition: pairwise-coprime squarefree factors with their
  /// multiplicities, up to a constant.  Input must be nonzero.
  std::vector<std::pair<IntPoly, int>> squarefree_factors() const;

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace circforest

#endif
