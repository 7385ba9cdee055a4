#ifndef CIRCFOREST_LAURENT_POLY_HPP
#define CIRCFOREST_LAURENT_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "circforest/int_poly.hpp"
#include "circforest/precision.hpp"
#include "circforest/spec.hpp"

namespace circforest {

/// Integer-coefficient Laurent polynomial, sparse over possibly negative
/// exponents.  Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly from_terms(std::map<long, mpz_class> terms);
  static LaurentPoly constant(mpz_class c);

  bool is_zero() const { return terms_.empty(); }
  long low_exp() const;
  long high_exp() const;
  mpz_class coeff(long e) const;
  const std::map<long, mpz_class>& terms() const { return terms_; }

  /// coeff(e) == coeff(-e) for every exponent.
  bool is_symmetric() const;

  LaurentPoly plus_constant(const mpz_class& c) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// (Q, low) with P(z) = z^low * Q(z) and Q an ordinary polynomial with
  /// nonzero constant term.
  std::pair<IntPoly, long> as_poly() const;

  /// Value at e^{i*theta}.
  Complex eval_circle(const Real& theta) const;

  std::string str() const;

 private:
  std::map<long, mpz_class> terms_;
};

/// Monic integer polynomial sharing the roots of a symmetric Laurent
/// polynomial P, obtained as -z^h * P with h = highExp.  sign_for_order(m)
/// is the factor relating the two products over m-th roots of unity:
/// prod_j P(eps_m^j) = sign_for_order(m) * prod_j poly(eps_m^j).
struct MonicForm {
  IntPoly poly;
  long sign_exponent;  // h, the half degree

  int sign_for_order(unsigned long m) const {
    unsigned long e = m + static_cast<unsigned long>(sign_exponent) * (m - 1);
    return (e % 2 == 0) ? 1 : -1;
  }
};

/// Requires symmetric support (lowExp == -highExp, highExp >= 1) and
/// coefficient -1 at the highest exponent so the result is monic; throws
/// InputError otherwise.
MonicForm monicize(const LaurentPoly& p);

/// The Laurent polynomial whose values at roots of unity give the
/// eigenvalues of I + L: constant 2k+1 minus z^{s_i} + z^{-s_i} for the
/// even-valency family, constant 2k+2 for the half-step family (the +-n
/// half step itself is accounted for separately by the counting engine).
LaurentPoly associated_polynomial(const CirculantSpec& spec);

}  // namespace circforest

#endif
