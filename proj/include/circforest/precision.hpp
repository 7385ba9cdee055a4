#ifndef CIRCFOREST_PRECISION_HPP
#define CIRCFOREST_PRECISION_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>

#include "circforest/errors.hpp"

namespace circforest {

/// Working precision in bits for the floating-point paths.  Callers that
/// hit a precision failure retry with doubled() until kMaxBits.
struct PrecisionBudget {
  unsigned bits;

  explicit PrecisionBudget(unsigned b = kDefaultBits) : bits(b) {
    if (b < 64) throw InputError("InvalidInput", "precision budget below 64 bits");
  }

  PrecisionBudget doubled() const { return PrecisionBudget(bits * 2); }

  static constexpr unsigned kDefaultBits = 256;
  static constexpr unsigned kMaxBits = 4096;
};

/// Arbitrary-precision real backed by mpfr_t.  Every value carries its own
/// precision, fixed at construction; binary operations produce results at
/// the larger operand precision.  Rounding is always to nearest.
class Real {
 public:
  Real() { mpfr_init2(t_, 64); mpfr_set_zero(t_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(t_, prec); mpfr_set_zero(t_, 1); }
  Real(long v, mpfr_prec_t prec) { mpfr_init2(t_, prec); mpfr_set_si(t_, v, MPFR_RNDN); }
  Real(double v, mpfr_prec_t prec) { mpfr_init2(t_, prec); mpfr_set_d(t_, v, MPFR_RNDN); }
  Real(const mpz_class& v, mpfr_prec_t prec) {
    mpfr_init2(t_, prec);
    mpfr_set_z(t_, v.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& v, mpfr_prec_t prec) {
    mpfr_init2(t_, prec);
    mpfr_set_q(t_, v.get_mpq_t(), MPFR_RNDN);
  }
  Real(const std::string& decimal, mpfr_prec_t prec) {
    mpfr_init2(t_, prec);
    if (mpfr_set_str(t_, decimal.c_str(), 10, MPFR_RNDN) != 0)
      throw InputError("InvalidInput", "unparseable decimal literal: " + decimal);
  }

  Real(const Real& o) {
    mpfr_init2(t_, mpfr_get_prec(o.t_));
    mpfr_set(t_, o.t_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    t_[0] = o.t_[0];
    mpfr_init2(o.t_, 64);
    mpfr_set_zero(o.t_, 1);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(t_, mpfr_get_prec(o.t_));
      mpfr_set(t_, o.t_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(t_, o.t_);
    return *this;
  }
  ~Real() { mpfr_clear(t_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(t_); }
  Real with_prec(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.t_, t_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return t_; }
  mpfr_ptr raw() { return t_; }

  int sign() const { return mpfr_sgn(t_); }
  bool is_zero() const { return mpfr_zero_p(t_) != 0; }
  double to_double() const { return mpfr_get_d(t_, MPFR_RNDN); }

  /// Decimal string "m.mmm...e+xx" with the given significant digits.
  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, t_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.t_, a.t_, b.t_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.t_, a.t_, b.t_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.t_, a.t_, b.t_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.t_, a.t_, b.t_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    mpfr_add(t_, t_, o.t_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(t_, t_, o.t_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(t_, t_, o.t_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(t_, t_, o.t_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.t_, b.t_) != 0; }

  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.t_, a.t_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.t_, a.t_, b.t_, MPFR_RNDN);
    return r;
  }
  friend Real pow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.t_, a.t_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.t_, MPFR_RNDN);
    return r;
  }
  /// 2^e as an exact Real, e may be negative.
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.t_, 1, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t t_;
};

/// Rectangular complex number over Real.  Only what the root finder and
/// the spectral evaluations need.
struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

  static Complex from_polar(const Real& radius, const Real& angle) {
    return Complex(radius * cos(angle), radius * sin(angle));
  }

  Complex conj() const { return Complex(re, -im); }
  Real norm() const { return re * re + im * im; }
  friend Real abs(const Complex& z) { return hypot(z.re, z.im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm();
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
  }

  /// z^e by binary powering; negative exponents invert first.
  friend Complex pow_si(const Complex& z, long e) {
    mpfr_prec_t p = z.prec();
    if (e == 0) return Complex(1, p);
    Complex base = z;
    unsigned long k;
    if (e < 0) {
      base = Complex(1, p) / z;
      k = static_cast<unsigned long>(-e);
    } else {
      k = static_cast<unsigned long>(e);
    }
    Complex acc(1, p);
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }
};

}  // namespace circforest

#endif
