#include "circforest/chebyshev.hpp"

#include <utility>

namespace circforest {
namespace {

// 2x2 transfer matrix [[a,b],[c,d]] over an arbitrary field type.
template <typename F>
struct Mat2 {
  F a, b, c, d;
};

template <typename F>
Mat2<F> mul(const Mat2<F>& p, const Mat2<F>& q) {
  return Mat2<F>{p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
                 p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

// T_{m+1} = 2x T_m - T_{m-1}; the vector (T_{m+1}, T_m) advances by
// M = [[2x,-1],[1,0]], so T_n is the first entry of M^(n-1) (x, 1)^T.
template <typename F>
F cheb_impl(unsigned long n, const F& x, const F& one) {
  if (n == 0) return one;
  if (n == 1) return x;
  const F two_x = x + x;
  if (n <= 32) {
    F prev = one;  // T_0
    F cur = x;     // T_1
    for (unsigned long m = 1; m < n; ++m) {
      F next = two_x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  const F zero = one - one;
  Mat2<F> acc{one, zero, zero, one};
  Mat2<F> base{two_x, zero - one, one, zero};
  unsigned long e = n - 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc.a * x + acc.b * one;
}

}  // namespace

mpq_class chebyshev_T(unsigned long n, const mpq_class& x) {
  return cheb_impl<mpq_class>(n, x, mpq_class(1));
}

Real chebyshev_T(unsigned long n, const Real& x) {
  return cheb_impl<Real>(n, x, Real(1L, x.prec()));
}

Complex chebyshev_T(unsigned long n, const Complex& x) {
  return cheb_impl<Complex>(n, x, Complex(1, x.prec()));
}

Real chebyshev_halfsum_gap(const Complex& z, unsigned long n) {
  const mpfr_prec_t prec = z.prec();
  const Complex one(1, prec);
  const Complex half(Real(mpq_class(1, 2), prec), Real(prec));
  const Complex w = (z + one / z) * half;
  const Complex t = chebyshev_T(n, w);
  const Complex s = (pow_si(z, static_cast<long>(n)) +
                     pow_si(z, -static_cast<long>(n))) * half;
  return abs(t - s);
}

}  // namespace circforest
