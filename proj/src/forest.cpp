#include "circforest/forest.hpp"

#include <cstdlib>
#include <utility>

#include "circforest/errors.hpp"
#include "circforest/laurent_poly.hpp"
#include "circforest/roots.hpp"
#include "circforest/unity.hpp"

namespace circforest {

std::string method_name(CountMethod m) {
  switch (m) {
    case CountMethod::determinant: return "determinant";
    case CountMethod::resultant: return "resultant";
    case CountMethod::chebyshev: return "chebyshev";
  }
  std::abort();  // unreachable
}

BigMatrix laplacian_plus_identity(const CirculantSpec& spec) {
  const unsigned long nv = spec.vertex_count();
  BigMatrix m(nv);
  const mpz_class diag(spec.valency() + 1);
  for (unsigned long i = 0; i < nv; ++i) {
    m.at(i, i) = diag;
    for (unsigned long s : spec.steps()) {
      m.at(i, (i + s) % nv) -= 1;
      m.at(i, (i + nv - s) % nv) -= 1;
    }
    if (spec.half_step()) m.at(i, (i + spec.n()) % nv) -= 1;
  }
  return m;
}

ForestCount count_by_determinant(const CirculantSpec& spec, std::size_t cap) {
  if (spec.vertex_count() > cap)
    throw InputError("CapExceeded", spec.name() + " exceeds the determinant cap of " +
                                        std::to_string(cap) + " vertices");
  return ForestCount{det_bareiss(laplacian_plus_identity(spec)),
                     CountMethod::determinant, std::nullopt};
}

ForestCount count_by_resultant(const CirculantSpec& spec) {
  const LaurentPoly p = associated_polynomial(spec);
  const unsigned long n = spec.n();
  if (!spec.half_step()) {
    const MonicForm form = monicize(p);
    mpz_class value = product_over_unity_roots(form.poly, n);
    return ForestCount{abs(value), CountMethod::resultant, std::nullopt};
  }
  // Odd valency: the eigenvalue product over all 2n-th roots of unity
  // splits into P-1 over n-th roots (even j) and P+1 over the odd j, the
  // latter as the quotient of the 2n-product by the n-product.
  const MonicForm a = monicize(p.plus_constant(-1));
  const MonicForm b = monicize(p.plus_constant(1));
  const mpz_class pa = abs(product_over_unity_roots(a.poly, n));
  const mpz_class pb2 = abs(product_over_unity_roots(b.poly, 2 * n));
  const mpz_class pb1 = abs(product_over_unity_roots(b.poly, n));
  if (pb1 == 0 || !mpz_divisible_p(pb2.get_mpz_t(), pb1.get_mpz_t()))
    throw InternalError("InternalInconsistency",
                        "odd-valency factor quotient is not exact for " + spec.name());
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), pb2.get_mpz_t(), pb1.get_mpz_t());
  return ForestCount{pa * quotient, CountMethod::resultant, std::nullopt};
}

namespace {

// prod (z^n + z^-n + shift) over the outside roots of a monicized
// associated polynomial, with a propagated worst-case error bound.
struct FactorProduct {
  Complex value;
  Real error_bound;
};

FactorProduct outside_factor_product(const RootSet& roots, unsigned long n,
                                     long shift, mpfr_prec_t prec) {
  Complex prod(1, prec);
  Real prod_abs_hi(1L, prec);  // prod (|factor| + err)
  Real prod_abs(1L, prec);     // prod |factor|
  const Complex shift_c(shift, prec);
  for (const auto& root : roots.roots) {
    if (root.side != CircleSide::outside) continue;
    const Complex factor =
        pow_si(root.value, static_cast<long>(n)) +
        pow_si(root.value, -static_cast<long>(n)) + shift_c;
    // |d/dz (z^n + z^-n)| <= n ((|z|+r)^{n-1} + (|z|-r)^{-n-1}) on the disk.
    const Real hi = abs(root.value) + root.radius;
    const Real lo = abs(root.value) - root.radius;
    const Real deriv = Real(static_cast<long>(n), prec) *
                       (pow_ui(hi, n - 1) + Real(1L, prec) / pow_ui(lo, n + 1));
    const Real err = deriv * root.radius;
    prod *= factor;
    const Real fa = abs(factor);
    prod_abs_hi *= fa + err;
    prod_abs *= fa;
  }
  // |prod(F_j + d_j) - prod F_j| <= prod(|F_j| + e_j) - prod |F_j|;
  // the pow2 term covers the rounding of the product evaluation itself.
  const Real bound = (prod_abs_hi - prod_abs) +
                     prod_abs_hi * Real::pow2(-static_cast<long>(prec) + 12, prec);
  return FactorProduct{prod, bound};
}

ForestCount chebyshev_attempt(const CirculantSpec& spec,
                              const PrecisionBudget& budget) {
  const mpfr_prec_t prec = budget.bits;
  const LaurentPoly p = associated_polynomial(spec);
  const unsigned long n = spec.n();

  Complex prod(1, prec);
  Real bound(prec);
  if (!spec.half_step()) {
    const RootSet rs = find_roots(monicize(p).poly, budget);
    for (const auto& root : rs.roots)
      if (root.side == CircleSide::on_circle)
        throw InternalError("InternalInconsistency",
                            "associated polynomial has a root on the unit circle");
    const FactorProduct fp = outside_factor_product(rs, n, -2, prec);
    prod = fp.value;
    bound = fp.error_bound;
  } else {
    const RootSet ra = find_roots(monicize(p.plus_constant(-1)).poly, budget);
    const RootSet rb = find_roots(monicize(p.plus_constant(1)).poly, budget);
    for (const auto& rs : {ra, rb})
      for (const auto& root : rs.roots)
        if (root.side == CircleSide::on_circle)
          throw InternalError("InternalInconsistency",
                              "associated polynomial has a root on the unit circle");
    const FactorProduct fa = outside_factor_product(ra, n, -2, prec);
    const FactorProduct fb = outside_factor_product(rb, n, 2, prec);
    prod = fa.value * fb.value;
    bound = abs(fa.value) * fb.error_bound + abs(fb.value) * fa.error_bound +
            fa.error_bound * fb.error_bound;
  }

  mpz_class nearest;
  mpfr_get_z(nearest.get_mpz_t(), prod.re.raw(), MPFR_RNDN);
  const Real residual = abs(prod - Complex(Real(nearest, prec), Real(prec)));
  const Real quarter(0.25, prec);
  if (!(residual < quarter) || !(bound < quarter))
    throw NumericError("PrecisionExhausted",
                       "chebyshev product for " + spec.name() +
                           " did not round cleanly at " +
                           std::to_string(budget.bits) + " bits");
  return ForestCount{abs(nearest), CountMethod::chebyshev,
                     residual.to_double()};
}

}  // namespace

ForestCount count_by_chebyshev(const CirculantSpec& spec,
                               PrecisionBudget budget) {
  for (;;) {
    try {
      return chebyshev_attempt(spec, budget);
    } catch (const NumericError& e) {
      if (e.kind() != "PrecisionExhausted" ||
          budget.bits >= PrecisionBudget::kMaxBits)
        throw;
      budget = budget.doubled();
    }
  }
}

SpectrumEntry eigenvalue(const CirculantSpec& spec, unsigned long j,
                         const PrecisionBudget& budget) {
  const unsigned long nv = spec.vertex_count();
  if (j >= nv)
    throw InputError("IndexOutOfRange",
                     "eigenvalue index " + std::to_string(j) + " outside [0, " +
                         std::to_string(nv) + ")");
  const mpfr_prec_t prec = budget.bits;
  const Real tau = Real::pi(prec) * Real(2L, prec);
  // theta = 2*pi*j/|V|; lambda_j = P(e^{i theta}) - (-1)^j half-step term.
  const Real theta = tau * Real(static_cast<long>(j), prec) /
                     Real(static_cast<long>(nv), prec);
  Real value(static_cast<long>(spec.valency() + 1), prec);
  const Real two(2L, prec);
  for (unsigned long s : spec.steps())
    value -= two * cos(theta * Real(static_cast<long>(s), prec));
  if (spec.half_step()) value -= Real(j % 2 == 0 ? 1L : -1L, prec);
  return SpectrumEntry{j, value};
}

mpz_class spanning_tree_count(const CirculantSpec& spec) {
  BigMatrix l = laplacian_plus_identity(spec);
  for (unsigned long i = 0; i < spec.vertex_count(); ++i) l.at(i, i) -= 1;
  return det_bareiss(l.minor_matrix(0, 0));
}

ForestSizeVector counts_by_size(const CirculantSpec& spec, std::size_t cap) {
  const unsigned long nv = spec.vertex_count();
  if (nv > cap)
    throw InputError("CapExceeded", spec.name() + " exceeds the per-size cap of " +
                                        std::to_string(cap) + " vertices");
  BigMatrix l = laplacian_plus_identity(spec);
  for (unsigned long i = 0; i < nv; ++i) l.at(i, i) -= 1;
  const IntPoly chi = charpoly_berkowitz(l);

  // chi(lambda) = sum c_t lambda^t; |c_t| counts the rooted forests with t
  // trees (Kelmans-Chelnokov), c_0 = 0 since L is singular.
  if (chi.coeff(0) != 0)
    throw InternalError("InternalInconsistency",
                        "characteristic polynomial of L has a nonzero constant term");
  ForestSizeVector v;
  v.counts.reserve(nv);
  mpz_class total(0);
  for (unsigned long t = 1; t <= nv; ++t) {
    v.counts.push_back(abs(chi.coeff(t)));
    total += v.counts.back();
  }
  if (total != count_by_determinant(spec, cap).value)
    throw InternalError("InternalInconsistency",
                        "per-size counts do not sum to det(I + L) for " + spec.name());
  if (v.counts.front() != mpz_class(nv) * spanning_tree_count(spec))
    throw InternalError("InternalInconsistency",
                        "size-1 count disagrees with the spanning-tree count for " +
                            spec.name());
  return v;
}

}  // namespace circforest
