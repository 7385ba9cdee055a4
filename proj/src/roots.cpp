#include "circforest/roots.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "circforest/errors.hpp"

namespace circforest {
namespace {

// Coefficients of an IntPoly converted once to a fixed working precision.
struct RealPoly {
  std::vector<Real> c;  // lowest degree first

  RealPoly(const IntPoly& p, mpfr_prec_t prec) {
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v, prec);
  }

  Complex eval(const Complex& z) const {
    const mpfr_prec_t prec = z.prec();
    Complex acc(prec);
    for (std::size_t i = c.size(); i-- > 0;)
      acc = acc * z + Complex(c[i], Real(prec));
    return acc;
  }
};

// Cauchy bound: every root has modulus < 1 + max_i |c_i| / |c_d|.
Real initial_radius(const IntPoly& p, mpfr_prec_t prec) {
  const auto& c = p.coeffs();
  mpq_class m(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    mpq_class ratio(abs(c[i]), abs(c.back()));
    ratio.canonicalize();
    if (ratio > m) m = ratio;
  }
  return Real(m + 1, prec);
}

struct Approx {
  std::vector<Complex> z;
  std::vector<Real> radius;
};

// Aberth-Ehrlich simultaneous iteration on a squarefree polynomial.
// Jacobi sweeps: every correction in a sweep is computed from the same
// snapshot of the points, so thread count cannot change the result.
// Certification: with W_j = p(z_j) / (lc * prod_{i != j} (z_j - z_i)), the
// union of disks |z - z_j| <= d|W_j| contains all roots, and pairwise
// disjoint disks contain exactly one root each.
Approx aberth(const IntPoly& f, mpfr_prec_t prec, bool parallel) {
  const int d = f.degree();
  const RealPoly p(f, prec);
  const RealPoly dp(f.derivative(), prec);
  const Real one(1L, prec);
  const Complex cone(1, prec);

  const Real start_radius = initial_radius(f, prec);
  const Real pi = Real::pi(prec);
  std::vector<Complex> z(d);
  for (int j = 0; j < d; ++j) {
    // Angles offset by pi/(2d) so no starting point sits on the real axis.
    const Real angle = pi * Real(4L * j + 1, prec) / Real(2L * d, prec);
    z[j] = Complex::from_polar(start_radius, angle);
  }

  const Real tol = Real::pow2(-static_cast<long>(prec) + 16, prec);
  std::vector<Complex> w(d);
  bool settled = false;
  const int max_sweeps = 500;
  for (int sweep = 0; sweep < max_sweeps && !settled; ++sweep) {
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < d; ++j) {
      const Complex pj = p.eval(z[j]);
      if (pj.is_zero()) {
        w[j] = Complex(prec);
        continue;
      }
      const Complex dj = dp.eval(z[j]);
      Complex newton;
      if (dj.is_zero()) {
        // Exactly at a critical point: nudge deterministically and go on.
        newton = Complex(Real::pow2(-4, prec), Real(prec));
      } else {
        newton = pj / dj;
      }
      Complex s(prec);
      for (int i = 0; i < d; ++i) {
        if (i == j) continue;
        const Complex diff = z[j] - z[i];
        if (!diff.is_zero()) s += cone / diff;
      }
      const Complex denom = cone - newton * s;
      w[j] = denom.is_zero() ? newton : newton / denom;
    }
    Real worst(prec);
    for (int j = 0; j < d; ++j) {
      z[j] -= w[j];
      worst = max(worst, abs(w[j]) / max(abs(z[j]), one));
    }
    settled = worst < tol;
  }
  if (!settled)
    throw NumericError("PrecisionExhausted",
                       "root iteration did not settle for " + f.str());

  // A posteriori radii; the evaluation-noise term covers the rounding
  // error of computing p(z_j) itself near a root.
  Real coeff_sum(prec);
  for (const Real& cv : p.c) coeff_sum += abs(cv);
  const Real lc_abs = abs(p.c.back());
  const Real noise = Real::pow2(-static_cast<long>(prec) + 6, prec);
  Approx out;
  out.z = std::move(z);
  out.radius.assign(d, Real(prec));
#pragma omp parallel for schedule(static) if (parallel)
  for (int j = 0; j < d; ++j) {
    const Real pz = abs(p.eval(out.z[j]));
    const Real zb = max(abs(out.z[j]), one);
    const Real eval_err = coeff_sum * pow_ui(zb, static_cast<unsigned long>(d)) * noise;
    Real den = lc_abs;
    for (int i = 0; i < d; ++i)
      if (i != j) den *= abs(out.z[j] - out.z[i]);
    out.radius[j] = Real(2L * d, prec) * (pz + eval_err) / den;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (abs(out.z[i] - out.z[j]) <= out.radius[i] + out.radius[j])
        throw NumericError("PrecisionExhausted",
                           "inclusion disks overlap for " + f.str());
  return out;
}

RootSet find_roots_impl(const IntPoly& q, const PrecisionBudget& budget,
                        bool parallel) {
  if (q.is_zero())
    throw InputError("InvalidInput", "zero polynomial has no root set");
  const mpfr_prec_t prec = budget.bits;
  const Real one(1L, prec);
  RootSet rs;
  rs.radius_bound = Real(prec);
  if (q.degree() == 0) return rs;

  for (const auto& [factor, mult] : q.squarefree_factors()) {
    if (factor.degree() < 1) continue;
    Approx ap = aberth(factor, prec, parallel);
    // Exact witnesses let genuinely on-circle roots at +-1 through; any
    // other disk touching the circle is a precision failure.
    const bool root_at_one = factor.eval(mpz_class(1)) == 0;
    const bool root_at_minus_one = factor.eval(mpz_class(-1)) == 0;
    for (std::size_t j = 0; j < ap.z.size(); ++j) {
      const Real az = abs(ap.z[j]);
      const Real& r = ap.radius[j];
      CircleSide side;
      if (az + r < one) {
        side = CircleSide::inside;
      } else if (az - r > one) {
        side = CircleSide::outside;
      } else if (root_at_one && abs(ap.z[j] - Complex(1, prec)) <= r) {
        side = CircleSide::on_circle;
      } else if (root_at_minus_one && abs(ap.z[j] + Complex(1, prec)) <= r) {
        side = CircleSide::on_circle;
      } else {
        throw NumericError("PrecisionExhausted",
                           "root disk straddles the unit circle for " + q.str());
      }
      for (int t = 0; t < mult; ++t)
        rs.roots.push_back(RootEstimate{ap.z[j], r, side});
      rs.radius_bound = max(rs.radius_bound, r);
    }
  }
  if (rs.roots.size() != static_cast<std::size_t>(q.degree()))
    throw InternalError("InternalInconsistency",
                        "root multiplicities do not add up to the degree");
  return rs;
}

}  // namespace

RootSet find_roots(const IntPoly& q, const PrecisionBudget& budget) {
  return find_roots_impl(q, budget, true);
}

RootSet find_roots_serial(const IntPoly& q, const PrecisionBudget& budget) {
  return find_roots_impl(q, budget, false);
}

bool reciprocal_pairing_ok(const RootSet& rs) {
  for (const auto& root : rs.roots) {
    const mpfr_prec_t prec = root.value.prec();
    const Real az = abs(root.value);
    if (az <= root.radius) return false;  // disk reaches zero, no reciprocal
    const Complex inv = Complex(1, prec) / root.value;
    // Inversion maps the disk around z into one of radius r/(|z|(|z|-r)).
    const Real inv_radius = root.radius / (az * (az - root.radius));
    bool paired = false;
    for (const auto& other : rs.roots) {
      if (abs(other.value - inv) <= other.radius + inv_radius) {
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return true;
}

}  // namespace circforest
