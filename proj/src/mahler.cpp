#include "circforest/mahler.hpp"

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "circforest/errors.hpp"
#include "circforest/forest.hpp"
#include "circforest/roots.hpp"

namespace circforest {

std::string mahler_method_name(MahlerMethod m) {
  switch (m) {
    case MahlerMethod::root_product: return "rootProduct";
    case MahlerMethod::quadrature: return "quadrature";
  }
  std::abort();  // unreachable
}

namespace {

MahlerEstimate root_product_attempt(const LaurentPoly& p,
                                    const PrecisionBudget& budget) {
  const mpfr_prec_t prec = budget.bits;
  const auto [q, low] = p.as_poly();
  (void)low;  // powers of z do not change the measure
  const mpz_class lc_abs = abs(q.leading());
  const Real lc(lc_abs, prec);
  const Real floor_slack = Real::pow2(-static_cast<long>(prec) + 8, prec);
  if (q.degree() == 0)
    return MahlerEstimate{lc, lc * floor_slack, MahlerMethod::root_product};

  const RootSet rs = find_roots(q, budget);
  Real value = lc, hi = lc, lo = lc;
  for (const auto& root : rs.roots) {
    if (root.side == CircleSide::on_circle)
      throw NumericError("OnCircleRoot",
                         "Mahler measure undefined through a root on the unit "
                         "circle in " + p.str());
    if (root.side != CircleSide::outside) continue;
    const Real az = abs(root.value);
    value *= az;
    hi *= az + root.radius;
    lo *= az - root.radius;
  }
  const Real bound = (hi - lo) + hi * floor_slack;
  return MahlerEstimate{value, bound, MahlerMethod::root_product};
}

// Sum of log|P| over the sample grid j/number_of_nodes, restricted to odd j
// when only_odd is set (the new nodes of a doubling step).  The range is
// split into 64 fixed blocks summed in index order and combined in block
// order, so the result does not depend on the thread count.
Real log_sample_sum(const LaurentPoly& p, unsigned long nodes, bool only_odd,
                    mpfr_prec_t prec, const Real& tau) {
  const unsigned long count = only_odd ? nodes / 2 : nodes;
  constexpr unsigned long kBlocks = 64;
  std::vector<Real> partial(kBlocks, Real(prec));
  const Real node_count(static_cast<long>(nodes), prec);
  const Real tiny = Real::pow2(-static_cast<long>(prec) / 2, prec);
  int on_circle = 0;
#pragma omp parallel for schedule(static)
  for (unsigned long b = 0; b < kBlocks; ++b) {
    const unsigned long from = count * b / kBlocks;
    const unsigned long to = count * (b + 1) / kBlocks;
    Real s(prec);
    for (unsigned long i = from; i < to; ++i) {
      const unsigned long j = only_odd ? 2 * i + 1 : i;
      const Real theta =
          tau * Real(static_cast<long>(j), prec) / node_count;
      const Real mod = abs(p.eval_circle(theta));
      if (mod < tiny) {
#pragma omp atomic write
        on_circle = 1;
        continue;
      }
      s += log(mod);
    }
    partial[b] = std::move(s);
  }
  if (on_circle)
    throw NumericError("OnCircleRoot",
                       "integrand unbounded on the unit circle for " + p.str());
  Real total(prec);
  for (const Real& s : partial) total += s;
  return total;
}

}  // namespace

MahlerEstimate mahler_root_product(const LaurentPoly& p,
                                   PrecisionBudget budget) {
  if (p.is_zero())
    throw InputError("InvalidInput", "Mahler measure of the zero polynomial");
  for (;;) {
    try {
      return root_product_attempt(p, budget);
    } catch (const NumericError& e) {
      if (e.kind() != "PrecisionExhausted" ||
          budget.bits >= PrecisionBudget::kMaxBits)
        throw;
      budget = budget.doubled();
    }
  }
}

MahlerEstimate mahler_quadrature(const LaurentPoly& p, const Real& tol,
                                 PrecisionBudget budget) {
  if (p.is_zero())
    throw InputError("InvalidInput", "Mahler measure of the zero polynomial");
  const mpfr_prec_t prec = budget.bits;
  const Real tau = Real::pi(prec) * Real(2L, prec);
  constexpr unsigned long kFirstNodes = 64;
  constexpr unsigned long kMaxNodes = 1UL << 20;

  unsigned long nodes = kFirstNodes;
  Real sum = log_sample_sum(p, nodes, false, prec, tau);
  Real estimate = exp(sum / Real(static_cast<long>(nodes), prec));
  while (nodes < kMaxNodes) {
    nodes *= 2;
    sum += log_sample_sum(p, nodes, true, prec, tau);
    const Real next = exp(sum / Real(static_cast<long>(nodes), prec));
    const Real diff = abs(next - estimate);
    estimate = next;
    if (diff < tol) {
      const Real floor_bound =
          estimate * Real::pow2(-static_cast<long>(prec) + 8, prec);
      return MahlerEstimate{estimate, max(Real(4L, prec) * diff, floor_bound),
                            MahlerMethod::quadrature};
    }
  }
  throw NumericError("ToleranceNotReached",
                     "quadrature levels did not agree within tolerance for " +
                         p.str());
}

std::pair<MahlerEstimate, MahlerEstimate> mahler_estimates(
    const CirculantSpec& spec, PrecisionBudget budget, double quad_tol) {
  const Real tol(quad_tol, budget.bits);
  const LaurentPoly p = associated_polynomial(spec);
  auto checked = [&spec](MahlerEstimate rp, MahlerEstimate qd) {
    if (abs(rp.value - qd.value) > rp.error_bound + qd.error_bound)
      throw InternalError("InternalInconsistency",
                          "Mahler methods disagree for " + spec.name());
    return std::make_pair(std::move(rp), std::move(qd));
  };
  if (!spec.half_step())
    return checked(mahler_root_product(p, budget),
                   mahler_quadrature(p, tol, budget));
  // Half-step family: the measure of (P-1)(P+1), factored (the measure is
  // multiplicative) for smaller root-finding calls.
  const LaurentPoly pm = p.plus_constant(-1);
  const LaurentPoly pp = p.plus_constant(1);
  const MahlerEstimate r1 = mahler_root_product(pm, budget);
  const MahlerEstimate r2 = mahler_root_product(pp, budget);
  MahlerEstimate out{r1.value * r2.value,
                     (r1.value + r1.error_bound) * (r2.value + r2.error_bound) -
                         (r1.value - r1.error_bound) * (r2.value - r2.error_bound),
                     MahlerMethod::root_product};
  return checked(std::move(out), mahler_quadrature(pm * pp, tol, budget));
}

MahlerEstimate asymptotic_constant(const CirculantSpec& spec,
                                   PrecisionBudget budget, double quad_tol) {
  return mahler_estimates(spec, budget, quad_tol).first;
}

ConvergenceReport convergence_report(const CirculantSpec& spec,
                                     unsigned long n_max,
                                     PrecisionBudget budget) {
  if (n_max < 1)
    throw InputError("InvalidInput", "convergence report needs n_max >= 1");
  const mpfr_prec_t prec = budget.bits;
  const MahlerEstimate limit = asymptotic_constant(spec, budget);
  std::vector<ConvergenceRow> rows;
  for (unsigned long m = 1; m <= n_max; ++m) {
    std::optional<CirculantSpec> row_spec;
    try {
      row_spec = spec.with_n(m);
    } catch (const InputError&) {
      continue;  // family member does not exist at this order
    }
    const mpz_class f = count_by_resultant(*row_spec).value;
    const Real fr(f, prec);
    rows.push_back(ConvergenceRow{m, f, fr / pow_ui(limit.value, m),
                                  exp(log(fr) / Real(static_cast<long>(m), prec))});
  }
  if (rows.empty())
    throw InputError("InvalidInput",
                     "no valid order of " + spec.name() + " at or below " +
                         std::to_string(n_max));
  const Real one(1L, prec);
  const Real tol(1e-6, prec);
  const bool flag = abs(rows.back().ratio - one) <= tol;
  return ConvergenceReport{std::move(rows), limit, flag};
}

}  // namespace circforest
