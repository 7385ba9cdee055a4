#include "circforest/arith.hpp"

#include <algorithm>
#include <map>

#include "circforest/errors.hpp"

namespace circforest {
namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Brent-cycle Pollard rho with polynomial x^2 + c; returns a nontrivial
// divisor of n (composite, odd, no factor <= kTrialLimit) or 0 on failure
// for this c.  Deterministic: fixed start x = 2 and block size.
mpz_class pollard_brent(const mpz_class& n, unsigned long c) {
  const unsigned long block = 128;
  const unsigned long max_steps = 1UL << 22;
  mpz_class y(2), g(1), q(1), x, ys, diff;
  unsigned long r = 1, steps = 0;
  auto advance = [&](mpz_class& v) {
    v = (v * v + c) % n;
    ++steps;
  };
  while (g == 1 && steps < max_steps) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) advance(y);
    for (unsigned long k = 0; k < r && g == 1; k += block) {
      ys = y;
      const unsigned long len = std::min(block, r - k);
      for (unsigned long i = 0; i < len; ++i) {
        advance(y);
        diff = x - y;
        q = q * abs(diff) % n;
      }
      g = gcd(q, n);
    }
    r *= 2;
  }
  if (g == 1) return 0;
  if (g == n) {
    // Block multiplication overshot; replay one step at a time.
    g = 1;
    while (g == 1) {
      advance(ys);
      diff = x - ys;
      g = gcd(abs(diff), n);
    }
  }
  return (g == n) ? mpz_class(0) : g;
}

void factor_into(mpz_class m, std::map<mpz_class, unsigned long>& powers) {
  if (m == 1) return;
  for (mpz_class d(2); d <= kTrialLimit && d * d <= m; d == 2 ? d = 3 : d += 2) {
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
      ++powers[d];
    }
  }
  if (m == 1) return;
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
    ++powers[m];
    return;
  }
  for (unsigned long c = 1; c <= 20; ++c) {
    const mpz_class d = pollard_brent(m, c);
    if (d != 0 && d != 1 && d != m) {
      factor_into(d, powers);
      factor_into(m / d, powers);
      return;
    }
  }
  throw NumericError("FactorizationIncomplete",
                     "could not split composite cofactor " + m.get_str());
}

}  // namespace

SquareFreeDecomposition squarefree_part(const mpz_class& m) {
  if (m < 1)
    throw InputError("InvalidInput",
                     "square-free decomposition needs a positive integer");
  std::map<mpz_class, unsigned long> powers;
  factor_into(m, powers);
  SquareFreeDecomposition d{m, 1, 1};
  for (const auto& [prime, e] : powers) {
    if (e % 2 == 1) d.square_free *= prime;
    mpz_class half;
    mpz_pow_ui(half.get_mpz_t(), prime.get_mpz_t(), e / 2);
    d.cofactor_root *= half;
  }
  return d;
}

unsigned long odd_step_count(const CirculantSpec& spec) {
  unsigned long p = 0;
  for (unsigned long s : spec.steps())
    if (s % 2 == 1) ++p;
  return p;
}

mpz_class predicted_multiplier(const CirculantSpec& spec) {
  const unsigned long p = odd_step_count(spec);
  const bool n_even = spec.n() % 2 == 0;
  if (!spec.half_step())
    return n_even ? squarefree_part(4 * p + 1).square_free : mpz_class(1);
  return n_even ? squarefree_part(4 * p + 1).square_free
                : squarefree_part(4 * p + 3).square_free;
}

SquareStructure verify_square_structure(const CirculantSpec& spec,
                                        const mpz_class& f) {
  if (f < 1)
    throw InputError("InvalidInput", "forest count must be a positive integer");
  const mpz_class multiplier = predicted_multiplier(spec);
  SquareStructure s{spec, odd_step_count(spec), multiplier, 0, false};
  if (!mpz_divisible_p(f.get_mpz_t(), multiplier.get_mpz_t())) return s;
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), f.get_mpz_t(), multiplier.get_mpz_t());
  if (mpz_perfect_square_p(quotient.get_mpz_t()) == 0) return s;
  mpz_sqrt(s.root.get_mpz_t(), quotient.get_mpz_t());
  s.holds = true;
  return s;
}

std::pair<mpz_class, mpz_class> fibonacci_lucas(unsigned long n) {
  mpz_class f, l;
  mpz_fib_ui(f.get_mpz_t(), n);
  mpz_lucnum_ui(l.get_mpz_t(), n);
  return {f, l};
}

}  // namespace circforest
