// Release gate: one line per numbered criterion, PASS or FAIL, exit 0 only
// when every criterion passes.  Criteria 1-5 drive the library directly;
// criterion 6 shells out to the CLI binary the build just produced.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "circforest/arith.hpp"
#include "circforest/chebyshev.hpp"
#include "circforest/forest.hpp"
#include "circforest/mahler.hpp"
#include "circforest/precision.hpp"
#include "circforest/spec.hpp"

#ifndef CIRCFOREST_CLI_PATH
#error "CIRCFOREST_CLI_PATH must point at the built binary"
#endif

using namespace circforest;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// All valid specs of one family over nonempty step subsets of 1..max_step
// and orders lo..hi.  Invalid (step, order) combinations simply drop out.
std::vector<CirculantSpec> family_grid(unsigned long max_step, bool half,
                                       unsigned long lo, unsigned long hi) {
  std::vector<CirculantSpec> grid;
  for (unsigned long mask = 1; mask < (1UL << max_step); ++mask) {
    std::vector<unsigned long> steps;
    for (unsigned long s = 1; s <= max_step; ++s)
      if (mask & (1UL << (s - 1))) steps.push_back(s);
    for (unsigned long n = lo; n <= hi; ++n) {
      try {
        grid.push_back(CirculantSpec::validate(steps, half, n));
      } catch (const InputError&) {
        // outside the family's validity range at this order
      }
    }
  }
  return grid;
}

struct Criterion {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first failure, it reads best
    ok = false;
  }
};

int finish(int index, const std::string& label, const Criterion& c) {
  if (c.ok) {
    std::cout << "PASS criterion-" << index << " " << label << "\n";
    return 0;
  }
  std::cout << "FAIL criterion-" << index << " " << label << ": " << c.detail
            << "\n";
  return 1;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd =
      std::string(CIRCFOREST_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status)) return {-1, out};
  return {WEXITSTATUS(status), out};
}

std::string str_of(const Real& x) { return x.str(25); }

}  // namespace

// ---------------------------------------------------------------------------

struct GridOutcome {
  Criterion equivalence;
  Criterion structure;
  std::string label1;
  std::string label4;
};

static GridOutcome run_grid() {
  GridOutcome out;
  Criterion& equivalence = out.equivalence;
  Criterion& structure = out.structure;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<CirculantSpec> grid = family_grid(5, false, 3, 64);
  const std::vector<CirculantSpec> half = family_grid(4, true, 2, 40);
  grid.insert(grid.end(), half.begin(), half.end());

  std::size_t checked = 0;
  for (const CirculantSpec& spec : grid) {
    mpz_class f;
    try {
      const ForestCount det = count_by_determinant(spec);
      const ForestCount res = count_by_resultant(spec);
      const ForestCount che = count_by_chebyshev(spec);
      f = det.value;
      if (res.value != f || che.value != f)
        equivalence.fail(spec.name() + ": det " + f.get_str() + ", resultant " +
                         res.value.get_str() + ", chebyshev " +
                         che.value.get_str());
    } catch (const Error& e) {
      equivalence.fail(spec.name() + " raised " + e.kind() + ": " + e.what());
      continue;
    }
    ++checked;

    try {
      const SquareStructure s = verify_square_structure(spec, f);
      if (!s.holds)
        structure.fail(spec.name() + ": " + f.get_str() +
                       " is not multiplier-times-square");
      else if (s.multiplier != predicted_multiplier(spec))
        structure.fail(spec.name() + ": multiplier " + s.multiplier.get_str() +
                       " != predicted " + predicted_multiplier(spec).get_str());
    } catch (const Error& e) {
      structure.fail(spec.name() + " raised " + e.kind() + ": " + e.what());
    }
  }

  const double elapsed = seconds_since(t0);
  if (elapsed >= 300.0) {
    std::ostringstream why;
    why << "grid took " << elapsed << "s, budget is 300s";
    equivalence.fail(why.str());
  }

  std::ostringstream label1;
  label1 << "three counting methods agree on all " << checked
         << " grid specs (" << static_cast<int>(elapsed) << "s)";
  std::ostringstream label4;
  label4 << "square structure and predicted multipliers hold on all "
         << checked << " grid specs";
  out.label1 = label1.str();
  out.label4 = label4.str();
  return out;
}

static int criterion_2() {
  Criterion c;

  // Cycle counts against the Fibonacci/Lucas closed form, 2 <= n <= 40.
  // n = 2 has no simple-graph cycle; the Chebyshev closed form
  // f(C_n(1)) = 2 T_n(3/2) - 2 extends the family there (double edge).
  for (unsigned long n = 2; n <= 40; ++n) {
    mpz_class actual;
    if (n == 2) {
      const mpq_class v = 2 * chebyshev_T(n, mpq_class(3, 2)) - 2;
      actual = v.get_num();  // denominator is 1 here
    } else {
      actual = count_by_determinant(CirculantSpec::validate({1}, false, n)).value;
    }
    const auto [fn, ln] = fibonacci_lucas(n);
    const mpz_class expected = (n % 2 == 0) ? mpz_class(5 * fn * fn) : mpz_class(ln * ln);
    if (actual != expected) {
      c.fail("C_" + std::to_string(n) + "(1): got " + actual.get_str() +
             ", closed form gives " + expected.get_str());
      break;
    }
  }

  const mpz_class f_k4 =
      count_by_determinant(CirculantSpec::validate({1}, true, 2)).value;
  if (f_k4 != 125) c.fail("C_4(1,2): got " + f_k4.get_str() + ", want 125");

  const CirculantSpec k33 = CirculantSpec::validate({1}, true, 3);
  const mpz_class f_k33 = count_by_determinant(k33).value;
  if (f_k33 != 1792) c.fail("C_6(1,3): got " + f_k33.get_str() + ", want 1792");
  const SquareStructure s = verify_square_structure(k33, f_k33);
  if (!s.holds || s.multiplier != 7 || s.root != 16)
    c.fail("C_6(1,3) is not 7 * 16^2");

  const ForestSizeVector v =
      counts_by_size(CirculantSpec::validate({1}, false, 3));
  if (v.counts != std::vector<mpz_class>{9, 6, 1})
    c.fail("C_3(1) per-size vector is not [9, 6, 1]");

  return finish(2, "exact cycle, K_4, K_3,3 and per-size fixtures", c);
}

static int criterion_3() {
  Criterion c;
  const mpfr_prec_t ref = 512;

  const auto spec_even = [](std::vector<unsigned long> s) {
    unsigned long n = 2 * s.back() + 1;
    return CirculantSpec::validate(std::move(s), false, n);
  };

  // (3 + sqrt 5)/2 to 1e-10.
  const Real a1 = asymptotic_constant(spec_even({1})).value;
  const Real golden = (Real(3L, ref) + sqrt(Real(5L, ref))) / Real(2L, ref);
  if (!(abs(a1 - golden) < Real("1e-10", ref)))
    c.fail("C_n(1) constant " + str_of(a1) + " != (3+sqrt5)/2");

  // 4.3902568 to 1e-6.
  const Real a12 = asymptotic_constant(spec_even({1, 2})).value;
  if (!(abs(a12 - Real("4.3902568", ref)) < Real("1e-6", ref)))
    c.fail("C_n(1,2) constant " + str_of(a12) + " != 4.3902568 to 1e-6");

  // 4.48461 to 1e-4, and the reported value satisfies its quartic.
  const Real a13 = asymptotic_constant(spec_even({1, 3})).value;
  if (!(abs(a13 - Real("4.48461", ref)) < Real("1e-4", ref)))
    c.fail("C_n(1,3) constant " + str_of(a13) + " != 4.48461 to 1e-4");
  const Real z = a13;
  const Real quartic = ((((z - Real(4L, ref)) * z - Real(2L, ref)) * z -
                         Real(1L, ref)) *
                            z +
                        Real(1L, ref));
  if (!(abs(quartic) < Real("1e-8", ref)))
    c.fail("z^4-4z^3-2z^2-z+1 at the C_n(1,3) constant is " + str_of(quartic));

  // (3+sqrt5)(5+sqrt21)/4 to 1e-4 for the half-step family.
  const Real a1n =
      asymptotic_constant(CirculantSpec::validate({1}, true, 2)).value;
  const Real moebius = (Real(3L, ref) + sqrt(Real(5L, ref))) *
                       (Real(5L, ref) + sqrt(Real(21L, ref))) / Real(4L, ref);
  if (!(abs(a1n - moebius) < Real("1e-4", ref)))
    c.fail("C_2n(1,n) constant " + str_of(a1n) + " != (3+sqrt5)(5+sqrt21)/4");

  // Both Mahler estimators agree within combined error bounds, per family.
  const std::vector<CirculantSpec> families = {
      spec_even({1}), spec_even({1, 2}), spec_even({1, 3}),
      CirculantSpec::validate({1}, true, 2)};
  for (const CirculantSpec& spec : families) {
    const auto [root, quad] = mahler_estimates(spec);
    if (!(abs(root.value - quad.value) <= root.error_bound + quad.error_bound))
      c.fail(spec.name() + ": Mahler methods disagree beyond bounds");
  }

  return finish(3, "growth constants match the four closed forms", c);
}

static int criterion_5() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();

  const CirculantSpec family = CirculantSpec::validate({1, 2}, false, 5);
  const Real a = asymptotic_constant(family, PrecisionBudget(256)).value;
  const mpz_class f = count_by_resultant(family.with_n(100)).value;

  const mpfr_prec_t prec = 512;
  const Real ratio = Real(f, prec) / pow_ui(a, 100);
  const Real gap = abs(ratio - Real(1L, prec));
  if (!(gap <= Real("1e-6", prec)))
    c.fail("|f/A^100 - 1| = " + str_of(gap));

  const double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) {
    std::ostringstream why;
    why << "took " << elapsed << "s, budget is 30s";
    c.fail(why.str());
  }

  return finish(5, "n = 100 counts track A^n to 1e-6 inside 30s", c);
}

static int criterion_6() {
  Criterion c;

  const std::string args =
      "count-range --steps 1,2 --n-from 3 --n-to 20 --method all --format json";
  const auto [code_a, out_a] = run_cli(args);
  const auto [code_b, out_b] = run_cli(args);
  if (code_a != 0 || code_b != 0)
    c.fail("count-range exited " + std::to_string(code_a) + " / " +
           std::to_string(code_b));
  else if (out_a != out_b)
    c.fail("two identical invocations differ in output bytes");
  else if (out_a.empty())
    c.fail("count-range printed nothing");

  const auto [selftest_code, selftest_out] = run_cli("selftest");
  if (selftest_code != 0)
    c.fail("selftest exited " + std::to_string(selftest_code));

  return finish(6, "CLI output is byte-deterministic and selftest exits 0", c);
}

int main() {
  const GridOutcome grid = run_grid();  // shared by criteria 1 and 4
  int failures = 0;
  failures += finish(1, grid.label1, grid.equivalence);
  failures += criterion_2();
  failures += criterion_3();
  failures += finish(4, grid.label4, grid.structure);
  failures += criterion_5();
  failures += criterion_6();
  return failures == 0 ? 0 : 1;
}
