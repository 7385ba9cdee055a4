#include <doctest.h>

#include <vector>

#include "circforest/arith.hpp"
#include "circforest/forest.hpp"
#include "circforest/spec.hpp"
#include "test_util.hpp"

using namespace circforest;
using testutil::close;
using testutil::thrown_kind;

namespace {

CirculantSpec even_spec(std::vector<unsigned long> steps, unsigned long n) {
  return CirculantSpec::validate(std::move(steps), false, n);
}

CirculantSpec half_spec(std::vector<unsigned long> steps, unsigned long n) {
  return CirculantSpec::validate(std::move(steps), true, n);
}

}  // namespace

TEST_SUITE("forest") {

TEST_CASE("method names are stable identifiers") {
  CHECK(method_name(CountMethod::determinant) == "determinant");
  CHECK(method_name(CountMethod::resultant) == "resultant");
  CHECK(method_name(CountMethod::chebyshev) == "chebyshev");
}

TEST_CASE("frozen counts for the small fixtures") {
  struct Fixture {
    CirculantSpec spec;
    long f;
  };
  const std::vector<Fixture> fixtures = {
      {even_spec({1}, 3), 16},     {even_spec({1}, 4), 45},
      {even_spec({1}, 5), 121},    {even_spec({1}, 6), 320},
      {even_spec({1, 2}, 5), 1296},
      {half_spec({1}, 3), 1792},   {half_spec({1}, 2), 125},  // K_4
  };
  for (const auto& [spec, f] : fixtures) {
    CAPTURE(spec.name());
    CHECK(count_by_determinant(spec).value == f);
    CHECK(count_by_resultant(spec).value == f);
    CHECK(count_by_chebyshev(spec).value == f);
  }
}

TEST_CASE("three methods agree across a mixed grid") {
  std::vector<CirculantSpec> grid;
  for (unsigned long n = 5; n <= 12; ++n) {
    grid.push_back(even_spec({1}, n));
    grid.push_back(even_spec({2}, n));
    grid.push_back(even_spec({1, 2}, n));
    if (n >= 7) grid.push_back(even_spec({1, 3}, n));
  }
  for (unsigned long n = 3; n <= 8; ++n) {
    grid.push_back(half_spec({1}, n));
    grid.push_back(half_spec({1, 2}, n));
  }
  for (const CirculantSpec& spec : grid) {
    CAPTURE(spec.name());
    const ForestCount det = count_by_determinant(spec);
    const ForestCount res = count_by_resultant(spec);
    const ForestCount che = count_by_chebyshev(spec);
    CHECK(det.value == res.value);
    CHECK(det.value == che.value);
    CHECK(det.method == CountMethod::determinant);
    CHECK(res.method == CountMethod::resultant);
    CHECK(che.method == CountMethod::chebyshev);
    CHECK(!det.residual.has_value());
    CHECK(!res.residual.has_value());
    REQUIRE(che.residual.has_value());
    CHECK(*che.residual < 0.25);
    CHECK(*che.residual >= 0.0);
  }
}

TEST_CASE("eigenvalues of I + L behave like the circulant spectrum") {
  const CirculantSpec c6 = even_spec({1}, 6);

  // lambda_0 = 1 exactly: the associated polynomial telescopes at z = 1.
  CHECK(eigenvalue(c6, 0).value == Real(1L, 256));
  CHECK(eigenvalue(half_spec({1}, 4), 0).value == Real(1L, 256));

  // lambda_3 of the 6-cycle: 3 - 2 cos(pi) = 5.
  CHECK(close(eigenvalue(c6, 3).value, Real(5L, 256), "1e-70"));

  // Palindromic spectrum: lambda_j = lambda_{n-j}.
  const CirculantSpec c7 = even_spec({1, 2}, 7);
  for (unsigned long j = 1; j < 7; ++j) {
    CHECK(close(eigenvalue(c7, j).value, eigenvalue(c7, 7 - j).value, "1e-70"));
    CHECK(eigenvalue(c7, j).index == j);
  }

  // The eigenvalue product reproduces the exact count.
  for (const CirculantSpec& spec : {even_spec({1, 3}, 7), half_spec({1}, 3)}) {
    Real prod(1L, 256);
    for (unsigned long j = 0; j < spec.vertex_count(); ++j)
      prod = prod * eigenvalue(spec, j).value;
    const Real exact(count_by_determinant(spec).value, 256);
    CAPTURE(spec.name());
    CHECK(abs(prod - exact) < Real("1e-30", 256) * exact);
  }

  // Half-step correction alternates: for C_6(1,3) the odd indices see the
  // +1 branch.  lambda_1 = 4 - 2cos(pi/3) + 1 = 4, lambda_2 = 4 - 2cos(2pi/3)
  // - 1 = 4, lambda_3 = 4 + 2 + 1 = 7.
  const CirculantSpec h3 = half_spec({1}, 3);
  CHECK(close(eigenvalue(h3, 1).value, Real(4L, 256), "1e-70"));
  CHECK(close(eigenvalue(h3, 2).value, Real(4L, 256), "1e-70"));
  CHECK(close(eigenvalue(h3, 3).value, Real(7L, 256), "1e-70"));

  CHECK(thrown_kind([&] { eigenvalue(c6, 6); }) == "IndexOutOfRange");
  CHECK(thrown_kind([&] { eigenvalue(h3, 6); }) == "IndexOutOfRange");
}

TEST_CASE("spanning tree counts for the classics") {
  CHECK(spanning_tree_count(even_spec({1}, 5)) == 5);      // plain cycle
  CHECK(spanning_tree_count(even_spec({1, 2}, 5)) == 125);  // K_5, Cayley 5^3
  CHECK(spanning_tree_count(half_spec({1}, 2)) == 16);      // K_4, Cayley 4^2
  CHECK(spanning_tree_count(half_spec({1}, 3)) == 81);      // K_{3,3}
}

TEST_CASE("per-size vectors tie to trees, forests, and the count") {
  const ForestSizeVector v3 = counts_by_size(even_spec({1}, 3));
  REQUIRE(v3.counts.size() == 3);
  CHECK(v3.counts[0] == 9);
  CHECK(v3.counts[1] == 6);
  CHECK(v3.counts[2] == 1);

  for (const CirculantSpec& spec :
       {even_spec({1}, 4), even_spec({1, 2}, 5), half_spec({1}, 3),
        even_spec({1}, 7)}) {
    CAPTURE(spec.name());
    const ForestSizeVector v = counts_by_size(spec);
    REQUIRE(v.counts.size() == spec.vertex_count());

    // One-tree forests are spanning trees with a choice of root.
    CHECK(v.counts.front() ==
          spec.vertex_count() * spanning_tree_count(spec));
    // The all-singletons forest is unique.
    CHECK(v.counts.back() == 1);

    mpz_class total = 0;
    for (const mpz_class& c : v.counts) {
      CHECK(c > 0);
      total += c;
    }
    CHECK(total == count_by_determinant(spec).value);
  }
}

TEST_CASE("size caps reject oversized requests up front") {
  CHECK(thrown_kind([] { count_by_determinant(even_spec({1}, 12), 8); }) ==
        "CapExceeded");
  CHECK(thrown_kind([] { counts_by_size(even_spec({1}, 12), 8); }) ==
        "CapExceeded");
}

}  // TEST_SUITE
