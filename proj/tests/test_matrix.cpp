#include <doctest.h>

#include <cstddef>
#include <vector>

#include "circforest/bigmatrix.hpp"
#include "circforest/forest.hpp"
#include "circforest/spec.hpp"

using namespace circforest;

namespace {

BigMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  BigMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Independent oracle: determinant by cofactor expansion along row zero.
// Exponential, so only used on tiny matrices.
mpz_class det_naive(const BigMatrix& m) {
  if (m.side() == 0) return 1;
  if (m.side() == 1) return m.at(0, 0);
  mpz_class acc = 0;
  for (std::size_t j = 0; j < m.side(); ++j) {
    if (m.at(0, j) == 0) continue;
    const mpz_class term = m.at(0, j) * det_naive(m.minor_matrix(0, j));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Deterministic pseudo-random fill; entries in [-half, half).
BigMatrix scrambled(std::size_t side, unsigned long seed, long half) {
  BigMatrix m(side);
  unsigned long state = seed * 2654435761UL + 1;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) {
      state = state * 6364136223846793005UL + 1442695040888963407UL;
      m.at(i, j) = static_cast<long>((state >> 33) % (2 * half)) - half;
    }
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("bareiss determinant on known matrices") {
  CHECK(det_bareiss(BigMatrix::identity(4)) == 1);
  CHECK(det_bareiss(BigMatrix(3)) == 0);  // all-zero matrix

  // Zero pivot forces the row swap (and the sign flip that goes with it).
  CHECK(det_bareiss(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_bareiss(from_rows({{0, 2, 1}, {1, 0, 0}, {0, 1, 1}})) == -1);

  CHECK(det_bareiss(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(det_bareiss(from_rows({{1, 2}, {2, 4}})) == 0);  // singular

  // Rank-deficient beyond the first pivot: column 2 = column 0 + column 1.
  CHECK(det_bareiss(from_rows({{1, 2, 3}, {4, 5, 9}, {7, 8, 15}})) == 0);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  for (unsigned long seed : {1UL, 2UL, 3UL, 4UL, 5UL}) {
    const BigMatrix m = scrambled(5, seed, 50);
    CHECK(det_bareiss(m) == det_naive(m));
  }
  // Larger entries to push intermediate growth through many limbs.
  const BigMatrix big = scrambled(6, 99UL, 1000000);
  CHECK(det_bareiss(big) == det_naive(big));
}

TEST_CASE("serial and parallel eliminations match bit for bit") {
  for (std::size_t side : {1UL, 2UL, 7UL, 16UL}) {
    const BigMatrix m = scrambled(side, side * 17 + 1, 5000);
    CHECK(det_bareiss_serial(m) == det_bareiss(m));
  }
}

TEST_CASE("berkowitz characteristic polynomial on known matrices") {
  // 1x1 [[5]]: lambda - 5.
  const IntPoly p1 = charpoly_berkowitz(from_rows({{5}}));
  CHECK(p1 == IntPoly({mpz_class(-5), mpz_class(1)}));

  // [[1,2],[3,4]]: lambda^2 - 5 lambda - 2.
  const IntPoly p2 = charpoly_berkowitz(from_rows({{1, 2}, {3, 4}}));
  CHECK(p2 == IntPoly({mpz_class(-2), mpz_class(-5), mpz_class(1)}));

  // [[2,1,0],[1,3,1],[0,1,4]]: lambda^3 - 9 lambda^2 + 24 lambda - 18.
  const IntPoly p3 = charpoly_berkowitz(from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}));
  CHECK(p3 ==
        IntPoly({mpz_class(-18), mpz_class(24), mpz_class(-9), mpz_class(1)}));

  // Identity: (lambda - 1)^n.
  const IntPoly pid = charpoly_berkowitz(BigMatrix::identity(3));
  CHECK(pid == IntPoly({mpz_class(-1), mpz_class(3), mpz_class(-3), mpz_class(1)}));
}

TEST_CASE("berkowitz coefficients tie back to the determinant") {
  for (std::size_t side : {2UL, 4UL, 6UL}) {
    const BigMatrix m = scrambled(side, side + 31, 100);
    const IntPoly p = charpoly_berkowitz(m);
    CHECK(p.degree() == static_cast<int>(side));
    CHECK(p.is_monic());
    // p(0) = det(-A) = (-1)^side det(A).
    const mpz_class det = det_bareiss(m);
    CHECK(p.coeff(0) == (side % 2 == 0 ? det : -det));
    // Trace shows up with opposite sign one below the top.
    mpz_class trace = 0;
    for (std::size_t i = 0; i < side; ++i) trace += m.at(i, i);
    CHECK(p.coeff(side - 1) == -trace);

    CHECK(charpoly_berkowitz_serial(m) == p);
  }
}

TEST_CASE("laplacian plus identity has unit row sums") {
  for (const CirculantSpec& spec :
       {CirculantSpec::validate({1, 2}, false, 7),
        CirculantSpec::validate({1, 2}, true, 5),
        CirculantSpec::validate({2, 3}, false, 9)}) {
    const BigMatrix m = laplacian_plus_identity(spec);
    CHECK(m.side() == spec.vertex_count());
    for (std::size_t i = 0; i < m.side(); ++i) {
      mpz_class row_sum = 0;
      for (std::size_t j = 0; j < m.side(); ++j) {
        row_sum += m.at(i, j);
        CHECK(m.at(i, j) == m.at(j, i));  // symmetric
      }
      CHECK(row_sum == 1);
      CHECK(m.at(i, i) == static_cast<long>(spec.valency()) + 1);
    }
  }
}

TEST_CASE("minor matrix strikes the right row and column") {
  const BigMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const BigMatrix sub = m.minor_matrix(1, 0);
  CHECK(sub.side() == 2);
  CHECK(sub.at(0, 0) == 2);
  CHECK(sub.at(0, 1) == 3);
  CHECK(sub.at(1, 0) == 8);
  CHECK(sub.at(1, 1) == 9);
}

}  // TEST_SUITE
