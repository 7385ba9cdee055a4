// Times the OpenMP kernels against their serial reference implementations
// on fixed circulant workloads and checks that both produce bit-identical
// results.  Sizes can be overridden: bench [det_order] [charpoly_order].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circforest/bigmatrix.hpp"
#include "circforest/forest.hpp"
#include "circforest/laurent_poly.hpp"
#include "circforest/roots.hpp"
#include "circforest/spec.hpp"

namespace {

template <typename F>
double seconds(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

void row(const char* kernel, const std::string& size, double serial,
         double parallel, bool match) {
  std::printf("%-20s %-12s %10.3fs %10.3fs %8.2fx   %s\n", kernel, size.c_str(),
              serial, parallel, serial / parallel, match ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned long det_order =
      argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 128;
  const unsigned long charpoly_order =
      argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 48;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%-20s %-12s %11s %11s %9s   %s\n", "kernel", "size", "serial",
              "parallel", "speedup", "match");

  using namespace circforest;

  {
    const CirculantSpec spec =
        CirculantSpec::validate({1, 2, 3}, false, det_order);
    const BigMatrix m = laplacian_plus_identity(spec);
    mpz_class serial_det, parallel_det;
    const double ts = seconds([&] { serial_det = det_bareiss_serial(m); });
    const double tp = seconds([&] { parallel_det = det_bareiss(m); });
    row("bareiss-det", std::to_string(det_order), ts, tp,
        serial_det == parallel_det);
  }

  {
    const CirculantSpec spec =
        CirculantSpec::validate({1, 2}, false, charpoly_order);
    BigMatrix l = laplacian_plus_identity(spec);
    for (unsigned long i = 0; i < charpoly_order; ++i) l.at(i, i) -= 1;
    IntPoly serial_chi, parallel_chi;
    const double ts = seconds([&] { serial_chi = charpoly_berkowitz_serial(l); });
    const double tp = seconds([&] { parallel_chi = charpoly_berkowitz(l); });
    row("berkowitz-charpoly", std::to_string(charpoly_order), ts, tp,
        serial_chi == parallel_chi);
  }

  {
    const CirculantSpec spec =
        CirculantSpec::validate({1, 2, 3, 4, 5}, false, 11);
    const IntPoly q = monicize(associated_polynomial(spec)).poly;
    const PrecisionBudget budget(2048);
    RootSet serial_roots, parallel_roots;
    const double ts = seconds([&] { serial_roots = find_roots_serial(q, budget); });
    const double tp = seconds([&] { parallel_roots = find_roots(q, budget); });
    bool match = serial_roots.roots.size() == parallel_roots.roots.size();
    for (std::size_t i = 0; match && i < serial_roots.roots.size(); ++i)
      match = serial_roots.roots[i].value.re == parallel_roots.roots[i].value.re &&
              serial_roots.roots[i].value.im == parallel_roots.roots[i].value.im;
    row("aberth-roots", "deg " + std::to_string(q.degree()), ts, tp, match);
  }

  return 0;
}
