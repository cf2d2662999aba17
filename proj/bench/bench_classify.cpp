// Times the serial group-algebra kernel against the bitset kernel on a few
// groups, with and without automorphism pruning.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "drg/classify_kernel.hpp"

using namespace drg;

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("%-10s %10s %12s %12s %12s %8s\n", "group", "subsets", "reference", "bitset", "bitset+aut", "drg");
  for (const char* spec : {"3,3", "6,3", "5,5", "9,3", "12,3"}) {
    AbelianGroup g = AbelianGroup::parse(spec);
    SubsetBasis b = subset_basis(g);
    AutomorphismGroup aut = automorphism_group(g);
    KernelResult ref, bit, red;
    double tr = seconds([&] { ref = run_reference_kernel(b); });
    double tb = seconds([&] { bit = run_bitset_kernel(b, {jobs, nullptr}); });
    double ta = seconds([&] { red = run_bitset_kernel(b, {jobs, &aut}); });
    if (ref.drg_indices != bit.drg_indices) {
      std::printf("kernels disagree on %s\n", spec);
      return 1;
    }
    std::printf("%-10s %10lld %11.4fs %11.4fs %11.4fs %8zu\n", spec, b.count(), tr, tb, ta, bit.drg_indices.size());
  }
  return 0;
}
