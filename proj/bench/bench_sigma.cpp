// Compares the serial reference sigma scan against the OpenMP kernel.

#include <chrono>
#include <cstring>
#include <iostream>

#include "degseq/sigma.hpp"

using namespace degseq;

namespace {

double time_ms(const std::function<SigmaResult()>& fn, int* sigma_out) {
  auto t0 = std::chrono::steady_clock::now();
  SigmaResult r = fn();
  auto t1 = std::chrono::steady_clock::now();
  *sigma_out = r.sigma;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 7;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--full") == 0) max_n = 8;

  std::cout << "target K5-P3, serial reference vs OpenMP scan\n";
  for (int n = 5; n <= max_n; ++n) {
    auto target = TargetSpec::family(5, 3);
    int s1 = 0, s2 = 0;
    double serial = time_ms([&] { return sigma_exact_serial(target, n); }, &s1);
    double parallel = time_ms([&] { return sigma_exact(target, n); }, &s2);
    if (s1 != s2) {
      std::cerr << "MISMATCH at n=" << n << ": " << s1 << " vs " << s2 << "\n";
      return 1;
    }
    std::cout << "n=" << n << "  sigma=" << s1 << "  serial " << serial
              << " ms  parallel " << parallel << " ms  speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
  }
  return 0;
}
