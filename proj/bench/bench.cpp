// Timing table for the data-parallel sweeps against their serial references.
// Build-only utility; run by hand when tuning.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ncalg/growth.hpp"
#include "ncalg/lie.hpp"
#include "ncalg/presentation.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/veronese.hpp"

using namespace ncalg;

namespace {

double time_of(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    Presentation A = builtin_A();
    RewriteSystem sys = complete(make_system(A.order(), A.relators), 13);
    double s = time_of([&] { brute_force_counts_serial(sys, 13); });
    double p = time_of([&] { brute_force_counts(sys, 13); });
    row("brute-force counts, A, n <= 13", s, p);
  }
  {
    GradedLie L = GradedLie::build_L(28);
    double s = time_of([&] { jacobi_check_serial(L, 28); });
    double p = time_of([&] { jacobi_check(L, 28); });
    row("Jacobi sweep, L, n <= 28", s, p);
  }
  {
    Presentation U = builtin_U();
    for (int d : {4, 5}) {
      double s = time_of([&] { detail::veronese_quadratic_relations(U, d, false); });
      double p = time_of([&] { detail::veronese_quadratic_relations(U, d, true); });
      row("quadratic relations, U, d = " + std::to_string(d), s, p);
    }
  }
  return 0;
}
