// Benchmark: OpenMP row reduction against the serial reference, with an
// exact equality check between the two results.
#include <chrono>
#include <cstdio>
#include <random>

#include <CLI11.hpp>

#include "alcalc/linalg.hpp"

using namespace alcalc;
using Clock = std::chrono::steady_clock;

static Mat random_mat(std::mt19937_64& rng, int m, int n, long long p) {
  Mat a(m, n, p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = Fk::of(static_cast<long long>(rng() % (2 * 1000 + 1)) - 1000, p);
  return a;
}

int main(int argc, char** argv) {
  CLI::App app{"row-reduction benchmark: parallel kernel vs serial reference"};
  int n = 250;
  long long p = 99991;
  unsigned long long seed = 1;
  int reps = 3;
  app.add_option("--n", n, "matrix size (n x n)");
  app.add_option("--char-p", p, "field characteristic (0 = rationals)");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--reps", reps, "repetitions");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  double total_par = 0, total_ser = 0;
  for (int r = 0; r < reps; ++r) {
    Mat a = random_mat(rng, n, n, p);

    auto t0 = Clock::now();
    Rref rp = rref(a);
    auto t1 = Clock::now();
    Rref rs = rref_serial(a);
    auto t2 = Clock::now();

    if (!(rp.r == rs.r && rp.pivots == rs.pivots)) {
      std::fprintf(stderr, "MISMATCH between parallel and serial results\n");
      return 1;
    }
    total_par += std::chrono::duration<double, std::milli>(t1 - t0).count();
    total_ser += std::chrono::duration<double, std::milli>(t2 - t1).count();
  }
  std::printf("rowreduce n=%d p=%lld reps=%d: parallel %.1f ms, serial %.1f ms, speedup %.2fx\n",
              n, p, reps, total_par / reps, total_ser / reps,
              total_par > 0 ? total_ser / total_par : 0.0);
  std::printf("results identical: yes\n");
  return 0;
}
