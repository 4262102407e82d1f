#include <cstdio>
#include <cstdlib>
#include <string>

#include "qwalk/gamma_group.hpp"
#include "qwalk/montecarlo.hpp"
#include "qwalk/threads.hpp"
#include "qwalk/transfer.hpp"

using namespace qwalk;

namespace {

struct Row {
  std::string name;
  double serial_ms, parallel_ms;
  bool identical;
};

void print(const Row& r) {
  std::printf("%-32s %10.1f ms %10.1f ms   x%-5.2f %s\n", r.name.c_str(),
              r.serial_ms, r.parallel_ms, r.serial_ms / r.parallel_ms,
              r.identical ? "outputs identical" : "OUTPUTS DIFFER");
}

Row bench_transfer() {
  const AbelianGroup X({3}), Y({3});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 3), DeformSide::right);
  const ExponentWord eps = ExponentWord::plain(3);
  Stopwatch s1;
  const TransferMatrix a = transfer_matrix_serial(W, eps);
  const double t1 = s1.elapsed_ms();
  Stopwatch s2;
  const TransferMatrix b = transfer_matrix(W, eps);
  const double t2 = s2.elapsed_ms();
  return {"transfer assembly (Z3,Z3) p=3", t1, t2, a.mat() == b.mat()};
}

Row bench_walk() {
  const AbelianGroup X({2}), Y({2});
  const int p = 12;
  Stopwatch s1;
  const WalkMoment a = walk_moment(X, Y, p, WalkMethod::multiset, false);
  const double t1 = s1.elapsed_ms();
  Stopwatch s2;
  const WalkMoment b = walk_moment(X, Y, p, WalkMethod::multiset, true);
  const double t2 = s2.elapsed_ms();
  return {"walk enumeration (Z2,Z2) p=12", t1, t2, a.count == b.count};
}

Row bench_mc() {
  const int M = 8, N = 8, p = 3, samples = 20000;
  Stopwatch s1;
  const MomentReport a = mc_moment(M, N, p, samples, 5, false);
  const double t1 = s1.elapsed_ms();
  Stopwatch s2;
  const MomentReport b = mc_moment(M, N, p, samples, 5, true);
  const double t2 = s2.elapsed_ms();
  return {"mc sampling M=N=8 p=3 S=20000", t1, t2,
          a.value == b.value && a.uncertainty == b.uncertainty};
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  if (argc > 1) threads = std::atoi(argv[1]);
  const int used = resolve_threads(threads);
  std::printf("threads: %d\n", used);
  std::printf("%-32s %13s %13s   %-6s\n", "kernel", "serial", "parallel",
              "speedup");
  print(bench_transfer());
  print(bench_walk());
  print(bench_mc());
  return 0;
}
