#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "qwalk/freeprob.hpp"
#include "qwalk/gamma_group.hpp"
#include "qwalk/montecarlo.hpp"
#include "qwalk/transfer.hpp"

using namespace qwalk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& msg) {
    if (!ok && pass) {
      pass = false;
      detail = msg;
    }
  }
  void note(const std::string& msg) {
    if (pass) detail = msg;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

MagicModel deformed(const char* x, const char* y, uint64_t seed) {
  const AbelianGroup X = parse_group(x), Y = parse_group(y);
  return deform(fourier_model(X), fourier_model(Y), generic_q(X, Y, seed),
                DeformSide::right);
}

// 1. magic + dual-magic at 1e-9: Fourier models and 20 seeded deformations
Outcome criterion1() {
  Outcome out;
  double worst = 0.0;
  for (const char* d : {"Z2", "Z3", "Z4", "Z5", "Z2xZ2"}) {
    const MagicModel U = from_hadamard(fourier_matrix(parse_group(d)));
    const MagicReport a = check_magic(U, 1e-9), b = check_magic(dual(U), 1e-9);
    worst = std::max({worst, a.worst(), b.worst()});
    out.require(a.pass && b.pass, std::string("fourier model on ") + d);
  }
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"Z2", "Z2"}, {"Z2", "Z3"}}) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      const MagicModel W = deformed(x, y, seed);
      const MagicReport a = check_magic(W, 1e-9), b = check_magic(dual(W), 1e-9);
      worst = std::max({worst, a.worst(), b.worst()});
      out.require(a.pass && b.pass,
                  std::string("deformed (") + x + "," + y + ") seed " +
                      std::to_string(seed));
    }
  }
  out.note("worst defect " + fmt("%.1e", worst) + " <= 1e-9");
  return out;
}

// 2. reciprocity at 1e-9 for p,r <= 3; dual-deform identity at 1e-12
Outcome criterion2() {
  Outcome out;
  double worst = 0.0;
  const MagicModel models[] = {fourier_model(AbelianGroup({2})),
                               fourier_model(AbelianGroup({3})),
                               deformed("Z2", "Z2", 47),
                               deformed("Z2", "Z3", 31)};
  for (const MagicModel& U : models) {
    const ReciprocityReport rep = check_reciprocity(U, 3, 3, 1e-9);
    worst = std::max(worst, rep.max_diff);
    out.require(rep.pass, "reciprocity diff " + fmt("%.1e", rep.max_diff));
  }

  double entry_worst = 0.0;
  for (auto [x, y, seed] :
       std::vector<std::tuple<const char*, const char*, uint64_t>>{
           {"Z2", "Z2", 47}, {"Z2", "Z3", 31}}) {
    const AbelianGroup X = parse_group(x), Y = parse_group(y);
    const PhaseMatrix Q = generic_q(X, Y, seed);
    const MagicModel U = fourier_model(X), V = fourier_model(Y);
    const MagicModel lhs = dual(deform(U, V, Q, DeformSide::right));
    const MagicModel rhs = deform(dual(U), dual(V), Q, DeformSide::left);
    for (int i = 0; i < lhs.n(); ++i)
      for (int j = 0; j < lhs.n(); ++j)
        entry_worst = std::max(
            entry_worst,
            (lhs.block(i, j) - rhs.block(i, j)).cwiseAbs().maxCoeff());
  }
  out.require(entry_worst <= 1e-12,
              "dual-deform entry diff " + fmt("%.1e", entry_worst));
  out.note("reciprocity " + fmt("%.1e", worst) + " <= 1e-9, dual-deform " +
           fmt("%.1e", entry_worst) + " <= 1e-12");
  return out;
}

// 3. four oracles at X=Y=Z2, generic Q, p in {1,2,3}
Outcome criterion3() {
  Outcome out;
  const AbelianGroup X({2}), Y({2});
  const uint64_t q_seed = 47, mc_seed = 1;
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, q_seed), DeformSide::right);
  const long long expect[] = {1, 3, 10};  // c_1 trivial, c_2, c_3 from counts
  std::string summary = "c =";
  for (int p = 1; p <= 3; ++p) {
    const long long c = expect[p - 1];
    const WalkMoment wm = walk_moment(X, Y, p, WalkMethod::multiset);
    const WalkMoment wg = walk_moment(X, Y, p, WalkMethod::group);
    out.require(wm.count == __int128(Y.size()) * wg.count,
                "multiset vs group count at p=" + std::to_string(p));
    out.require(wm.count == __int128(c) * wm.denominator,
                "exact count at p=" + std::to_string(p));

    const double spectral = haar_moment(W, p, HaarMethod::spectral).value;
    out.require(std::abs(spectral - double(c)) <= 1e-6,
                "spectral at p=" + std::to_string(p) + ": " +
                    fmt("%.2e", std::abs(spectral - double(c))));

    HaarParams params;
    params.cesaro_R = 2000;
    const double cesaro = haar_moment(W, p, HaarMethod::cesaro, params).value;
    out.require(std::abs(cesaro - double(c)) <= 1e-3 * double(c),
                "cesaro at p=" + std::to_string(p) + ": " +
                    fmt("%.2e", std::abs(cesaro - double(c))));

    const MomentReport mc = mc_moment(X.size(), Y.size(), p, 100000, mc_seed);
    out.require(std::abs(mc.value - double(c)) <=
                    4.0 * mc.uncertainty + 1e-12,
                "mc at p=" + std::to_string(p) + ": diff " +
                    fmt("%.2e", std::abs(mc.value - double(c))) + " vs 4se " +
                    fmt("%.2e", 4.0 * mc.uncertainty));
    summary += " " + std::to_string(c);
  }
  out.note(summary + " by count/spectral/cesaro/mc");
  return out;
}

// 4. walk_moment(X,Y,2) = M+N-1 for M,N in 2..5, as exact integers
Outcome criterion4() {
  Outcome out;
  for (int M = 2; M <= 5; ++M)
    for (int N = 2; N <= 5; ++N) {
      const WalkMoment wm =
          walk_moment(AbelianGroup({M}), AbelianGroup({N}), 2,
                      WalkMethod::multiset);
      out.require(wm.count == __int128(M + N - 1) * wm.denominator,
                  "M=" + std::to_string(M) + " N=" + std::to_string(N));
    }
  out.note("all 16 cyclic pairs exact");
  return out;
}

// 5. lemma 2.7 vs direct at 1e-9 (5 Q, p,r <= 2); tensor bound (20 Q, p,r <= 3)
Outcome criterion5() {
  Outcome out;
  const AbelianGroup X({2}), Y({2});
  const MagicModel U = fourier_model(X), V = fourier_model(Y);
  const MagicModel Vd = dual(V);
  double worst = 0.0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const PhaseMatrix Q = generic_q(X, Y, seed);
    const MagicModel W = deform(U, V, Q, DeformSide::right);
    for (int p = 1; p <= 2; ++p)
      for (int r = 1; r <= 2; ++r) {
        const double diff = std::abs(lemma27_moment(U, Vd, Q, p, r) -
                                     truncated_moment(W, p, r));
        worst = std::max(worst, diff);
        out.require(diff <= 1e-9, "lemma 2.7 seed " + std::to_string(seed) +
                                      " p=" + std::to_string(p) +
                                      " r=" + std::to_string(r));
      }
  }
  double min_slack = 1e300;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const PhaseMatrix Q = generic_q(X, Y, seed);
    for (int p = 1; p <= 3; ++p)
      for (int r = 1; r <= 3; ++r) {
        const TensorBoundReport rep = tensor_bound_check(U, V, Q, p, r);
        min_slack = std::min(min_slack, rep.slack);
        out.require(rep.precondition_u && rep.precondition_vdual && rep.holds,
                    "bound seed " + std::to_string(seed) + " p=" +
                        std::to_string(p) + " r=" + std::to_string(r));
      }
  }
  out.note("formula diff " + fmt("%.1e", worst) + ", bound slack >= " +
           fmt("%.1e", min_slack));
  return out;
}

// 6. model-representation bridge at 1e-9; probe separates 100 words
Outcome criterion6() {
  Outcome out;
  double worst = 0.0;
  int separated = 0;
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"Z2", "Z2"}, {"Z3", "Z3"}}) {
    const AbelianGroup X = parse_group(x), Y = parse_group(y);
    const PhaseMatrix Q = generic_q(X, Y, 29);
    const ModelRepReport rep = verify_model_rep(X, Y, Q, 1e-9);
    worst = std::max(worst, rep.worst);
    out.require(rep.pass, std::string("bridge on (") + x + "," + y + ")");

    const ProbeReport probe = faithfulness_probe(Q, 100, 90);
    separated += probe.words - probe.failures;
    out.require(probe.pass, std::string("probe on (") + x + "," + y + "): " +
                                std::to_string(probe.failures) + " of " +
                                std::to_string(probe.words) + " unseparated");
  }
  out.note("bridge defect " + fmt("%.1e", worst) + ", " +
           std::to_string(separated) + "/200 words separated");
  return out;
}

// 7. catalan / kreweras / MP quadrature at 1e-6 / delta block bound
Outcome criterion7() {
  Outcome out;
  for (int p = 1; p <= 10; ++p)
    out.require((long long)noncrossing_partitions(p).size() ==
                    catalan_number(p),
                "NC count p=" + std::to_string(p));
  for (int p = 1; p <= 8; ++p)
    for (const auto& pi : noncrossing_partitions(p)) {
      const SetPartition kr = kreweras(pi);
      out.require(is_noncrossing(kr) && pi.n_blocks() + kr.n_blocks() == p + 1,
                  "kreweras p=" + std::to_string(p));
    }
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0})
    for (int p = 1; p <= 6; ++p) {
      const double diff =
          std::abs(free_poisson_moment(t, p) - mp_law(t).moment(p, 1e-10));
      worst = std::max(worst, diff);
      out.require(diff <= 1e-6,
                  "MP moment t=" + fmt("%.1f", t) + " p=" + std::to_string(p) +
                      ": " + fmt("%.1e", diff));
    }
  for (int p = 2; p <= 5; ++p)
    for (const auto& pi : enumerate_partitions(p))
      for (const auto& sg : enumerate_partitions(p))
        if (delta_pair(pi, sg) == 1)
          out.require(pi.n_blocks() + sg.n_blocks() <= p + 1,
                      "delta bound p=" + std::to_string(p));
  out.note("MP quadrature diff " + fmt("%.1e", worst) + " <= 1e-6");
  return out;
}

// 8. asymptotic trend of c_2, c_3 against the Narayana predictor
Outcome criterion8() {
  Outcome out;
  // alpha = beta = 1: X = Y = Z_K
  for (int K = 2; K <= 8; ++K) {
    const WalkMoment wm = walk_moment(AbelianGroup({K}), AbelianGroup({K}), 2,
                                      WalkMethod::multiset);
    out.require(wm.count == __int128(2 * K - 1) * wm.denominator,
                "c_2 != 2K-1 at K=" + std::to_string(K));
  }
  double prev = 1e300;
  for (int K = 2; K <= 6; ++K) {
    const WalkMoment wm = walk_moment(AbelianGroup({K}), AbelianGroup({K}), 3,
                                      WalkMethod::multiset);
    const double gap = std::abs(wm.value() / (double(K) * K) - 5.0);
    out.require(gap < prev, "|c_3/K^2 - 5| not decreasing at K=" +
                                std::to_string(K));
    prev = gap;
  }
  // (alpha, beta) = (2, 1): X = Z_{2K}, Y = Z_K
  long long limit = 0;
  for (int r = 1; r <= 3; ++r)
    limit += narayana_number(3, r) * (1LL << (r - 1));
  out.require(limit == 11, "Narayana predictor sum");
  for (int K = 2; K <= 5; ++K) {
    const WalkMoment wm = walk_moment(AbelianGroup({2 * K}), AbelianGroup({K}),
                                      2, WalkMethod::multiset);
    out.require(wm.count == __int128(3 * K - 1) * wm.denominator,
                "c_2 != 3K-1 at K=" + std::to_string(K));
  }
  prev = 1e300;
  for (int K = 2; K <= 5; ++K) {
    const WalkMoment wm = walk_moment(AbelianGroup({2 * K}), AbelianGroup({K}),
                                      3, WalkMethod::multiset);
    const double gap = std::abs(wm.value() / (double(K) * K) - 11.0);
    out.require(gap < prev, "c_3/K^2 not approaching 11 monotonically at K=" +
                                std::to_string(K));
    prev = gap;
  }
  out.note("trend gaps close on the predictor, final |c_3/K^2 - 11| = " +
           fmt("%.3f", prev));
  return out;
}

// 9. pooled spectrum of 300 Gram samples at M = N = 16
Outcome criterion9() {
  Outcome out;
  const SpectrumReport rep = mc_spectrum(16, 16, 300, 1);
  out.require(rep.ks <= 0.1, "KS distance " + fmt("%.4f", rep.ks));
  out.require(std::abs(rep.mean - 1.0) <= 0.02,
              "eigenvalue mean " + fmt("%.4f", rep.mean));
  out.note("KS " + fmt("%.4f", rep.ks) + " <= 0.1, mean " +
           fmt("%.6f", rep.mean));
  return out;
}

// 10. spectral Haar moments of the Z2 Fourier model are 2^{p-1}
Outcome criterion10() {
  Outcome out;
  for (int p = 1; p <= 4; ++p) {
    const MomentReport rep =
        haar_moment(fourier_model(AbelianGroup({2})), p, HaarMethod::spectral);
    out.require(rep.value == double(1 << (p - 1)), "p=" + std::to_string(p));
  }
  out.note("moments 1 2 4 8");
  return out;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> run;
  } criteria[] = {
      {"structure (magic + dual-magic)", criterion1},
      {"duality (reciprocity, dual-deform)", criterion2},
      {"four-oracle agreement", criterion3},
      {"exact p=2 law", criterion4},
      {"moment formula and tensor bound", criterion5},
      {"representation bridge", criterion6},
      {"free probability", criterion7},
      {"asymptotic trend", criterion8},
      {"spectrum shape", criterion9},
      {"classical sanity", criterion10},
  };

  int failures = 0;
  int id = 0;
  for (const auto& c : criteria) {
    ++id;
    Stopwatch sw;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    std::printf("criterion %2d %-36s %s  (%s; %.0f ms)\n", id, c.name,
                out.pass ? "PASS" : "FAIL", out.detail.c_str(),
                sw.elapsed_ms());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
