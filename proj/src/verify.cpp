#include "qwalk/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "qwalk/freeprob.hpp"
#include "qwalk/gamma_group.hpp"
#include "qwalk/montecarlo.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/rng.hpp"
#include "qwalk/transfer.hpp"
#include "qwalk/verify.hpp"

namespace qwalk {

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// worst-defect check: pass iff worst <= tol
struct Outcome {
  bool pass;
  std::string detail;
};

void run_check(VerifyReport& rep, const std::string& name,
               const std::function<Outcome()>& fn) {
  Stopwatch sw;
  CheckResult res;
  res.name = name;
  try {
    Outcome o = fn();
    res.pass = o.pass;
    res.detail = o.detail;
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.time_ms = sw.elapsed_ms();
  rep.checks.push_back(res);
}

Outcome defect(double worst, double tol) {
  return {worst <= tol, "worst=" + fmt(worst) + " tol=" + fmt(tol)};
}

std::vector<AbelianGroup> builtin_groups() {
  return {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}),
          AbelianGroup({5}), AbelianGroup({2, 2})};
}

// ---- group ----

Outcome check_bicharacter() {
  double worst = 0.0;
  for (const auto& X : builtin_groups()) {
    const MatrixXcd F = fourier_matrix(X);
    const int n = X.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          worst = std::max(worst, std::abs(F(X.add(x, y), z) - F(x, z) * F(y, z)));
          worst = std::max(worst, std::abs(F(x, X.add(y, z)) - F(x, y) * F(x, z)));
        }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        worst = std::max(worst, std::abs(F(X.neg(x), y) - std::conj(F(x, y))));
  }
  return defect(worst, kTolConstruction);
}

Outcome check_fourier_hadamard() {
  double worst = 0.0;
  for (const auto& X : builtin_groups()) {
    const MatrixXcd F = fourier_matrix(X);
    const MatrixXcd G = F * F.adjoint() -
                        static_cast<double>(X.size()) *
                            MatrixXcd::Identity(X.size(), X.size());
    worst = std::max(worst, G.cwiseAbs().maxCoeff());
  }
  return defect(worst, kTolMagic);
}

// ---- hadamard ----

Outcome check_deformed_hadamard(int draws) {
  const auto gs = builtin_groups();
  double worst = 0.0;
  for (int s = 0; s < draws; ++s) {
    const AbelianGroup& X = gs[s % gs.size()];
    const AbelianGroup& Y = gs[(s / gs.size() + s) % gs.size()];
    const PhaseMatrix Q = generic_q(X, Y, 1000 + s);
    const DeformSide side = s % 2 ? DeformSide::left : DeformSide::right;
    const MatrixXcd HK =
        deformed_tensor(fourier_matrix(X), fourier_matrix(Y), Q, side);
    const HadamardReport hr = validate_hadamard(HK);
    worst = std::max(worst,
                     std::max(hr.max_modulus_defect, hr.max_orthogonality_defect));
  }
  return defect(worst, kTolMagic);
}

Outcome check_dephased_deformed() {
  const AbelianGroup X({2}), Y({3});
  const MatrixXcd HK = deformed_tensor(fourier_matrix(X), fourier_matrix(Y),
                                       generic_q(X, Y, 5), DeformSide::right);
  MatrixXcd D = HK;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      D(i, j) = HK(i, j) * std::conj(HK(i, 0) * HK(0, j)) * HK(0, 0);
  const HadamardReport hr = validate_hadamard(D);
  return defect(std::max(hr.max_modulus_defect, hr.max_orthogonality_defect),
                kTolMagic);
}

// ---- model ----

Outcome check_fourier_vs_hadamard_model() {
  double worst = 0.0;
  for (const auto& X : builtin_groups()) {
    const MagicModel A = fourier_model(X);
    const MagicModel B = from_hadamard(fourier_matrix(X));
    for (int i = 0; i < A.n(); ++i)
      for (int j = 0; j < A.n(); ++j)
        worst = std::max(worst,
                         (A.block(i, j) - B.block(i, j)).cwiseAbs().maxCoeff());
  }
  return defect(worst, kTolConstruction);
}

Outcome check_model_magic() {
  double worst = 0.0;
  for (const auto& X : builtin_groups())
    worst = std::max(worst, check_magic(fourier_model(X)).worst());
  return defect(worst, kTolMagic);
}

Outcome check_block_rank_one() {
  double worst = 0.0;
  for (const auto& X : builtin_groups()) {
    const MagicModel U = fourier_model(X);
    for (int i = 0; i < U.n(); ++i)
      for (int j = 0; j < U.n(); ++j) {
        Eigen::JacobiSVD<MatrixXcd> svd(U.block(i, j));
        // all singular values beyond the first must vanish
        for (int k = 1; k < svd.singularValues().size(); ++k)
          worst = std::max(worst, svd.singularValues()[k]);
      }
  }
  return defect(worst, 1e-8);
}

Outcome check_dual_laws() {
  const AbelianGroup X({2}), Y({3});
  const MagicModel U = fourier_model(X), V = fourier_model(Y);
  const PhaseMatrix Q = generic_q(X, Y, 11);
  double worst = 0.0;
  const MagicModel UDD = dual(dual(U));
  for (int i = 0; i < U.n(); ++i)
    for (int j = 0; j < U.n(); ++j)
      worst = std::max(worst,
                       (U.block(i, j) - UDD.block(i, j)).cwiseAbs().maxCoeff());
  const MagicModel W = deform(U, V, Q, DeformSide::right);
  const MagicModel lhs = dual(W);
  const MagicModel rhs = deform(dual(U), dual(V), Q, DeformSide::left);
  for (int i = 0; i < lhs.n(); ++i)
    for (int j = 0; j < lhs.n(); ++j)
      worst = std::max(
          worst, (lhs.block(i, j) - rhs.block(i, j)).cwiseAbs().maxCoeff());
  return defect(worst, kTolConstruction);
}

Outcome check_wreath() {
  const AbelianGroup X({2}), Y({3});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 12), DeformSide::right);
  const WreathReport wr = verify_wreath_structure(W, X, Y);
  return defect(std::max(wr.row_factor_defect, wr.col_factor_defect), kTolMagic);
}

// ---- moments ----

Outcome check_spectral_radius() {
  double worst = 0.0;
  const AbelianGroup X({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(X),
                              generic_q(X, X, 21), DeformSide::right);
  for (int p = 1; p <= 3; ++p) {
    const TransferMatrix T = transfer_matrix(W, ExponentWord::plain(p));
    Eigen::ComplexEigenSolver<MatrixXcd> es(T.mat(), false);
    for (cplx lam : es.eigenvalues()) worst = std::max(worst, std::abs(lam) - 1.0);
  }
  return defect(worst, 1e-8);
}

Outcome check_reciprocity_models() {
  double worst = 0.0;
  for (const auto& X : builtin_groups())
    worst = std::max(worst, check_reciprocity(fourier_model(X), 3, 3).max_diff);
  const AbelianGroup Z2({2}), Z3({3});
  worst = std::max(worst,
                   check_reciprocity(deform(fourier_model(Z2), fourier_model(Z3),
                                            generic_q(Z2, Z3, 31),
                                            DeformSide::right),
                                     3, 3)
                       .max_diff);
  return defect(worst, kTolMagic);
}

Outcome check_fourier_positive() {
  double worst = 0.0;
  for (const auto& X : builtin_groups())
    worst = std::max(worst, -check_positive(fourier_model(X), 3).worst_entry);
  return defect(worst, 1e-10);
}

Outcome check_spectral_cesaro_walk(bool full) {
  const AbelianGroup X({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(X),
                              generic_q(X, X, 47), DeformSide::right);
  HaarParams hp;
  hp.cesaro_R = full ? 200000 : 20000;
  double worst = 0.0, worst_sc = 0.0;
  for (int p = 1; p <= 3; ++p) {
    const double exact = walk_moment(X, X, p, WalkMethod::multiset).value();
    const double spec = haar_moment(W, p, HaarMethod::spectral).value;
    const double ces = haar_moment(W, p, HaarMethod::cesaro, hp).value;
    worst = std::max(worst, std::abs(spec - exact));
    worst_sc = std::max(worst_sc, std::abs(spec - ces));
  }
  if (worst > kTolSpectral) return {false, "spectral vs walk " + fmt(worst)};
  return {worst_sc <= 1e-3,
          "spectral-vs-walk=" + fmt(worst) + " spectral-vs-cesaro=" + fmt(worst_sc)};
}

Outcome check_transfer_serial_parallel() {
  const AbelianGroup X({2}), Y({3});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 8), DeformSide::right);
  const TransferMatrix a = transfer_matrix(W, ExponentWord::plain(2));
  const TransferMatrix b = transfer_matrix_serial(W, ExponentWord::plain(2));
  const bool same = a.mat() == b.mat();
  return {same, same ? "bit-identical" : "parallel kernel diverges from serial"};
}

Outcome check_lemma27(bool full) {
  double worst = 0.0;
  const AbelianGroup X({2}), Y({2});
  const int seeds = full ? 5 : 2;
  for (int s = 1; s <= seeds; ++s) {
    const PhaseMatrix Q = generic_q(X, Y, 40 + s);
    const MagicModel U = fourier_model(X), V = fourier_model(Y);
    const MagicModel W = deform(U, V, Q, DeformSide::right);
    for (int p = 1; p <= 2; ++p)
      for (int r = 1; r <= 2; ++r) {
        const double direct = truncated_moment(W, p, r);
        const double viaQ = lemma27_moment(U, dual(V), Q, p, r);
        worst = std::max(worst, std::abs(direct - viaQ));
      }
  }
  return defect(worst, kTolMagic);
}

Outcome check_tensor_bound(bool full) {
  const AbelianGroup X({2}), Y({2});
  const int seeds = full ? 20 : 5;
  double min_slack = 1e300;
  for (int s = 1; s <= seeds; ++s) {
    const PhaseMatrix Q = generic_q(X, Y, 60 + s);
    for (int p = 1; p <= 3; ++p)
      for (int r = 1; r <= 3; ++r) {
        const TensorBoundReport tb =
            tensor_bound_check(fourier_model(X), fourier_model(Y), Q, p, r);
        if (!tb.precondition_u || !tb.precondition_vdual)
          return {false, "positivity precondition failed"};
        if (!tb.holds) return {false, "bound violated, slack=" + fmt(tb.slack)};
        min_slack = std::min(min_slack, tb.slack);
      }
  }
  return {true, "min slack=" + fmt(min_slack)};
}

// ---- gamma ----

Outcome check_semidirect_axioms() {
  const GammaContext ctx(AbelianGroup({3}), AbelianGroup({4}));
  const CounterRng rng(17);
  const int dim = (ctx.M() - 1) * ctx.N();
  auto rand_elt = [&](std::uint64_t base) {
    SemidirectElt g = ctx.identity();
    for (int f = 0; f < dim; ++f)
      g.vec[f] = static_cast<std::int32_t>(
          rng.uniform_int(stream_test, base + f, -5, 5));
    g.y = static_cast<int>(rng.uniform_int(stream_test, base + dim, 0, ctx.N() - 1));
    return g;
  };
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t base = static_cast<std::uint64_t>(t) * 64;
    const SemidirectElt a = rand_elt(base), b = rand_elt(base + 16),
                        c = rand_elt(base + 32);
    if (!(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))))
      return {false, "associativity fails"};
    if (!ctx.is_identity(ctx.mul(a, ctx.inverse(a))) ||
        !ctx.is_identity(ctx.mul(ctx.inverse(a), a)))
      return {false, "inverse law fails"};
  }
  return {true, "1000 triples exact"};
}

Outcome check_embed_copy_morphism() {
  for (const auto& orders : {std::vector<int>{2}, std::vector<int>{3}}) {
    const AbelianGroup X({3}), Y(orders);
    const GammaContext ctx(X, Y);
    for (int i = 0; i < ctx.M(); ++i)
      for (int c = 0; c < ctx.N(); ++c)
        for (int d = 0; d < ctx.N(); ++d) {
          const SemidirectElt lhs =
              ctx.mul(ctx.embed_generator(i, c), ctx.embed_generator(i, d));
          const SemidirectElt rhs = ctx.embed_generator(i, Y.add(c, d));
          if (!(lhs == rhs)) return {false, "copy morphism fails"};
        }
  }
  return {true, "exact"};
}

std::vector<std::pair<int, int>> random_zero_sum_word(const GammaContext& ctx,
                                                      const CounterRng& rng,
                                                      std::uint64_t base, int len) {
  std::vector<std::pair<int, int>> word;
  int csum = 0;
  for (int t = 0; t < len - 1; ++t) {
    const int i = static_cast<int>(
        rng.uniform_int(stream_test, base + 2 * t, 0, ctx.M() - 1));
    const int c = static_cast<int>(
        rng.uniform_int(stream_test, base + 2 * t + 1, 0, ctx.N() - 1));
    word.emplace_back(i, c);
    csum = ctx.Y().add(csum, c);
  }
  const int i = static_cast<int>(
      rng.uniform_int(stream_test, base + 2 * len, 0, ctx.M() - 1));
  word.emplace_back(i, ctx.Y().neg(csum));
  return word;
}

SemidirectElt word_product(const GammaContext& ctx,
                           const std::vector<std::pair<int, int>>& word) {
  SemidirectElt g = ctx.identity();
  for (const auto& [i, c] : word) ctx.mul_inplace(g, ctx.embed_generator(i, c));
  return g;
}

Outcome check_zero_sum_commutation() {
  const GammaContext ctx(AbelianGroup({2}), AbelianGroup({3}));
  const CounterRng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t base = 4096 + static_cast<std::uint64_t>(t) * 64;
    const SemidirectElt g =
        word_product(ctx, random_zero_sum_word(ctx, rng, base, 4));
    const SemidirectElt h =
        word_product(ctx, random_zero_sum_word(ctx, rng, base + 32, 5));
    if (g.y != 0 || h.y != 0) return {false, "zero-sum word has nonzero shift"};
    if (!(ctx.mul(g, h) == ctx.mul(h, g))) return {false, "commutation fails"};
  }
  return {true, "200 pairs exact"};
}

Outcome check_walk_methods(bool full) {
  struct Case {
    std::vector<int> xo, yo;
    int pmax;
  };
  std::vector<Case> cases = {{{2}, {2}, 4}, {{2}, {3}, 3}};
  if (full) {
    cases.push_back({{3}, {3}, 3});
    cases.push_back({{2, 2}, {2}, 3});
  }
  for (const auto& cs : cases) {
    const AbelianGroup X(cs.xo), Y(cs.yo);
    for (int p = 1; p <= cs.pmax; ++p) {
      const WalkMoment m = walk_moment(X, Y, p, WalkMethod::multiset);
      const WalkMoment g = walk_moment(X, Y, p, WalkMethod::group);
      if (m.count != static_cast<__int128>(Y.size()) * g.count)
        return {false, "multiset != N * group at p=" + std::to_string(p)};
    }
  }
  return {true, "counts match exactly"};
}

Outcome check_rep_unitary_diagonal() {
  const AbelianGroup X({3}), Y({3});
  const PhaseMatrix Q = generic_q(X, Y, 71);
  const GammaContext ctx(X, Y);
  const CounterRng rng(29);
  double worst_unitary = 0.0, worst_offdiag = 0.0;
  for (int k = 0; k < X.size(); ++k)
    for (int i = 0; i < X.size(); ++i)
      for (int c = 0; c < Y.size(); ++c) {
        const MatrixXcd G = rep_generator(Q, k, i, c);
        worst_unitary = std::max(
            worst_unitary,
            (G * G.adjoint() - MatrixXcd::Identity(G.rows(), G.cols()))
                .cwiseAbs()
                .maxCoeff());
      }
  for (int t = 0; t < 25; ++t) {
    const auto word =
        random_zero_sum_word(ctx, rng, 65536 + static_cast<std::uint64_t>(t) * 64, 6);
    for (int k = 0; k < X.size(); ++k) {
      const MatrixXcd P = rep_word(Q, k, word);
      for (int a = 0; a < P.rows(); ++a)
        for (int b = 0; b < P.cols(); ++b)
          if (a != b) worst_offdiag = std::max(worst_offdiag, std::abs(P(a, b)));
    }
  }
  const double worst = std::max(worst_unitary, worst_offdiag);
  return defect(worst, kTolConstruction);
}

Outcome check_model_rep(bool full) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {{{2}, {2}}};
  if (full) {
    cases.push_back({{3}, {3}});
    cases.push_back({{2}, {3}});
    cases.push_back({{2, 2}, {2}});
  }
  double worst = 0.0;
  int s = 0;
  for (const auto& [xo, yo] : cases) {
    const AbelianGroup X(xo), Y(yo);
    const ModelRepReport r = verify_model_rep(X, Y, generic_q(X, Y, 80 + s++));
    worst = std::max(worst, r.worst);
  }
  return defect(worst, kTolMagic);
}

Outcome check_probe(bool full) {
  const AbelianGroup X({2}), Y({2});
  const ProbeReport r =
      faithfulness_probe(generic_q(X, Y, 90), full ? 100 : 20, 90);
  return {r.pass, "failures=" + std::to_string(r.failures) +
                      " min_spread=" + fmt(r.min_spread)};
}

// ---- quadrature ----

Outcome check_quadrature() {
  double worst = 0.0;
  for (int k = 0; k <= 13; ++k) {
    const double got =
        integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0).value;
    worst = std::max(worst, std::abs(got - 1.0 / (k + 1)));
  }
  const double pi_got =
      integrate([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-12)
          .value;
  worst = std::max(worst, std::abs(pi_got - std::numbers::pi));
  const double sq =
      integrate([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0,
                1.0, 1e-8)
          .value;
  if (std::abs(sq - 2.0) > 1e-6)
    return {false, "sqrt endpoint integral off by " + fmt(std::abs(sq - 2.0))};
  return defect(worst, 1e-10);
}

// ---- freeprob ----

Outcome check_catalan(bool full) {
  const int pmax = full ? 10 : 8;
  for (int p = 1; p <= pmax; ++p)
    if (static_cast<long long>(noncrossing_partitions(p).size()) !=
        catalan_number(p))
      return {false, "NC count wrong at p=" + std::to_string(p)};
  return {true, "Catalan match p<=" + std::to_string(pmax)};
}

Outcome check_kreweras(bool full) {
  const int pmax = full ? 8 : 7;
  for (int p = 1; p <= pmax; ++p) {
    std::vector<SetPartition> images;
    for (const auto& pi : noncrossing_partitions(p)) {
      const SetPartition kr = kreweras(pi);
      if (!is_noncrossing(kr)) return {false, "Kr image crossing"};
      if (pi.n_blocks() + kr.n_blocks() != p + 1)
        return {false, "|pi|+|Kr(pi)| != p+1 at p=" + std::to_string(p)};
      images.push_back(kr);
    }
    std::sort(images.begin(), images.end(),
              [](const SetPartition& a, const SetPartition& b) {
                return a.labels < b.labels;
              });
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      return {false, "Kr not injective at p=" + std::to_string(p)};
  }
  return {true, "rank identity and bijectivity p<=" + std::to_string(pmax)};
}

Outcome check_dilation() {
  double worst = 0.0;
  for (double t : {0.5, 2.0, 3.0})
    for (int p = 1; p <= 8; ++p) {
      const double lhs = free_poisson_moment(t, p);
      const double rhs = std::pow(t, p + 1) * free_poisson_moment(1.0 / t, p);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  return defect(worst, 1e-9);
}

Outcome check_delta_biane(bool full) {
  const int pmax = full ? 5 : 4;
  for (int p = 1; p <= pmax; ++p) {
    const auto all = enumerate_partitions(p);
    for (const auto& pi : all)
      for (const auto& sig : all)
        if (delta_pair(pi, sig) == 1 &&
            pi.n_blocks() + sig.n_blocks() > p + 1)
          return {false, "Biane bound violated at p=" + std::to_string(p)};
  }
  return {true, "exhaustive p<=" + std::to_string(pmax)};
}

Outcome check_mp_law() {
  const SpectralLaw law = mp_law(1.0);
  double worst = std::abs(law.total_mass() - 1.0);
  for (int p = 1; p <= 4; ++p)
    worst = std::max(worst,
                     std::abs(law.moment(p) -
                              static_cast<double>(catalan_number(p))));
  for (double x : {0.1, 0.5, 1.0, 2.0, 3.3, 3.9})
    worst = std::max(worst, std::abs(mp_cdf(1.0, x) - mp1_cdf_closed(x)));
  return defect(worst, 1e-6);
}

Outcome check_asymptotic_moments(bool full) {
  double worst = 0.0;
  const int pmax = full ? 5 : 3;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{
           {1, 2}, {1, 1}, {2, 1}}) {
    const int K = 3;
    const SpectralLaw law = asymptotic_law(a, b, K);
    worst = std::max(
        worst, std::abs(law.continuous_mass() - 1.0 / (std::max(a, b) * K)));
    for (int p = 1; p <= pmax; ++p) {
      const double pred = asymptotic_moment_predictor(a, b, K, p);
      worst = std::max(worst, std::abs(law.moment(p) - pred) / pred);
    }
  }
  return defect(worst, 1e-4);
}

// ---- montecarlo ----

Outcome check_mc_determinism() {
  const MomentReport a = mc_moment(3, 4, 2, 500, 77);
  const MomentReport b = mc_moment(3, 4, 2, 500, 77);
  const MomentReport c = mc_moment(3, 4, 2, 500, 77, false);
  if (a.value != b.value || a.uncertainty != b.uncertainty)
    return {false, "same-seed runs differ"};
  if (a.value != c.value || a.uncertainty != c.uncertainty)
    return {false, "serial and parallel sampling differ"};
  return {true, "bit-identical across runs and thread modes"};
}

Outcome check_mc_moments(bool full) {
  const AbelianGroup X({2});
  const int samples = full ? 20000 : 4000;
  double worst_z = 0.0;
  for (int p = 1; p <= 3; ++p) {
    const double exact = walk_moment(X, X, p, WalkMethod::multiset).value();
    const MomentReport r = mc_moment(2, 2, p, samples, 101);
    if (p == 1) {
      if (std::abs(r.value - 1.0) > 1e-12) return {false, "p=1 not exact"};
      continue;
    }
    worst_z = std::max(worst_z, std::abs(r.value - exact) / r.uncertainty);
  }
  return {worst_z <= 4.0, "worst z=" + fmt(worst_z)};
}

Outcome check_mc_se_scaling() {
  const MomentReport a = mc_moment(2, 2, 2, 2000, 55);
  const MomentReport b = mc_moment(2, 2, 2, 8000, 55);
  const double ratio = a.uncertainty / b.uncertainty;  // expect about 2
  return {ratio > 1.4 && ratio < 2.9, "SE ratio at 4x samples=" + fmt(ratio)};
}

Outcome check_mc_spectrum(bool full) {
  const SpectrumReport r = mc_spectrum(16, 16, full ? 300 : 60, 1);
  if (std::abs(r.mean - 1.0) > 1e-10)
    return {false, "mean eigenvalue " + fmt(r.mean)};
  double mass = 0.0;
  for (const auto& bin : r.histogram(40))
    mass += bin.density * (bin.right - bin.left);
  if (std::abs(mass - 1.0) > 1e-12) return {false, "histogram mass " + fmt(mass)};
  return {r.ks <= 0.1, "KS=" + fmt(r.ks) + " mean=" + fmt(std::abs(r.mean - 1.0))};
}

// ---- rng ----

Outcome check_philox_kat() {
  const std::array<uint32_t, 4> z{0, 0, 0, 0};
  const std::array<uint32_t, 2> zk{0, 0};
  const auto r1 = philox4x32_10(z, zk);
  if (r1 != std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                    0x9b00dbd8u})
    return {false, "zero KAT"};
  const std::array<uint32_t, 4> f{0xffffffffu, 0xffffffffu, 0xffffffffu,
                                  0xffffffffu};
  const std::array<uint32_t, 2> fk{0xffffffffu, 0xffffffffu};
  if (philox4x32_10(f, fk) != std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu,
                                                      0xa20bc7c6u, 0x6d5451fdu})
    return {false, "ones KAT"};
  const std::array<uint32_t, 4> pc{0x243f6a88u, 0x85a308d3u, 0x13198a2eu,
                                   0x03707344u};
  const std::array<uint32_t, 2> pk{0xa4093822u, 0x299f31d0u};
  if (philox4x32_10(pc, pk) != std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu,
                                                       0x5001e420u, 0x24126ea1u})
    return {false, "pi KAT"};
  return {true, "3 vectors match"};
}

}  // namespace

VerifyReport run_verify(bool full) {
  VerifyReport rep;
  run_check(rep, "rng.philox_kat", check_philox_kat);
  run_check(rep, "group.bicharacter", check_bicharacter);
  run_check(rep, "group.fourier_hadamard", check_fourier_hadamard);
  run_check(rep, "hadamard.deformed_product",
            [&] { return check_deformed_hadamard(full ? 50 : 10); });
  run_check(rep, "hadamard.dephased_product", check_dephased_deformed);
  run_check(rep, "model.fourier_vs_from_hadamard", check_fourier_vs_hadamard_model);
  run_check(rep, "model.magic", check_model_magic);
  run_check(rep, "model.block_rank_one", check_block_rank_one);
  run_check(rep, "model.dual_laws", check_dual_laws);
  run_check(rep, "model.wreath_structure", check_wreath);
  run_check(rep, "moments.spectral_radius", check_spectral_radius);
  run_check(rep, "moments.reciprocity", check_reciprocity_models);
  run_check(rep, "moments.fourier_positive", check_fourier_positive);
  run_check(rep, "moments.spectral_cesaro_walk",
            [&] { return check_spectral_cesaro_walk(full); });
  run_check(rep, "moments.serial_parallel", check_transfer_serial_parallel);
  run_check(rep, "moments.lemma27", [&] { return check_lemma27(full); });
  run_check(rep, "moments.tensor_bound", [&] { return check_tensor_bound(full); });
  run_check(rep, "gamma.semidirect_axioms", check_semidirect_axioms);
  run_check(rep, "gamma.embed_copy_morphism", check_embed_copy_morphism);
  run_check(rep, "gamma.zero_sum_commutation", check_zero_sum_commutation);
  run_check(rep, "gamma.walk_methods", [&] { return check_walk_methods(full); });
  run_check(rep, "gamma.rep_unitary_diagonal", check_rep_unitary_diagonal);
  run_check(rep, "gamma.model_rep", [&] { return check_model_rep(full); });
  run_check(rep, "gamma.probe", [&] { return check_probe(full); });
  run_check(rep, "quadrature.exactness", check_quadrature);
  run_check(rep, "freeprob.catalan", [&] { return check_catalan(full); });
  run_check(rep, "freeprob.kreweras", [&] { return check_kreweras(full); });
  run_check(rep, "freeprob.dilation", check_dilation);
  run_check(rep, "freeprob.delta_biane", [&] { return check_delta_biane(full); });
  run_check(rep, "freeprob.mp_law", check_mp_law);
  run_check(rep, "freeprob.asymptotic_moments",
            [&] { return check_asymptotic_moments(full); });
  run_check(rep, "mc.determinism", check_mc_determinism);
  run_check(rep, "mc.moments", [&] { return check_mc_moments(full); });
  run_check(rep, "mc.se_scaling", check_mc_se_scaling);
  run_check(rep, "mc.spectrum", [&] { return check_mc_spectrum(full); });
  return rep;
}

}  // namespace qwalk
