#include "qwalk/gamma_group.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

GammaContext::GammaContext(AbelianGroup X, AbelianGroup Y)
    : x_(std::move(X)), y_(std::move(Y)) {}

SemidirectElt GammaContext::identity() const {
  return {std::vector<std::int32_t>(static_cast<size_t>(M() - 1) * N(), 0), 0};
}

bool GammaContext::is_identity(const SemidirectElt& g) const {
  if (g.y != 0) return false;
  return std::all_of(g.vec.begin(), g.vec.end(),
                     [](std::int32_t v) { return v == 0; });
}

SemidirectElt GammaContext::embed_generator(int i, int c) const {
  SemidirectElt g = identity();
  if (i == 0) {
    g.y = c;
    return g;
  }
  if (c != 0) {
    g.vec[static_cast<size_t>(i - 1) * N() + 0] += 1;
    g.vec[static_cast<size_t>(i - 1) * N() + c] -= 1;
    g.y = c;
  }
  return g;
}

void GammaContext::mul_inplace(SemidirectElt& acc, const SemidirectElt& g) const {
  const int n = N();
  for (int i = 1; i < M(); ++i) {
    const size_t base = static_cast<size_t>(i - 1) * n;
    for (int c = 0; c < n; ++c) {
      std::int32_t v = g.vec[base + c];
      if (v != 0) acc.vec[base + y_.add(c, acc.y)] += v;
    }
  }
  acc.y = y_.add(acc.y, g.y);
}

SemidirectElt GammaContext::mul(const SemidirectElt& g, const SemidirectElt& h) const {
  SemidirectElt out = g;
  mul_inplace(out, h);
  return out;
}

SemidirectElt GammaContext::inverse(const SemidirectElt& g) const {
  SemidirectElt out = identity();
  out.y = y_.neg(g.y);
  const int n = N();
  for (int i = 1; i < M(); ++i) {
    const size_t base = static_cast<size_t>(i - 1) * n;
    for (int c = 0; c < n; ++c) {
      std::int32_t v = g.vec[base + c];
      if (v != 0) out.vec[base + y_.add(c, out.y)] -= v;
    }
  }
  return out;
}

double WalkMoment::value() const {
  return static_cast<double>(static_cast<long long>(count)) /
         static_cast<double>(denominator);
}

namespace {

long long checked_word_count(int mn, int p) {
  long long total = 1;
  for (int s = 0; s < p; ++s) {
    total *= mn;
    if (total > kWalkCap)
      throw CapExceeded("walk_moment: (MN)^p exceeds cap " +
                        std::to_string(kWalkCap));
  }
  return total;
}

long long count_multiset(int M, int N, int p, long long total, bool parallel) {
  long long count = 0;
#pragma omp parallel if (parallel)
  {
    std::vector<int> iidx(p), didx(p), a(p), b(p);
    long long local = 0;
#pragma omp for schedule(static)
    for (long long w = 0; w < total; ++w) {
      long long rest = w;
      for (int r = p - 1; r >= 0; --r) {
        int letter = static_cast<int>(rest % (M * N));
        rest /= M * N;
        iidx[r] = letter / N;
        didx[r] = letter % N;
      }
      for (int r = 0; r < p; ++r) {
        a[r] = iidx[r] * N + didx[r];
        b[r] = iidx[r] * N + didx[(r + p - 1) % p];
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b) ++local;
    }
#pragma omp critical
    count += local;
  }
  return count;
}

long long count_group(const AbelianGroup& X, const AbelianGroup& Y, int p,
                      long long total, bool parallel) {
  const GammaContext ctx(X, Y);
  const int mn = X.size() * Y.size();
  std::vector<SemidirectElt> gens;
  gens.reserve(mn);
  for (int L = 0; L < mn; ++L)
    gens.push_back(ctx.embed_generator(L / Y.size(), L % Y.size()));

  long long count = 0;
#pragma omp parallel if (parallel)
  {
    std::vector<int> letters(p);
    SemidirectElt acc = ctx.identity();
    long long local = 0;
#pragma omp for schedule(static)
    for (long long w = 0; w < total; ++w) {
      long long rest = w;
      for (int r = p - 1; r >= 0; --r) {
        letters[r] = static_cast<int>(rest % mn);
        rest /= mn;
      }
      std::fill(acc.vec.begin(), acc.vec.end(), 0);
      acc.y = 0;
      for (int r = 0; r < p; ++r) ctx.mul_inplace(acc, gens[letters[r]]);
      if (ctx.is_identity(acc)) ++local;
    }
#pragma omp critical
    count += local;
  }
  return count;
}

}  // namespace

WalkMoment walk_moment(const AbelianGroup& X, const AbelianGroup& Y, int p,
                       WalkMethod method, bool parallel) {
  if (p < 1) throw std::invalid_argument("walk_moment: p >= 1 required");
  const int M = X.size(), N = Y.size();
  const long long total = checked_word_count(M * N, p);
  WalkMoment out;
  out.method = method;
  out.p = p;
  if (method == WalkMethod::multiset) {
    out.count = count_multiset(M, N, p, total, parallel);
    out.denominator = static_cast<long long>(M) * N;
  } else {
    out.count = count_group(X, Y, p, total, parallel);
    out.denominator = M;
  }
  return out;
}

cplx theta(const PhaseMatrix& Q, int i, int c, int k, int e) {
  const int emc = Q.Y.sub(e, c);
  const int imk = Q.X.sub(i, k);
  return Q(i, emc) * Q(imk, e) / (Q(i, e) * Q(imk, emc));
}

MatrixXcd rep_generator(const PhaseMatrix& Q, int k, int i, int c) {
  const int N = Q.cols();
  MatrixXcd mat = MatrixXcd::Zero(N, N);
  for (int e = 0; e < N; ++e) mat(Q.Y.sub(e, c), e) = theta(Q, i, c, k, e);
  return mat;
}

MatrixXcd rep_word(const PhaseMatrix& Q, int k,
                   const std::vector<std::pair<int, int>>& word) {
  const int N = Q.cols();
  MatrixXcd P = MatrixXcd::Identity(N, N);
  for (const auto& [i, c] : word) P = P * rep_generator(Q, k, i, c);
  return P;
}

ModelRepReport verify_model_rep(const AbelianGroup& X, const AbelianGroup& Y,
                                const PhaseMatrix& Q, double tol) {
  const int M = X.size(), N = Y.size();
  const MatrixXcd KF = fourier_matrix(X);
  const MatrixXcd LF = fourier_matrix(Y);
  const MagicModel W =
      deform(fourier_model(X), fourier_model(Y), Q, DeformSide::right);

  const auto eps_vec = [&](int k, int e) {
    VectorXcd v = VectorXcd::Zero(M * N);
    for (int i = 0; i < M; ++i) v[i * N + e] = KF(i, k);
    return v;
  };

  ModelRepReport rep;
  for (int c = 0; c < N; ++c)
    for (int i = 0; i < M; ++i) {
      MatrixXcd P = MatrixXcd::Zero(M * N, M * N);
      for (int a = 0; a < N; ++a)
        for (int j = 0; j < M; ++j) P += LF(a, c) * W.block(i * N + a, j * N + 0);
      for (int k = 0; k < M; ++k)
        for (int e = 0; e < N; ++e) {
          VectorXcd lhs = P * eps_vec(k, e);
          VectorXcd rhs = theta(Q, i, c, k, e) * eps_vec(k, Y.sub(e, c));
          rep.worst = std::max(rep.worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
  rep.pass = rep.worst <= tol;
  return rep;
}

ProbeReport faithfulness_probe(const PhaseMatrix& Q, int n_words,
                               std::uint64_t seed, double sep_tol) {
  const int M = Q.rows(), N = Q.cols();
  if (M < 2 || N < 2)
    throw std::invalid_argument("faithfulness_probe: |X|, |Y| >= 2 required");
  const CounterRng rng(seed);
  const std::uint64_t dim = static_cast<std::uint64_t>(M - 1) * (N - 1);

  ProbeReport rep;
  rep.words = n_words;
  rep.min_spread = std::numeric_limits<double>::infinity();
  for (int t = 0; t < n_words; ++t) {
    std::vector<int> R(dim, 0);
    for (std::uint64_t retry = 0;; ++retry) {
      bool nonzero = false;
      for (std::uint64_t f = 0; f < dim; ++f) {
        R[f] = static_cast<int>(
            rng.uniform_int(stream_probe, (retry << 32) | (t * dim + f), -3, 3));
        nonzero = nonzero || R[f] != 0;
      }
      if (nonzero) break;
    }

    std::vector<std::pair<int, int>> word;
    for (int i = 1; i < M; ++i)
      for (int c = 1; c < N; ++c) {
        const int reps = R[static_cast<size_t>(i - 1) * (N - 1) + (c - 1)];
        const int negc = Q.Y.neg(c);
        if (reps >= 0)
          for (int s = 0; s < reps; ++s) {
            word.emplace_back(0, negc);
            word.emplace_back(i, c);
          }
        else
          for (int s = 0; s < -reps; ++s) {
            word.emplace_back(i, negc);
            word.emplace_back(0, c);
          }
      }

    double best = 0.0;
    for (int k = 0; k < M; ++k) {
      const MatrixXcd P = rep_word(Q, k, word);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          if (a != b)
            rep.worst_offdiag = std::max(rep.worst_offdiag, std::abs(P(a, b)));
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          best = std::max(best, std::abs(P(a, a) - P(b, b)));
    }
    rep.min_spread = std::min(rep.min_spread, best);
    if (best <= sep_tol) ++rep.failures;
  }
  rep.pass = rep.failures == 0 && rep.worst_offdiag < kTolMagic;
  return rep;
}

}  // namespace qwalk
