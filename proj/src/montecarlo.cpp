#include "qwalk/montecarlo.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/quadrature.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

double pairwise_range(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_range(v, lo, mid) + pairwise_range(v, mid, hi);
}

}  // namespace

double pairwise_sum(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_range(v, 0, v.size());
}

MatrixXcd sample_gram(int M, int N, long long s, std::uint64_t seed) {
  const CounterRng rng(seed);
  MatrixXcd q(M, N);
  for (int i = 0; i < M; ++i)
    for (int t = 0; t < N; ++t)
      q(i, t) = unit_phase(rng.u01(
          stream_mc, static_cast<std::uint64_t>(s) * M * N + i * N + t));
  return q * q.adjoint();
}

MomentReport mc_moment(int M, int N, int p, int samples, std::uint64_t seed,
                       bool parallel) {
  if (M < 1 || N < 1 || p < 1 || samples < 2)
    throw std::invalid_argument("mc_moment: M, N, p >= 1 and samples >= 2");
  Stopwatch sw;
  std::vector<double> vals(samples);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long s = 0; s < samples; ++s) {
    const MatrixXcd A = sample_gram(M, N, s, seed);
    MatrixXcd P = A;
    for (int k = 1; k < p; ++k) P = P * A;
    vals[s] = P.trace().real() / (static_cast<double>(M) * N);
  }
  const double mean = pairwise_sum(vals) / samples;
  std::vector<double> sq(samples);
  for (int s = 0; s < samples; ++s) sq[s] = (vals[s] - mean) * (vals[s] - mean);
  const double var = pairwise_sum(sq) / (samples - 1);
  MomentReport rep;
  rep.method = "mc";
  rep.params = {{"M", M}, {"N", N}, {"p", p}, {"samples", samples}};
  rep.value = mean;
  rep.uncertainty = std::sqrt(var / samples);
  rep.seed = seed;
  rep.time_ms = sw.elapsed_ms();
  return rep;
}

SpectrumReport mc_spectrum(int M, int N, int samples, std::uint64_t seed,
                           bool parallel) {
  if (M < 1 || N < 1 || samples < 1)
    throw std::invalid_argument("mc_spectrum: M, N, samples >= 1");
  Stopwatch sw;
  SpectrumReport rep;
  rep.M = M;
  rep.N = N;
  rep.samples = samples;
  rep.seed = seed;
  rep.eigenvalues.resize(static_cast<size_t>(samples) * M);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long s = 0; s < samples; ++s) {
    const MatrixXcd A = sample_gram(M, N, s, seed) / static_cast<double>(N);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(A, Eigen::EigenvaluesOnly);
    for (int i = 0; i < M; ++i)
      rep.eigenvalues[static_cast<size_t>(s) * M + i] = es.eigenvalues()[i];
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  rep.mean = pairwise_sum(rep.eigenvalues) /
             static_cast<double>(rep.eigenvalues.size());

  // F at the sorted samples, built incrementally in the smooth u variable;
  // at t = 1 the substituted MP density 4 sin^2 u / (2 pi (2 - 2 cos u))
  // reduces to (1 + cos u)/pi, finite at u = 0
  const auto integrand = [](double u) {
    return (1.0 + std::cos(u)) / std::numbers::pi;
  };
  const auto u_of = [](double x) {
    return std::acos(std::clamp(1.0 - 0.5 * x, -1.0, 1.0));
  };
  std::vector<double> F(rep.eigenvalues.size());
  double acc = 0.0, uprev = 0.0;
  for (size_t k = 0; k < rep.eigenvalues.size(); ++k) {
    const double uk = u_of(rep.eigenvalues[k]);
    acc += integrate(integrand, uprev, uk, 1e-10).value;
    uprev = uk;
    F[k] = acc;
  }
  rep.ks = ks_distance_sorted(rep.eigenvalues, F);
  rep.time_ms = sw.elapsed_ms();
  return rep;
}

std::vector<HistogramBin> SpectrumReport::histogram(int bins) const {
  if (bins < 1 || eigenvalues.empty()) return {};
  const double lo = 0.0;
  const double hi = std::max(4.0, eigenvalues.back() + 1e-12);
  const double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(bins);
  std::vector<long long> counts(bins, 0);
  for (double ev : eigenvalues) {
    int b = std::min(static_cast<int>((ev - lo) / width), bins - 1);
    b = std::max(b, 0);
    ++counts[b];
  }
  for (int b = 0; b < bins; ++b)
    out[b] = {lo + b * width, lo + (b + 1) * width,
              static_cast<double>(counts[b]) /
                  (static_cast<double>(eigenvalues.size()) * width)};
  return out;
}

double ks_distance_sorted(const std::vector<double>& sorted_vals,
                          const std::vector<double>& cdf_at_vals) {
  const size_t n = sorted_vals.size();
  if (cdf_at_vals.size() != n)
    throw std::invalid_argument("ks_distance_sorted: length mismatch");
  double ks = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const double fk = cdf_at_vals[k];
    ks = std::max(ks, fk - static_cast<double>(k) / n);
    ks = std::max(ks, static_cast<double>(k + 1) / n - fk);
  }
  return ks;
}

}  // namespace qwalk
