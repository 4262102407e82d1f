#pragma once

#include <array>
#include <cstdint>

#include "qwalk/group.hpp"
#include "qwalk/report.hpp"

namespace qwalk {

// Deterministic pairwise (tree) sum: result depends only on the contents of
// the range, never on thread schedule.
double pairwise_sum(const std::vector<double>& v);

// Gram matrix A = q q^* of the s-th random phase matrix; entries of q are
// unit phases drawn at counter index s M N + i N + t. diag(A) = N exactly.
MatrixXcd sample_gram(int M, int N, long long s, std::uint64_t seed);

// Mean of Tr(A^p)/(MN) over samples; uncertainty is the standard error
MomentReport mc_moment(int M, int N, int p, int samples, std::uint64_t seed,
                       bool parallel = true);

struct HistogramBin {
  double left, right, density;
};

struct SpectrumReport {
  int M = 0, N = 0, samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> eigenvalues;  // of A/N, pooled and sorted
  double ks = 0.0;                  // against the t=1 Marchenko-Pastur CDF
  double mean = 0.0;                // exactly 1 in exact arithmetic
  double time_ms = 0.0;

  std::vector<HistogramBin> histogram(int bins) const;
};

SpectrumReport mc_spectrum(int M, int N, int samples, std::uint64_t seed,
                           bool parallel = true);

// sorted sample vs distribution function values at those samples
double ks_distance_sorted(const std::vector<double>& sorted_vals,
                          const std::vector<double>& cdf_at_vals);

}  // namespace qwalk
