#pragma once

#include <utility>
#include <vector>

#include "qwalk/quadrature.hpp"

namespace qwalk {

// Partition of {0..p-1} in restricted-growth form: labels[i] is the block of
// point i, blocks numbered by first occurrence.
struct SetPartition {
  std::vector<int> labels;
  bool operator==(const SetPartition&) const = default;

  int size() const { return static_cast<int>(labels.size()); }
  int n_blocks() const;
  std::vector<std::vector<int>> blocks() const;
};

std::vector<SetPartition> enumerate_partitions(int p);  // p <= 12

// four-point test: a<b<c<d with labels a,c equal and b,d equal but different
bool is_noncrossing(const SetPartition& pi);

// cached copy shared across callers
const std::vector<SetPartition>& noncrossing_partitions(int p);

// Kreweras complement via sigma_pi^{-1} compose gamma (gamma the full cycle
// i -> i+1); satisfies |pi| + |Kr(pi)| = p + 1 and Kr preserves NC.
SetPartition kreweras(const SetPartition& pi);

long long catalan_number(int p);
long long narayana_number(int p, int r);  // C(p,r) C(p,r-1) / p
long long narayana_count(int p, int r);   // |{pi in NC(p) : |pi| = r}|

// sum over NC(p) of t^{|pi|}: moments of the free Poisson law of parameter t
double free_poisson_moment(double t, int p);

// Delta(pi, sigma) = 1 iff every block of pi meets every block of sigma the
// same number of times before and after the cyclic downshift
int delta_pair(const SetPartition& pi, const SetPartition& sigma);

struct LawPiece {
  double a = 0.0, b = 0.0;
  Integrand density;
};

struct SpectralLaw {
  std::vector<std::pair<double, double>> atoms;  // (location, mass)
  std::vector<LawPiece> pieces;

  double continuous_mass(double abs_tol = 1e-8) const;
  double total_mass(double abs_tol = 1e-8) const;
  double moment(int p, double abs_tol = 1e-8) const;
};

// Marchenko-Pastur of parameter t: atom max(0, 1-t) at 0 plus density
// sqrt(4t - (x-1-t)^2) / (2 pi x) on [(1-sqrt t)^2, (1+sqrt t)^2]
SpectralLaw mp_law(double t);

// distribution function of mp_law(t); the substitution x = 1+t-2 sqrt(t) cos u
// removes the edge square roots so panels stay cheap
double mp_cdf(double t, double x, double abs_tol = 1e-10);

// closed form at t = 1: F(x) = (u + sin u)/pi with u = arccos(1 - x/2)
double mp1_cdf_closed(double x);

// Law of the rescaled character for |X| = alpha K, |Y| = beta K: dilated
// free-Poisson-type density on [(sqrt a - sqrt b)^2 K, (sqrt a + sqrt b)^2 K]
// with an atom at 0 carrying all but 1/(max(alpha,beta) K) of the mass.
SpectralLaw asymptotic_law(double alpha, double beta, int K);

// K^{p-1} sum_r Nar(p,r) alpha^{r-1} beta^{p-r}; equals the p-th moment of
// asymptotic_law exactly
double asymptotic_moment_predictor(double alpha, double beta, int K, int p);

}  // namespace qwalk
