#include "qwalk/freeprob.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qwalk {

int SetPartition::n_blocks() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(n_blocks());
  for (int i = 0; i < size(); ++i) out[labels[i]].push_back(i);
  return out;
}

namespace {

void grow(std::vector<int>& labels, int mx, int p,
          std::vector<SetPartition>& out) {
  if (static_cast<int>(labels.size()) == p) {
    out.push_back({labels});
    return;
  }
  for (int l = 0; l <= mx; ++l) {
    labels.push_back(l);
    grow(labels, mx + (l == mx ? 1 : 0), p, out);
    labels.pop_back();
  }
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int p) {
  if (p < 1 || p > 12)
    throw std::invalid_argument("enumerate_partitions: 1 <= p <= 12 required");
  std::vector<SetPartition> out;
  std::vector<int> labels{0};
  grow(labels, 1, p, out);
  return out;
}

bool is_noncrossing(const SetPartition& pi) {
  const auto& lab = pi.labels;
  const int p = pi.size();
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      if (lab[b] == lab[a]) continue;
      for (int c = b + 1; c < p; ++c) {
        if (lab[c] != lab[a]) continue;
        for (int d = c + 1; d < p; ++d)
          if (lab[d] == lab[b]) return false;
      }
    }
  return true;
}

const std::vector<SetPartition>& noncrossing_partitions(int p) {
  static std::map<int, std::vector<SetPartition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) {
    std::vector<SetPartition> nc;
    for (auto& pi : enumerate_partitions(p))
      if (is_noncrossing(pi)) nc.push_back(std::move(pi));
    it = cache.emplace(p, std::move(nc)).first;
  }
  return it->second;
}

SetPartition kreweras(const SetPartition& pi) {
  const int p = pi.size();
  auto blocks = pi.blocks();
  std::vector<int> sig(p), inv(p);
  for (const auto& bl : blocks)
    for (size_t t = 0; t < bl.size(); ++t)
      sig[bl[t]] = bl[(t + 1) % bl.size()];
  for (int i = 0; i < p; ++i) inv[sig[i]] = i;
  std::vector<int> kr(p);
  for (int i = 0; i < p; ++i) kr[i] = inv[(i + 1) % p];
  std::vector<int> lab2(p, -1);
  int nb = 0;
  for (int i = 0; i < p; ++i)
    if (lab2[i] < 0) {
      for (int j = i; lab2[j] < 0; j = kr[j]) lab2[j] = nb;
      ++nb;
    }
  return {lab2};
}

long long catalan_number(int p) {
  long long c = 1;
  for (int k = 0; k < p; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

long long narayana_number(int p, int r) {
  if (r < 1 || r > p) return 0;
  return binomial(p, r) * binomial(p, r - 1) / p;
}

long long narayana_count(int p, int r) {
  long long cnt = 0;
  for (const auto& pi : noncrossing_partitions(p))
    if (pi.n_blocks() == r) ++cnt;
  return cnt;
}

double free_poisson_moment(double t, int p) {
  double sum = 0.0;
  for (const auto& pi : noncrossing_partitions(p))
    sum += std::pow(t, pi.n_blocks());
  return sum;
}

int delta_pair(const SetPartition& pi, const SetPartition& sigma) {
  const int p = pi.size();
  if (sigma.size() != p)
    throw std::invalid_argument("delta_pair: size mismatch");
  const auto bp = pi.blocks();
  const auto bs = sigma.blocks();
  std::vector<char> inb(p), inbm1(p);
  for (const auto& b : bp) {
    std::fill(inb.begin(), inb.end(), 0);
    std::fill(inbm1.begin(), inbm1.end(), 0);
    for (int x : b) {
      inb[x] = 1;
      inbm1[(x + p - 1) % p] = 1;
    }
    for (const auto& c : bs) {
      int n1 = 0, n2 = 0;
      for (int x : c) {
        n1 += inb[x];
        n2 += inbm1[x];
      }
      if (n1 != n2) return 0;
    }
  }
  return 1;
}

double SpectralLaw::continuous_mass(double abs_tol) const {
  double m = 0.0;
  for (const auto& pc : pieces) m += integrate(pc.density, pc.a, pc.b, abs_tol).value;
  return m;
}

double SpectralLaw::total_mass(double abs_tol) const {
  double m = continuous_mass(abs_tol);
  for (const auto& [loc, mass] : atoms) m += mass;
  return m;
}

double SpectralLaw::moment(int p, double abs_tol) const {
  double m = 0.0;
  for (const auto& [loc, mass] : atoms) m += std::pow(loc, p) * mass;
  for (const auto& pc : pieces) {
    const auto& rho = pc.density;
    m += integrate([&, p](double x) { return std::pow(x, p) * rho(x); }, pc.a,
                   pc.b, abs_tol)
             .value;
  }
  return m;
}

SpectralLaw mp_law(double t) {
  if (t <= 0) throw std::invalid_argument("mp_law: t > 0 required");
  SpectralLaw law;
  if (t < 1.0) law.atoms.emplace_back(0.0, 1.0 - t);
  const double lo = (1.0 - std::sqrt(t)) * (1.0 - std::sqrt(t));
  const double hi = (1.0 + std::sqrt(t)) * (1.0 + std::sqrt(t));
  law.pieces.push_back(
      {lo, hi, [t](double x) {
         const double v = 4.0 * t - (x - 1.0 - t) * (x - 1.0 - t);
         return v <= 0.0 || x <= 0.0
                    ? 0.0
                    : std::sqrt(v) / (2.0 * std::numbers::pi * x);
       }});
  return law;
}

double mp_cdf(double t, double x, double abs_tol) {
  if (t <= 0) throw std::invalid_argument("mp_cdf: t > 0 required");
  if (x < 0) return 0.0;
  double f = t < 1.0 ? 1.0 - t : 0.0;  // atom at 0
  const double s = std::sqrt(t);
  const double lo = (1.0 - s) * (1.0 - s);
  const double hi = (1.0 + s) * (1.0 + s);
  if (x <= lo) return f;
  const double arg = std::clamp((1.0 + t - std::min(x, hi)) / (2.0 * s), -1.0, 1.0);
  const double ustar = std::acos(arg);
  f += integrate(
           [t, s](double u) {
             const double su = std::sin(u);
             return 4.0 * t * su * su /
                    (2.0 * std::numbers::pi * (1.0 + t - 2.0 * s * std::cos(u)));
           },
           0.0, ustar, abs_tol)
           .value;
  return f;
}

double mp1_cdf_closed(double x) {
  if (x <= 0) return 0.0;
  if (x >= 4) return 1.0;
  const double u = std::acos(1.0 - 0.5 * x);
  return (u + std::sin(u)) / std::numbers::pi;
}

SpectralLaw asymptotic_law(double alpha, double beta, int K) {
  if (alpha <= 0 || beta <= 0 || K < 1)
    throw std::invalid_argument("asymptotic_law: alpha, beta > 0, K >= 1");
  SpectralLaw law;
  const double cmass = 1.0 / (std::max(alpha, beta) * K);
  if (cmass < 1.0) law.atoms.emplace_back(0.0, 1.0 - cmass);
  const double sa = std::sqrt(alpha), sb = std::sqrt(beta);
  const double lo = (sa - sb) * (sa - sb) * K;
  const double hi = (sa + sb) * (sa + sb) * K;
  const double ab = alpha * beta * K * K;
  const double mid = alpha * K + beta * K;
  law.pieces.push_back({lo, hi, [ab, mid](double x) {
                          const double v = 4.0 * ab - (x - mid) * (x - mid);
                          return v <= 0.0 || x <= 0.0
                                     ? 0.0
                                     : std::sqrt(v) /
                                           (ab * 2.0 * std::numbers::pi * x);
                        }});
  return law;
}

double asymptotic_moment_predictor(double alpha, double beta, int K, int p) {
  double sum = 0.0;
  for (int r = 1; r <= p; ++r)
    sum += static_cast<double>(narayana_number(p, r)) *
           std::pow(alpha, r - 1) * std::pow(beta, p - r);
  return std::pow(static_cast<double>(K), p - 1) * sum;
}

}  // namespace qwalk
