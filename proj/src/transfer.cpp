#include "qwalk/transfer.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

long long pow_checked(int n, int p, long long cap, const char* what) {
  long long d = 1;
  for (int s = 0; s < p; ++s) {
    d *= n;
    if (d > cap)
      throw CapExceeded(std::string(what) + ": n^p = " + std::to_string(n) +
                        "^" + std::to_string(p) + " exceeds cap " +
                        std::to_string(cap));
  }
  return d;
}

void decode_tuple(long long idx, int n, int p, std::vector<int>& out) {
  // first letter most significant
  for (int s = p - 1; s >= 0; --s) {
    out[s] = static_cast<int>(idx % n);
    idx /= n;
  }
}

cplx entry_kernel(const MagicModel& U, const ExponentWord& eps,
                  const std::vector<int>& row, const std::vector<int>& col) {
  const int p = eps.p();
  MatrixXcd P = eps.star[0] ? MatrixXcd(U.block(row[0], col[0]).adjoint())
                            : U.block(row[0], col[0]);
  for (int s = 1; s < p; ++s) {
    if (eps.star[s])
      P = P * U.block(row[s], col[s]).adjoint();
    else
      P = P * U.block(row[s], col[s]);
  }
  return P.trace() / static_cast<double>(U.block_dim());
}

MatrixXcd assemble(const MagicModel& U, const ExponentWord& eps, bool parallel) {
  const int n = U.n();
  const int p = eps.p();
  if (p < 1) throw std::invalid_argument("transfer_matrix: p >= 1 required");
  const long long dim = pow_checked(n, p, kSpectralCap, "transfer_matrix");
  MatrixXcd T(dim, dim);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long a = 0; a < dim; ++a) {
    std::vector<int> row(p), col(p);
    decode_tuple(a, n, p, row);
    for (long long b = 0; b < dim; ++b) {
      decode_tuple(b, n, p, col);
      T(a, b) = entry_kernel(U, eps, row, col);
    }
  }
  return T;
}

}  // namespace

double TransferMatrix::symmetry_defect() const {
  return (mat_ - mat_.transpose()).cwiseAbs().maxCoeff();
}

TransferMatrix transfer_matrix(const MagicModel& U, const ExponentWord& eps) {
  return {eps.p(), U.n(), assemble(U, eps, true)};
}

TransferMatrix transfer_matrix_serial(const MagicModel& U, const ExponentWord& eps) {
  return {eps.p(), U.n(), assemble(U, eps, false)};
}

double truncated_moment(const TransferMatrix& T, int r) {
  if (r < 1) throw std::invalid_argument("truncated_moment: r >= 1 required");
  if (r == 1) return T.mat().trace().real();
  MatrixXcd P = T.mat();
  for (int k = 2; k <= r; ++k) P = T.mat() * P;
  return P.trace().real();
}

double truncated_moment(const MagicModel& U, const ExponentWord& eps, int r) {
  return truncated_moment(transfer_matrix(U, eps), r);
}

double truncated_moment(const MagicModel& U, int p, int r) {
  return truncated_moment(U, ExponentWord::plain(p), r);
}

double rescaled_truncated_moment(const MagicModel& U, int p, int r) {
  double np = std::pow(static_cast<double>(U.n()), p);
  return truncated_moment(U, p, r) / np;
}

ReciprocityReport check_reciprocity(const MagicModel& U, int pmax, int rmax,
                                    double tol) {
  MagicModel Ud = dual(U);
  std::vector<TransferMatrix> Tu, Td;
  for (int p = 1; p <= std::max(pmax, rmax); ++p) {
    Tu.push_back(transfer_matrix(U, ExponentWord::plain(p)));
    Td.push_back(transfer_matrix(Ud, ExponentWord::plain(p)));
  }
  ReciprocityReport rep;
  for (int p = 1; p <= pmax; ++p)
    for (int r = 1; r <= rmax; ++r) {
      double lhs = truncated_moment(Tu[p - 1], r) / std::pow(U.n(), p);
      double rhs = truncated_moment(Td[r - 1], p) / std::pow(U.n(), r);
      rep.max_diff = std::max(rep.max_diff, std::abs(lhs - rhs));
    }
  rep.pass = rep.max_diff <= tol;
  return rep;
}

namespace {

// number of eigenvalues within spectral_tol of 1, counted with multiplicity
int unit_eigenvalue_count(const TransferMatrix& T, double spectral_tol,
                          std::string& solver, double& worst) {
  int count = 0;
  worst = 0.0;
  if (T.realness_defect() < kTolMagic && T.symmetry_defect() < kTolMagic) {
    solver = "self_adjoint";
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.real_part(),
                                                      Eigen::EigenvaluesOnly);
    for (double lam : es.eigenvalues())
      if (std::abs(lam - 1.0) < spectral_tol) {
        ++count;
        worst = std::max(worst, std::abs(lam - 1.0));
      }
  } else {
    solver = "complex";
    Eigen::ComplexEigenSolver<MatrixXcd> es(T.mat(), false);
    for (cplx lam : es.eigenvalues())
      if (std::abs(lam - 1.0) < spectral_tol) {
        ++count;
        worst = std::max(worst, std::abs(lam - 1.0));
      }
  }
  return count;
}

MomentReport spectral_moment(const MagicModel& U, int p, const HaarParams& params) {
  Stopwatch sw;
  pow_checked(U.n(), p, kSpectralCap, "haar_moment(spectral)");
  TransferMatrix T = transfer_matrix(U, ExponentWord::plain(p));
  std::string solver;
  double worst = 0.0;
  int count = unit_eigenvalue_count(T, params.spectral_tol, solver, worst);
  MomentReport rep;
  rep.method = "spectral";
  rep.params = {{"p", p}, {"dim", T.dim()}, {"solver", solver}};
  rep.value = static_cast<double>(count);
  rep.uncertainty = worst;
  rep.seed = 0;
  rep.time_ms = sw.elapsed_ms();
  return rep;
}

MomentReport cesaro_moment(const MagicModel& U, int p, const HaarParams& params) {
  Stopwatch sw;
  const int R = params.cesaro_R;
  if (R < 1) throw std::invalid_argument("cesaro: R >= 1 required");
  pow_checked(U.n(), p, kCesaroCap, "haar_moment(cesaro)");
  TransferMatrix T = transfer_matrix(U, ExponentWord::plain(p));

  // Power traces t_r = Tr(T^r) stabilise geometrically once the spectral gap
  // bites; after 30 machine-flat increments the tail is extended in closed
  // form instead of iterated.
  const bool real_path = T.realness_defect() < kTolMagic;
  Eigen::MatrixXd Tr_, Pr_;
  MatrixXcd Tc_, Pc_;
  if (real_path) {
    Tr_ = T.real_part();
    Pr_ = Tr_;
  } else {
    Tc_ = T.mat();
    Pc_ = Tc_;
  }

  double sum = 0.0, prev_avg = 0.0, avg = 0.0, last_t = 0.0, prev_t = 0.0;
  int stable = 0, stabilized_at = 0;
  for (int r = 1; r <= R; ++r) {
    if (r > 1) {
      if (real_path)
        Pr_ = (Tr_ * Pr_).eval();
      else
        Pc_ = (Tc_ * Pc_).eval();
    }
    last_t = real_path ? Pr_.trace() : Pc_.trace().real();
    sum += last_t;
    prev_avg = avg;
    avg = sum / r;
    if (r > 1 && std::abs(last_t - prev_t) < 1e-14 * std::max(1.0, std::abs(last_t)))
      ++stable;
    else
      stable = 0;
    prev_t = last_t;
    if (stable >= 30 && r < R) {
      stabilized_at = r;
      double tail = last_t;
      double sum_R = sum + static_cast<double>(R - r) * tail;
      double sum_Rm1 = sum + static_cast<double>(R - 1 - r) * tail;
      avg = sum_R / R;
      prev_avg = (R >= 2) ? sum_Rm1 / (R - 1) : 0.0;
      break;
    }
  }

  MomentReport rep;
  rep.method = "cesaro";
  rep.params = {{"p", p},
                {"R", R},
                {"dim", T.dim()},
                {"stabilized_at", stabilized_at}};
  rep.value = avg;
  rep.uncertainty = (R >= 2) ? std::abs(avg - prev_avg) : std::abs(avg);
  rep.seed = 0;
  rep.time_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

MomentReport haar_moment(const MagicModel& U, int p, HaarMethod method,
                         const HaarParams& params) {
  if (p < 1) throw std::invalid_argument("haar_moment: p >= 1 required");
  return method == HaarMethod::spectral ? spectral_moment(U, p, params)
                                        : cesaro_moment(U, p, params);
}

double lemma27_moment(const MagicModel& U, const MagicModel& Vdual,
                      const PhaseMatrix& Q, int p, int r) {
  const int M = U.n();
  const int N = Vdual.n();
  if (Q.rows() != M || Q.cols() != N)
    throw std::invalid_argument("lemma27_moment: Q shape mismatch");
  if (p < 1 || r < 1)
    throw std::invalid_argument("lemma27_moment: p, r >= 1 required");
  {
    long long terms = 1;
    for (int s = 0; s < p * r; ++s) {
      terms *= static_cast<long long>(M) * N;
      if (terms > kLemma27Cap)
        throw CapExceeded("lemma27_moment: (MN)^(p r) exceeds cap " +
                          std::to_string(kLemma27Cap));
    }
  }

  TransferMatrix Tu = transfer_matrix(U, ExponentWord::plain(p));
  TransferMatrix Tv = transfer_matrix(Vdual, ExponentWord::plain(r));

  long long icount = 1, bcount = 1;
  for (int s = 0; s < p * r; ++s) icount *= M;
  for (int s = 0; s < p * r; ++s) bcount *= N;

  const double mr = std::pow(static_cast<double>(M), r);
  const double np = std::pow(static_cast<double>(N), p);

  std::vector<std::vector<int>> itab(r, std::vector<int>(p));
  std::vector<std::vector<int>> btab(r, std::vector<int>(p));
  std::vector<int> rowcode(r), colcode(p);

  cplx total = 0.0;
  for (long long iflat = 0; iflat < icount; ++iflat) {
    {
      long long rest = iflat;
      for (int s = r - 1; s >= 0; --s)
        for (int t = p - 1; t >= 0; --t) {
          itab[s][t] = static_cast<int>(rest % M);
          rest /= M;
        }
    }
    for (int s = 0; s < r; ++s) {
      long long code = 0;
      for (int t = 0; t < p; ++t) code = code * M + itab[s][t];
      rowcode[s] = static_cast<int>(code);
    }
    cplx delta_u = mr;
    for (int s = 0; s < r; ++s)
      delta_u *= Tu.mat(rowcode[s], rowcode[(s + 1) % r]);
    if (std::abs(delta_u) < 1e-15) continue;

    for (long long bflat = 0; bflat < bcount; ++bflat) {
      {
        long long rest = bflat;
        for (int s = r - 1; s >= 0; --s)
          for (int t = p - 1; t >= 0; --t) {
            btab[s][t] = static_cast<int>(rest % N);
            rest /= N;
          }
      }
      for (int t = 0; t < p; ++t) {
        long long code = 0;
        for (int s = 0; s < r; ++s) code = code * N + btab[s][t];
        colcode[t] = static_cast<int>(code);
      }
      cplx delta_v = np;
      for (int t = 0; t < p; ++t)
        delta_v *= Tv.mat(colcode[t], colcode[(t + 1) % p]);
      if (std::abs(delta_v) < 1e-15) continue;

      cplx phi = 1.0;
      for (int s = 0; s < r; ++s) {
        const int s1 = (s + 1) % r;
        for (int t = 0; t < p; ++t) {
          const int t1 = (t + 1) % p;
          phi *= Q(itab[s][t], btab[s][t]) * Q(itab[s1][t], btab[s][t1]) /
                 (Q(itab[s][t], btab[s][t1]) * Q(itab[s1][t], btab[s][t]));
        }
      }
      total += delta_u * delta_v * phi;
    }
  }

  double norm = std::pow(static_cast<double>(M) * N, r);
  return (total / norm).real();
}

TensorBoundReport tensor_bound_check(const MagicModel& U, const MagicModel& V,
                                     const PhaseMatrix& Q, int p, int r) {
  TensorBoundReport rep;
  rep.precondition_u = check_positive(U, p).positive;
  rep.precondition_vdual = check_positive(dual(V), p).positive;
  MagicModel W = deform(U, V, Q, DeformSide::right);
  rep.lhs = std::abs(truncated_moment(W, p, r));
  rep.rhs = truncated_moment(U, p, r) * truncated_moment(V, p, r);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.lhs <= rep.rhs + kTolMagic;
  return rep;
}

}  // namespace qwalk
