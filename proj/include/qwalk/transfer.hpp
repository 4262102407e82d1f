#pragma once

#include "qwalk/model.hpp"
#include "qwalk/report.hpp"

namespace qwalk {

struct ExponentWord {
  std::vector<bool> star;  // per letter: false = plain, true = adjoint
  static ExponentWord plain(int p) { return {std::vector<bool>(p, false)}; }
  int p() const { return static_cast<int>(star.size()); }
};

// resource guards
constexpr long long kSpectralCap = 20000;    // rows in a dense eigensolve
constexpr long long kCesaroCap = 1000;       // rows in the power-trace loop
constexpr long long kLemma27Cap = 10000000;  // (MN)^(p r) enumeration terms

// T_eps over p-tuples, entry ((i_1..i_p),(j_1..j_p)) = tr prod_s U_{i_s j_s}^{eps_s}
// with the normalized block trace Tr/D. Tuple encoding puts i_1 most
// significant: idx = sum_s idx(i_s) n^{p-s}.
class TransferMatrix {
public:
  TransferMatrix(int p, int n, MatrixXcd mat)
      : p_(p), n_(n), mat_(std::move(mat)) {}

  int p() const { return p_; }
  int base() const { return n_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const MatrixXcd& mat() const { return mat_; }
  cplx mat(int r, int c) const { return mat_(r, c); }

  double realness_defect() const { return mat_.imag().cwiseAbs().maxCoeff(); }
  double symmetry_defect() const;
  Eigen::MatrixXd real_part() const { return mat_.real(); }

private:
  int p_;
  int n_;
  MatrixXcd mat_;
};

TransferMatrix transfer_matrix(const MagicModel& U, const ExponentWord& eps);
// reference kernel, plain loops, no threading; used to pin the parallel one
TransferMatrix transfer_matrix_serial(const MagicModel& U, const ExponentWord& eps);

// c_eps^r = Tr(T_eps^r), UNNORMALIZED trace over the n^p-dimensional space
double truncated_moment(const MagicModel& U, int p, int r);
double truncated_moment(const MagicModel& U, const ExponentWord& eps, int r);

// gamma_p^r = c_p^r / n^p (moments of the rescaled law eta^r)
double rescaled_truncated_moment(const MagicModel& U, int p, int r);

struct ReciprocityReport {
  bool pass = false;
  double max_diff = 0.0;
};
// gamma_p^r(U) = gamma_r^p(dual(U)) for all p <= pmax, r <= rmax
ReciprocityReport check_reciprocity(const MagicModel& U, int pmax, int rmax,
                                    double tol = kTolMagic);

enum class HaarMethod { spectral, cesaro };

struct HaarParams {
  int cesaro_R = 2000;
  double spectral_tol = kTolSpectral;
};

// spectral: multiplicity of eigenvalue 1 of T_p (Haar moment = dim of the
//           fixed space of the p-th tensor power);
// cesaro:   (1/R) sum_{r<=R} Tr(T_p^r), uncertainty = last increment
MomentReport haar_moment(const MagicModel& U, int p, HaarMethod method,
                         const HaarParams& params = {});

// Truncated moment of W = U tensor_Q V evaluated from T_p(U), T_r(V') and the
// Q phase product alone, without building W. Vdual must be dual(V).
double lemma27_moment(const MagicModel& U, const MagicModel& Vdual,
                      const PhaseMatrix& Q, int p, int r);

struct TensorBoundReport {
  bool precondition_u = false;      // check_positive(U)
  bool precondition_vdual = false;  // check_positive(dual(V))
  bool holds = false;
  double lhs = 0.0;  // |c_p^r(W)|
  double rhs = 0.0;  // c_p^r(U) c_p^r(V)
  double slack = 0.0;
};
TensorBoundReport tensor_bound_check(const MagicModel& U, const MagicModel& V,
                                     const PhaseMatrix& Q, int p, int r);

}  // namespace qwalk
