#pragma once

#include <string>
#include <vector>

#include "qwalk/hadamard.hpp"

namespace qwalk {

// n x n array of D x D blocks U_ij. A magic unitary has projection blocks
// whose rows and columns sum to the identity; the flip dual swaps the role
// of model index (i,j) and block index (k,l).
class MagicModel {
public:
  MagicModel(int n, int D, std::vector<std::string> labels = {});

  int n() const { return n_; }
  int block_dim() const { return D_; }
  MatrixXcd& block(int i, int j) { return blocks_[static_cast<size_t>(i) * n_ + j]; }
  const MatrixXcd& block(int i, int j) const { return blocks_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  int n_;
  int D_;
  std::vector<MatrixXcd> blocks_;
  std::vector<std::string> labels_;
};

struct MagicReport {
  bool pass = false;
  double self_adjoint_defect = 0.0;
  double idempotent_defect = 0.0;
  double row_sum_defect = 0.0;
  double col_sum_defect = 0.0;
  double worst() const;
};

// Default tolerance ladder: 1e-12 construction identities, 1e-9 magic checks,
// 1e-6 spectral decisions.
constexpr double kTolConstruction = 1e-12;
constexpr double kTolMagic = 1e-9;
constexpr double kTolSpectral = 1e-6;

// block (i,j) entry (k,l) = (1/n) H_ik H_jl / (H_il H_jk); blocks are the
// rank-1 projections onto H_i/H_j.
MagicModel from_hadamard(const MatrixXcd& H);

// blocks over X with (U_ij)_kl = (1/|X|) F_{i-j,k-l}; equals from_hadamard(F_X)
MagicModel fourier_model(const AbelianGroup& X);

// W = U tensor_Q V (right) or W deg = U _Q tensor V (left):
// (W_{ia,jb})_{kc,ld} = (Q_ic Q_jd / Q_id Q_jc) (U_ij)_kl (V_ab)_cd  [right]
// (W_{ia,jb})_{kc,ld} = (Q_ka Q_lb / Q_kb Q_la) (U_ij)_kl (V_ab)_cd  [left]
MagicModel deform(const MagicModel& U, const MagicModel& V, const PhaseMatrix& Q,
                  DeformSide side);

// flip dual (U'_kl)_ij = (U_ij)_kl; requires n == D
MagicModel dual(const MagicModel& U);

MagicReport check_magic(const MagicModel& U, double tol = kTolMagic);

struct PositivityReport {
  bool positive = false;
  double worst_entry = 0.0;  // most negative transfer entry encountered
};

// positive model: all entries of T_p nonnegative for p <= p_max
PositivityReport check_positive(const MagicModel& U, int p_max);

struct WreathReport {
  bool pass = false;
  double row_factor_defect = 0.0;   // sum_a W_{ia,jb} independent of b
  double col_factor_defect = 0.0;   // sum_j W_{ia,jb} function of (i, a-b)
};

// structure of W over X x Y as a magic matrix of a wreath-product type model
WreathReport verify_wreath_structure(const MagicModel& W, const AbelianGroup& X,
                                     const AbelianGroup& Y, double tol = kTolMagic);

std::string model_to_json(const MagicModel& U, double tol = kTolMagic);

}  // namespace qwalk
