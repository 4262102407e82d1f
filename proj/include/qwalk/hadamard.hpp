#pragma once

#include <string>

#include "qwalk/group.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

struct HadamardReport {
  bool is_hadamard = false;
  double max_modulus_defect = 0.0;
  double max_orthogonality_defect = 0.0;
};

// max | |entry| - 1 | and max |<row_i, row_j>| over i != j
HadamardReport validate_hadamard(const MatrixXcd& H, double tol = 1e-9);

// C_{abcd} = (1/n) <H_a/H_b, H_c/H_d> over rows; for F_X this is
// delta_{a-b,c-d}, the positivity certificate used by the tensor bound.
cplx gram_quantity(const MatrixXcd& H, int a, int b, int c, int d);

// Parameter matrix Q over X x Y; entries unit-modulus, stored as angles in
// turns so dephasing and file round-trips stay exact.
struct PhaseMatrix {
  AbelianGroup X{{1}};
  AbelianGroup Y{{1}};
  Eigen::MatrixXd angles_turns;  // M x N
  bool dephased = true;

  int rows() const { return X.size(); }
  int cols() const { return Y.size(); }
  cplx operator()(int i, int c) const { return unit_phase(angles_turns(i, c)); }
  MatrixXcd matrix() const;
};

PhaseMatrix ones_q(const AbelianGroup& X, const AbelianGroup& Y);

// Dephased Q with the (|X|-1)(|Y|-1) free phases uniform in [0,1) turns,
// drawn from the q-matrix stream of the seeded counter generator. Random
// phases stand in for root independence (Q generic almost surely); callers
// record the seed so a degenerate draw stays reproducible.
PhaseMatrix generic_q(const AbelianGroup& X, const AbelianGroup& Y, uint64_t seed);

enum class DeformSide { right, left };

// H tensor_Q K: entry (ia, jb) = Q_{ib} H_{ij} K_{ab} (right)
//                             or Q_{ja} H_{ij} K_{ab} (left),
// row/column pairs (i,a) in X-outer order.
MatrixXcd deformed_tensor(const MatrixXcd& H, const MatrixXcd& K,
                          const PhaseMatrix& Q, DeformSide side);

// JSON file format: {"x": "Z2", "y": "Z2", "angles_turns": [[...]], "dephased": true}
std::string phase_matrix_to_json(const PhaseMatrix& Q);
PhaseMatrix phase_matrix_from_json(const std::string& text);
PhaseMatrix load_phase_matrix(const std::string& path);
void save_phase_matrix(const PhaseMatrix& Q, const std::string& path);

}  // namespace qwalk
