#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// e^{2 pi i t} with the angle kept in turns until the single trig call
cplx unit_phase(double turns);

struct GroupElt {
  std::vector<int> residues;
  bool operator==(const GroupElt&) const = default;
};

// Finite abelian group Z_{n1} x ... x Z_{nk}. Elements are handled through
// their canonical mixed-radix index (first listed factor most significant);
// add/neg tables are precomputed so index arithmetic is table lookups.
class AbelianGroup {
public:
  explicit AbelianGroup(std::vector<int> orders);

  int size() const { return size_; }
  const std::vector<int>& orders() const { return orders_; }

  GroupElt element(int idx) const;
  int index(const GroupElt& e) const;
  std::vector<GroupElt> enumerate() const;

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add_[a * size_ + neg_[b]]; }
  int zero() const { return 0; }

  GroupElt add(const GroupElt& a, const GroupElt& b) const;
  GroupElt negate(const GroupElt& a) const;

  // character pairing exponent in turns: sum_j x_j y_j / n_j
  double pairing_turns(int x, int y) const;

  std::string descriptor() const;  // "Z2xZ3" style
  bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

private:
  std::vector<int> orders_;
  int size_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

// parses "Z2", "Z2xZ3", "Z2xZ2xZ5"; throws std::invalid_argument on bad input
AbelianGroup parse_group(const std::string& descriptor);

// Character table F_X with (F_X)_{xy} = prod_j w_j^{x_j y_j}, w_j = e^{2 pi i/n_j}.
// Equals the Kronecker product of the cyclic Fourier matrices in canonical order.
MatrixXcd fourier_matrix(const AbelianGroup& X);

}  // namespace qwalk
