#include "qwalk/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

cplx unit_phase(double turns) {
  double t = turns - std::floor(turns);
  double a = 2.0 * std::numbers::pi * t;
  return {std::cos(a), std::sin(a)};
}

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) orders_ = {1};
  size_ = 1;
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
    size_ *= n;
  }
  neg_.resize(size_);
  add_.resize(static_cast<size_t>(size_) * size_);
  for (int a = 0; a < size_; ++a) {
    GroupElt ea = element(a);
    GroupElt na = negate(ea);
    neg_[a] = index(na);
    for (int b = 0; b < size_; ++b) {
      add_[a * size_ + b] = index(add(ea, element(b)));
    }
  }
}

GroupElt AbelianGroup::element(int idx) const {
  GroupElt e;
  e.residues.resize(orders_.size());
  for (int j = static_cast<int>(orders_.size()) - 1; j >= 0; --j) {
    e.residues[j] = idx % orders_[j];
    idx /= orders_[j];
  }
  return e;
}

int AbelianGroup::index(const GroupElt& e) const {
  if (e.residues.size() != orders_.size())
    throw std::invalid_argument("element arity does not match group");
  int idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    int r = e.residues[j] % orders_[j];
    if (r < 0) r += orders_[j];
    idx = idx * orders_[j] + r;
  }
  return idx;
}

std::vector<GroupElt> AbelianGroup::enumerate() const {
  std::vector<GroupElt> out;
  out.reserve(size_);
  for (int i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

GroupElt AbelianGroup::add(const GroupElt& a, const GroupElt& b) const {
  if (a.residues.size() != orders_.size() || b.residues.size() != orders_.size())
    throw std::invalid_argument("element arity does not match group");
  GroupElt c;
  c.residues.resize(orders_.size());
  for (size_t j = 0; j < orders_.size(); ++j)
    c.residues[j] = (a.residues[j] + b.residues[j]) % orders_[j];
  return c;
}

GroupElt AbelianGroup::negate(const GroupElt& a) const {
  if (a.residues.size() != orders_.size())
    throw std::invalid_argument("element arity does not match group");
  GroupElt c;
  c.residues.resize(orders_.size());
  for (size_t j = 0; j < orders_.size(); ++j)
    c.residues[j] = (orders_[j] - a.residues[j]) % orders_[j];
  return c;
}

double AbelianGroup::pairing_turns(int x, int y) const {
  GroupElt ex = element(x), ey = element(y);
  double t = 0.0;
  for (size_t j = 0; j < orders_.size(); ++j)
    t += static_cast<double>((ex.residues[j] * ey.residues[j]) % orders_[j]) / orders_[j];
  return t;
}

std::string AbelianGroup::descriptor() const {
  std::string s;
  for (size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += "x";
    s += "Z" + std::to_string(orders_[j]);
  }
  return s;
}

AbelianGroup parse_group(const std::string& descriptor) {
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < descriptor.size()) {
    if (descriptor[pos] != 'Z' && descriptor[pos] != 'z')
      throw std::invalid_argument("bad group descriptor: " + descriptor);
    ++pos;
    size_t end = pos;
    while (end < descriptor.size() && std::isdigit(static_cast<unsigned char>(descriptor[end])))
      ++end;
    if (end == pos) throw std::invalid_argument("bad group descriptor: " + descriptor);
    orders.push_back(std::stoi(descriptor.substr(pos, end - pos)));
    pos = end;
    if (pos < descriptor.size()) {
      if (descriptor[pos] != 'x' && descriptor[pos] != 'X')
        throw std::invalid_argument("bad group descriptor: " + descriptor);
      ++pos;
      if (pos == descriptor.size())
        throw std::invalid_argument("bad group descriptor: " + descriptor);
    }
  }
  if (orders.empty()) throw std::invalid_argument("empty group descriptor");
  return AbelianGroup(orders);
}

MatrixXcd fourier_matrix(const AbelianGroup& X) {
  int n = X.size();
  MatrixXcd F(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      F(x, y) = unit_phase(X.pairing_turns(x, y));
  return F;
}

}  // namespace qwalk
