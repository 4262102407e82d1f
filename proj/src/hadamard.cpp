#include "qwalk/hadamard.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {

HadamardReport validate_hadamard(const MatrixXcd& H, double tol) {
  if (H.rows() != H.cols()) throw std::invalid_argument("Hadamard candidate must be square");
  HadamardReport rep;
  int n = static_cast<int>(H.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.max_modulus_defect = std::max(rep.max_modulus_defect, std::abs(std::abs(H(i, j)) - 1.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rep.max_orthogonality_defect =
          std::max(rep.max_orthogonality_defect, std::abs(H.row(i).dot(H.row(j))));
  rep.is_hadamard = rep.max_modulus_defect <= tol && rep.max_orthogonality_defect <= tol;
  return rep;
}

cplx gram_quantity(const MatrixXcd& H, int a, int b, int c, int d) {
  int n = static_cast<int>(H.rows());
  cplx s = 0.0;
  for (int k = 0; k < n; ++k)
    s += (H(a, k) / H(b, k)) * std::conj(H(c, k) / H(d, k));
  return s / static_cast<double>(n);
}

MatrixXcd PhaseMatrix::matrix() const {
  MatrixXcd Q(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int c = 0; c < cols(); ++c) Q(i, c) = (*this)(i, c);
  return Q;
}

PhaseMatrix ones_q(const AbelianGroup& X, const AbelianGroup& Y) {
  PhaseMatrix Q;
  Q.X = X;
  Q.Y = Y;
  Q.angles_turns = Eigen::MatrixXd::Zero(X.size(), Y.size());
  Q.dephased = true;
  return Q;
}

PhaseMatrix generic_q(const AbelianGroup& X, const AbelianGroup& Y, uint64_t seed) {
  PhaseMatrix Q = ones_q(X, Y);
  CounterRng rng(seed);
  int N = Y.size();
  for (int i = 1; i < X.size(); ++i)
    for (int c = 1; c < N; ++c)
      Q.angles_turns(i, c) = rng.u01(stream_q_matrix, static_cast<uint64_t>(i) * N + c);
  return Q;
}

MatrixXcd deformed_tensor(const MatrixXcd& H, const MatrixXcd& K,
                          const PhaseMatrix& Q, DeformSide side) {
  int M = static_cast<int>(H.rows());
  int N = static_cast<int>(K.rows());
  if (Q.rows() != M || Q.cols() != N) throw std::invalid_argument("Q shape mismatch");
  MatrixXcd W(M * N, M * N);
  for (int i = 0; i < M; ++i)
    for (int a = 0; a < N; ++a)
      for (int j = 0; j < M; ++j)
        for (int b = 0; b < N; ++b) {
          cplx phase = side == DeformSide::right ? Q(i, b) : Q(j, a);
          W(i * N + a, j * N + b) = phase * H(i, j) * K(a, b);
        }
  return W;
}

std::string phase_matrix_to_json(const PhaseMatrix& Q) {
  nlohmann::json j;
  j["x"] = Q.X.descriptor();
  j["y"] = Q.Y.descriptor();
  j["dephased"] = Q.dephased;
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < Q.rows(); ++i) {
    std::vector<double> row;
    for (int c = 0; c < Q.cols(); ++c) row.push_back(Q.angles_turns(i, c));
    rows.push_back(std::move(row));
  }
  j["angles_turns"] = rows;
  return j.dump(2);
}

PhaseMatrix phase_matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PhaseMatrix Q;
  Q.X = parse_group(j.at("x").get<std::string>());
  Q.Y = parse_group(j.at("y").get<std::string>());
  Q.dephased = j.value("dephased", true);
  auto rows = j.at("angles_turns").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(rows.size()) != Q.X.size())
    throw std::invalid_argument("angles_turns row count != |X|");
  Q.angles_turns.resize(Q.X.size(), Q.Y.size());
  for (int i = 0; i < Q.X.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != Q.Y.size())
      throw std::invalid_argument("angles_turns column count != |Y|");
    for (int c = 0; c < Q.Y.size(); ++c) Q.angles_turns(i, c) = rows[i][c];
  }
  if (Q.dephased) {
    for (int i = 0; i < Q.X.size(); ++i)
      if (std::abs(Q.angles_turns(i, 0)) > 1e-12)
        throw std::invalid_argument("dephased Q must have first column 1");
    for (int c = 0; c < Q.Y.size(); ++c)
      if (std::abs(Q.angles_turns(0, c)) > 1e-12)
        throw std::invalid_argument("dephased Q must have first row 1");
  }
  return Q;
}

PhaseMatrix load_phase_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Q file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return phase_matrix_from_json(ss.str());
}

void save_phase_matrix(const PhaseMatrix& Q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write Q file: " + path);
  out << phase_matrix_to_json(Q) << "\n";
}

}  // namespace qwalk
