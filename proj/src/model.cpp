#include "qwalk/model.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/transfer.hpp"

namespace qwalk {

MagicModel::MagicModel(int n, int D, std::vector<std::string> labels)
    : n_(n), D_(D), labels_(std::move(labels)) {
  if (n < 1 || D < 1) throw std::invalid_argument("model dimensions must be positive");
  blocks_.assign(static_cast<size_t>(n) * n, MatrixXcd::Zero(D, D));
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
}

double MagicReport::worst() const {
  return std::max(std::max(self_adjoint_defect, idempotent_defect),
                  std::max(row_sum_defect, col_sum_defect));
}

MagicModel from_hadamard(const MatrixXcd& H) {
  auto rep = validate_hadamard(H);
  if (!rep.is_hadamard) throw std::invalid_argument("from_hadamard: input fails Hadamard validation");
  int n = static_cast<int>(H.rows());
  MagicModel U(n, n);
  double inv = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXcd& B = U.block(i, j);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          B(k, l) = inv * H(i, k) * H(j, l) / (H(i, l) * H(j, k));
    }
  return U;
}

MagicModel fourier_model(const AbelianGroup& X) {
  int n = X.size();
  std::vector<std::string> labels;
  for (auto& e : X.enumerate()) {
    std::string s;
    for (size_t j = 0; j < e.residues.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(e.residues[j]);
    }
    labels.push_back(s);
  }
  MagicModel U(n, n, std::move(labels));
  MatrixXcd F = fourier_matrix(X);
  double inv = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXcd& B = U.block(i, j);
      int ij = X.sub(i, j);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) B(k, l) = inv * F(ij, X.sub(k, l));
    }
  return U;
}

MagicModel deform(const MagicModel& U, const MagicModel& V, const PhaseMatrix& Q,
                  DeformSide side) {
  int M = U.n(), N = V.n();
  int DU = U.block_dim(), DV = V.block_dim();
  if (Q.rows() != M || Q.cols() != N) throw std::invalid_argument("deform: Q shape mismatch");
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(M) * N);
  for (int i = 0; i < M; ++i)
    for (int a = 0; a < N; ++a)
      labels.push_back(U.labels()[i] + "|" + V.labels()[a]);
  MagicModel W(M * N, DU * DV, std::move(labels));
  for (int i = 0; i < M; ++i)
    for (int a = 0; a < N; ++a)
      for (int j = 0; j < M; ++j)
        for (int b = 0; b < N; ++b) {
          const MatrixXcd& BU = U.block(i, j);
          const MatrixXcd& BV = V.block(a, b);
          MatrixXcd& BW = W.block(i * N + a, j * N + b);
          for (int k = 0; k < DU; ++k)
            for (int c = 0; c < DV; ++c)
              for (int l = 0; l < DU; ++l)
                for (int d = 0; d < DV; ++d) {
                  cplx phase = side == DeformSide::right
                                   ? Q(i, c) * Q(j, d) / (Q(i, d) * Q(j, c))
                                   : Q(k, a) * Q(l, b) / (Q(k, b) * Q(l, a));
                  BW(k * DV + c, l * DV + d) = phase * BU(k, l) * BV(c, d);
                }
        }
  return W;
}

MagicModel dual(const MagicModel& U) {
  if (U.n() != U.block_dim())
    throw std::invalid_argument("dual: model requires index_size == block_dim");
  int n = U.n();
  MagicModel Up(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      MatrixXcd& B = Up.block(k, l);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B(i, j) = U.block(i, j)(k, l);
    }
  return Up;
}

MagicReport check_magic(const MagicModel& U, double tol) {
  MagicReport rep;
  int n = U.n(), D = U.block_dim();
  MatrixXcd id = MatrixXcd::Identity(D, D);
  for (int i = 0; i < n; ++i) {
    MatrixXcd row_sum = MatrixXcd::Zero(D, D);
    MatrixXcd col_sum = MatrixXcd::Zero(D, D);
    for (int j = 0; j < n; ++j) {
      const MatrixXcd& B = U.block(i, j);
      rep.self_adjoint_defect =
          std::max(rep.self_adjoint_defect, (B - B.adjoint()).cwiseAbs().maxCoeff());
      rep.idempotent_defect =
          std::max(rep.idempotent_defect, (B * B - B).cwiseAbs().maxCoeff());
      row_sum += B;
      col_sum += U.block(j, i);
    }
    rep.row_sum_defect = std::max(rep.row_sum_defect, (row_sum - id).cwiseAbs().maxCoeff());
    rep.col_sum_defect = std::max(rep.col_sum_defect, (col_sum - id).cwiseAbs().maxCoeff());
  }
  rep.pass = rep.worst() <= tol;
  return rep;
}

PositivityReport check_positive(const MagicModel& U, int p_max) {
  if (p_max < 1) throw std::invalid_argument("check_positive: p_max >= 1 required");
  PositivityReport rep;
  rep.positive = true;
  rep.worst_entry = 0.0;
  for (int p = 1; p <= p_max; ++p) {
    TransferMatrix T = transfer_matrix(U, ExponentWord::plain(p));
    for (int r = 0; r < T.dim(); ++r)
      for (int c = 0; c < T.dim(); ++c) {
        double re = T.mat(r, c).real();
        if (re < rep.worst_entry) rep.worst_entry = re;
      }
  }
  rep.positive = rep.worst_entry >= -1e-10;
  return rep;
}

WreathReport verify_wreath_structure(const MagicModel& W, const AbelianGroup& X,
                                     const AbelianGroup& Y, double tol) {
  int M = X.size(), N = Y.size();
  if (W.n() != M * N) throw std::invalid_argument("wreath check: model not indexed by X x Y");
  WreathReport rep;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      MatrixXcd ref = MatrixXcd::Zero(W.block_dim(), W.block_dim());
      for (int a = 0; a < N; ++a) ref += W.block(i * N + a, j * N + 0);
      for (int b = 1; b < N; ++b) {
        MatrixXcd s = MatrixXcd::Zero(W.block_dim(), W.block_dim());
        for (int a = 0; a < N; ++a) s += W.block(i * N + a, j * N + b);
        rep.row_factor_defect =
            std::max(rep.row_factor_defect, (s - ref).cwiseAbs().maxCoeff());
      }
    }
  for (int i = 0; i < M; ++i) {
    std::vector<MatrixXcd> ref(N);
    std::vector<bool> seen(N, false);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int diff = Y.sub(a, b);
        MatrixXcd s = MatrixXcd::Zero(W.block_dim(), W.block_dim());
        for (int j = 0; j < M; ++j) s += W.block(i * N + a, j * N + b);
        if (!seen[diff]) {
          ref[diff] = s;
          seen[diff] = true;
        } else {
          rep.col_factor_defect =
              std::max(rep.col_factor_defect, (s - ref[diff]).cwiseAbs().maxCoeff());
        }
      }
  }
  rep.pass = std::max(rep.row_factor_defect, rep.col_factor_defect) <= tol;
  return rep;
}

std::string model_to_json(const MagicModel& U, double tol) {
  nlohmann::json j;
  j["index_size"] = U.n();
  j["block_dim"] = U.block_dim();
  j["labels"] = U.labels();
  j["tol"] = tol;
  auto rep = check_magic(U, tol);
  j["magic"] = {{"pass", rep.pass},
                {"self_adjoint_defect", rep.self_adjoint_defect},
                {"idempotent_defect", rep.idempotent_defect},
                {"row_sum_defect", rep.row_sum_defect},
                {"col_sum_defect", rep.col_sum_defect}};
  nlohmann::json blocks = nlohmann::json::array();
  for (int i = 0; i < U.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj < U.n(); ++jj) {
      const MatrixXcd& B = U.block(i, jj);
      nlohmann::json entries = nlohmann::json::array();
      for (int k = 0; k < U.block_dim(); ++k) {
        nlohmann::json er = nlohmann::json::array();
        for (int l = 0; l < U.block_dim(); ++l)
          er.push_back({B(k, l).real(), B(k, l).imag()});
        entries.push_back(er);
      }
      row.push_back(entries);
    }
    blocks.push_back(row);
  }
  j["blocks"] = blocks;
  return j.dump();
}

}  // namespace qwalk
