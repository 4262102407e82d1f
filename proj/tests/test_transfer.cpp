#include <doctest.h>

#include "qwalk/errors.hpp"
#include "qwalk/transfer.hpp"

using namespace qwalk;

TEST_CASE("T_1 of the Z2 Fourier model") {
  const TransferMatrix T =
      transfer_matrix(fourier_model(AbelianGroup({2})), ExponentWord::plain(1));
  CHECK(T.p() == 1);
  CHECK(T.base() == 2);
  CHECK(T.dim() == 2);
  MatrixXcd want(2, 2);
  want << 0.5, 0.5, 0.5, 0.5;
  CHECK((T.mat() - want).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(T.realness_defect() < 1e-15);
  CHECK(T.symmetry_defect() < 1e-15);
}

TEST_CASE("tuple encoding puts the first letter most significant") {
  const AbelianGroup X({2}), Y({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 5), DeformSide::right);
  const int n = W.n(), p = 3;
  const TransferMatrix T = transfer_matrix(W, ExponentWord::plain(p));
  const long long pairs[][2] = {{0, 1}, {7, 42}, {13, 50}, {63, 21}};
  for (auto& pr : pairs) {
    int row[p], col[p];
    long long a = pr[0], b = pr[1];
    for (int s = p - 1; s >= 0; --s) {
      row[s] = int(a % n);
      a /= n;
      col[s] = int(b % n);
      b /= n;
    }
    MatrixXcd P = W.block(row[0], col[0]);
    for (int s = 1; s < p; ++s) P = P * W.block(row[s], col[s]);
    CHECK(std::abs(T.mat(int(pr[0]), int(pr[1])) -
                   P.trace() / double(W.block_dim())) < 1e-13);
  }
}

TEST_CASE("truncated moments of the Z2 Fourier model") {
  const MagicModel U = fourier_model(AbelianGroup({2}));
  CHECK(truncated_moment(U, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  // T_2 = (1/2) delta_{i1-j1,i2-j2} is idempotent: Tr T_2^r = 2 for all r
  CHECK(truncated_moment(U, 2, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(truncated_moment(U, 2, 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rescaled_truncated_moment(U, 2, 1) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("star letters act by block adjoints") {
  const AbelianGroup X({2}), Y({3});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 8), DeformSide::right);
  // magic blocks are self-adjoint, so any star pattern gives the same matrix
  const TransferMatrix plain = transfer_matrix(W, ExponentWord::plain(2));
  const TransferMatrix starred = transfer_matrix(W, ExponentWord{{true, false}});
  CHECK((plain.mat() - starred.mat()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reciprocity for Fourier and deformed models") {
  CHECK(check_reciprocity(fourier_model(AbelianGroup({3})), 3, 3).pass);
  const AbelianGroup X({2}), Y({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 47), DeformSide::right);
  const ReciprocityReport rep = check_reciprocity(W, 3, 3);
  CHECK(rep.pass);
  CHECK(rep.max_diff < 1e-9);
}

TEST_CASE("spectral Haar moments of the Z2 Fourier model are 2^(p-1)") {
  const MagicModel U = fourier_model(AbelianGroup({2}));
  for (int p = 1; p <= 4; ++p) {
    const MomentReport rep = haar_moment(U, p, HaarMethod::spectral);
    CHECK(rep.value == double(1 << (p - 1)));
    CHECK(rep.uncertainty < 1e-9);
  }
}

TEST_CASE("spectral Haar moments of the pinned deformed model") {
  const AbelianGroup X({2}), Y({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 47), DeformSide::right);
  const double want[] = {1.0, 3.0, 10.0};
  for (int p = 1; p <= 3; ++p)
    CHECK(haar_moment(W, p, HaarMethod::spectral).value == want[p - 1]);
}

TEST_CASE("cesaro averages at R=2000 for the pinned deformed model") {
  const AbelianGroup X({2}), Y({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 47), DeformSide::right);
  HaarParams params;
  params.cesaro_R = 2000;
  const MomentReport m2 = haar_moment(W, 2, HaarMethod::cesaro, params);
  const MomentReport m3 = haar_moment(W, 3, HaarMethod::cesaro, params);
  // eigendecomposition closed forms for this Q
  CHECK(std::abs(m2.value - 3.001001712824876) < 1e-8);
  CHECK(std::abs(m3.value - 10.006010276949256) < 1e-8);
  CHECK(m2.uncertainty > 0.0);
  CHECK(m2.uncertainty < 1e-2);
}

TEST_CASE("long cesaro runs stabilize and close the tail") {
  const AbelianGroup X({2}), Y({2});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 47), DeformSide::right);
  HaarParams params;
  params.cesaro_R = 200000;
  const MomentReport rep = haar_moment(W, 2, HaarMethod::cesaro, params);
  CHECK(rep.params.at("stabilized_at").get<int>() > 0);
  CHECK(rep.params.at("stabilized_at").get<int>() < 2000);
  // averaging error decays like (transient sum)/R, about 2/R here
  CHECK(std::abs(rep.value - 3.0) < 1e-4);
  CHECK(rep.uncertainty < 1e-6);
}

TEST_CASE("resource caps trip before large dense work") {
  const MagicModel U5 = fourier_model(AbelianGroup({5}));
  CHECK_THROWS_AS(haar_moment(U5, 7, HaarMethod::spectral), CapExceeded);
  CHECK_THROWS_AS(transfer_matrix(U5, ExponentWord::plain(7)), CapExceeded);
  const MagicModel U4 = fourier_model(AbelianGroup({4}));
  CHECK_THROWS_AS(haar_moment(U4, 6, HaarMethod::cesaro), CapExceeded);
}

TEST_CASE("lemma 2.7 expansion matches the direct truncated moment") {
  const AbelianGroup X({2}), Y({3});
  const MagicModel U = fourier_model(X), V = fourier_model(Y);
  const MagicModel Vd = dual(V);
  for (uint64_t seed : {31, 32}) {
    const PhaseMatrix Q = generic_q(X, Y, seed);
    const MagicModel W = deform(U, V, Q, DeformSide::right);
    for (int p = 1; p <= 2; ++p)
      for (int r = 1; r <= 2; ++r)
        CHECK(std::abs(lemma27_moment(U, Vd, Q, p, r) -
                       truncated_moment(W, p, r)) < 1e-9);
  }
}

TEST_CASE("lemma 2.7 enumeration cap") {
  const AbelianGroup X({3}), Y({3});
  const PhaseMatrix Q = generic_q(X, Y, 2);
  CHECK_THROWS_AS(
      lemma27_moment(fourier_model(X), dual(fourier_model(Y)), Q, 4, 4),
      CapExceeded);
}

TEST_CASE("tensor product bound for deformed moments") {
  const AbelianGroup X({2}), Y({2});
  const MagicModel U = fourier_model(X), V = fourier_model(Y);
  for (uint64_t seed : {1, 2, 3}) {
    const PhaseMatrix Q = generic_q(X, Y, seed);
    for (int p = 1; p <= 3; ++p)
      for (int r = 1; r <= 3; ++r) {
        const TensorBoundReport rep = tensor_bound_check(U, V, Q, p, r);
        CHECK(rep.precondition_u);
        CHECK(rep.precondition_vdual);
        CHECK(rep.holds);
        CHECK(rep.slack >= -1e-9);
      }
  }
}

TEST_CASE("serial and parallel assembly agree bit for bit") {
  const AbelianGroup X({2}), Y({3});
  const MagicModel W = deform(fourier_model(X), fourier_model(Y),
                              generic_q(X, Y, 4), DeformSide::right);
  const ExponentWord eps = ExponentWord::plain(2);
  CHECK(transfer_matrix(W, eps).mat() == transfer_matrix_serial(W, eps).mat());
}
