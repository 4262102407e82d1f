#include <doctest.h>

#include <algorithm>

#include "qwalk/montecarlo.hpp"

using namespace qwalk;

TEST_CASE("pairwise_sum is exact on simple ranges") {
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum({1.5}) == 1.5);
  std::vector<double> v(100, 0.25);
  CHECK(pairwise_sum(v) == 25.0);
  std::vector<double> w;
  for (int i = 1; i <= 37; ++i) w.push_back(double(i));
  CHECK(pairwise_sum(w) == 37.0 * 38.0 / 2.0);
}

TEST_CASE("sample_gram is hermitian with diagonal N") {
  const MatrixXcd A = sample_gram(4, 6, 11, 3);
  REQUIRE(A.rows() == 4);
  REQUIRE(A.cols() == 4);
  CHECK((A - A.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(A(i, i) - 6.0) < 1e-12);
  // distinct samples differ
  CHECK((A - sample_gram(4, 6, 12, 3)).cwiseAbs().maxCoeff() > 1e-3);
  CHECK((A - sample_gram(4, 6, 11, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("first moment of the character is exactly 1") {
  const MomentReport rep = mc_moment(3, 4, 1, 500, 2);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.uncertainty < 1e-12);
}

TEST_CASE("mc runs are reproducible and schedule-independent") {
  const MomentReport a = mc_moment(2, 3, 2, 4000, 7, true);
  const MomentReport b = mc_moment(2, 3, 2, 4000, 7, true);
  const MomentReport c = mc_moment(2, 3, 2, 4000, 7, false);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.uncertainty == c.uncertainty);
  const MomentReport d = mc_moment(2, 3, 2, 4000, 8);
  CHECK(a.value != d.value);
}

TEST_CASE("second moment estimate is consistent with the exact law") {
  // exact c_2 = M + N - 1 = 4
  const MomentReport rep = mc_moment(2, 3, 2, 20000, 13);
  CHECK(rep.uncertainty > 0.0);
  CHECK(std::abs(rep.value - 4.0) < 4.0 * rep.uncertainty);
}

TEST_CASE("standard error shrinks like the square root of the sample count") {
  const MomentReport small = mc_moment(2, 2, 2, 2000, 55);
  const MomentReport large = mc_moment(2, 2, 2, 8000, 55);
  const double ratio = small.uncertainty / large.uncertainty;
  CHECK(ratio > 1.4);
  CHECK(ratio < 2.9);
}

TEST_CASE("spectrum report pools sorted eigenvalues with unit mean") {
  const SpectrumReport rep = mc_spectrum(6, 6, 40, 1);
  CHECK(rep.M == 6);
  CHECK(rep.samples == 40);
  REQUIRE(int(rep.eigenvalues.size()) == 240);
  CHECK(std::is_sorted(rep.eigenvalues.begin(), rep.eigenvalues.end()));
  CHECK(rep.eigenvalues.front() >= -1e-9);
  CHECK(rep.mean == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.ks > 0.0);
  CHECK(rep.ks < 1.0);

  const auto hist = rep.histogram(16);
  REQUIRE(hist.size() == 16);
  double mass = 0.0;
  for (const auto& bin : hist) {
    CHECK(bin.right > bin.left);
    mass += bin.density * (bin.right - bin.left);
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("spectrum sampling is deterministic across schedules") {
  const SpectrumReport a = mc_spectrum(4, 4, 12, 9, true);
  const SpectrumReport b = mc_spectrum(4, 4, 12, 9, false);
  REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
  for (size_t i = 0; i < a.eigenvalues.size(); ++i)
    CHECK(a.eigenvalues[i] == b.eigenvalues[i]);
  CHECK(a.ks == b.ks);
}

TEST_CASE("ks distance on a hand-checked sample") {
  // two points with F-values 0.25 and 0.75: sup gap is 0.25
  CHECK(ks_distance_sorted({0.3, 0.9}, {0.25, 0.75}) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // F jumps past the empirical staircase
  CHECK(ks_distance_sorted({0.5}, {0.9}) == doctest::Approx(0.9));
  CHECK(ks_distance_sorted({0.5}, {0.0}) == doctest::Approx(1.0));
}
