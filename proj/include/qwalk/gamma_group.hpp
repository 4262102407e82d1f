#pragma once

#include <cstdint>
#include <utility>

#include "qwalk/group.hpp"
#include "qwalk/hadamard.hpp"
#include "qwalk/model.hpp"

namespace qwalk {

constexpr long long kWalkCap = 100000000;  // (MN)^p word enumeration

// Element of Gamma = Z^((M-1) N) x| Y. The free part is stored densely,
// coordinate (i, c) with i in 1..M-1, c in Y at slot (i-1) N + c; the Y part
// acts by shifting c.
struct SemidirectElt {
  std::vector<std::int32_t> vec;
  int y = 0;
  bool operator==(const SemidirectElt&) const = default;
};

class GammaContext {
public:
  GammaContext(AbelianGroup X, AbelianGroup Y);

  const AbelianGroup& X() const { return x_; }
  const AbelianGroup& Y() const { return y_; }
  int M() const { return x_.size(); }
  int N() const { return y_.size(); }

  SemidirectElt identity() const;
  bool is_identity(const SemidirectElt& g) const;

  // generator c^{(i)}: i = 0 gives the pure Y part, i != 0 the relative
  // translation e_{(i,0)} - e_{(i,c)} followed by c
  SemidirectElt embed_generator(int i, int c) const;

  SemidirectElt mul(const SemidirectElt& g, const SemidirectElt& h) const;
  void mul_inplace(SemidirectElt& acc, const SemidirectElt& g) const;
  SemidirectElt inverse(const SemidirectElt& g) const;

private:
  AbelianGroup x_;
  AbelianGroup y_;
};

enum class WalkMethod { multiset, group };

// Exact length-p return count. multiset: tuples in (X x Y)^p whose letter
// multiset is invariant under the cyclic index shift of the second
// coordinate, value = count / (MN). group: words over the MN generators
// multiplying to the identity of Gamma, value = count / M. The two counts
// satisfy multiset = N * group exactly.
struct WalkMoment {
  WalkMethod method;
  int p = 0;
  __int128 count = 0;
  long long denominator = 1;
  double value() const;
};

WalkMoment walk_moment(const AbelianGroup& X, const AbelianGroup& Y, int p,
                       WalkMethod method, bool parallel = true);

// theta_{ic}^{ke} = Q_{i,e-c} Q_{i-k,e} / (Q_{i,e} Q_{i-k,e-c})
cplx theta(const PhaseMatrix& Q, int i, int c, int k, int e);

// pi_k(c^{(i)}): N x N monomial matrix, entry (e-c, e) = theta_{ic}^{ke}
MatrixXcd rep_generator(const PhaseMatrix& Q, int k, int i, int c);
// product pi_k(g_1) ... pi_k(g_m) for a word of (i, c) letters
MatrixXcd rep_word(const PhaseMatrix& Q, int k,
                   const std::vector<std::pair<int, int>>& word);

struct ModelRepReport {
  bool pass = false;
  double worst = 0.0;
};
// The model on X x Y carries the Gamma representation: summing blocks of the
// deformed Fourier model against the Y Fourier matrix reproduces the
// pi_k action on the eps_{k,e} eigenbasis.
ModelRepReport verify_model_rep(const AbelianGroup& X, const AbelianGroup& Y,
                                const PhaseMatrix& Q, double tol = kTolMagic);

struct ProbeReport {
  int words = 0;
  int failures = 0;         // words no pi_k separates from a scalar
  double min_spread = 0.0;  // smallest best-spread over all words
  double worst_offdiag = 0.0;
  bool pass = false;
};
// Random zero-sum words ((-c)^{(0)} c^{(i)})^R with R in [-3,3]. Each lands
// in the translation subgroup, so every pi_k image must be diagonal; a word
// fails if no k produces diagonal entries spread wider than sep_tol.
ProbeReport faithfulness_probe(const PhaseMatrix& Q, int n_words,
                               std::uint64_t seed, double sep_tol = 1e-6);

}  // namespace qwalk
