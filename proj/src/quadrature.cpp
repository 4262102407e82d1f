#include "qwalk/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace qwalk {

namespace {

// 7-15 pair from the Legendre Jacobi matrix (Laurie's algorithm), frozen after
// checking degree-22 exactness, G7 nesting, and the published 15-digit table.
constexpr int kHalf = 8;
constexpr double kNode[kHalf] = {
    9.9145537112081283e-01, 9.4910791234275860e-01, 8.6486442335976921e-01,
    7.4153118559939446e-01, 5.8608723546769159e-01, 4.0584515137739746e-01,
    2.0778495500789881e-01, 0.0};
constexpr double kWk[kHalf] = {
    2.2935322010529047e-02, 6.3092092629978266e-02, 1.0479001032224967e-01,
    1.4065325971552597e-01, 1.6900472663926699e-01, 1.9035057806478503e-01,
    2.0443294007529933e-01, 2.0948214108472743e-01};
// Gauss weights attach to the odd slots (nodes 1, 3, 5 and the centre)
constexpr double kWg[4] = {1.2948496616886948e-01, 2.7970539148927653e-01,
                           3.8183005050511876e-01, 4.1795918367346918e-01};

void panel(const Integrand& f, double a, double b, double& k15, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double sk = kWk[7] * fc;
  double sg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fl = f(c - h * kNode[i]);
    const double fr = f(c + h * kNode[i]);
    sk += kWk[i] * (fl + fr);
    if (i % 2 == 1) sg += kWg[i / 2] * (fl + fr);
  }
  k15 = sk * h;
  err = std::abs((sk - sg) * h);
}

struct Seg {
  double err, a, b, val;
  bool operator<(const Seg& o) const { return err < o.err; }
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     int max_panels) {
  QuadResult out;
  if (a == b) return out;
  const double min_width = std::abs(b - a) * 0x1p-50;

  double v, e;
  panel(f, a, b, v, e);
  out.panels = 1;
  std::priority_queue<Seg> segs;
  segs.push({e, a, b, v});
  double toterr = e;
  while (toterr > abs_tol && out.panels + 1 < max_panels &&
         segs.top().b - segs.top().a > 2.0 * min_width) {
    const Seg s = segs.top();
    segs.pop();
    const double m = 0.5 * (s.a + s.b);
    double v1, e1, v2, e2;
    panel(f, s.a, m, v1, e1);
    panel(f, m, s.b, v2, e2);
    out.panels += 2;
    toterr += e1 + e2 - s.err;
    segs.push({e1, s.a, m, v1});
    segs.push({e2, m, s.b, v2});
  }

  // final sums straight from the segment list, largest contributions last
  std::vector<Seg> flat;
  flat.reserve(segs.size());
  while (!segs.empty()) {
    flat.push_back(segs.top());
    segs.pop();
  }
  for (auto it = flat.rbegin(); it != flat.rend(); ++it) {
    out.value += it->val;
    out.error += it->err;
  }
  out.converged = out.error <= abs_tol;
  return out;
}

}  // namespace qwalk
