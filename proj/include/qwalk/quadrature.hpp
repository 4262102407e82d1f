#pragma once

#include <functional>

namespace qwalk {

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated panel error estimate
  int panels = 0;
  bool converged = true;
  double operator*() const { return value; }
};

// Adaptive Gauss-Kronrod 7-15 on [a, b]: the segment with the largest
// |K15 - G7| estimate is bisected until the estimates sum below abs_tol or a
// resource limit (panel count, width floor) stops refinement. Handles
// sqrt-type integrable endpoint behaviour at the cost of extra panels.
QuadResult integrate(const Integrand& f, double a, double b,
                     double abs_tol = 1e-8, int max_panels = 200000);

}  // namespace qwalk
