#pragma once

#include <vector>

// Tiny dense primal simplex for the feasibility questions in this project:
//   maximize c.x  subject to  A.x <= b, x >= 0,  with b >= 0.
// The all-slack basis is feasible, so no phase one is needed. Bland's rule
// guarantees termination.

namespace widthlab::lp {

struct Result {
  bool ok = false;  // false: iteration cap or unbounded
  double value = 0.0;
};

Result maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                const std::vector<double>& c, double tol = 1e-9, int max_pivots = 200000);

}  // namespace widthlab::lp
