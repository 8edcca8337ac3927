#include "lp.hpp"

#include <cstddef>

namespace widthlab::lp {

Result maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                const std::vector<double>& c, double tol, int max_pivots) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(c.size());

  // Tableau: rows x (cols + rows + 1); slack basis. Last column is b, last
  // row is the (negated) objective.
  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(cols + rows + 1, 0.0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1.0;
    t[i][cols + rows] = b[i];
  }
  for (int j = 0; j < cols; ++j) t[rows][j] = -c[j];

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  for (int pivots = 0; pivots < max_pivots; ++pivots) {
    // Bland: entering = lowest-index column with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < cols + rows; ++j)
      if (t[rows][j] < -tol) {
        enter = j;
        break;
      }
    if (enter < 0) return {true, t[rows][cols + rows]};

    // Ratio test; Bland tie-break on the basis variable index.
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= tol) continue;
      double ratio = t[i][cols + rows] / t[i][enter];
      if (leave < 0 || ratio < best_ratio - tol ||
          (ratio < best_ratio + tol && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return {false, 0.0};  // unbounded

    double piv = t[leave][enter];
    for (double& x : t[leave]) x /= piv;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  return {false, 0.0};
}

}  // namespace widthlab::lp
