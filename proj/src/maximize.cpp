#include "widthlab/maximize.hpp"

#include <cmath>
#include <string>

namespace widthlab {

std::pair<mask_t, GreedyTrace> batched_greedy_constrained(const SetFunction& f, int k, int d) {
  const int m = f.m();
  if (k < 1 || k > m) throw std::invalid_argument("greedy: k must be in [1, m]");
  if (d < 0) throw std::invalid_argument("greedy: width parameter must be >= 0");

  const std::uint64_t q0 = f.query_count();
  GreedyTrace trace;
  mask_t chosen = 0;
  while (popcount(chosen) < k) {
    const int s = std::min(d + 1, k - popcount(chosen));
    const double base = f.eval(chosen);
    const mask_t avail = f.ground().full() & ~chosen;
    bool have = false;
    double best_gain = 0.0;
    mask_t best_batch = 0;
    for_each_subset_up_to_size(avail, s, [&](mask_t t) {
      const double gain = f.eval(chosen | t) - base;
      if (!have || gain > best_gain || (gain == best_gain && t < best_batch)) {
        have = true;
        best_gain = gain;
        best_batch = t;
      }
    });
    chosen |= best_batch;
    trace.steps.push_back({best_batch, -1, best_gain});
  }
  trace.final_value = f.eval(chosen);
  trace.total_queries = f.query_count() - q0;
  return {chosen, trace};
}

std::pair<mask_t, double> brute_force_constrained(const SetFunction& f, int k) {
  const int m = f.m();
  if (k < 1 || k > m) throw std::invalid_argument("brute force: k must be in [1, m]");
  double work = 0.0;
  for (int j = 0; j <= k; ++j) {
    double binom = 1.0;
    for (int i = 0; i < j; ++i) binom = binom * (m - i) / (i + 1);
    work += binom;
  }
  if (work > 5e7) throw ResourceLimitError("brute force: too many candidate sets");

  bool have = false;
  double best_value = 0.0;
  mask_t best_set = 0;
  auto consider = [&](mask_t s) {
    const double v = f.eval(s);
    if (!have || v > best_value || (v == best_value && s < best_set)) {
      have = true;
      best_value = v;
      best_set = s;
    }
  };
  consider(0);
  for_each_subset_up_to_size(f.ground().full(), k, consider);
  return {best_set, best_value};
}

std::pair<Allocation, GreedyTrace> batched_greedy_welfare(const std::vector<const SetFunction*>& fs,
                                                          int d) {
  if (fs.empty()) throw std::invalid_argument("welfare greedy: no agents");
  const int m = fs[0]->m();
  for (const auto* f : fs)
    if (!f || f->m() != m) throw std::invalid_argument("welfare greedy: mismatched ground sets");
  if (d < 0) throw std::invalid_argument("welfare greedy: width parameter must be >= 0");

  std::uint64_t q0 = 0;
  for (const auto* f : fs) q0 += f->query_count();

  const int n = static_cast<int>(fs.size());
  GreedyTrace trace;
  Allocation alloc;
  alloc.parts.assign(n, 0);
  mask_t assigned = 0;
  const mask_t full = fs[0]->ground().full();

  while (assigned != full) {
    const int s = std::min(d + 1, m - popcount(assigned));
    const mask_t avail = full & ~assigned;
    bool have = false;
    double best_gain = 0.0;
    int best_agent = 0;
    mask_t best_batch = 0;
    for (int j = 0; j < n; ++j) {
      const double base = fs[j]->eval(alloc.parts[j]);
      for_each_subset_up_to_size(avail, s, [&](mask_t t) {
        const double gain = fs[j]->eval(alloc.parts[j] | t) - base;
        if (!have || gain > best_gain ||
            (gain == best_gain && (j < best_agent || (j == best_agent && t < best_batch)))) {
          have = true;
          best_gain = gain;
          best_agent = j;
          best_batch = t;
        }
      });
    }
    alloc.parts[best_agent] |= best_batch;
    assigned |= best_batch;
    trace.steps.push_back({best_batch, best_agent, best_gain});
  }

  alloc.welfare = recompute_welfare(fs, alloc);
  trace.final_value = alloc.welfare;
  std::uint64_t q1 = 0;
  for (const auto* f : fs) q1 += f->query_count();
  trace.total_queries = q1 - q0;
  return {alloc, trace};
}

std::pair<Allocation, double> brute_force_welfare(const std::vector<const SetFunction*>& fs) {
  if (fs.empty()) throw std::invalid_argument("welfare brute force: no agents");
  const int n = static_cast<int>(fs.size());
  const int m = fs[0]->m();
  const double assignments = std::pow(static_cast<double>(n), m);
  if (assignments > 1e8) throw ResourceLimitError("welfare brute force: n^m too large");

  std::vector<std::vector<double>> tables;
  tables.reserve(n);
  for (const auto* f : fs) tables.push_back(to_table(*f));

  std::vector<int> digits(m, 0);
  std::vector<mask_t> parts(n, 0);
  Allocation best;
  best.parts.assign(n, 0);
  double best_welfare = -1.0;
  while (true) {
    std::fill(parts.begin(), parts.end(), 0);
    for (int i = 0; i < m; ++i) parts[digits[i]] |= bit(i);
    double welfare = 0.0;
    for (int j = 0; j < n; ++j) welfare += tables[j][parts[j]];
    if (welfare > best_welfare) {
      best_welfare = welfare;
      best.parts = parts;
    }
    int pos = 0;
    while (pos < m && ++digits[pos] == n) digits[pos++] = 0;
    if (pos == m) break;
  }
  best.welfare = best_welfare;
  return {best, best_welfare};
}

double recompute_welfare(const std::vector<const SetFunction*>& fs, const Allocation& alloc) {
  if (fs.size() != alloc.parts.size())
    throw std::invalid_argument("welfare: allocation size mismatch");
  double w = 0.0;
  for (std::size_t j = 0; j < fs.size(); ++j) w += fs[j]->eval(alloc.parts[j]);
  return w;
}

}  // namespace widthlab
