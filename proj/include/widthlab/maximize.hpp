#pragma once

#include <cstdint>
#include <vector>

#include "widthlab/setfn.hpp"

// Batched greedy maximization under a cardinality constraint and for
// multi-agent welfare, plus the brute-force optima used to certify ratios.

namespace widthlab {

struct GreedyStep {
  mask_t batch = 0;
  int agent = -1;  // -1 for the single-function variant
  double gain = 0.0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  double final_value = 0.0;
  std::uint64_t total_queries = 0;
};

struct Allocation {
  std::vector<mask_t> parts;
  double welfare = 0.0;
};

// Repeatedly adds the batch of size <= min(d+1, k-|S|) with the largest
// margin (ties: smallest mask). Batches are nonempty, so the loop always
// terminates with |S| == k.
std::pair<mask_t, GreedyTrace> batched_greedy_constrained(const SetFunction& f, int k, int d);

// Exact argmax of f over sets of size <= k; ties by smallest mask.
// Enumerates sum_{j<=k} C(m,j) sets.
std::pair<mask_t, double> brute_force_constrained(const SetFunction& f, int k);

// Repeatedly hands the batch-agent pair with the largest margin (ties:
// smaller agent, then smaller mask) until every item is assigned.
std::pair<Allocation, GreedyTrace> batched_greedy_welfare(
    const std::vector<const SetFunction*>& fs, int d);

// Exact optimal partition by full n^m assignment enumeration.
std::pair<Allocation, double> brute_force_welfare(const std::vector<const SetFunction*>& fs);

double recompute_welfare(const std::vector<const SetFunction*>& fs, const Allocation& alloc);

}  // namespace widthlab
