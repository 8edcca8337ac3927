#pragma once

#include <optional>
#include <vector>

#include "widthlab/setfn.hpp"

// Constraint-homogeneous approximators: greedy block partitions, candidate
// scaled block functions, and pointwise-approximation search/verification.

namespace widthlab {

// H_i = 1 + 1/2 + ... + 1/i.
double harmonic(int i);

// Greedy partition of `universe` into blocks of size <= block_bound: each
// step takes the set with the largest value (ties: larger set, then smaller
// mask), so for monotone f every non-final block is full-size.
struct BlockPartition {
  mask_t universe = 0;
  int block_bound = 0;
  std::vector<mask_t> blocks;
  std::vector<double> values;  // f(Q_i) recorded at construction
};

BlockPartition greedy_partition(const SetFunction& f, int block_bound,
                                std::optional<mask_t> universe = std::nullopt);

// CH function over the blocks inside `block_union` (which must be a union of
// whole blocks) with base value f(partition universe) / (beta * |union|).
CHFunction ch_candidate(const SetFunction& f, const BlockPartition& partition,
                        mask_t block_union, double beta);

// Both pointwise conditions, exact up to eps: beta * g(S) >= f(S) and
// g(T) <= f(T) for every T. m <= 16.
bool verify_pointwise(const SetFunction& f, const SetFunction& g, mask_t s, double beta,
                      double eps = kDefaultEps);

enum class ApproxMode { kSaw, kSmwSuperadditive };

struct PointwiseCertificate {
  mask_t target_set = 0;
  ApproxMode mode = ApproxMode::kSaw;
  int d = 0;
  double guarantee = 0.0;   // harmonic bound for this mode, d, and |S|
  double beta = 0.0;        // level actually certified
  bool verified = false;    // beta <= guarantee and both conditions re-checked
  std::optional<CHFunction> approximator;
};

// Harmonic guarantee for a target set of the given size: 2 H_ceil(size/2d)
// in saw mode, (d+1) H_ceil(size/(d+1)) in the superadditive mode.
double pointwise_guarantee(ApproxMode mode, int d, int target_size);

// Searches scaled block functions over every block-aligned union of the
// greedy partition of S (restricted to S, spanned back by evaluating blocks
// only inside S). Returns the first candidate meeting the guarantee; when
// none does, returns an unverified certificate carrying the best level
// found. If `width_certified` is set the caller asserts the input is in
// class, and a failed search raises InternalError instead.
PointwiseCertificate find_pointwise_approximator(const SetFunction& f, int d, mask_t s,
                                                 ApproxMode mode, bool width_certified = false,
                                                 double eps = kDefaultEps);

}  // namespace widthlab
