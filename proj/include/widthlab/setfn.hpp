#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "widthlab/bits.hpp"
#include "widthlab/errors.hpp"

// Value-oracle set functions over a ground set [m], with query accounting.

namespace widthlab {

inline constexpr double kDefaultEps = 1e-9;

// Masks are 64-bit, so oracle-backed functions run up to m = 63. Explicit
// tables stop at m = 24 (2^24 doubles).
inline constexpr int kMaxGroundSize = 63;
inline constexpr int kMaxExplicitGroundSize = 24;

struct GroundSet {
  int m = 0;

  GroundSet() = default;
  explicit GroundSet(int m_) : m(m_) {
    if (m < 1 || m > kMaxGroundSize)
      throw std::invalid_argument("ground set size must be in [1, 63], got " +
                                  std::to_string(m));
  }

  mask_t full() const { return full_mask(m); }
  bool valid_mask(mask_t s) const { return subset_of(s, full()); }
};

// Oracle contract: eval is deterministic, eval(0) == 0, each eval call
// increments the query counter by exactly one. Evaluation is const and safe
// for concurrent readers; the counter is atomic.
class SetFunction {
 public:
  explicit SetFunction(GroundSet g) : ground_(g) {}
  SetFunction(const SetFunction& o) : ground_(o.ground_), queries_(o.queries_.load()) {}
  SetFunction& operator=(const SetFunction& o) {
    ground_ = o.ground_;
    queries_.store(o.queries_.load());
    return *this;
  }
  virtual ~SetFunction() = default;

  const GroundSet& ground() const { return ground_; }
  int m() const { return ground_.m; }

  double eval(mask_t s) const {
    if (!ground_.valid_mask(s))
      throw std::invalid_argument("mask has bits outside the ground set");
    queries_.fetch_add(1, std::memory_order_relaxed);
    return do_eval(s);
  }
  double operator()(mask_t s) const { return eval(s); }

  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_query_count() const { queries_.store(0, std::memory_order_relaxed); }

  virtual std::unique_ptr<SetFunction> clone() const = 0;

 protected:
  virtual double do_eval(mask_t s) const = 0;

 private:
  GroundSet ground_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// f(S | T) = f(S ∪ T) - f(T); exactly two oracle queries.
inline double margin(const SetFunction& f, mask_t s, mask_t t) {
  return f.eval(s | t) - f.eval(t);
}

// Dense 2^m table, index = mask.
class ExplicitFunction final : public SetFunction {
 public:
  ExplicitFunction(GroundSet g, std::vector<double> table, bool require_monotone = false);

  const std::vector<double>& table() const { return table_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<ExplicitFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override { return table_[s]; }

 private:
  std::vector<double> table_;
};

// f(S) = sum of weights of hyperedges contained in S. Weights may be
// negative (general Moebius output); the empty edge is not allowed.
class HypergraphFunction final : public SetFunction {
 public:
  HypergraphFunction(GroundSet g, std::map<mask_t, double> weights);

  const std::map<mask_t, double>& weights() const { return weights_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<HypergraphFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override {
    double v = 0.0;
    for (const auto& [edge, w] : weights_)
      if (subset_of(edge, s)) v += w;
    return v;
  }

 private:
  std::map<mask_t, double> weights_;
};

// f(S) = levels[|S|].
class SymmetricFunction final : public SetFunction {
 public:
  SymmetricFunction(GroundSet g, std::vector<double> levels, bool require_monotone = false);

  const std::vector<double>& levels() const { return levels_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<SymmetricFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override { return levels_[popcount(s)]; }

 private:
  std::vector<double> levels_;
};

// Constraint-homogeneous function: disjoint blocks of size <= block_bound,
// f(S) = base * sum of |Q_i| over blocks fully inside S.
class CHFunction final : public SetFunction {
 public:
  CHFunction(GroundSet g, double base, std::vector<mask_t> blocks, int block_bound);

  double base_value() const { return base_; }
  const std::vector<mask_t>& blocks() const { return blocks_; }
  int block_bound() const { return block_bound_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<CHFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override {
    int covered = 0;
    for (mask_t q : blocks_)
      if (subset_of(q, s)) covered += popcount(q);
    return base_ * covered;
  }

 private:
  double base_ = 0.0;
  std::vector<mask_t> blocks_;
  int block_bound_ = 0;
};

// Pointwise maximum of component oracles.
class MaxFunction final : public SetFunction {
 public:
  MaxFunction(GroundSet g, std::vector<std::unique_ptr<SetFunction>> components);
  MaxFunction(const MaxFunction& o);
  MaxFunction& operator=(const MaxFunction& o);

  const std::vector<std::unique_ptr<SetFunction>>& components() const { return components_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<MaxFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override;

 private:
  std::vector<std::unique_ptr<SetFunction>> components_;
};

// Materializes the oracle on every mask; 2^m eval calls.
std::vector<double> to_table(const SetFunction& f);

// Inverse zeta transform of an explicit function; the unique h with
// f(S) = sum_{T subseteq S} h(T). Entries with |h| below `drop_tol` are
// omitted (h(empty) is always 0 for a normalized f).
HypergraphFunction mobius_transform(const ExplicitFunction& f, double drop_tol = 1e-12);

// Zeta transform: dense table of a hypergraph function (exact re-summation).
std::vector<double> zeta_table(const HypergraphFunction& h);

bool is_normalized(const SetFunction& f, double eps = kDefaultEps);

// Adjacent-pair monotonicity scan, O(m 2^m).
bool is_monotone(const SetFunction& f, double eps = kDefaultEps);

// Local condition f(v | S ∪ {u}) <= f(v | S); exact for any f. m <= 20.
bool is_submodular(const SetFunction& f, double eps = kDefaultEps);

// All disjoint nonempty pairs; m <= 14.
bool is_subadditive(const SetFunction& f, double eps = kDefaultEps);

// All disjoint nonempty pairs, reversed inequality; m <= 14.
bool is_superadditive(const SetFunction& f, double eps = kDefaultEps);

}  // namespace widthlab
