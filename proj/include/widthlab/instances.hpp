#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "widthlab/setfn.hpp"

// Generators for the named benchmark functions, the hard query-lower-bound
// families, auction instances, and the seeded random corpus.
//
// Elements are 0-based throughout.

namespace widthlab {

// 0 on sets of size <= 1, otherwise 1.
SymmetricFunction threshold_any_two(int m);

// t unit-weight pairs {i, i + t} over m = 2t elements.
HypergraphFunction pair_matching(int t);

// 0 on the empty set, 2 on the full set, 1 otherwise.
SymmetricFunction symmetric_two_level(int m);

// All C(m,2) unit-weight pairs; f(S) = C(|S|, 2).
HypergraphFunction all_pairs(int m);

// Cardinality-plus-special-set family used by the maximization gap
// experiments: f depends only on |S| and whether the special set R is fully
// contained. D = d + 1, |R| = c1*D + 1.
struct HardCmParams {
  int d = 1;
  int c1 = 1;
  int c2 = 1;
  int m = 0;
  mask_t r = 0;  // defaults to the top c1*(d+1)+1 indices when 0

  int big_d() const { return d + 1; }
  int r_size() const { return c1 * big_d() + 1; }
};

class HardCmFunction final : public SetFunction {
 public:
  explicit HardCmFunction(const HardCmParams& p);

  const HardCmParams& params() const { return params_; }
  mask_t special_set() const { return params_.r; }

  // (value on the best R-avoiding set, value on the best R-containing set)
  // at cardinality (c1+c2)*D, straight from the branch formula.
  std::pair<double, double> gap_values_at_opt_size() const;

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<HardCmFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override;

 private:
  HardCmParams params_;
};

// Welfare-maximization variant: one valuation per agent, each with its own
// disjoint special set R_i; m = n*(c1+c2)*D.
struct HardWmParams {
  int d = 1;
  int c1 = 1;
  int c2 = 1;
  int n = 2;

  int big_d() const { return d + 1; }
  int r_size() const { return c1 * big_d() + 1; }
  int m() const { return n * (c1 + c2) * big_d(); }
};

class HardWmFunction final : public SetFunction {
 public:
  HardWmFunction(GroundSet g, int d, int c1, int c2, mask_t r);

  mask_t special_set() const { return r_; }
  int d() const { return d_; }
  int c1() const { return c1_; }
  int c2() const { return c2_; }

  std::unique_ptr<SetFunction> clone() const override {
    return std::make_unique<HardWmFunction>(*this);
  }

 protected:
  double do_eval(mask_t s) const override;

 private:
  int d_, c1_, c2_;
  mask_t r_;
};

std::vector<HardWmFunction> hard_wm_instance(const HardWmParams& p);

// Projective plane PG(2, q) over the prime field F_q: q^2+q+1 points and
// lines, every line has q+1 points, any two lines meet in one point.
struct ProjectivePlane {
  int q = 0;
  int n_points = 0;             // also the number of lines
  std::vector<mask_t> lines;    // point-set of each line

  // Player i wants exactly line i (single-minded, value 1).
  std::vector<HypergraphFunction> valuations() const;
};

ProjectivePlane projective_plane_instance(int q);

// Two-player stability-gap instance for the single-bid auction over
// m = d + 1 items: player 0 holds d unit pairs {0, i}; player 1 wants item 0
// alone at value d/(d+1) + epsilon.
std::vector<HypergraphFunction> single_bid_pos_instance(int d, double epsilon);

enum class RandomStyle { kNonnegHypergraph, kMaxOfAdditive, kCoverage, kMixed };

RandomStyle random_style_from_name(const std::string& name);
std::string random_style_name(RandomStyle style);

// Deterministic in (m, seed, style); normalized, monotone, integer-valued.
ExplicitFunction random_monotone(int m, std::uint64_t seed, RandomStyle style);

}  // namespace widthlab
