#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "widthlab/setfn.hpp"

// Exact complementarity measures: supermodular degree, supermodular and
// superadditive widths (with certifying witnesses), the d-scopic relaxations,
// the positive-hypergraph level, and a small-scale hierarchy membership test
// for maxima of positive hypergraphs.

namespace widthlab {

// T complements item v given context S: f(v | S ∪ T) beats f(v | S ∪ T')
// strictly for every proper T' ⊊ T.
struct SupermodularWitness {
  mask_t t = 0;
  mask_t s = 0;
  int v = -1;
};

// T complements the disjoint set S: f(S | T) beats f(S | T') strictly for
// every proper T' ⊊ T.
struct SuperadditiveWitness {
  mask_t t = 0;
  mask_t s = 0;
};

struct WidthReport {
  int sd = 0;
  std::vector<mask_t> dep_plus;  // per-element positive dependency sets
  int smw = 0;
  std::optional<SupermodularWitness> smw_witness;
  int saw = 0;
  std::optional<SuperadditiveWitness> saw_witness;
  // Positive-hypergraph level, or nullopt when some Moebius weight is
  // negative. Only meaningful when ph_computed is set.
  bool ph_computed = false;
  std::optional<int> ph_level;
};

// Elements v whose presence strictly raises u's margin in some context.
// Exhaustive over contexts; m <= 14.
mask_t dep_plus(const SetFunction& f, int u, double eps = kDefaultEps);

// max_u |dep_plus(u)|; m <= 14.
int supermodular_degree(const SetFunction& f, double eps = kDefaultEps);

// First witness in deterministic order (v ascending, then context mask
// ascending), or nullopt. The empty set is never supermodular. m <= 12.
std::optional<SupermodularWitness> supermodular_set_witness(const SetFunction& f, mask_t t,
                                                            double eps = kDefaultEps);

// Largest supermodular set size (0 if none), plus a witness of that size.
// Enumerates T by ascending cardinality, then ascending mask; m <= 12.
std::pair<int, std::optional<SupermodularWitness>> supermodular_width(
    const SetFunction& f, double eps = kDefaultEps, int max_size = -1);

std::optional<SuperadditiveWitness> superadditive_set_witness(const SetFunction& f, mask_t t,
                                                              double eps = kDefaultEps);

std::pair<int, std::optional<SuperadditiveWitness>> superadditive_width(
    const SetFunction& f, double eps = kDefaultEps, int max_size = -1);

// Re-check a witness against the defining strict inequalities.
bool verify_supermodular_witness(const SetFunction& f, mask_t t, const SupermodularWitness& w,
                                 double eps = kDefaultEps);
bool verify_superadditive_witness(const SetFunction& f, mask_t t, const SuperadditiveWitness& w,
                                  double eps = kDefaultEps);

// Relaxed diminishing-returns conditions; exact enumeration, m <= 10.
bool is_d_scopic_submodular(const SetFunction& f, int d, double eps = kDefaultEps);
bool is_d_scopic_subadditive(const SetFunction& f, int d, double eps = kDefaultEps);

// Largest hyperedge size in the Moebius representation when all weights are
// nonnegative; nullopt when a weight is negative. 0 for the zero function.
// m <= 20.
std::optional<int> ph_level(const ExplicitFunction& f, double eps = kDefaultEps);

// True iff f is a pointwise maximum of positive-hypergraph functions whose
// edges have size <= d: for every S some nonnegative weighting on subsets of
// S attains f(S) while staying below f everywhere. One linear-feasibility
// problem per S; m <= 8.
bool mph_level_at_most(const ExplicitFunction& f, int d, double tol = 1e-7);

struct WidthReportOptions {
  double eps = kDefaultEps;
  bool want_ph = true;
  int max_size = -1;  // cap on witness sizes searched (-1: full)
};

WidthReport compute_width_report(const SetFunction& f, const WidthReportOptions& opts = {});

}  // namespace widthlab
