#include "widthlab/widths.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "lp.hpp"

namespace widthlab {

namespace {

void require_m(const SetFunction& f, int cap, const char* who) {
  if (f.m() > cap)
    throw ResourceLimitError(std::string(who) + ": m=" + std::to_string(f.m()) +
                             " exceeds the exact-enumeration cap " + std::to_string(cap));
}

int env_threads() {
  const char* s = std::getenv("WIDTHLAB_THREADS");
  if (!s) return 1;
  int n = std::atoi(s);
  if (n < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && n > static_cast<int>(hw)) n = static_cast<int>(hw);
  return n;
}

// Dense table plus per-element margin arrays margins[v][C] = f(v | C),
// valid for contexts C not containing v.
struct WidthContext {
  int m;
  mask_t full;
  std::vector<double> table;
  std::vector<std::vector<double>> margins;

  explicit WidthContext(const SetFunction& f)
      : m(f.m()), full(f.ground().full()), table(to_table(f)) {
    margins.assign(m, {});
    for (int v = 0; v < m; ++v) {
      auto& mg = margins[v];
      mg.assign(table.size(), 0.0);
      for (mask_t c = 0; c < table.size(); ++c)
        if (!(c & bit(v))) mg[c] = table[c | bit(v)] - table[c];
    }
  }
};

// First (v, S) certifying that t is supermodular, in (v asc, S asc) order.
std::optional<SupermodularWitness> find_sm_witness(const WidthContext& ctx, mask_t t, double eps) {
  if (t == 0) return std::nullopt;  // no proper subset family to dominate
  for (int v = 0; v < ctx.m; ++v) {
    if (t & bit(v)) continue;
    const auto& mg = ctx.margins[v];
    const mask_t scope = ctx.full & ~t & ~bit(v);
    bool found = false;
    mask_t witness_s = 0;
    for_each_submask(scope, [&](mask_t s) {
      if (found) return;
      const double lhs = mg[s | t];
      bool dominated = false;
      for_each_proper_submask(t, [&](mask_t tp) {
        if (dominated) return;
        if (lhs <= mg[s | tp] + eps) dominated = true;
      });
      if (!dominated) {
        found = true;
        witness_s = s;
      }
    });
    if (found) return SupermodularWitness{t, witness_s, v};
  }
  return std::nullopt;
}

std::optional<SuperadditiveWitness> find_sa_witness(const WidthContext& ctx, mask_t t, double eps) {
  if (t == 0) return std::nullopt;
  const mask_t scope = ctx.full & ~t;
  std::optional<SuperadditiveWitness> out;
  for_each_submask(scope, [&](mask_t s) {
    if (out || s == 0) return;
    const double lhs = ctx.table[s | t] - ctx.table[t];
    bool dominated = false;
    for_each_proper_submask(t, [&](mask_t tp) {
      if (dominated) return;
      if (lhs <= ctx.table[s | tp] - ctx.table[tp] + eps) dominated = true;
    });
    if (!dominated) out = SuperadditiveWitness{t, s};
  });
  return out;
}

// Largest witnessed size over all candidate sets T, searched by ascending
// cardinality then ascending mask. The per-size scan parallelizes over
// chunks; the merge keeps the smallest-mask witness of the top size.
template <typename FindFn, typename Witness>
std::pair<int, std::optional<Witness>> width_scan(const WidthContext& ctx, int max_size,
                                                  FindFn&& find, double eps) {
  int limit = ctx.m - 1;  // the full set never has the required outside witness
  if (max_size >= 0 && max_size < limit) limit = max_size;
  int best_size = 0;
  std::optional<Witness> best;
  const int threads = env_threads();

  for (int size = 1; size <= limit; ++size) {
    std::vector<mask_t> candidates;
    for_each_subset_of_size(ctx.full, size, [&](mask_t t) { candidates.push_back(t); });
    std::sort(candidates.begin(), candidates.end());

    std::optional<Witness> hit;
    if (threads <= 1 || candidates.size() < 64) {
      for (mask_t t : candidates) {
        if (auto w = find(ctx, t, eps)) {
          hit = w;
          break;
        }
      }
    } else {
      std::vector<std::optional<Witness>> results(candidates.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= candidates.size()) break;
          results[i] = find(ctx, candidates[i], eps);
        }
      };
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      for (auto& r : results)
        if (r) {
          hit = r;
          break;
        }
    }
    if (hit) {
      best_size = size;
      best = hit;
    }
  }
  return {best_size, best};
}

}  // namespace

mask_t dep_plus(const SetFunction& f, int u, double eps) {
  require_m(f, 14, "dep_plus");
  if (u < 0 || u >= f.m()) throw std::invalid_argument("dep_plus: element out of range");
  const auto table = to_table(f);
  const mask_t full = f.ground().full();
  const mask_t scope = full & ~bit(u);
  mask_t dep = 0;
  // v aids u iff some context containing v strictly raises u's margin.
  for_each_submask(scope, [&](mask_t c) {
    if (c == 0) return;
    const double mu = table[c | bit(u)] - table[c];
    for (mask_t rest = c; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (dep & bit(v)) continue;
      const mask_t without = c ^ bit(v);
      if (mu > table[without | bit(u)] - table[without] + eps) dep |= bit(v);
    }
  });
  return dep;
}

int supermodular_degree(const SetFunction& f, double eps) {
  require_m(f, 14, "supermodular_degree");
  int best = 0;
  for (int u = 0; u < f.m(); ++u) best = std::max(best, popcount(dep_plus(f, u, eps)));
  return best;
}

std::optional<SupermodularWitness> supermodular_set_witness(const SetFunction& f, mask_t t,
                                                            double eps) {
  require_m(f, 12, "supermodular_set_witness");
  if (!f.ground().valid_mask(t)) throw std::invalid_argument("mask outside the ground set");
  WidthContext ctx(f);
  return find_sm_witness(ctx, t, eps);
}

std::optional<SuperadditiveWitness> superadditive_set_witness(const SetFunction& f, mask_t t,
                                                              double eps) {
  require_m(f, 12, "superadditive_set_witness");
  if (!f.ground().valid_mask(t)) throw std::invalid_argument("mask outside the ground set");
  WidthContext ctx(f);
  return find_sa_witness(ctx, t, eps);
}

std::pair<int, std::optional<SupermodularWitness>> supermodular_width(const SetFunction& f,
                                                                      double eps, int max_size) {
  require_m(f, 12, "supermodular_width");
  WidthContext ctx(f);
  return width_scan<decltype(find_sm_witness)&, SupermodularWitness>(ctx, max_size,
                                                                     find_sm_witness, eps);
}

std::pair<int, std::optional<SuperadditiveWitness>> superadditive_width(const SetFunction& f,
                                                                        double eps, int max_size) {
  require_m(f, 12, "superadditive_width");
  WidthContext ctx(f);
  return width_scan<decltype(find_sa_witness)&, SuperadditiveWitness>(ctx, max_size,
                                                                      find_sa_witness, eps);
}

bool verify_supermodular_witness(const SetFunction& f, mask_t t, const SupermodularWitness& w,
                                 double eps) {
  if (t == 0 || w.v < 0 || w.v >= f.m() || (t & bit(w.v))) return false;
  const double lhs = margin(f, bit(w.v), w.s | t);
  bool ok = true;
  for_each_proper_submask(t, [&](mask_t tp) {
    if (!ok) return;
    if (lhs <= margin(f, bit(w.v), w.s | tp) + eps) ok = false;
  });
  return ok;
}

bool verify_superadditive_witness(const SetFunction& f, mask_t t, const SuperadditiveWitness& w,
                                  double eps) {
  if (t == 0 || w.s == 0 || (w.s & t)) return false;
  const double lhs = margin(f, w.s, t);
  bool ok = true;
  for_each_proper_submask(t, [&](mask_t tp) {
    if (!ok) return;
    if (lhs <= margin(f, w.s, tp) + eps) ok = false;
  });
  return ok;
}

bool is_d_scopic_submodular(const SetFunction& f, int d, double eps) {
  require_m(f, 10, "is_d_scopic_submodular");
  if (d < 0) throw std::invalid_argument("scope parameter must be >= 0");
  WidthContext ctx(f);
  for (int v = 0; v < ctx.m; ++v) {
    const auto& mg = ctx.margins[v];
    const mask_t scope = ctx.full & ~bit(v);
    bool bad = false;
    for_each_submask(scope, [&](mask_t t) {
      if (bad) return;
      const double lhs = mg[t];
      for_each_submask(t, [&](mask_t s) {
        if (bad) return;
        // T' = T \ S is admissible outright when small enough.
        if (popcount(t & ~s) <= d) return;
        bool covered = false;
        for (int k = 0; k <= d && !covered; ++k) {
          for_each_subset_of_size(t & ~s, k, [&](mask_t tp) {
            if (covered) return;
            if (mg[s | tp] + eps >= lhs) covered = true;
          });
        }
        if (!covered) bad = true;
      });
    });
    if (bad) return false;
  }
  return true;
}

bool is_d_scopic_subadditive(const SetFunction& f, int d, double eps) {
  require_m(f, 10, "is_d_scopic_subadditive");
  if (d < 0) throw std::invalid_argument("scope parameter must be >= 0");
  WidthContext ctx(f);
  bool bad = false;
  for_each_submask(ctx.full, [&](mask_t t) {
    if (bad || popcount(t) <= d) return;  // T' = T is admissible
    const mask_t comp = ctx.full & ~t;
    for_each_submask(comp, [&](mask_t s) {
      if (bad || s == 0) return;
      const double lhs = ctx.table[s | t] - ctx.table[t];
      bool covered = false;
      for (int k = 0; k <= d && !covered; ++k) {
        for_each_subset_of_size(t, k, [&](mask_t tp) {
          if (covered) return;
          if (ctx.table[s | tp] - ctx.table[tp] + eps >= lhs) covered = true;
        });
      }
      if (!covered) bad = true;
    });
  });
  return !bad;
}

std::optional<int> ph_level(const ExplicitFunction& f, double eps) {
  if (f.m() > 20) throw ResourceLimitError("ph_level: m > 20");
  std::vector<double> h = f.table();
  for (int d = 0; d < f.m(); ++d)
    for (mask_t s = 0; s < h.size(); ++s)
      if (s & bit(d)) h[s] -= h[s ^ bit(d)];
  int level = 0;
  for (mask_t s = 1; s < h.size(); ++s) {
    if (h[s] < -eps) return std::nullopt;
    if (h[s] > eps) level = std::max(level, popcount(s));
  }
  return level;
}

bool mph_level_at_most(const ExplicitFunction& f, int d, double tol) {
  require_m(f, 8, "mph_level_at_most");
  if (d < 1) throw std::invalid_argument("mph_level_at_most: level must be >= 1");
  const auto& table = f.table();
  const int m = f.m();
  const mask_t full = f.ground().full();
  for (double v : table)
    if (v < -tol) return false;  // a nonnegative component can never stay below f

  for (mask_t s = 1; s <= full; ++s) {
    if (table[s] <= tol) continue;  // the zero weighting suffices

    // Candidate edges: nonempty subsets of S with size <= d.
    std::vector<mask_t> edges;
    for_each_subset_up_to_size(s, d, [&](mask_t e) { edges.push_back(e); });
    std::sort(edges.begin(), edges.end());

    // Tightest cap per within-S trace: b(U) = min f over sets meeting S in U.
    const mask_t outside = full & ~s;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    bool infeasible = false;
    for_each_submask(s, [&](mask_t u) {
      if (u == 0 || infeasible) return;
      double cap = table[u];
      for_each_submask(outside, [&](mask_t w) { cap = std::min(cap, table[u | w]); });
      if (cap < -tol) {
        infeasible = true;
        return;
      }
      std::vector<double> row(edges.size(), 0.0);
      for (std::size_t j = 0; j < edges.size(); ++j)
        if (subset_of(edges[j], u)) row[j] = 1.0;
      a.push_back(std::move(row));
      b.push_back(std::max(cap, 0.0));
    });
    if (infeasible) return false;

    std::vector<double> c(edges.size(), 0.0);
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (subset_of(edges[j], s)) c[j] = 1.0;  // all candidates lie inside S

    auto res = lp::maximize(a, b, c);
    if (!res.ok) throw SolverFailureError("mph_level_at_most: simplex did not converge");
    if (res.value + tol < table[s]) return false;
  }
  (void)m;
  return true;
}

WidthReport compute_width_report(const SetFunction& f, const WidthReportOptions& opts) {
  WidthReport r;
  r.dep_plus.resize(f.m());
  for (int u = 0; u < f.m(); ++u) {
    r.dep_plus[u] = dep_plus(f, u, opts.eps);
    r.sd = std::max(r.sd, popcount(r.dep_plus[u]));
  }
  auto [smw, smw_w] = supermodular_width(f, opts.eps, opts.max_size);
  r.smw = smw;
  r.smw_witness = smw_w;
  auto [saw, saw_w] = superadditive_width(f, opts.eps, opts.max_size);
  r.saw = saw;
  r.saw_witness = saw_w;
  if (opts.want_ph && f.m() <= 20) {
    ExplicitFunction ex(f.ground(), to_table(f));
    r.ph_computed = true;
    r.ph_level = ph_level(ex, opts.eps);
  }
  return r;
}

}  // namespace widthlab
