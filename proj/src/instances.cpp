#include "widthlab/instances.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace widthlab {

namespace {

mask_t top_indices(int m, int count) {
  mask_t r = 0;
  for (int i = 0; i < count; ++i) r |= bit(m - 1 - i);
  return r;
}

}  // namespace

SymmetricFunction threshold_any_two(int m) {
  if (m < 2) throw std::invalid_argument("threshold_any_two needs m >= 2");
  std::vector<double> levels(m + 1, 1.0);
  levels[0] = 0.0;
  levels[1] = 0.0;
  return SymmetricFunction(GroundSet(m), std::move(levels));
}

HypergraphFunction pair_matching(int t) {
  if (t < 1) throw std::invalid_argument("pair_matching needs t >= 1");
  std::map<mask_t, double> w;
  for (int i = 0; i < t; ++i) w[bit(i) | bit(i + t)] = 1.0;
  return HypergraphFunction(GroundSet(2 * t), std::move(w));
}

SymmetricFunction symmetric_two_level(int m) {
  if (m < 2) throw std::invalid_argument("symmetric_two_level needs m >= 2");
  std::vector<double> levels(m + 1, 1.0);
  levels[0] = 0.0;
  levels[m] = 2.0;
  return SymmetricFunction(GroundSet(m), std::move(levels));
}

HypergraphFunction all_pairs(int m) {
  if (m < 2) throw std::invalid_argument("all_pairs needs m >= 2");
  std::map<mask_t, double> w;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) w[bit(u) | bit(v)] = 1.0;
  return HypergraphFunction(GroundSet(m), std::move(w));
}

HardCmFunction::HardCmFunction(const HardCmParams& p) : SetFunction(GroundSet(p.m)), params_(p) {
  if (p.d < 0 || p.c1 < 1 || p.c2 < 1) throw std::invalid_argument("hard-cm: need d >= 0, c1, c2 >= 1");
  if (params_.r == 0) params_.r = top_indices(p.m, p.r_size());
  if (popcount(params_.r) != p.r_size())
    throw std::invalid_argument("hard-cm: |R| must equal c1*(d+1)+1");
  if (!ground().valid_mask(params_.r)) throw std::invalid_argument("hard-cm: R outside the ground set");
  if (p.r_size() > p.m) throw std::invalid_argument("hard-cm: ground set smaller than R");
}

double HardCmFunction::do_eval(mask_t mask) const {
  const long long s = popcount(mask);
  const long long d1 = params_.big_d();
  const long long c1 = params_.c1, c2 = params_.c2;
  const bool rin = subset_of(params_.r, mask);
  if (s <= c1 * d1) return static_cast<double>(s / d1);
  if (s <= (c1 + c2) * d1)
    return static_cast<double>(rin ? s - c1 * (d1 - 1) : (s - c1 * d1) / d1 + c1);
  if (s <= (c1 + c2) * d1 + c2 * (d1 - 1))
    return static_cast<double>(rin ? c1 + c2 * d1 : s - (c1 + c2) * (d1 - 1));
  return static_cast<double>(c1 + c2 * d1);
}

std::pair<double, double> HardCmFunction::gap_values_at_opt_size() const {
  const int d1 = params_.big_d();
  const int k = (params_.c1 + params_.c2) * d1;
  if (k > params_.m || k - params_.r_size() > params_.m - params_.r_size())
    throw std::invalid_argument("hard-cm: ground set too small for the gap cardinality");
  // Avoiding set: lowest k non-R indices. Containing set: R plus filler.
  mask_t avoid = 0;
  int need = k;
  for (int i = 0; i < params_.m && need > 0; ++i)
    if (!(params_.r & bit(i))) {
      avoid |= bit(i);
      --need;
    }
  if (need > 0) throw std::invalid_argument("hard-cm: not enough non-special elements");
  mask_t contain = params_.r;
  need = k - popcount(contain);
  for (int i = 0; i < params_.m && need > 0; ++i)
    if (!(contain & bit(i))) {
      contain |= bit(i);
      --need;
    }
  return {do_eval(avoid), do_eval(contain)};
}

HardWmFunction::HardWmFunction(GroundSet g, int d, int c1, int c2, mask_t r)
    : SetFunction(g), d_(d), c1_(c1), c2_(c2), r_(r) {
  if (d < 0 || c1 < 1 || c2 < 1) throw std::invalid_argument("hard-wm: need d >= 0, c1, c2 >= 1");
  if (popcount(r) != c1 * (d + 1) + 1)
    throw std::invalid_argument("hard-wm: |R| must equal c1*(d+1)+1");
  if (!g.valid_mask(r)) throw std::invalid_argument("hard-wm: R outside the ground set");
}

double HardWmFunction::do_eval(mask_t mask) const {
  const long long s = popcount(mask);
  const long long d1 = d_ + 1;
  const long long c1 = c1_, c2 = c2_;
  if (!subset_of(r_, mask))
    return static_cast<double>(s <= c1 * d1 + c2 * d1 * d1 - 1 ? s / d1 : c1 + c2 * d1);
  return static_cast<double>(s <= (c1 + c2) * d1 - 1 ? s - c1 * (d1 - 1) : c1 + c2 * d1);
}

std::vector<HardWmFunction> hard_wm_instance(const HardWmParams& p) {
  if (p.n < 1) throw std::invalid_argument("hard-wm: need n >= 1");
  const int m = p.m();
  const int r = p.r_size();
  if (p.n * r > m) throw std::invalid_argument("hard-wm: special sets do not fit");
  GroundSet g(m);
  std::vector<HardWmFunction> fs;
  fs.reserve(p.n);
  for (int i = 0; i < p.n; ++i) {
    mask_t ri = 0;
    for (int j = 0; j < r; ++j) ri |= bit(m - 1 - i * r - j);
    fs.emplace_back(g, p.d, p.c1, p.c2, ri);
  }
  return fs;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int i = 2; i * i <= q; ++i)
    if (q % i == 0) return false;
  return true;
}

}  // namespace

ProjectivePlane projective_plane_instance(int q) {
  if (!is_prime(q)) throw std::invalid_argument("projective plane: order must be prime");
  const int n = q * q + q + 1;
  if (n > kMaxGroundSize) throw std::invalid_argument("projective plane: too many points for a mask");

  // Monic homogeneous representatives (first nonzero coordinate = 1),
  // enumerated lexicographically; the same list indexes points and lines.
  std::vector<std::array<int, 3>> reps;
  for (int x = 0; x < q && reps.size() < static_cast<std::size_t>(n); ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        std::array<int, 3> v{x, y, z};
        int first = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (first != 1) continue;
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        reps.push_back(v);
      }
  if (reps.size() != static_cast<std::size_t>(n))
    throw InternalError("projective plane: representative count mismatch");

  ProjectivePlane plane;
  plane.q = q;
  plane.n_points = n;
  plane.lines.resize(n, 0);
  for (int li = 0; li < n; ++li)
    for (int pi = 0; pi < n; ++pi) {
      int dot = reps[li][0] * reps[pi][0] + reps[li][1] * reps[pi][1] + reps[li][2] * reps[pi][2];
      if (dot % q == 0) plane.lines[li] |= bit(pi);
    }
  return plane;
}

std::vector<HypergraphFunction> ProjectivePlane::valuations() const {
  std::vector<HypergraphFunction> fs;
  fs.reserve(lines.size());
  for (mask_t line : lines) {
    std::map<mask_t, double> w{{line, 1.0}};
    fs.emplace_back(GroundSet(n_points), std::move(w));
  }
  return fs;
}

std::vector<HypergraphFunction> single_bid_pos_instance(int d, double epsilon) {
  if (d < 1) throw std::invalid_argument("single-bid stability instance needs d >= 1");
  if (epsilon <= 0.0) throw std::invalid_argument("single-bid stability instance needs epsilon > 0");
  GroundSet g(d + 1);
  std::map<mask_t, double> pairs;
  for (int i = 1; i <= d; ++i) pairs[bit(0) | bit(i)] = 1.0;
  std::map<mask_t, double> hub{{bit(0), static_cast<double>(d) / (d + 1) + epsilon}};
  std::vector<HypergraphFunction> fs;
  fs.emplace_back(g, std::move(pairs));
  fs.emplace_back(g, std::move(hub));
  return fs;
}

RandomStyle random_style_from_name(const std::string& name) {
  if (name == "nonneg-hypergraph") return RandomStyle::kNonnegHypergraph;
  if (name == "max-of-additive") return RandomStyle::kMaxOfAdditive;
  if (name == "coverage") return RandomStyle::kCoverage;
  if (name == "mixed") return RandomStyle::kMixed;
  throw std::invalid_argument("unknown random style: " + name);
}

std::string random_style_name(RandomStyle style) {
  switch (style) {
    case RandomStyle::kNonnegHypergraph: return "nonneg-hypergraph";
    case RandomStyle::kMaxOfAdditive: return "max-of-additive";
    case RandomStyle::kCoverage: return "coverage";
    case RandomStyle::kMixed: return "mixed";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

int rint(Rng& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<double> hypergraph_table(Rng& rng, int m) {
  const int edges = rint(rng, m, 2 * m);
  std::map<mask_t, double> w;
  for (int e = 0; e < edges; ++e) {
    const int size = rint(rng, 1, std::min(4, m));
    mask_t edge = 0;
    while (popcount(edge) < size) edge |= bit(rint(rng, 0, m - 1));
    w[edge] += rint(rng, 1, 3);
  }
  return zeta_table(HypergraphFunction(GroundSet(m), std::move(w)));
}

std::vector<double> additive_table(Rng& rng, int m) {
  std::vector<int> values(m);
  for (int& v : values) v = rint(rng, 0, 4);
  std::vector<double> table(std::size_t{1} << m, 0.0);
  for (mask_t s = 1; s < table.size(); ++s) {
    int sum = 0;
    for (mask_t rest = s; rest; rest &= rest - 1) sum += values[std::countr_zero(rest)];
    table[s] = sum;
  }
  return table;
}

std::vector<double> max_tables(const std::vector<std::vector<double>>& parts) {
  std::vector<double> table = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    for (std::size_t s = 0; s < table.size(); ++s) table[s] = std::max(table[s], parts[i][s]);
  return table;
}

std::vector<double> coverage_table(Rng& rng, int m) {
  const int universe = 2 * m;
  std::vector<std::uint64_t> covers(m, 0);
  for (int i = 0; i < m; ++i)
    for (int p = 0; p < universe; ++p)
      if (rng() % 5 < 2) covers[i] |= std::uint64_t{1} << p;
  std::vector<double> table(std::size_t{1} << m, 0.0);
  for (mask_t s = 1; s < table.size(); ++s) {
    std::uint64_t covered = 0;
    for (mask_t rest = s; rest; rest &= rest - 1) covered |= covers[std::countr_zero(rest)];
    table[s] = std::popcount(covered);
  }
  return table;
}

}  // namespace

ExplicitFunction random_monotone(int m, std::uint64_t seed, RandomStyle style) {
  if (m < 1 || m > 10) throw std::invalid_argument("random_monotone supports 1 <= m <= 10");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(style) * 1315423911ULL +
          static_cast<std::uint64_t>(m));
  std::vector<double> table;
  switch (style) {
    case RandomStyle::kNonnegHypergraph:
      table = hypergraph_table(rng, m);
      break;
    case RandomStyle::kMaxOfAdditive: {
      std::vector<std::vector<double>> parts;
      const int k = rint(rng, 2, 3);
      for (int i = 0; i < k; ++i) parts.push_back(additive_table(rng, m));
      table = max_tables(parts);
      break;
    }
    case RandomStyle::kCoverage:
      table = coverage_table(rng, m);
      break;
    case RandomStyle::kMixed:
      table = max_tables({hypergraph_table(rng, m), additive_table(rng, m)});
      break;
  }
  return ExplicitFunction(GroundSet(m), std::move(table));
}

}  // namespace widthlab
