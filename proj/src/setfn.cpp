#include "widthlab/setfn.hpp"

#include <cmath>

namespace widthlab {

namespace {

void require_explicit_range(int m, const char* who) {
  if (m > kMaxExplicitGroundSize)
    throw ResourceLimitError(std::string(who) + ": ground set too large for a dense table (m=" +
                             std::to_string(m) + ", cap " + std::to_string(kMaxExplicitGroundSize) + ")");
}

}  // namespace

ExplicitFunction::ExplicitFunction(GroundSet g, std::vector<double> table, bool require_monotone)
    : SetFunction(g), table_(std::move(table)) {
  require_explicit_range(g.m, "ExplicitFunction");
  if (table_.size() != (std::size_t{1} << g.m))
    throw std::invalid_argument("explicit table must have exactly 2^m entries");
  if (std::abs(table_[0]) > kDefaultEps)
    throw std::invalid_argument("explicit table is not normalized: f(empty) != 0");
  table_[0] = 0.0;
  for (double v : table_)
    if (v < -kDefaultEps) throw std::invalid_argument("explicit table has a negative value");
  if (require_monotone && !is_monotone(*this))
    throw std::invalid_argument("explicit table is not monotone");
}

HypergraphFunction::HypergraphFunction(GroundSet g, std::map<mask_t, double> weights)
    : SetFunction(g), weights_(std::move(weights)) {
  if (weights_.count(0)) throw std::invalid_argument("hypergraph weight on the empty set");
  for (const auto& [edge, w] : weights_) {
    (void)w;
    if (!g.valid_mask(edge)) throw std::invalid_argument("hyperedge outside the ground set");
  }
}

SymmetricFunction::SymmetricFunction(GroundSet g, std::vector<double> levels, bool require_monotone)
    : SetFunction(g), levels_(std::move(levels)) {
  if (levels_.size() != static_cast<std::size_t>(g.m) + 1)
    throw std::invalid_argument("symmetric function needs m+1 levels");
  if (std::abs(levels_[0]) > kDefaultEps)
    throw std::invalid_argument("symmetric function is not normalized: g[0] != 0");
  levels_[0] = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] < -kDefaultEps)
      throw std::invalid_argument("symmetric function has a negative level");
    if (require_monotone && i > 0 && levels_[i] + kDefaultEps < levels_[i - 1])
      throw std::invalid_argument("symmetric levels are not nondecreasing");
  }
}

CHFunction::CHFunction(GroundSet g, double base, std::vector<mask_t> blocks, int block_bound)
    : SetFunction(g), base_(base), blocks_(std::move(blocks)), block_bound_(block_bound) {
  if (base_ < 0.0) throw std::invalid_argument("CH base value must be nonnegative");
  if (block_bound_ < 1) throw std::invalid_argument("CH block bound must be >= 1");
  mask_t seen = 0;
  for (mask_t q : blocks_) {
    if (q == 0) throw std::invalid_argument("CH block is empty");
    if (!g.valid_mask(q)) throw std::invalid_argument("CH block outside the ground set");
    if (popcount(q) > block_bound_) throw std::invalid_argument("CH block exceeds the block bound");
    if (seen & q) throw std::invalid_argument("CH blocks are not pairwise disjoint");
    seen |= q;
  }
}

MaxFunction::MaxFunction(GroundSet g, std::vector<std::unique_ptr<SetFunction>> components)
    : SetFunction(g), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("max function needs at least one component");
  for (const auto& c : components_)
    if (!c || c->m() != g.m)
      throw std::invalid_argument("max function components must share the ground set");
}

MaxFunction::MaxFunction(const MaxFunction& o) : SetFunction(o) {
  components_.reserve(o.components_.size());
  for (const auto& c : o.components_) components_.push_back(c->clone());
}

MaxFunction& MaxFunction::operator=(const MaxFunction& o) {
  if (this == &o) return *this;
  SetFunction::operator=(o);
  components_.clear();
  components_.reserve(o.components_.size());
  for (const auto& c : o.components_) components_.push_back(c->clone());
  return *this;
}

double MaxFunction::do_eval(mask_t s) const {
  double best = components_[0]->eval(s);
  for (std::size_t i = 1; i < components_.size(); ++i) {
    double v = components_[i]->eval(s);
    if (v > best) best = v;
  }
  return best;
}

std::vector<double> to_table(const SetFunction& f) {
  require_explicit_range(f.m(), "to_table");
  std::vector<double> table(std::size_t{1} << f.m());
  for (mask_t s = 0; s < table.size(); ++s) table[s] = f.eval(s);
  return table;
}

HypergraphFunction mobius_transform(const ExplicitFunction& f, double drop_tol) {
  const int m = f.m();
  std::vector<double> h = f.table();
  for (int d = 0; d < m; ++d)
    for (mask_t s = 0; s < h.size(); ++s)
      if (s & bit(d)) h[s] -= h[s ^ bit(d)];
  std::map<mask_t, double> weights;
  for (mask_t s = 1; s < h.size(); ++s)
    if (std::abs(h[s]) > drop_tol) weights.emplace(s, h[s]);
  return HypergraphFunction(f.ground(), std::move(weights));
}

std::vector<double> zeta_table(const HypergraphFunction& h) {
  require_explicit_range(h.m(), "zeta_table");
  std::vector<double> table(std::size_t{1} << h.m(), 0.0);
  for (const auto& [edge, w] : h.weights()) table[edge] += w;
  for (int d = 0; d < h.m(); ++d)
    for (mask_t s = 0; s < table.size(); ++s)
      if (s & bit(d)) table[s] += table[s ^ bit(d)];
  return table;
}

bool is_normalized(const SetFunction& f, double eps) { return std::abs(f.eval(0)) <= eps; }

bool is_monotone(const SetFunction& f, double eps) {
  const auto table = to_table(f);
  const int m = f.m();
  for (mask_t s = 0; s < table.size(); ++s)
    for (int i = 0; i < m; ++i)
      if (!(s & bit(i)) && table[s | bit(i)] + eps < table[s]) return false;
  return true;
}

bool is_submodular(const SetFunction& f, double eps) {
  if (f.m() > 20) throw ResourceLimitError("is_submodular: m > 20");
  const auto table = to_table(f);
  const int m = f.m();
  // f(v | S ∪ {u}) <= f(v | S) for all S, u != v outside S.
  for (mask_t s = 0; s < table.size(); ++s)
    for (int u = 0; u < m; ++u) {
      if (s & bit(u)) continue;
      for (int v = 0; v < m; ++v) {
        if (v == u || (s & bit(v))) continue;
        double lhs = table[s | bit(u) | bit(v)] - table[s | bit(u)];
        double rhs = table[s | bit(v)] - table[s];
        if (lhs > rhs + eps) return false;
      }
    }
  return true;
}

namespace {

template <typename Cmp>
bool pairwise_disjoint_scan(const SetFunction& f, Cmp&& violated) {
  if (f.m() > 14) throw ResourceLimitError("subadditivity scan: m > 14");
  const auto table = to_table(f);
  const mask_t full = f.ground().full();
  for (mask_t s = 1; s < table.size(); ++s) {
    const mask_t comp = full & ~s;
    bool bad = false;
    for_each_submask(comp, [&](mask_t t) {
      if (t == 0 || bad) return;
      if (violated(table[s | t], table[s], table[t])) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

}  // namespace

bool is_subadditive(const SetFunction& f, double eps) {
  return pairwise_disjoint_scan(
      f, [eps](double fst, double fs, double ft) { return fst > fs + ft + eps; });
}

bool is_superadditive(const SetFunction& f, double eps) {
  return pairwise_disjoint_scan(
      f, [eps](double fst, double fs, double ft) { return fst + eps < fs + ft; });
}

}  // namespace widthlab
