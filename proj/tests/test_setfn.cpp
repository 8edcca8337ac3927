#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "widthlab/instances.hpp"
#include "widthlab/setfn.hpp"

using namespace widthlab;

namespace {

ExplicitFunction additive(std::vector<double> values) {
  const int m = static_cast<int>(values.size());
  std::vector<double> table(std::size_t{1} << m, 0.0);
  for (mask_t s = 1; s < table.size(); ++s) {
    double sum = 0.0;
    for (mask_t rest = s; rest; rest &= rest - 1) sum += values[std::countr_zero(rest)];
    table[s] = sum;
  }
  return ExplicitFunction(GroundSet(m), std::move(table));
}

}  // namespace

TEST_CASE("eval basics and query accounting") {
  auto f = threshold_any_two(4);
  f.reset_query_count();
  CHECK(f.eval(bit(1) | bit(3)) == doctest::Approx(1.0));
  CHECK(f.eval(0) == doctest::Approx(0.0));
  CHECK(f.query_count() == 2);

  std::map<mask_t, double> w{{bit(0) | bit(1), 2.0}, {bit(2), 1.0}};
  HypergraphFunction h(GroundSet(3), std::move(w));
  CHECK(h.eval(bit(0) | bit(1) | bit(2)) == doctest::Approx(3.0));
  CHECK(h.eval(bit(0) | bit(2)) == doctest::Approx(1.0));

  CHECK_THROWS_AS(f.eval(bit(5)), std::invalid_argument);
}

TEST_CASE("margin") {
  auto f = threshold_any_two(4);
  CHECK(margin(f, bit(0), bit(1)) == doctest::Approx(1.0));
  CHECK(margin(f, bit(0), bit(0) | bit(1)) == doctest::Approx(0.0));  // S inside T

  f.reset_query_count();
  (void)margin(f, bit(0), bit(1));
  CHECK(f.query_count() == 2);

  auto pm = pair_matching(2);
  CHECK(margin(pm, bit(0), bit(2)) == doctest::Approx(1.0));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(ExplicitFunction(GroundSet(2), {0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExplicitFunction(GroundSet(2), {0.5, 1.0, 1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExplicitFunction(GroundSet(2), {0.0, -1.0, 1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExplicitFunction(GroundSet(2), {0.0, 1.0, 1.0, 0.5}, true),
                  std::invalid_argument);
  CHECK_NOTHROW(ExplicitFunction(GroundSet(2), {0.0, 1.0, 1.0, 1.5}, true));

  std::map<mask_t, double> empty_edge{{0, 1.0}};
  CHECK_THROWS_AS(HypergraphFunction(GroundSet(2), std::move(empty_edge)), std::invalid_argument);

  CHECK_THROWS_AS(SymmetricFunction(GroundSet(3), {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CHFunction(GroundSet(4), 1.0, {bit(0) | bit(1), bit(1) | bit(2)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(CHFunction(GroundSet(4), 1.0, {bit(0) | bit(1) | bit(2)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
}

TEST_CASE("moebius transform recovers hyperedges") {
  auto ap = all_pairs(3);
  ExplicitFunction ex(ap.ground(), to_table(ap));
  auto h = mobius_transform(ex);
  CHECK(h.weights().size() == 3);
  for (const auto& [edge, w] : h.weights()) {
    CHECK(popcount(edge) == 2);
    CHECK(w == doctest::Approx(1.0));
  }

  auto add = additive({1.0, 2.0});
  auto ha = mobius_transform(add);
  REQUIRE(ha.weights().size() == 2);
  CHECK(ha.weights().at(bit(0)) == doctest::Approx(1.0));
  CHECK(ha.weights().at(bit(1)) == doctest::Approx(2.0));
}

TEST_CASE("moebius/zeta round trip is exact") {
  auto check_roundtrip = [](const SetFunction& f) {
    ExplicitFunction ex(f.ground(), to_table(f));
    auto h = mobius_transform(ex);
    auto back = zeta_table(h);
    for (mask_t s = 0; s < back.size(); ++s)
      CHECK(std::abs(back[s] - ex.table()[s]) < 1e-9);
  };
  check_roundtrip(symmetric_two_level(3));
  check_roundtrip(threshold_any_two(5));
  check_roundtrip(pair_matching(3));
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    check_roundtrip(random_monotone(6, seed, RandomStyle::kMixed));
}

TEST_CASE("structural predicates") {
  auto thr = threshold_any_two(4);
  CHECK(is_monotone(thr));
  CHECK(is_normalized(thr));

  ExplicitFunction bad(GroundSet(2), {0.0, 1.0, 0.5, 0.0});
  CHECK_FALSE(is_monotone(bad));

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto f = random_monotone(5, seed, RandomStyle::kNonnegHypergraph);
    CHECK(is_monotone(f));
    CHECK(is_normalized(f));
  }

  CHFunction block(GroundSet(3), 1.0, {bit(0) | bit(1)}, 2);
  CHECK_FALSE(is_submodular(block));
  CHECK_FALSE(is_subadditive(block));

  auto add = additive({1.0, 2.0, 3.0});
  CHECK(is_submodular(add));
  CHECK(is_subadditive(add));
  CHECK(is_superadditive(add));

  auto two = symmetric_two_level(5);
  CHECK_FALSE(is_submodular(two));
  CHECK(is_subadditive(two));
}

TEST_CASE("submodular implies subadditive on the monotone corpus") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto style = static_cast<RandomStyle>(seed % 4);
    auto f = random_monotone(5, seed, style);
    if (is_submodular(f)) CHECK(is_subadditive(f));
  }
}

TEST_CASE("max function dominates its components") {
  std::vector<std::unique_ptr<SetFunction>> parts;
  parts.push_back(std::make_unique<SymmetricFunction>(threshold_any_two(4)));
  parts.push_back(std::make_unique<HypergraphFunction>(pair_matching(2)));
  MaxFunction mx(GroundSet(4), std::move(parts));
  for (mask_t s = 0; s < 16; ++s) {
    double best = -1.0;
    for (const auto& c : mx.components()) best = std::max(best, c->eval(s));
    CHECK(mx.eval(s) == doctest::Approx(best));
  }
}

TEST_CASE("symmetric functions ignore relabeling") {
  auto f = symmetric_two_level(6);
  std::mt19937_64 rng(7);
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  for (int round = 0; round < 16; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    mask_t s = rng() & full_mask(6);
    mask_t image = 0;
    for (int i = 0; i < 6; ++i)
      if (contains(s, i)) image |= bit(perm[i]);
    CHECK(f.eval(s) == doctest::Approx(f.eval(image)));
  }
}

TEST_CASE("ch function evaluates block sums exactly") {
  CHFunction g(GroundSet(5), 0.5, {bit(0) | bit(1), bit(3)}, 2);
  CHECK(g.eval(full_mask(5)) == doctest::Approx(0.5 * 3));
  CHECK(g.eval(bit(0) | bit(3)) == doctest::Approx(0.5));
  CHECK(g.eval(bit(0)) == doctest::Approx(0.0));
}
