#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "widthlab/instances.hpp"
#include "widthlab/widths.hpp"

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

TEST_CASE("positive dependency sets") {
  auto thr = threshold_any_two(5);
  CHECK(dep_plus(thr, 0) == (full_mask(5) & ~bit(0)));

  auto add = additive({1.0, 2.0, 3.0});
  for (int u = 0; u < 3; ++u) CHECK(dep_plus(add, u) == 0);

  auto pm = pair_matching(2);
  CHECK(dep_plus(pm, 0) == bit(2));
}

TEST_CASE("supermodular degree") {
  CHECK(supermodular_degree(threshold_any_two(5)) == 4);
  CHECK(supermodular_degree(additive({1.0, 1.0, 2.0})) == 0);
  CHECK(supermodular_degree(pair_matching(3)) == 1);
}

TEST_CASE("supermodular set witnesses") {
  auto thr = threshold_any_two(4);
  auto w = supermodular_set_witness(thr, bit(1));
  REQUIRE(w.has_value());
  CHECK(w->s == 0);
  CHECK(w->v == 0);
  CHECK(verify_supermodular_witness(thr, bit(1), *w));

  CHECK_FALSE(supermodular_set_witness(thr, 0).has_value());
  CHECK_FALSE(supermodular_set_witness(thr, bit(1) | bit(2)).has_value());
}

TEST_CASE("supermodular width on the separation fixtures") {
  CHECK(supermodular_width(threshold_any_two(6)).first == 1);
  CHECK(supermodular_width(all_pairs(4)).first == 3);
  CHECK(supermodular_width(pair_matching(3)).first == 1);

  // Margins of the two-level function given the empty context already equal
  // the top margin, so the largest strictly-dominating set has m-2 elements.
  auto [smw, w] = supermodular_width(symmetric_two_level(5));
  CHECK(smw == 3);
  REQUIRE(w.has_value());
  CHECK(verify_supermodular_witness(symmetric_two_level(5), w->t, *w));
}

TEST_CASE("superadditive width") {
  auto [saw_pm, w_pm] = superadditive_width(pair_matching(3));
  CHECK(saw_pm == 3);
  REQUIRE(w_pm.has_value());
  CHECK(verify_superadditive_witness(pair_matching(3), w_pm->t, *w_pm));

  CHECK(superadditive_width(symmetric_two_level(6)).first == 0);
  CHECK(superadditive_width(all_pairs(4)).first == 3);
}

TEST_CASE("width zero coincides with submodular / subadditive") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    auto f = random_monotone(5, seed, static_cast<RandomStyle>(seed % 4));
    CHECK((supermodular_width(f).first == 0) == is_submodular(f));
    CHECK((superadditive_width(f).first == 0) == is_subadditive(f));
  }
}

TEST_CASE("scopic characterizations match widths") {
  // Equivalence of width <= d and the d-scopic condition, both directions.
  auto check = [](const SetFunction& f) {
    const int smw = supermodular_width(f).first;
    const int saw = superadditive_width(f).first;
    for (int d = 0; d < f.m(); ++d) {
      CHECK(is_d_scopic_submodular(f, d) == (smw <= d));
      CHECK(is_d_scopic_subadditive(f, d) == (saw <= d));
    }
  };
  check(threshold_any_two(5));
  check(pair_matching(2));
  check(symmetric_two_level(5));
  check(all_pairs(4));
  for (std::uint64_t seed = 0; seed < 12; ++seed)
    check(random_monotone(5, seed, static_cast<RandomStyle>(seed % 4)));
}

TEST_CASE("scopic scope d = m-1 is unconditional") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto f = random_monotone(4, seed, RandomStyle::kMixed);
    CHECK(is_d_scopic_submodular(f, f.m() - 1));
    CHECK(is_d_scopic_subadditive(f, f.m() - 1));
  }
  CHECK(is_d_scopic_submodular(threshold_any_two(5), 1));
  CHECK_FALSE(is_d_scopic_submodular(threshold_any_two(5), 0));
}

TEST_CASE("width never exceeds supermodular degree bound") {
  // Any supermodular set T with witness (S, v) forces v to depend on every
  // element of T, so smw <= sd.
  auto check = [](const SetFunction& f) {
    CHECK(supermodular_width(f).first <= supermodular_degree(f));
  };
  check(threshold_any_two(6));
  check(pair_matching(3));
  check(symmetric_two_level(5));
  check(all_pairs(4));
  for (std::uint64_t seed = 0; seed < 16; ++seed)
    check(random_monotone(5, seed, static_cast<RandomStyle>(seed % 4)));
}

TEST_CASE("widths are invariant across representations") {
  auto pm = pair_matching(3);
  ExplicitFunction ex(pm.ground(), to_table(pm));
  CHECK(supermodular_width(pm).first == supermodular_width(ex).first);
  CHECK(superadditive_width(pm).first == superadditive_width(ex).first);
  CHECK(supermodular_degree(pm) == supermodular_degree(ex));

  auto two = symmetric_two_level(5);
  ExplicitFunction ex2(two.ground(), to_table(two));
  CHECK(supermodular_width(two).first == supermodular_width(ex2).first);
  CHECK(superadditive_width(two).first == superadditive_width(ex2).first);
}

TEST_CASE("ph level") {
  auto ap = all_pairs(5);
  ExplicitFunction ex(ap.ground(), to_table(ap));
  auto level = ph_level(ex);
  REQUIRE(level.has_value());
  CHECK(*level == 2);

  auto add = additive({1.0, 2.0, 1.0});
  auto la = ph_level(add);
  REQUIRE(la.has_value());
  CHECK(*la == 1);

  auto two = symmetric_two_level(4);
  ExplicitFunction ex2(two.ground(), to_table(two));
  CHECK_FALSE(ph_level(ex2).has_value());

  ExplicitFunction zero(GroundSet(3), std::vector<double>(8, 0.0));
  auto lz = ph_level(zero);
  REQUIRE(lz.has_value());
  CHECK(*lz == 0);
}

TEST_CASE("mph membership at small scale") {
  auto ap = all_pairs(4);
  ExplicitFunction ex(ap.ground(), to_table(ap));
  CHECK(mph_level_at_most(ex, 2));
  CHECK(mph_level_at_most(ex, 4));

  auto two = symmetric_two_level(4);
  ExplicitFunction ex2(two.ground(), to_table(two));
  CHECK_FALSE(mph_level_at_most(ex2, 1));
  CHECK(mph_level_at_most(ex2, 4));

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto f = random_monotone(5, seed, static_cast<RandomStyle>(seed % 4));
    CHECK(mph_level_at_most(f, f.m()));
  }

  // A positive hypergraph sits inside its own level.
  auto pm = pair_matching(2);
  ExplicitFunction pmx(pm.ground(), to_table(pm));
  CHECK(mph_level_at_most(pmx, 2));
}

TEST_CASE("width report bundles the measures") {
  auto pm = pair_matching(3);
  auto report = compute_width_report(pm);
  CHECK(report.sd == 1);
  CHECK(report.smw == 1);
  CHECK(report.saw == 3);
  REQUIRE(report.ph_computed);
  REQUIRE(report.ph_level.has_value());
  CHECK(*report.ph_level == 2);
  REQUIRE(report.smw_witness.has_value());
  CHECK(verify_supermodular_witness(pm, report.smw_witness->t, *report.smw_witness));
  REQUIRE(report.saw_witness.has_value());
  CHECK(verify_superadditive_witness(pm, report.saw_witness->t, *report.saw_witness));
}

TEST_CASE("resource caps raise the dedicated error") {
  std::vector<double> levels(16 + 1, 1.0);
  levels[0] = 0.0;
  SymmetricFunction big(GroundSet(16), std::move(levels));
  CHECK_THROWS_AS(supermodular_width(big), ResourceLimitError);
  CHECK_THROWS_AS(is_d_scopic_submodular(big, 1), ResourceLimitError);
  CHECK_THROWS_AS(supermodular_degree(big), ResourceLimitError);
}
