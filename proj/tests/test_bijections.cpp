#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pasmkit/bijections.hpp"
#include "pasmkit/enumeration.hpp"

using namespace pasmkit;

namespace {

using Rows = oracle::Rows;

Rows corner_sum_by_definition(const Pasm& p) {
  const auto [m, n] = p.dims();
  Rows c(m + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      for (int a = 1; a <= i; ++a)
        for (int b = j + 1; b <= n; ++b) c[i][j] += p.at(a, b);
  return c;
}

Rows height_by_definition(const Pasm& p) {
  const auto [m, n] = p.dims();
  const Rows c = corner_sum_by_definition(p);
  Rows h(m + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) h[i][j] = i + j - 2 * c[i][n - j];
  return h;
}

// Row i lists the columns whose partial sum through row i is 1, padded on
// the left with zeros.
Rows triangle_by_definition(const Pasm& p) {
  const auto [m, n] = p.dims();
  Rows t;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= n; ++j) {
      int s = 0;
      for (int a = 1; a <= i; ++a) s += p.at(a, j);
      if (s == 1) row.push_back(j);
    }
    row.insert(row.begin(), i - static_cast<int>(row.size()), 0);
    t.push_back(row);
  }
  return t;
}

// Separation rule read straight off the height matrix.
std::vector<Edge> fpl_by_rule(const Rows& h) {
  const int m = static_cast<int>(h.size()) - 1;
  const int n = static_cast<int>(h[0].size()) - 1;
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      if (std::min(h[i - 1][j], h[i][j]) % 2 == 1) edges.push_back(Edge::H(i, j));
  for (int i = 0; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::min(h[i][j - 1], h[i][j]) % 2 == 0) edges.push_back(Edge::V(i, j));
  std::sort(edges.begin(), edges.end());
  return edges;
}

Rows ideal_by_definition(const Rows& h) {
  const int m = static_cast<int>(h.size()) - 1;
  const int n = static_cast<int>(h[0].size()) - 1;
  Rows k(m, std::vector<int>(n));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) k[i - 1][j - 1] = (i + j - h[i][j]) / 2;
  return k;
}

std::vector<AnyObject> images(const Pasm& p) {
  std::vector<AnyObject> out;
  for (Family f : kAllFamilies) out.push_back(convert(p, f));
  return out;
}

}  // namespace

TEST(RunningExample, ChainMatchesPrintedObjects) {
  const Pasm m = Pasm::from_rows(fixtures::kMStar);
  EXPECT_EQ(pasm_to_triangle(m).rows(), fixtures::kTStar);
  EXPECT_EQ(pasm_to_corner_sum(m).rows(), fixtures::kCStar);
  EXPECT_EQ(pasm_to_height(m).rows(), fixtures::kHStar);
  EXPECT_EQ(corner_sum_to_height(CornerSumMatrix({4, 4}, fixtures::kCStar)).rows(), fixtures::kHStar);
  EXPECT_EQ(triangle_to_pasm(PartialMonotoneTriangle({4, 4}, fixtures::kTStar)), m);
  EXPECT_EQ(corner_sum_to_pasm(CornerSumMatrix({4, 4}, fixtures::kCStar)), m);
  EXPECT_EQ(height_to_pasm(PartialHeightFunction({4, 4}, fixtures::kHStar)), m);
}

TEST(RunningExample, CornerSumArithmetic) {
  const auto c = pasm_to_corner_sum(Pasm::from_rows(fixtures::kMStar));
  EXPECT_EQ(c.at(4, 0), 3);
  EXPECT_EQ(c.at(2, 1), 1);
  EXPECT_EQ(pasm_to_height(Pasm::from_rows(fixtures::kMStar)).at(4, 4), 4 + 4 - 2 * c.at(4, 0));
}

TEST(RunningExample, FplFollowsTheSeparationRule) {
  const PartialFpl f = height_to_fpl(PartialHeightFunction({4, 4}, fixtures::kHStar));
  EXPECT_EQ(f.edges(), fpl_by_rule(fixtures::kHStar));
  EXPECT_EQ(f.edges().size(), 19u);
  for (Edge forced : Grid({4, 4}).forced_boundary()) EXPECT_TRUE(f.has(forced));
  EXPECT_TRUE(validate(f).ok());
  EXPECT_EQ(fpl_to_height(f).rows(), fixtures::kHStar);
}

TEST(RunningExample, IceOrientsPresentEdgesFromEvenToOdd) {
  const PartialFpl f = height_to_fpl(PartialHeightFunction({4, 4}, fixtures::kHStar));
  const RectIce ice = fpl_to_ice(f);
  const Grid grid({4, 4});
  for (int k = 0; k < grid.edge_count(); ++k) {
    const Edge e = grid.edge_at(k);
    const Vertex head = ice.head(e);
    EXPECT_EQ(head.is_even(), !f.has(e)) << e.to_string();
  }
  EXPECT_EQ(ice_to_fpl(ice), f);
  EXPECT_EQ(pasm_from_ice_vertices(ice), Pasm::from_rows(fixtures::kMStar));
}

TEST(RunningExample, IdealFromHeights) {
  const OrderIdeal x = height_to_ideal(PartialHeightFunction({4, 4}, fixtures::kHStar));
  EXPECT_EQ(x.rows(), ideal_by_definition(fixtures::kHStar));
  EXPECT_TRUE(x.contains({3, 3, 0}));
  EXPECT_TRUE(x.contains({3, 3, 1}));
  EXPECT_TRUE(x.contains({3, 3, 2}));
  EXPECT_FALSE(x.contains({3, 3, 3}));
  // Sum of k(i,j) over the sixteen cells.
  EXPECT_EQ(x.size(), 17);
  EXPECT_TRUE(validate(x).ok());
  EXPECT_EQ(ideal_to_height(x).rows(), fixtures::kHStar);
}

TEST(Ideals, TrivialAndFullCases) {
  EXPECT_EQ(height_to_ideal(PartialHeightFunction::ramp({3, 4})), OrderIdeal::empty({3, 4}));
  EXPECT_EQ(ideal_to_height(OrderIdeal::empty({3, 4})), PartialHeightFunction::ramp({3, 4}));
  const auto full = ideal_to_height(OrderIdeal::full({2, 2}));
  EXPECT_EQ(full.rows(), (Rows{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  EXPECT_TRUE(validate(full).ok());
  EXPECT_THROW((void)ideal_to_height(OrderIdeal({2, 2}, {1, 0, 0, 0})), InvariantError);
}

TEST(Bijections, MapsAgreeWithDefinitionsExhaustively) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : oracle::all_pasm_objects({m, n})) {
        const Rows h = height_by_definition(p);
        ASSERT_EQ(pasm_to_corner_sum(p).rows(), corner_sum_by_definition(p));
        ASSERT_EQ(pasm_to_height(p).rows(), h);
        ASSERT_TRUE(oracle::is_height_function(h));
        ASSERT_EQ(pasm_to_triangle(p).rows(), triangle_by_definition(p));
        const PartialFpl f = height_to_fpl(pasm_to_height(p));
        ASSERT_EQ(f.edges(), fpl_by_rule(h));
        ASSERT_EQ(height_to_ideal(pasm_to_height(p)).rows(), ideal_by_definition(h));
      }
    }
  }
}

TEST(Bijections, RoundTripsAreIdentityExhaustively) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : oracle::all_pasm_objects({m, n})) {
        const auto t = pasm_to_triangle(p);
        const auto c = pasm_to_corner_sum(p);
        const auto h = corner_sum_to_height(c);
        const auto f = height_to_fpl(h);
        const auto ice = fpl_to_ice(f);
        const auto x = height_to_ideal(h);
        const auto nest = pasm_to_nest(p);
        ASSERT_TRUE(validate(t).ok() && validate(c).ok() && validate(h).ok());
        ASSERT_TRUE(validate(f).ok() && validate(ice).ok() && validate(x).ok() && validate(nest).ok());
        ASSERT_EQ(triangle_to_pasm(t), p);
        ASSERT_EQ(corner_sum_to_pasm(c), p);
        ASSERT_EQ(height_to_corner_sum(h), c);
        ASSERT_EQ(fpl_to_height(f), h);
        ASSERT_EQ(ice_to_fpl(ice), f);
        ASSERT_EQ(ideal_to_height(x), h);
        ASSERT_EQ(nest_to_pasm(nest), p);
        ASSERT_EQ(height_to_pasm(h), p);
      }
    }
  }
}

TEST(Bijections, RoundTripsOnRandomFiveByFiveSample) {
  const auto all = enumerate_pasm({5, 5});
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Pasm& p = all[pick(rng)];
    for (Family f : kAllFamilies) ASSERT_EQ(convert(convert(p, f), Family::kPasm), AnyObject(p));
  }
}

TEST(Bijections, CommutingTriangle) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : oracle::all_pasm_objects({m, n}))
        ASSERT_EQ(pasm_to_corner_sum(triangle_to_pasm(pasm_to_triangle(p))), pasm_to_corner_sum(p));
}

TEST(Bijections, SumEqualsPathCountEqualsCornerEntry) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : oracle::all_pasm_objects({m, n})) {
        ASSERT_EQ(total_sum(p), pasm_to_nest(p).size());
        ASSERT_EQ(total_sum(p), pasm_to_corner_sum(p).at(m, 0));
      }
}

TEST(Bijections, IceVertexTypesRecoverTheMatrix) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : oracle::all_pasm_objects({m, n}))
        ASSERT_EQ(pasm_from_ice_vertices(fpl_to_ice(height_to_fpl(pasm_to_height(p)))), p);
}

TEST(Bijections, ImagesAreDistinct) {
  for (auto dims : {Dims{3, 3}, Dims{2, 4}, Dims{4, 3}}) {
    const auto all = oracle::all_pasm_objects(dims);
    for (Family f : kAllFamilies) {
      std::set<AnyObject> seen;
      for (const auto& p : all) seen.insert(convert(p, f));
      EXPECT_EQ(seen.size(), all.size());
    }
  }
}

TEST(Convert, RouteIndependent) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : oracle::all_pasm_objects({m, n})) {
        const auto direct = images(p);
        for (std::size_t a = 0; a < direct.size(); ++a) {
          for (std::size_t b = 0; b < direct.size(); ++b) {
            ASSERT_EQ(convert(direct[a], kAllFamilies[b]), direct[b]);
          }
        }
      }
    }
  }
}

TEST(Convert, TwoByThreeLongRoute) {
  const auto all = oracle::all_pasm_objects({2, 3});
  ASSERT_EQ(all.size(), 17u);
  for (const auto& p : all) {
    const auto c = pasm_to_corner_sum(p);
    const auto back = corner_sum_to_pasm(height_to_corner_sum(ideal_to_height(height_to_ideal(corner_sum_to_height(c)))));
    EXPECT_EQ(back, p);
  }
}

TEST(Convert, Examples) {
  EXPECT_EQ(convert(Pasm::from_rows(fixtures::kMStar), Family::kFpl),
            AnyObject(height_to_fpl(PartialHeightFunction({4, 4}, fixtures::kHStar))));
  EXPECT_EQ(convert(OrderIdeal::empty({3, 2}), Family::kPasm), AnyObject(Pasm::zero({3, 2})));
  EXPECT_EQ(family_of(convert(Pasm::zero({1, 1}), Family::kNest)), Family::kNest);
  EXPECT_EQ(dims_of(convert(Pasm::zero({2, 5}), Family::kIce)), (Dims{2, 5}));
}

TEST(Convert, RejectsInvalidSources) {
  EXPECT_THROW((void)convert(Pasm::from_rows({{-1}}), Family::kHeight), InvariantError);
  const auto f = height_to_fpl(PartialHeightFunction::ramp({2, 2}));
  EXPECT_THROW((void)convert(f.with(Edge::H(1, 0), true), Family::kPasm), InvariantError);
}

TEST(ColumnSums, RunningExample) {
  const auto c = column_sums(Pasm::from_rows(fixtures::kMStar));
  EXPECT_EQ(c.at(2, 3), 1);
  EXPECT_EQ(c.at(3, 1), 0);
  EXPECT_EQ(c.at(4, 3), 0);
  EXPECT_EQ(c.at(4, 4), 1);
}
