#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pasmkit/bijections.hpp"
#include "pasmkit/poset.hpp"

using namespace pasmkit;

namespace {

int element_count_formula(Dims dims) {
  const int a = dims.min();
  const int b = dims.max();
  int total = 0;
  for (int k = 0; k < a; ++k) total += (a - k) * (b - k);
  return total;
}

}  // namespace

TEST(Poset, ElementCounts) {
  EXPECT_EQ(PasmPoset({4, 4}).size(), 30);
  EXPECT_EQ(PasmPoset({3, 5}).size(), 26);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(PasmPoset({m, n}).size(), element_count_formula({m, n}));
}

TEST(Poset, OneRowIsAChain) {
  for (int n = 1; n <= 6; ++n) {
    const PasmPoset p({1, n});
    ASSERT_EQ(p.size(), n);
    const oracle::NaivePoset naive(1, n);
    for (std::size_t x = 0; x < naive.elements.size(); ++x)
      for (std::size_t y = 0; y < naive.elements.size(); ++y) ASSERT_TRUE(naive.leq[x][y] || naive.leq[y][x]);
  }
}

TEST(Poset, RankRisesByOneAlongEveryCover) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const PasmPoset p({m, n});
      for (const auto& e : p.elements()) {
        for (const auto& below : p.lower_covers(e)) ASSERT_EQ(p.rank(e), p.rank(below) + 1);
        for (const auto& above : p.upper_covers(e)) ASSERT_EQ(p.rank(above), p.rank(e) + 1);
      }
    }
  }
}

TEST(Poset, MinimalAndMaximalElements) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const PasmPoset p({m, n});
      const auto minimal = p.minimal_elements();
      ASSERT_EQ(minimal.size(), 1u);
      EXPECT_EQ(minimal[0], (PosetElement{m - 1, n - 1, 0}));
      EXPECT_EQ(p.rank(minimal[0]), 0);
      std::vector<PosetElement> expected;
      for (int i = 0; i < std::min(m, n); ++i) expected.push_back({i, i, i});
      EXPECT_EQ(p.maximal_elements(), expected);
      for (const auto& e : expected) EXPECT_EQ(p.rank(e), m + n - 2);
    }
  }
  EXPECT_EQ(PasmPoset({4, 4}).rank({3, 3, 0}), 0);
}

TEST(Poset, CoversMatchNaiveOrder) {
  for (auto dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{3, 4}}) {
    const PasmPoset p(dims);
    const oracle::NaivePoset naive(dims.m, dims.n);
    ASSERT_EQ(static_cast<std::size_t>(p.size()), naive.elements.size());
    for (const auto& e : p.elements()) {
      for (const auto& below : p.lower_covers(e)) EXPECT_TRUE(naive.leq[naive.index(below)][naive.index(e)]);
    }
  }
}

TEST(LatticeRank, Examples) {
  EXPECT_EQ(lattice_rank_of_J({4, 4}), 30);
  EXPECT_EQ(lattice_rank_of_J({1, 1}), 1);
  EXPECT_EQ(lattice_rank_of_J({3, 5}), 26);
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(lattice_rank_of_J({m, n}), element_count_formula({m, n}));
}

TEST(OrderIdeal, HeightEncodingMatchesNaiveClosure) {
  for (auto dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}, Dims{3, 3}}) {
    const oracle::NaivePoset naive(dims.m, dims.n);
    const auto subsets = naive.all_ideals();
    const auto ideals = all_ideals(dims);
    ASSERT_EQ(subsets.size(), ideals.size());
    std::set<std::set<int>> from_heights;
    for (const auto& x : ideals) from_heights.insert(naive.members(x));
    EXPECT_EQ(from_heights, std::set<std::set<int>>(subsets.begin(), subsets.end()));
  }
}

TEST(OrderIdeal, ValidatorAgreesWithNaiveClosureOnEveryHeightArray) {
  for (auto dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    const oracle::NaivePoset naive(dims.m, dims.n);
    const int cells = dims.m * dims.n;
    std::vector<std::uint8_t> heights(cells, 0);
    // Every array with entries 0..3.
    std::function<void(int)> fill = [&](int c) {
      if (c == cells) {
        const OrderIdeal x(dims, heights);
        bool fits = true;
        for (int a = 0; a < dims.m; ++a)
          for (int b = 0; b < dims.n; ++b) fits = fits && x.height(a, b) <= PasmPoset::fiber_size(a, b);
        const bool expected = fits && naive.is_ideal(naive.members(x));
        ASSERT_EQ(validate(x).ok(), expected);
        return;
      }
      for (int h = 0; h <= 3; ++h) {
        heights[c] = static_cast<std::uint8_t>(h);
        fill(c + 1);
      }
    };
    fill(0);
  }
}

TEST(OrderIdeal, FromElementsRejectsNonIdeals) {
  const PasmPoset p({2, 2});
  EXPECT_THROW(OrderIdeal::from_elements(p, {{0, 0, 0}}), InvariantError);
  EXPECT_NO_THROW(OrderIdeal::from_elements(p, {{1, 1, 0}}));
}

TEST(EnumerateIdeals, CountsMatchTable) {
  EXPECT_EQ(all_ideals({2, 2}).size(), 8u);
  EXPECT_EQ(all_ideals({1, 1}).size(), 2u);
  EXPECT_EQ(all_ideals({4, 4}).size(), 924u);
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      std::size_t count = 0;
      std::set<std::vector<std::uint8_t>> distinct;
      enumerate_ideals({m, n}, [&](const OrderIdeal& x) {
        ++count;
        distinct.insert(x.key());
        ASSERT_TRUE(validate(x).ok());
      });
      EXPECT_EQ(count, fixtures::kPasmTable[m - 1][n - 1]);
      EXPECT_EQ(distinct.size(), count);
    }
  }
}

TEST(Toggle, Examples) {
  const PasmPoset p({3, 4});
  const auto empty = OrderIdeal::empty({3, 4});
  const auto once = toggle(p, empty, {2, 3, 0});
  EXPECT_EQ(once.members(), (std::vector<PosetElement>{{2, 3, 0}}));
  for (const auto& e : p.elements()) {
    if (e == PosetElement{2, 3, 0}) continue;
    EXPECT_EQ(toggle(p, empty, e), empty);
  }
  EXPECT_THROW((void)toggle(p, empty, {0, 0, 1}), std::out_of_range);
}

TEST(Toggle, SingleSquareExampleTogglesOneOneZero) {
  const PasmPoset p({4, 4});
  const auto left = height_to_ideal(PartialHeightFunction({4, 4}, fixtures::kHStar));
  const auto right = height_to_ideal(PartialHeightFunction({4, 4}, fixtures::kHStarRaised));
  EXPECT_TRUE(left.contains({1, 1, 0}));
  EXPECT_FALSE(right.contains({1, 1, 0}));
  EXPECT_EQ(toggle(p, left, {1, 1, 0}), right);
  EXPECT_EQ(toggle(p, right, {1, 1, 0}), left);
}

TEST(Toggle, InvolutionAndAgreementWithNaive) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const PasmPoset p({m, n});
      const oracle::NaivePoset naive(m, n);
      for (const auto& x : all_ideals({m, n})) {
        for (const auto& q : p.elements()) {
          const auto y = toggle(p, x, q);
          ASSERT_EQ(toggle(p, y, q), x);
          ASSERT_EQ(naive.members(y), naive.toggle(naive.members(x), naive.index(q)));
        }
      }
    }
  }
}

TEST(Toggle, NonCoveringTogglesCommute) {
  const PasmPoset p({3, 3});
  const oracle::NaivePoset naive(3, 3);
  for (const auto& x : all_ideals({3, 3})) {
    for (const auto& a : p.elements()) {
      for (const auto& b : p.elements()) {
        const auto ab = toggle(p, toggle(p, x, a), b);
        const auto ba = toggle(p, toggle(p, x, b), a);
        const auto covers = p.lower_covers(a);
        const auto covered = p.upper_covers(a);
        const bool related = std::find(covers.begin(), covers.end(), b) != covers.end() ||
                             std::find(covered.begin(), covered.end(), b) != covered.end();
        if (!related) ASSERT_EQ(ab, ba);
      }
    }
  }
}

TEST(Rowmotion, Examples) {
  for (auto dims : {Dims{2, 2}, Dims{3, 4}}) {
    const PasmPoset p(dims);
    EXPECT_EQ(rowmotion(p, OrderIdeal::full(dims)), OrderIdeal::empty(dims));
    EXPECT_EQ(rowmotion(p, OrderIdeal::empty(dims)).members(),
              (std::vector<PosetElement>{{dims.m - 1, dims.n - 1, 0}}));
  }
}

TEST(Rowmotion, TwoDefinitionsAgree) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const PasmPoset p({m, n});
      for (const auto& x : all_ideals({m, n})) ASSERT_EQ(rowmotion(p, x), rowmotion_by_complement(p, x));
    }
  }
}

TEST(Rowmotion, AgreesWithNaiveOrder) {
  for (auto dims : {Dims{2, 3}, Dims{3, 3}, Dims{3, 4}}) {
    const PasmPoset p(dims);
    const oracle::NaivePoset naive(dims.m, dims.n);
    for (const auto& x : all_ideals(dims)) ASSERT_EQ(naive.members(rowmotion(p, x)), naive.rowmotion(naive.members(x)));
  }
}

TEST(Rowmotion, IsABijection) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const PasmPoset p({m, n});
      std::set<std::vector<std::uint8_t>> images;
      const auto ideals = all_ideals({m, n});
      for (const auto& x : ideals) images.insert(rowmotion(p, x).key());
      EXPECT_EQ(images.size(), ideals.size());
    }
  }
}

TEST(Gyr, EmptyIdealOfTwoByTwo) {
  // Even ranks {0, 2} first: only rank 0 can be added to the empty set,
  // giving {(1,1,0)}; then rank 1 adds (0,1,0) and (1,0,0).
  const PasmPoset p({2, 2});
  const auto y = gyr(p, OrderIdeal::empty({2, 2}));
  EXPECT_EQ(y.rows(), (std::vector<std::vector<int>>{{0, 1}, {1, 1}}));
}

TEST(Gyr, TransitionTableAgreesWithNaiveToggling) {
  for (auto dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    const PasmPoset p(dims);
    const oracle::NaivePoset naive(dims.m, dims.n);
    for (const auto& x : all_ideals(dims)) {
      auto s = naive.members(x);
      for (int parity : {0, 1})
        for (std::size_t q = 0; q < naive.elements.size(); ++q)
          if (p.rank(naive.elements[q]) % 2 == parity) s = naive.toggle(s, static_cast<int>(q));
      ASSERT_EQ(naive.members(gyr(p, x)), s);
    }
  }
}

TEST(Gyr, InverseUndoesIt) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const PasmPoset p({m, n});
      for (const auto& x : all_ideals({m, n})) {
        ASSERT_EQ(gyr_inverse(p, gyr(p, x)), x);
        ASSERT_EQ(gyr(p, gyr_inverse(p, x)), x);
      }
    }
  }
  EXPECT_EQ(all_ideals({3, 3}).size(), 62u);
}

TEST(Gyr, OrderWithinParityIsIrrelevant) {
  const PasmPoset p({2, 3});
  for (const auto& x : all_ideals({2, 3})) {
    OrderIdeal reversed = x;
    for (int parity : {0, 1}) {
      std::vector<PosetElement> order;
      for (int r = parity; r <= p.max_rank(); r += 2)
        for (const auto& e : p.rank_level(r)) order.push_back(e);
      std::reverse(order.begin(), order.end());
      reversed = toggle_sequence(p, reversed, order);
    }
    EXPECT_EQ(reversed, gyr(p, x));
  }
}
