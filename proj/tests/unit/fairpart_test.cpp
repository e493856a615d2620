#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "powercl/fairpart.hpp"
#include "powercl/random.hpp"

namespace powercl {
namespace {

std::int64_t total(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// Multiset union of the two parts, sorted.
std::vector<std::int64_t> merged(const Partition& p) {
  auto out = p.first;
  out.insert(out.end(), p.second.begin(), p.second.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FairPartition, Example) {
  const std::vector<std::int64_t> items{10, 4, 4, 3, 2};
  EXPECT_EQ(fp_exact(items), 12);
  auto p = fp_partition(items);
  EXPECT_EQ(p.max_sum(), 12);
  EXPECT_GE(p.first_sum(), p.second_sum());
  auto sorted = items;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(merged(p), sorted);
}

TEST(FairPartition, Trivial) {
  const std::vector<std::int64_t> one{7}, ones{1, 1, 1, 1, 1};
  EXPECT_EQ(fp_exact(one), 7);
  EXPECT_EQ(fp_exact(ones), 3);
  EXPECT_THROW(fp_exact(std::vector<std::int64_t>{}), std::invalid_argument);
  EXPECT_THROW(fp_exact(std::vector<std::int64_t>{3, 0}), std::invalid_argument);
}

TEST(FairPartition, ReachabilityMatchesEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    std::vector<std::int64_t> items(static_cast<std::size_t>(rng.uniform(1, 14)));
    auto hi = rng.chance(1, 2) ? 6 : 40;
    for (auto& x : items) x = rng.uniform(1, hi);
    auto p = fp_partition(items);
    auto best = fp_enumerate(items);
    ASSERT_EQ(p.max_sum(), best);
    ASSERT_EQ(fp_exact(items), best);
    auto sorted = items;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(merged(p), sorted);
    ASSERT_GE(2 * best, total(items));
    ASSERT_GE(best, *std::max_element(items.begin(), items.end()));
  }
}

TEST(FairPartition, LargeMultisetUsesReachability) {
  // 30 items: beyond plain enumeration, value known in closed form
  std::vector<std::int64_t> items(30, 3);
  items.push_back(1);
  EXPECT_EQ(fp_exact(items), 46);
}

TEST(OnesAndCopies, Shape) {
  auto m = ones_and_copies(2, 5, 3);
  std::sort(m.begin(), m.end());
  EXPECT_EQ(m, (std::vector<std::int64_t>{1, 1, 3, 3, 3}));
  EXPECT_EQ(ones_and_copies(6, 4, 3), (std::vector<std::int64_t>(4, 1)));
}

TEST(Formula1, MatchesExactOnGrid) {
  for (std::int64_t n = 2; n <= 9; ++n) {
    for (std::int64_t kappa = 1; kappa <= 12; ++kappa) {
      for (std::int64_t l = 0; l <= 14; ++l) {
        auto items = ones_and_copies(l, kappa, n);
        auto f = fp_formula1(l, kappa, Order::finite(n));
        ASSERT_TRUE(f);
        ASSERT_EQ(*f, fp_enumerate(items)) << "l=" << l << " kappa=" << kappa << " N=" << n;
        auto g = fp_greedy_witness(l, kappa, Order::finite(n));
        ASSERT_EQ(g.max_sum(), *f);
        auto sorted = items;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_EQ(merged(g), sorted);
      }
    }
  }
}

TEST(Formula1, InfiniteOrder) {
  EXPECT_FALSE(fp_formula1(1, 3, Order::infinite()));
  auto f = fp_formula1(5, 3, Order::infinite());
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, 2);
}

}  // namespace
}  // namespace powercl
