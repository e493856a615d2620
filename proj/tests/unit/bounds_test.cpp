#include <gtest/gtest.h>

#include <vector>

#include "powercl/bounds.hpp"
#include "powercl/random.hpp"

namespace powercl {
namespace {

const Order kInf = Order::infinite();
Order q(std::int64_t n) { return Order::finite(n); }

// Floor of p/d by walking, no division involved.
std::int64_t walk_floor(std::int64_t p, std::int64_t d) {
  std::int64_t m = 0;
  while (m * d > p) --m;
  while ((m + 1) * d <= p) ++m;
  return m;
}

std::int64_t walk_ceil(std::int64_t p, std::int64_t d) { return -walk_floor(-p, d); }

std::int64_t total(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// Reference for the main right-hand side, written straight from the display.
std::int64_t ref_rhs(std::int64_t l, const std::vector<std::int64_t>& n_list, Order n) {
  auto s = total(n_list);
  auto excess = s - static_cast<std::int64_t>(n_list.size());
  auto over = [&](std::int64_t x) { return n.is_infinite() ? 0 : walk_floor(x, n.value()); };
  if ((excess - l) % 2 == 0) return 2 * over(s - walk_floor(l + 1, 2));
  auto shift = n.is_infinite() ? 0 : std::max<std::int64_t>(walk_floor(l + 1 - n.value(), 2), 0);
  return 2 * over(s - shift) - 1;
}

// All n_lists (non-increasing) with sum <= max_sum.
void lists(std::int64_t max_sum, std::int64_t cap, std::vector<std::int64_t>& cur,
           std::vector<std::vector<std::int64_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::int64_t x = std::min(cap, max_sum); x >= 1; --x) {
    cur.push_back(x);
    lists(max_sum - x, x, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> grid_lists(std::int64_t max_sum) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  lists(max_sum, max_sum, cur, out);
  return out;
}

const std::vector<Order> kGridOrders{q(2), q(3), q(5), q(7), kInf};

TEST(Brackets, Definitions) {
  EXPECT_EQ(floor_c(0, 2), -1);
  EXPECT_EQ(floor_c(5, 2), 2);
  EXPECT_EQ(floor_c(1, 2), 0);
  EXPECT_EQ(floor_plus(-3, 2), 0);
  EXPECT_EQ(floor_plus(7, 2), 3);
  EXPECT_THROW(floor_div(1, 0), std::domain_error);
  for (std::int64_t p = -40; p <= 40; ++p) {
    for (std::int64_t d : {1, 2, 3, 5, 9}) {
      EXPECT_EQ(floor_div(p, d), walk_floor(p, d));
      EXPECT_EQ(ceil_div(p, d), walk_ceil(p, d));
      EXPECT_EQ(floor_by_order(p, q(d + 1)), walk_floor(p, d + 1));
    }
    EXPECT_EQ(floor_by_order(p, kInf), 0);
    EXPECT_EQ(ceil_by_order(p, kInf), 0);
  }
}

TEST(Brackets, TupleCounters) {
  const std::int64_t t[] = {0, 3, 0, 4, 7};
  EXPECT_EQ(count_zeros(t), 2);
  EXPECT_EQ(count_odd(t), 2);
}

TEST(MainTheorem, Examples) {
  const std::vector<std::int64_t> three{3}, four{4}, two{2};
  EXPECT_EQ(main_theorem_rhs(0, three, q(3)), 2);
  EXPECT_EQ(main_theorem_parity(0, three), Parity::even);
  EXPECT_EQ(main_theorem_rhs(0, four, q(3)), 1);
  EXPECT_EQ(main_theorem_parity(0, four), Parity::odd);
  EXPECT_EQ(main_theorem_rhs(0, two, kInf), -1);

  auto fig1 = main_theorem_check(1, 0, three, q(3));
  EXPECT_EQ(fig1.lhs, 2);
  EXPECT_EQ(fig1.rhs, 2);
  EXPECT_TRUE(fig1.holds);

  auto no_fourth = main_theorem_check(1, 0, four, q(3));
  EXPECT_EQ(no_fourth.lhs, 3);
  EXPECT_EQ(no_fourth.rhs, 1);
  EXPECT_FALSE(no_fourth.holds);

  auto no_square = main_theorem_check(1, 0, two, kInf);
  EXPECT_EQ(no_square.lhs, 1);
  EXPECT_EQ(no_square.rhs, -1);
  EXPECT_FALSE(no_square.holds);
}

TEST(MainTheorem, InfiniteOrderGivesZeroOrMinusOne) {
  for (const auto& n_list : grid_lists(10)) {
    for (std::int64_t l = 0; l <= 6; ++l) {
      auto r = main_theorem_rhs(l, n_list, kInf);
      EXPECT_TRUE(r == 0 || r == -1);
    }
  }
}

TEST(MainTheorem, MatchesReferenceOnGrid) {
  for (const auto& n_list : grid_lists(14)) {
    for (auto n : kGridOrders) {
      for (std::int64_t l = 0; l <= 12; ++l) {
        ASSERT_EQ(main_theorem_rhs(l, n_list, n), ref_rhs(l, n_list, n));
        EXPECT_EQ(psi(l, n_list, n), ref_rhs(l, n_list, n));
      }
    }
  }
}

TEST(Psi, StepProperties) {
  for (const auto& n_list : grid_lists(30)) {
    if (n_list.size() > 4) continue;
    for (auto n : kGridOrders) {
      for (std::int64_t l = 0; l <= 12; ++l) {
        auto here = psi(l, n_list, n);
        ASSERT_LE(psi(l + 2, n_list, n), here);
        ASSERT_LE(psi(l + 1, n_list, n), here + 1);
        if (l > 0) ASSERT_LE(psi(l - 1, n_list, n), here + 1);
        ASSERT_LE(l + here, l + 1 + psi(l + 1, n_list, n));
      }
    }
  }
}

TEST(Psi, ParityMatchesPhi) {
  for (const auto& n_list : grid_lists(16)) {
    for (auto n : kGridOrders) {
      for (std::int64_t l = 0; l <= 12; ++l) {
        for (std::int64_t k = 0; k <= 4; ++k) {
          auto a = phi(k, l, n_list);
          auto b = psi(l, n_list, n);
          ASSERT_EQ(((a - b) % 2 + 2) % 2, 0);
        }
      }
    }
  }
  const std::int64_t three[] = {3};
  EXPECT_EQ(phi(1, 0, three), 2);
  EXPECT_EQ(psi(0, three, q(3)), 2);
  // l = 1 flips the parity: 2[(3 - [(2-3)/2]_+)/3] - 1 = 1
  EXPECT_EQ(psi(1, three, q(3)), 1);
}

TEST(PriorBounds, Examples) {
  const std::int64_t three[] = {3}, five[] = {5};
  auto a = prior_bounds(2, 0, three, kInf);
  ASSERT_TRUE(a.chen);
  EXPECT_EQ(a.chen->lhs, 4);
  EXPECT_TRUE(a.chen->holds);

  auto b = prior_bounds(1, 0, three, q(3));
  EXPECT_FALSE(b.large_order);
  ASSERT_TRUE(b.chen);
  EXPECT_EQ(b.chen->lhs, 2);
  EXPECT_TRUE(b.chen->holds);

  auto c = prior_bounds(3, 0, five, kInf);
  ASSERT_TRUE(c.large_order);
  EXPECT_EQ(c.large_order->lhs, 6);
  EXPECT_TRUE(c.large_order->holds);
}

TEST(PriorBounds, MainTheoremIsStronger) {
  for (const auto& n_list : grid_lists(16)) {
    for (auto n : kGridOrders) {
      for (std::int64_t l = 0; l <= 6; ++l) {
        auto mine = main_theorem_min_2k_plus_l(l, n_list, n);
        for (std::int64_t k = 0; 2 * k + l <= mine + 3; ++k) {
          auto prior = prior_bounds(k, l, n_list, n);
          if (prior.chen) ASSERT_GE(mine, prior.chen->lhs);
          if (prior.large_order) ASSERT_GE(mine, prior.large_order->lhs);
          // whenever a prior bound rules k out, so does the main inequality
          auto main = main_theorem_check(k, l, n_list, n);
          if (prior.chen && !prior.chen->holds) ASSERT_FALSE(main.holds);
          if (prior.large_order && !prior.large_order->holds) ASSERT_FALSE(main.holds);
          ASSERT_EQ(main.holds, 2 * k + l >= mine);
        }
      }
    }
  }
}

TEST(LeastK, Examples) {
  EXPECT_EQ(corollary1_min_k(3, q(3)), 1);
  EXPECT_EQ(corollary1_min_k(5, kInf), 3);
  EXPECT_EQ(corollary1_min_k(6, q(3)), 2);
  EXPECT_THROW(corollary1_min_k(0, q(3)), std::invalid_argument);
}

TEST(LeastK, LeastKAllowedByMainTheorem) {
  for (auto n : {q(2), q(3), q(5), q(7), q(11), kInf}) {
    for (std::int64_t power = 1; power <= 60; ++power) {
      const std::int64_t one[] = {power};
      std::int64_t k = 0;
      while (!main_theorem_check(k, 0, one, n).holds) ++k;
      ASSERT_EQ(k, corollary1_min_k(power, n)) << power;
    }
  }
}

TEST(PowerLength, Examples) {
  auto a = theorem1_values(6, q(3));
  EXPECT_EQ(a.lower, 2);
  EXPECT_EQ(a.upper, 2);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.condition, Theorem1Condition::b);

  auto b = theorem1_values(7, q(3));
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 3);
  EXPECT_FALSE(b.exact);
  EXPECT_EQ(b.condition, Theorem1Condition::none);

  auto c = theorem1_values(5, q(2));
  EXPECT_EQ(c.lower, 1);
  EXPECT_EQ(c.upper, 1);
  EXPECT_EQ(c.condition, Theorem1Condition::d);

  EXPECT_EQ(theorem1_upper(7, q(3)), 3);
  EXPECT_EQ(theorem1_upper(6, q(3)), 2);
  EXPECT_EQ(theorem1_upper(4, kInf), 3);
  EXPECT_EQ(theorem1_upper(1, q(3)), 1);
  EXPECT_THROW(theorem1_upper(5, q(4)), std::invalid_argument);
}

TEST(PowerLength, TwoCandidatesAndConditions) {
  for (auto n : {q(2), q(3), q(5), q(7), q(11), kInf}) {
    for (std::int64_t power = 1; power <= 200; ++power) {
      auto v = theorem1_values(power, n);
      ASSERT_LE(v.lower, v.upper);
      ASSERT_LE(v.upper, v.lower + 1);
      ASSERT_EQ(v.exact, v.lower == v.upper);
      if (v.condition != Theorem1Condition::none) ASSERT_TRUE(v.exact) << power;

      // recompute which condition fires
      bool a = false, b = false, c = false, d = false;
      if (n.is_finite()) {
        auto r = walk_floor(power, n.value());
        a = power % 2 == 0 && r % 2 == 1;
        b = power % n.value() == 0;
        c = power <= n.value();
        d = n.value() == 2;
      } else {
        c = true;  // every n is below an infinite order
      }
      auto expect = a ? Theorem1Condition::a
                  : b ? Theorem1Condition::b
                  : c ? Theorem1Condition::c
                  : d ? Theorem1Condition::d
                      : Theorem1Condition::none;
      ASSERT_EQ(v.condition, expect) << power;
    }
  }
}

TEST(MotionBound, Examples) {
  EXPECT_EQ(cluster_corollary3_rhs(0, 3, q(3), Parity::even), 2);
  EXPECT_EQ(cluster_corollary3_rhs(0, 3, kInf, Parity::even), 0);
  EXPECT_EQ(cluster_corollary3_rhs(0, 3, kInf, Parity::odd), -1);
  // 2 ceil((4 - [(3-2)/2]_+)/2) - 1
  EXPECT_EQ(cluster_corollary3_rhs(2, 4, q(2), Parity::odd), 3);
  EXPECT_EQ(cluster_corollary3_rhs_floor(2, 4, q(2), Parity::odd), 3);
  EXPECT_EQ(cluster_corollary3_rhs_floor(0, 4, q(3), Parity::even), 2);
  EXPECT_EQ(cluster_corollary3_rhs(0, 4, q(3), Parity::even), 4);
}

TEST(MotionBound, FloorNeverExceedsCeil) {
  for (std::int64_t l = 0; l <= 10; ++l) {
    for (std::int64_t s = 1; s <= 30; ++s) {
      for (auto n : kGridOrders) {
        for (auto p : {Parity::even, Parity::odd}) {
          auto hi = cluster_corollary3_rhs(l, s, n, p);
          auto lo = cluster_corollary3_rhs_floor(l, s, n, p);
          ASSERT_LE(lo, hi);
          ASSERT_LE(hi - lo, 2);
        }
      }
    }
  }
}

}  // namespace
}  // namespace powercl
