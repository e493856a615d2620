#include "powercl/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powercl {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::domain_error("division by zero");
  auto d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  return -floor_div(-p, q);
}

std::int64_t floor_c(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::domain_error("division by zero");
  return p == 0 ? -1 : floor_div(p, q);
}

std::int64_t floor_plus(std::int64_t p, std::int64_t q) {
  return std::max<std::int64_t>(floor_div(p, q), 0);
}

std::int64_t floor_by_order(std::int64_t p, Order n) {
  return n.is_infinite() ? 0 : floor_div(p, n.value());
}

std::int64_t ceil_by_order(std::int64_t p, Order n) {
  return n.is_infinite() ? 0 : ceil_div(p, n.value());
}

std::int64_t count_zeros(std::span<const std::int64_t> tuple) {
  return std::count(tuple.begin(), tuple.end(), 0);
}

std::int64_t count_odd(std::span<const std::int64_t> tuple) {
  return std::count_if(tuple.begin(), tuple.end(),
                       [](std::int64_t v) { return v % 2 != 0; });
}

std::string_view to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

namespace {

std::int64_t sum(std::span<const std::int64_t> xs) {
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

void require_powers(std::span<const std::int64_t> n_list) {
  if (n_list.empty()) throw std::invalid_argument("n_list must be nonempty");
  for (auto n : n_list) {
    if (n < 1) throw std::invalid_argument("exponents n_i must be positive");
  }
}

// [(l + 1 - N) / 2]_+, which is 0 for N = inf.
std::int64_t odd_branch_shift(std::int64_t l, Order n) {
  return n.is_infinite() ? 0 : floor_plus(l + 1 - n.value(), 2);
}

void require_theorem1_order(Order n) {
  if (n.is_finite() && (n.value() < 2 || (n.value() > 2 && n.value() % 2 == 0))) {
    throw std::invalid_argument("N must be 2, an odd order >= 3, or inf");
  }
}

}  // namespace

Parity main_theorem_parity(std::int64_t l, std::span<const std::int64_t> n_list) {
  auto excess = sum(n_list) - static_cast<std::int64_t>(n_list.size()) - l;
  return excess % 2 == 0 ? Parity::even : Parity::odd;
}

std::int64_t main_theorem_rhs(std::int64_t l, std::span<const std::int64_t> n_list,
                              Order n_min) {
  require_powers(n_list);
  auto total = sum(n_list);
  if (main_theorem_parity(l, n_list) == Parity::even) {
    return 2 * floor_by_order(total - floor_div(l + 1, 2), n_min);
  }
  return 2 * floor_by_order(total - odd_branch_shift(l, n_min), n_min) - 1;
}

std::int64_t phi(std::int64_t k, std::int64_t l, std::span<const std::int64_t> n_list) {
  require_powers(n_list);
  return 2 - 2 * k - l + sum(n_list) - static_cast<std::int64_t>(n_list.size());
}

std::int64_t psi(std::int64_t l, std::span<const std::int64_t> n_list, Order n_min) {
  return main_theorem_rhs(l, n_list, n_min);
}

BoundReport main_theorem_check(std::int64_t k, std::int64_t l,
                               std::span<const std::int64_t> n_list, Order n_min) {
  if (k < 0 || l < 0) throw std::invalid_argument("k and l must be >= 0");
  BoundReport r;
  r.lhs = phi(k, l, n_list);
  r.rhs = main_theorem_rhs(l, n_list, n_min);
  r.holds = r.lhs <= r.rhs;
  r.parity = main_theorem_parity(l, n_list);
  return r;
}

std::int64_t main_theorem_min_2k_plus_l(std::int64_t l,
                                        std::span<const std::int64_t> n_list,
                                        Order n_min) {
  return 2 + sum(n_list) - static_cast<std::int64_t>(n_list.size()) -
         psi(l, n_list, n_min);
}

std::int64_t corollary1_min_k(std::int64_t n, Order n_min) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return floor_div(n, 2) - floor_by_order(n, n_min) + 1;
}

std::int64_t theorem1_upper(std::int64_t n, Order n_min) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  require_theorem1_order(n_min);
  if (n_min.is_infinite()) return floor_div(n, 2) + 1;
  auto q = n_min.value();
  if (q == 2) return 1;
  auto r = n / q;
  auto t = n - r * q;
  const std::int64_t rt[] = {r, t};
  const std::int64_t rr[] = {r};
  const std::int64_t nn[] = {n};
  return floor_div(n, 2) - r + 2 - count_zeros(rt) -
         count_odd(rr) * (1 - count_odd(nn));
}

std::string_view to_string(Theorem1Condition c) {
  switch (c) {
    case Theorem1Condition::a: return "a";
    case Theorem1Condition::b: return "b";
    case Theorem1Condition::c: return "c";
    case Theorem1Condition::d: return "d";
    case Theorem1Condition::none: break;
  }
  return "none";
}

Theorem1Condition theorem1_condition(std::int64_t n, Order n_min) {
  auto quotient = floor_by_order(n, n_min);
  if (n % 2 == 0 && quotient % 2 != 0) return Theorem1Condition::a;
  if (n_min.is_finite() && n % n_min.value() == 0) return Theorem1Condition::b;
  if (n_min.is_infinite() || n <= n_min.value()) return Theorem1Condition::c;
  if (n_min == Order::finite(2)) return Theorem1Condition::d;
  return Theorem1Condition::none;
}

Theorem1Values theorem1_values(std::int64_t n, Order n_min) {
  Theorem1Values v;
  v.lower = corollary1_min_k(n, n_min);
  v.upper = theorem1_upper(n, n_min);
  v.exact = v.lower == v.upper;
  v.condition = theorem1_condition(n, n_min);
  return v;
}

PriorBounds prior_bounds(std::int64_t k, std::int64_t l,
                         std::span<const std::int64_t> n_list, Order n_min) {
  require_powers(n_list);
  auto total = sum(n_list);
  auto excess = total - static_cast<std::int64_t>(n_list.size());
  PriorBounds out;
  auto make = [&](std::int64_t bound) {
    BoundReport r;
    r.lhs = bound;
    r.rhs = 2 * k + l;
    r.holds = r.lhs <= r.rhs;
    r.parity = main_theorem_parity(l, n_list);
    return r;
  };
  if (l == 0) out.chen = make(excess - floor_by_order(2 * total, n_min) + 2);
  if (n_min.is_infinite() || n_min.value() > total) {
    out.large_order = make(excess + 2);
  }
  return out;
}

namespace {

template <typename Round>
std::int64_t corollary3(std::int64_t l, std::int64_t sum_d, Order n_next,
                        Parity parity, Round round) {
  if (parity == Parity::even) {
    return 2 * round(sum_d - floor_div(l + 1, 2), n_next);
  }
  return 2 * round(sum_d - odd_branch_shift(l, n_next), n_next) - 1;
}

}  // namespace

std::int64_t cluster_corollary3_rhs(std::int64_t l, std::int64_t sum_d,
                                    Order n_next, Parity parity) {
  return corollary3(l, sum_d, n_next, parity, ceil_by_order);
}

std::int64_t cluster_corollary3_rhs_floor(std::int64_t l, std::int64_t sum_d,
                                          Order n_next, Parity parity) {
  return corollary3(l, sum_d, n_next, parity, floor_by_order);
}

}  // namespace powercl
