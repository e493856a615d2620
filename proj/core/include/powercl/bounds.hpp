#pragma once

// Exact integer evaluators for the commutator-length inequalities: the main
// inequality for products of commutators and factor conjugates equal to a
// generalized power, its corollaries for plain powers, the two-candidate
// values of k(G, n), and the surface-motion corollary used by surfmaps.
//
// No floating point is used anywhere; every bracket is an exact rational
// floor or ceiling. An infinite order N makes every quotient x / N equal 0.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "powercl/words.hpp"

namespace powercl {

// Exact floor / ceiling of p / q (q != 0).
std::int64_t floor_div(std::int64_t p, std::int64_t q);
std::int64_t ceil_div(std::int64_t p, std::int64_t q);

// [p/q]_c: floor, except that the value at zero is -1.
std::int64_t floor_c(std::int64_t p, std::int64_t q);
// [p/q]_+ = max([p/q], 0)
std::int64_t floor_plus(std::int64_t p, std::int64_t q);

// floor(p / N) and ceil(p / N), 0 for N = inf.
std::int64_t floor_by_order(std::int64_t p, Order n);
std::int64_t ceil_by_order(std::int64_t p, Order n);

// Tuple counters from the k(G, n) upper-bound chain.
std::int64_t count_zeros(std::span<const std::int64_t> tuple);
std::int64_t count_odd(std::span<const std::int64_t> tuple);

enum class Parity { even, odd };
std::string_view to_string(Parity p);

struct BoundReport {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  Parity parity = Parity::even;
};

// Parity of sum(n_i - 1) - l, which selects the branch of the main bound.
Parity main_theorem_parity(std::int64_t l, std::span<const std::int64_t> n_list);

// Right-hand side of
//   2 - 2k - l + sum(n_i - 1) <= 2[(sum n_i - [(l+1)/2]) / N]            (even)
//                                2[(sum n_i - [(l+1-N)/2]_+) / N] - 1    (odd)
std::int64_t main_theorem_rhs(std::int64_t l, std::span<const std::int64_t> n_list,
                              Order n_min);

BoundReport main_theorem_check(std::int64_t k, std::int64_t l,
                               std::span<const std::int64_t> n_list, Order n_min);

// Psi(l) and Phi(k, l) of the main proof; Psi coincides with the rhs above.
std::int64_t psi(std::int64_t l, std::span<const std::int64_t> n_list, Order n_min);
std::int64_t phi(std::int64_t k, std::int64_t l, std::span<const std::int64_t> n_list);

// Lower bound on 2k + l implied by the main inequality.
std::int64_t main_theorem_min_2k_plus_l(std::int64_t l,
                                        std::span<const std::int64_t> n_list,
                                        Order n_min);

// Least k with c_1 ... c_k = u^n for u not conjugate into a factor:
// [n/2] - [n/N] + 1.
std::int64_t corollary1_min_k(std::int64_t n, Order n_min);

// Upper candidate for k(G, n) realised by the explicit constructions.
// N must be 2, odd, or infinite (the minimal order of a nontrivial element of
// a free product is prime or infinite).
std::int64_t theorem1_upper(std::int64_t n, Order n_min);

enum class Theorem1Condition { none, a, b, c, d };
std::string_view to_string(Theorem1Condition c);

// First of the exactness conditions that fires, in order a, b, c, d:
//   a) n even and [n/N] odd   b) N | n   c) n <= N   d) N = 2
Theorem1Condition theorem1_condition(std::int64_t n, Order n_min);

struct Theorem1Values {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  Theorem1Condition condition = Theorem1Condition::none;
};

Theorem1Values theorem1_values(std::int64_t n, Order n_min);

// Earlier bounds on 2k + l: Chen's (l = 0 only) and the large-order bound
// sum(n_i - 1) + 2 (N > sum n_i only). Each report has lhs = the bound, rhs = 2k + l.
struct PriorBounds {
  std::optional<BoundReport> chen;
  std::optional<BoundReport> large_order;
};

PriorBounds prior_bounds(std::int64_t k, std::int64_t l,
                         std::span<const std::int64_t> n_list, Order n_min);

// Right-hand side of the surface-motion corollary
//   chi(S) - l + sum_D (d_D - 1) <= 2 ceil((sum d - [(l+1)/2]) / N_{l+1})        (even)
//                                   2 ceil((sum d - [(l+1-N_{l+1})/2]_+) / N_{l+1}) - 1 (odd)
// with N_{l+1} = inf beyond the last collision point. The `_floor` variant
// replaces both ceilings by floors.
std::int64_t cluster_corollary3_rhs(std::int64_t l, std::int64_t sum_d,
                                    Order n_next, Parity parity);
std::int64_t cluster_corollary3_rhs_floor(std::int64_t l, std::int64_t sum_d,
                                          Order n_next, Parity parity);

}  // namespace powercl
