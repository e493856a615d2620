#pragma once

// The fair partition function
//   fp(M) = min over sub-multisets A of max(sum A, sum (M \ A))
// for multisets of positive integers, plus the closed form for the
// multisets made of ones and copies of one larger value.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powercl/words.hpp"

namespace powercl {

struct Partition {
  std::vector<std::int64_t> first;   // the heavier part, sorted descending
  std::vector<std::int64_t> second;  // sorted descending

  std::int64_t first_sum() const;
  std::int64_t second_sum() const;
  std::int64_t max_sum() const;
};

// Optimal two-way split. Subset-sum reachability up to total/2, with plain
// enumeration of all 2^n subsets for at most `kExhaustiveLimit` items.
// Throws std::invalid_argument on an empty multiset or a nonpositive item.
Partition fp_partition(std::span<const std::int64_t> items);
std::int64_t fp_exact(std::span<const std::int64_t> items);

inline constexpr std::size_t kExhaustiveLimit = 12;

// Enumerates every subset; test oracle for the reachability solver.
std::int64_t fp_enumerate(std::span<const std::int64_t> items);

// The multiset of min(l, kappa) ones and max(kappa - l, 0) copies of N.
// N must be finite.
std::vector<std::int64_t> ones_and_copies(std::int64_t l, std::int64_t kappa,
                                          std::int64_t n);

// Closed form of fp(ones_and_copies(l, kappa, N)); nullopt (unbounded) when
// N = inf and kappa > l.
std::optional<std::int64_t> fp_formula1(std::int64_t l, std::int64_t kappa, Order n);

// Partition built by splitting the N's evenly, compensating the odd one with
// ones, then halving the leftover ones. N must be finite.
Partition fp_greedy_witness(std::int64_t l, std::int64_t kappa, Order n);

}  // namespace powercl
