#include "powercl/fairpart.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace powercl {

namespace {

std::int64_t sum_of(const std::vector<std::int64_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

void validate(std::span<const std::int64_t> items) {
  if (items.empty()) throw std::invalid_argument("fp of an empty multiset");
  for (auto v : items) {
    if (v < 1) throw std::invalid_argument("fp items must be positive");
  }
}

Partition finish(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  if (sum_of(a) < sum_of(b)) std::swap(a, b);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return {std::move(a), std::move(b)};
}

Partition split_by_mask(std::span<const std::int64_t> items, std::uint64_t mask) {
  std::vector<std::int64_t> a, b;
  for (std::size_t i = 0; i < items.size(); ++i) {
    ((mask >> i) & 1 ? a : b).push_back(items[i]);
  }
  return finish(std::move(a), std::move(b));
}

Partition enumerate_best(std::span<const std::int64_t> items) {
  auto n = items.size();
  std::uint64_t best_mask = 0;
  auto best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t in = 0, out = 0;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? in : out) += items[i];
    if (std::max(in, out) < best) {
      best = std::max(in, out);
      best_mask = mask;
    }
  }
  return split_by_mask(items, best_mask);
}

// Largest reachable subset sum not exceeding total / 2, with back-pointers.
Partition reachability_best(std::span<const std::int64_t> items) {
  auto total = std::accumulate(items.begin(), items.end(), std::int64_t{0});
  auto half = static_cast<std::size_t>(total / 2);
  constexpr std::int32_t kUnreached = -1;
  constexpr std::int32_t kEmpty = -2;
  std::vector<std::int32_t> via(half + 1, kUnreached);
  via[0] = kEmpty;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto w = static_cast<std::size_t>(items[i]);
    if (w > half) continue;
    for (std::size_t s = half; s >= w; --s) {
      if (via[s] == kUnreached && via[s - w] != kUnreached) {
        via[s] = static_cast<std::int32_t>(i);
      }
      if (s == w) break;
    }
  }
  auto s = half;
  while (via[s] == kUnreached) --s;
  std::vector<bool> taken(items.size(), false);
  while (s > 0) {
    auto i = static_cast<std::size_t>(via[s]);
    taken[i] = true;
    s -= static_cast<std::size_t>(items[i]);
  }
  std::vector<std::int64_t> a, b;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (taken[i] ? a : b).push_back(items[i]);
  }
  return finish(std::move(a), std::move(b));
}

}  // namespace

std::int64_t Partition::first_sum() const { return sum_of(first); }
std::int64_t Partition::second_sum() const { return sum_of(second); }
std::int64_t Partition::max_sum() const {
  return std::max(first_sum(), second_sum());
}

Partition fp_partition(std::span<const std::int64_t> items) {
  validate(items);
  if (items.size() <= kExhaustiveLimit) return enumerate_best(items);
  return reachability_best(items);
}

std::int64_t fp_exact(std::span<const std::int64_t> items) {
  return fp_partition(items).max_sum();
}

std::int64_t fp_enumerate(std::span<const std::int64_t> items) {
  validate(items);
  if (items.size() > 30) {
    throw std::invalid_argument("fp_enumerate is limited to 30 items");
  }
  return enumerate_best(items).max_sum();
}

std::vector<std::int64_t> ones_and_copies(std::int64_t l, std::int64_t kappa,
                                          std::int64_t n) {
  if (l < 0 || kappa < 1 || n < 1) {
    throw std::invalid_argument("need l >= 0, kappa >= 1, N >= 1");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::min(l, kappa)), 1);
  out.insert(out.end(), static_cast<std::size_t>(std::max<std::int64_t>(kappa - l, 0)), n);
  return out;
}

std::optional<std::int64_t> fp_formula1(std::int64_t l, std::int64_t kappa, Order n) {
  if (l < 0 || kappa < 1) throw std::invalid_argument("need l >= 0, kappa >= 1");
  if (kappa <= l) return (kappa + 1) / 2;
  if (n.is_infinite()) return std::nullopt;
  auto q = n.value();
  if ((kappa - l) % 2 == 0) return (l + 1) / 2 + q * (kappa - l) / 2;
  return (l + 1 - std::min(l, q)) / 2 + q * (kappa - l + 1) / 2;
}

Partition fp_greedy_witness(std::int64_t l, std::int64_t kappa, Order n) {
  if (n.is_infinite()) {
    throw std::invalid_argument("fp_greedy_witness needs a finite N");
  }
  auto q = n.value();
  if (l < 0 || kappa < 1) throw std::invalid_argument("need l >= 0, kappa >= 1");
  auto large = std::max<std::int64_t>(kappa - l, 0);
  auto ones = std::min(l, kappa);

  std::vector<std::int64_t> a(static_cast<std::size_t>(large / 2), q);
  std::vector<std::int64_t> b(static_cast<std::size_t>(large - large / 2), q);
  // b carries the extra N when `large` is odd; ones go to a until balanced.
  auto deficit = (large % 2) * q;
  auto compensate = std::min(deficit, ones);
  a.insert(a.end(), static_cast<std::size_t>(compensate), 1);
  auto rest = ones - compensate;
  b.insert(b.end(), static_cast<std::size_t>(rest - rest / 2), 1);
  a.insert(a.end(), static_cast<std::size_t>(rest / 2), 1);
  return finish(std::move(a), std::move(b));
}

}  // namespace powercl
