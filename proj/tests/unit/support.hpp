#pragma once

// Generators and slow reference implementations shared by the unit tests.

#include <cstdint>
#include <vector>

#include "powercl/random.hpp"
#include "powercl/words.hpp"

namespace powercl::testing {

// Unreduced syllable list: neighbours may share a factor, exponents may be
// zero or out of range.
inline std::vector<Syllable> random_raw(Rng& rng, const FactorSpec& spec, std::size_t len) {
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < len; ++i) {
    auto f = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(spec.size()) - 1));
    out.push_back({f, rng.uniform(-7, 7)});
  }
  return out;
}

// Reduced word with exactly `len` syllables.
inline Word random_word(Rng& rng, const SpecPtr& spec, std::size_t len, std::int64_t inf_range = 3) {
  std::vector<Syllable> s;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t f;
    do {
      f = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(spec->size()) - 1));
    } while (!s.empty() && s.back().factor == f);
    auto q = spec->order(f);
    auto e = q.is_finite() ? rng.uniform(1, q.value() - 1)
                           : rng.uniform(1, inf_range) * (rng.chance(1, 2) ? 1 : -1);
    s.push_back({f, e});
  }
  return normalize(s, spec);
}

inline Word random_word_upto(Rng& rng, const SpecPtr& spec, std::size_t max_len) {
  return random_word(rng, spec, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len))));
}

// Rewrites until nothing changes: drop trivial syllables, merge equal-factor
// neighbours. Quadratic, shares no code with normalize().
inline std::vector<Syllable> naive_reduce(std::vector<Syllable> s, const FactorSpec& spec) {
  auto canon = [&](const Syllable& x) {
    auto q = spec.order(x.factor);
    if (q.is_infinite()) return x.exponent;
    auto r = x.exponent % q.value();
    return r < 0 ? r + q.value() : r;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto c = canon(s[i]);
      if (c != s[i].exponent) {
        s[i].exponent = c;
        changed = true;
      }
      if (s[i].exponent == 0) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (i + 1 < s.size() && s[i].factor == s[i + 1].factor) {
        s[i].exponent += s[i + 1].exponent;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
    }
  }
  return s;
}

inline std::vector<Syllable> concat(const Word& a, const Word& b) {
  std::vector<Syllable> s(a.syllables().begin(), a.syllables().end());
  s.insert(s.end(), b.syllables().begin(), b.syllables().end());
  return s;
}

}  // namespace powercl::testing
