#include "powercl/oracle.hpp"

#include <stdexcept>

#include "powercl/constructors.hpp"
#include "powercl/random.hpp"

namespace powercl {

namespace {

void extend_words(const SpecPtr& spec, std::size_t remaining, std::int64_t inf_range,
                  std::vector<Syllable>& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(normalize(prefix, spec));
    return;
  }
  for (std::uint32_t f = 0; f < spec->size(); ++f) {
    if (!prefix.empty() && prefix.back().factor == f) continue;
    auto order = spec->order(f);
    std::vector<std::int64_t> exps;
    if (order.is_finite()) {
      for (std::int64_t e = 1; e < order.value(); ++e) exps.push_back(e);
    } else {
      for (std::int64_t e = -inf_range; e <= inf_range; ++e) {
        if (e != 0) exps.push_back(e);
      }
    }
    for (auto e : exps) {
      prefix.push_back({f, e});
      extend_words(spec, remaining - 1, inf_range, prefix, out);
      prefix.pop_back();
    }
  }
}

Word random_word(Rng& rng, const SpecPtr& spec, std::size_t len) {
  std::vector<Syllable> s;
  auto factors = static_cast<std::int64_t>(spec->size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t f;
    do {
      f = static_cast<std::uint32_t>(rng.uniform(0, factors - 1));
    } while (factors > 1 && !s.empty() && s.back().factor == f);
    auto order = spec->order(f);
    std::int64_t e;
    if (order.is_finite()) {
      e = rng.uniform(1, order.value() - 1);
    } else {
      e = rng.uniform(1, 3) * (rng.chance(1, 2) ? 1 : -1);
    }
    s.push_back({f, e});
  }
  return normalize(s, spec);
}

Word random_word_upto(Rng& rng, const SpecPtr& spec, std::size_t max_len) {
  return random_word(rng, spec, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len))));
}

// Splits e >= 1 into up to three positive parts.
std::vector<std::int64_t> random_composition(Rng& rng, std::int64_t e) {
  auto parts = rng.uniform(1, std::min<std::int64_t>(3, e));
  std::vector<std::int64_t> out;
  auto left = e;
  for (std::int64_t i = parts; i > 1; --i) {
    auto take = rng.uniform(1, left - (i - 1));
    out.push_back(take);
    left -= take;
  }
  out.push_back(left);
  return out;
}

void insert_trivial_pairs(Rng& rng, Certificate& cert, std::size_t max_len) {
  auto extra = rng.uniform(0, 2);
  for (std::int64_t i = 0; i < extra; ++i) {
    auto w = random_word_upto(rng, cert.spec, max_len);
    auto one = Word(cert.spec);
    auto kind = rng.uniform(0, 2);
    CommutatorPair p{kind == 2 ? one : w, kind == 1 ? one : w};
    auto at = rng.uniform(0, static_cast<std::int64_t>(cert.commutators.size()));
    cert.commutators.insert(cert.commutators.begin() + at, p);
  }
}

std::optional<Certificate> random_product(Rng& rng, const FuzzLimits& lim) {
  const auto& spec = lim.spec;
  auto k = rng.uniform(0, lim.max_k);
  auto l = rng.uniform(0, lim.max_l);
  if (k + l == 0) return std::nullopt;
  Certificate cert{spec, {}, {}, Word(spec), {}};
  for (std::int64_t i = 0; i < k; ++i) {
    cert.commutators.push_back({random_word_upto(rng, spec, lim.max_len),
                                random_word_upto(rng, spec, lim.max_len)});
  }
  for (std::int64_t i = 0; i < l; ++i) {
    auto letter = random_word(rng, spec, 1);
    cert.factor_conjugates.push_back({letter, random_word_upto(rng, spec, lim.max_len)});
  }
  auto p = lhs(cert);
  if (p.is_identity() || is_conjugate_into_factor(p)) return std::nullopt;
  auto root = extract_max_root(p);
  if (root.exponent < 2) return std::nullopt;
  auto g = inv(cyclic_reduce(p).conjugator);
  cert.base = root.base;
  for (auto part : random_composition(rng, root.exponent)) cert.power_terms.push_back({g, part});
  return cert;
}

std::optional<Certificate> planted(Rng& rng, const FuzzLimits& lim) {
  const auto& spec = lim.spec;
  auto a = random_word(rng, spec, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(lim.max_len))));
  auto b = random_word(rng, spec, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(lim.max_len))));
  std::optional<Certificate> cert;
  try {
    switch (rng.uniform(0, 2)) {
      case 0:
        cert = culler_power(a, b, rng.uniform(1, lim.max_power));
        break;
      case 1:
        cert = culler_cube(a, b);
        break;
      default: {
        std::vector<std::uint32_t> finite;
        for (std::uint32_t f = 0; f < spec->size(); ++f) {
          if (spec->order(f).is_finite()) finite.push_back(f);
        }
        if (finite.empty()) return std::nullopt;
        auto f = finite[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(finite.size()) - 1))];
        auto q = spec->order(f).value();
        auto z = Word::letter(spec, f, rng.uniform(1, q - 1));
        auto x = inv(z);
        auto y = conj(z, b);
        auto base = mul(x, y);
        if (base.is_identity() || is_conjugate_into_factor(base)) return std::nullopt;
        auto s = rng.uniform(1, 3);
        cert = Certificate{spec, lemma2_decompose(x, y, q, s), {}, base, {{Word(spec), q * s}}};
        break;
      }
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  insert_trivial_pairs(rng, *cert, lim.max_len);
  return conjugate_certificate(*cert, random_word_upto(rng, spec, lim.max_len));
}

std::optional<Certificate> combined(Rng& rng, const FuzzLimits& lim) {
  const auto& spec = lim.spec;
  auto a = random_word(rng, spec, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(lim.max_len))));
  auto b = random_word(rng, spec, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(lim.max_len))));
  try {
    auto first = culler_power(a, b, rng.uniform(1, lim.max_power));
    auto second = conjugate_certificate(culler_power(a, b, rng.uniform(1, lim.max_power)),
                                        random_word_upto(rng, spec, lim.max_len));
    first.commutators.insert(first.commutators.end(), second.commutators.begin(),
                             second.commutators.end());
    first.power_terms.insert(first.power_terms.end(), second.power_terms.begin(),
                             second.power_terms.end());
    return conjugate_certificate(first, random_word_upto(rng, spec, lim.max_len));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Random commutators followed by the letters needed to reach u^n exactly.
std::optional<Certificate> fixup(Rng& rng, const FuzzLimits& lim) {
  const auto& spec = lim.spec;
  auto u = random_word(rng, spec, static_cast<std::size_t>(rng.uniform(2, std::max<std::int64_t>(2, static_cast<std::int64_t>(lim.max_len)))));
  if (is_conjugate_into_factor(u)) return std::nullopt;
  auto n = rng.uniform(2, std::max<std::int64_t>(2, lim.max_power));
  Certificate cert{spec, {}, {}, u, {{Word(spec), n}}};
  auto k = rng.uniform(1, std::max<std::int64_t>(1, lim.max_k));
  for (std::int64_t i = 0; i < k; ++i) {
    cert.commutators.push_back({random_word_upto(rng, spec, lim.max_len),
                                random_word_upto(rng, spec, lim.max_len)});
  }
  auto rest = mul(inv(commutator_product(cert.commutators, spec)), pow(u, n));
  for (const auto& s : rest.syllables()) {
    cert.factor_conjugates.push_back({Word::letter(spec, s.factor, s.exponent), Word(spec)});
  }
  return conjugate_certificate(cert, random_word_upto(rng, spec, lim.max_len));
}

}  // namespace

std::vector<Word> words_up_to(const SpecPtr& spec, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Syllable> prefix;
  for (std::size_t len = 0; len <= max_len; ++len) {
    extend_words(spec, len, static_cast<std::int64_t>(max_len), prefix, out);
  }
  return out;
}

std::string_view to_string(SearchOutcome o) {
  return o == SearchOutcome::found ? "found" : "exhausted";
}

Certificate certificate_for_power(const std::vector<CommutatorPair>& pairs, const Word& target) {
  auto root = extract_max_root(target);
  auto g = inv(cyclic_reduce(target).conjugator);
  return Certificate{target.spec_ptr(), pairs, {}, root.base, {{g, root.exponent}}};
}

SearchReport bounded_cl_search(const Word& target, std::int64_t k, std::size_t max_len,
                               std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("bounded_cl_search: k must be at least 1");
  const auto& spec = target.spec_ptr();
  auto words = words_up_to(spec, max_len);
  SearchReport report{target, k, max_len, SearchOutcome::exhausted, {}, std::nullopt,
                      words.size(), 0};

  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < 2 * k; ++i) {
    if (total > cap / words.size()) {
      throw ResourceCapExceeded("search space of " + std::to_string(words.size()) + "^" +
                                std::to_string(2 * k) + " tuples exceeds the cap of " +
                                std::to_string(cap));
    }
    total *= words.size();
  }

  auto w = words.size();
  std::vector<Word> comms;
  comms.reserve(w * w);
  for (const auto& x : words) {
    for (const auto& y : words) comms.push_back(comm(x, y));
  }

  std::vector<std::size_t> chosen(static_cast<std::size_t>(k));
  std::function<bool(std::size_t, const Word&)> dfs = [&](std::size_t depth,
                                                          const Word& prefix) -> bool {
    for (std::size_t i = 0; i < comms.size(); ++i) {
      chosen[depth] = i;
      auto p = mul(prefix, comms[i]);
      if (depth + 1 == chosen.size()) {
        ++report.tuples_checked;
        if (p == target) return true;
      } else if (dfs(depth + 1, p)) {
        return true;
      }
    }
    return false;
  };

  if (dfs(0, Word(spec))) {
    report.outcome = SearchOutcome::found;
    for (auto i : chosen) report.witness.push_back({words[i / w], words[i % w]});
    if (!is_conjugate_into_factor(target)) {
      report.certificate = certificate_for_power(report.witness, target);
    }
  }
  return report;
}

std::string_view to_string(FuzzMode m) {
  switch (m) {
    case FuzzMode::random_product: return "random_product";
    case FuzzMode::planted: return "planted";
    case FuzzMode::combined: return "combined";
    case FuzzMode::fixup: return "fixup";
  }
  return "?";
}

FuzzSummary fuzz_certificates(std::uint64_t seed, std::size_t count, const FuzzLimits& limits,
                              const std::function<void(const Certificate&, FuzzMode)>& emit) {
  if (!limits.spec || limits.spec->size() < 2) {
    throw std::invalid_argument("fuzzing needs at least two free factors");
  }
  if (limits.max_len < 1 || limits.max_k < 0 || limits.max_l < 0 || limits.max_power < 1) {
    throw std::invalid_argument("fuzz limits must be positive");
  }
  Rng rng(seed);
  FuzzSummary summary;
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(count);
  while (summary.emitted < count && summary.attempts < max_attempts) {
    ++summary.attempts;
    auto mode = static_cast<FuzzMode>(rng.uniform(0, 3));
    std::optional<Certificate> cert;
    switch (mode) {
      case FuzzMode::random_product: cert = random_product(rng, limits); break;
      case FuzzMode::planted: cert = planted(rng, limits); break;
      case FuzzMode::combined: cert = combined(rng, limits); break;
      case FuzzMode::fixup: cert = fixup(rng, limits); break;
    }
    if (!cert) continue;
    ++summary.emitted;
    ++summary.per_mode[static_cast<int>(mode)];
    if (!verify(*cert)) {
      ++summary.invalid;
    } else if (!check_main_theorem(*cert).holds) {
      ++summary.theorem_violations;
    }
    emit(*cert, mode);
  }
  return summary;
}

}  // namespace powercl
