#include "powercl/words.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace powercl {

namespace {

void require_same_group(const Word& a, const Word& b) {
  if (!a.same_group(b)) {
    throw std::invalid_argument("words belong to different free products");
  }
}

// Appends s to a normal-form stack, cancelling against its top.
void push_reduced(std::vector<Syllable>& out, const FactorSpec& spec,
                  Syllable s) {
  if (s.factor >= spec.size()) {
    throw std::out_of_range("syllable factor index " +
                            std::to_string(s.factor) + " out of range");
  }
  auto e = spec.reduce(s.factor, s.exponent);
  if (e == 0) return;
  if (!out.empty() && out.back().factor == s.factor) {
    auto merged = spec.reduce(s.factor, out.back().exponent + e);
    if (merged == 0) {
      out.pop_back();
    } else {
      out.back().exponent = merged;
    }
    return;
  }
  out.push_back({s.factor, e});
}

}  // namespace

FactorSpec::FactorSpec(std::vector<Order> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) {
    throw std::invalid_argument("a free product needs at least one factor");
  }
  for (auto o : orders_) {
    if (o.is_finite() && o.value() < 2) {
      throw std::invalid_argument("finite factor orders must be >= 2");
    }
  }
}

std::int64_t FactorSpec::reduce(std::size_t factor, std::int64_t e) const {
  auto o = orders_.at(factor);
  if (o.is_infinite()) return e;
  auto q = o.value();
  auto r = e % q;
  return r < 0 ? r + q : r;
}

SpecPtr make_spec(std::vector<Order> orders) {
  return std::make_shared<const FactorSpec>(std::move(orders));
}

Word::Word(SpecPtr spec) : spec_(std::move(spec)) {
  if (!spec_) throw std::invalid_argument("null factor spec");
}

Word Word::letter(SpecPtr spec, std::uint32_t factor, std::int64_t exponent) {
  Syllable s{factor, exponent};
  return normalize(std::span<const Syllable>(&s, 1), std::move(spec));
}

Word normalize(std::span<const Syllable> raw, SpecPtr spec) {
  if (!spec) throw std::invalid_argument("null factor spec");
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (auto s : raw) push_reduced(out, *spec, s);
  return Word(std::move(spec), std::move(out));
}

Word mul(const Word& a, const Word& b) {
  require_same_group(a, b);
  std::vector<Syllable> out(a.syllables_);
  out.reserve(a.length() + b.length());
  for (auto s : b.syllables_) push_reduced(out, *a.spec_, s);
  return Word(a.spec_, std::move(out));
}

Word inv(const Word& a) {
  auto syl = a.syllables();
  std::vector<Syllable> raw(syl.rbegin(), syl.rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return normalize(raw, a.spec_ptr());
}

Word pow(const Word& a, std::int64_t n) {
  if (n < 0) return pow(inv(a), -n);
  Word result(a.spec_ptr());
  Word base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Word conj(const Word& g, const Word& h) { return mul(mul(inv(h), g), h); }

Word comm(const Word& x, const Word& y) {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Word product(std::span<const Word> factors, const SpecPtr& spec) {
  Word result(spec);
  for (const auto& f : factors) result = mul(result, f);
  return result;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& spec = w.spec();
  auto syl = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = syl.size();
  while (hi - lo >= 2 && syl[lo].factor == syl[hi - 1].factor) {
    auto merged = spec.reduce(syl[lo].factor,
                              syl[lo].exponent + syl[hi - 1].exponent);
    if (merged != 0) {
      // w = P s mid t P^-1 with s, t in one factor: conjugating by P s
      // leaves mid (t s), which is cyclically reduced.
      std::vector<Syllable> core(syl.begin() + lo + 1, syl.begin() + hi - 1);
      core.push_back({syl[lo].factor, merged});
      return {normalize(core, w.spec_ptr()),
              normalize(syl.subspan(0, lo + 1), w.spec_ptr())};
    }
    ++lo;
    --hi;
  }
  return {normalize(syl.subspan(lo, hi - lo), w.spec_ptr()),
          normalize(syl.subspan(0, lo), w.spec_ptr())};
}

bool is_cyclically_reduced(const Word& w) {
  return w.length() <= 1 || w[0].factor != w[w.length() - 1].factor;
}

bool is_conjugate_into_factor(const Word& w) {
  return cyclic_reduce(w).core.length() <= 1;
}

namespace {

bool is_rotation(std::span<const Syllable> a, std::span<const Syllable> b) {
  if (a.size() != b.size()) return false;
  auto n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = a[(i + r) % n] == b[i];
    }
    if (match) return true;
  }
  return n == 0;
}

}  // namespace

bool are_conjugate(const Word& v, const Word& w) {
  require_same_group(v, w);
  auto cv = cyclic_reduce(v).core;
  auto cw = cyclic_reduce(w).core;
  if (cv.length() != cw.length()) return false;
  // Cyclic factors are abelian, so single letters are conjugate only when
  // equal.
  if (cv.length() <= 1) return cv == cw;
  return is_rotation(cv.syllables(), cw.syllables());
}

Word least_rotation(const Word& w) {
  auto syl = w.syllables();
  auto n = syl.size();
  if (n <= 1) return w;
  std::vector<Syllable> best(syl.begin(), syl.end());
  std::vector<Syllable> cand(n);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = syl[(i + r) % n];
    if (cand < best) best = cand;
  }
  return normalize(best, w.spec_ptr());
}

Root extract_max_root(const Word& w) {
  auto core = cyclic_reduce(w).core;
  if (core.length() <= 1) {
    throw std::invalid_argument(
        "extract_max_root: word is conjugate into a free factor");
  }
  auto syl = core.syllables();
  auto n = syl.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = syl[i] == syl[i - p];
    }
    if (periodic) {
      return {normalize(syl.subspan(0, p), core.spec_ptr()),
              static_cast<std::int64_t>(n / p)};
    }
  }
  return {core, 1};  // unreachable: p == n always matches
}

Order letter_order(const FactorSpec& spec, const Syllable& s) {
  auto o = spec.order(s.factor);
  if (o.is_infinite()) {
    return s.exponent == 0 ? Order::finite(1) : Order::infinite();
  }
  auto q = o.value();
  return Order::finite(q / std::gcd(q, spec.reduce(s.factor, s.exponent)));
}

Order min_letter_order(const Word& w) {
  auto core = cyclic_reduce(w).core;
  if (core.length() <= 1) {
    throw std::invalid_argument(
        "min_letter_order: word is conjugate into a free factor");
  }
  Order best = Order::infinite();
  for (const auto& s : core.syllables()) {
    best = std::min(best, letter_order(core.spec(), s));
  }
  return best;
}

}  // namespace powercl
