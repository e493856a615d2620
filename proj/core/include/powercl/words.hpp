#pragma once

// Elements of a free product of cyclic groups in syllable normal form.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powercl {

// Order of a cyclic group or of a group element; either a positive integer
// or infinite. Infinite compares greater than every finite order.
class Order {
 public:
  constexpr Order() = default;  // infinite

  static constexpr Order infinite() { return Order(); }
  static Order finite(std::int64_t q) {
    if (q < 1) {
      throw std::invalid_argument("order must be a positive integer");
    }
    Order o;
    o.value_ = q;
    return o;
  }

  constexpr bool is_infinite() const { return value_ == 0; }
  constexpr bool is_finite() const { return value_ != 0; }

  std::int64_t value() const {
    if (is_infinite()) {
      throw std::logic_error("value() of an infinite order");
    }
    return value_;
  }

  friend constexpr bool operator==(Order, Order) = default;
  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  std::int64_t value_ = 0;
};

// The free factors A_0, A_1, ... of G, each cyclic of the given order (>= 2).
class FactorSpec {
 public:
  explicit FactorSpec(std::vector<Order> orders);

  std::size_t size() const { return orders_.size(); }
  Order order(std::size_t factor) const { return orders_.at(factor); }
  const std::vector<Order>& orders() const { return orders_; }

  // Canonical exponent of g^e in factor `factor`: 1..q-1 for finite q,
  // e itself for infinite factors. Returns 0 for the identity.
  std::int64_t reduce(std::size_t factor, std::int64_t e) const;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;

 private:
  std::vector<Order> orders_;
};

using SpecPtr = std::shared_ptr<const FactorSpec>;

SpecPtr make_spec(std::vector<Order> orders);

struct Syllable {
  std::uint32_t factor = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  // Identity element of G.
  explicit Word(SpecPtr spec);

  // Single letter g_factor^exponent (normalized; may be the identity).
  static Word letter(SpecPtr spec, std::uint32_t factor, std::int64_t exponent);

  const FactorSpec& spec() const { return *spec_; }
  const SpecPtr& spec_ptr() const { return spec_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }
  std::size_t length() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  bool same_group(const Word& other) const {
    return spec_ == other.spec_ || *spec_ == *other.spec_;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables_ == b.syllables_ && a.same_group(b);
  }

  // Length-lexicographic order on syllable sequences.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.syllables_ < b.syllables_;
  }

 private:
  friend Word normalize(std::span<const Syllable> raw, SpecPtr spec);
  friend Word mul(const Word& a, const Word& b);

  Word(SpecPtr spec, std::vector<Syllable> syllables)
      : spec_(std::move(spec)), syllables_(std::move(syllables)) {}

  SpecPtr spec_;
  std::vector<Syllable> syllables_;
};

// Normal form of an arbitrary syllable sequence: merges same-factor
// neighbours, reduces exponents modulo finite orders, drops trivial
// syllables. Throws std::out_of_range on a bad factor index.
Word normalize(std::span<const Syllable> raw, SpecPtr spec);

// Group operations. Binary operations throw std::invalid_argument when the
// operands live in different free products.
Word mul(const Word& a, const Word& b);
Word inv(const Word& a);
Word pow(const Word& a, std::int64_t n);
// h^-1 g h
Word conj(const Word& g, const Word& h);
// x^-1 y^-1 x y
Word comm(const Word& x, const Word& y);

Word product(std::span<const Word> factors, const SpecPtr& spec);

struct CyclicReduction {
  Word core;
  // w == conjugator * core * conjugator^-1
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);
bool is_conjugate_into_factor(const Word& w);
bool are_conjugate(const Word& v, const Word& w);

// Lexicographically least syllable rotation of a cyclically reduced word.
Word least_rotation(const Word& w);

struct Root {
  Word base;
  std::int64_t exponent;
};

// The cyclic core of w written as base^exponent with exponent maximal.
// Rejects words conjugate into a factor (including the identity).
Root extract_max_root(const Word& w);

// Order of the element a letter denotes.
Order letter_order(const FactorSpec& spec, const Syllable& s);

// Minimal letter order over the cyclic core of w. Rejects words conjugate
// into a factor.
Order min_letter_order(const Word& w);

}  // namespace powercl
