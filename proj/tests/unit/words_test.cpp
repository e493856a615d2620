#include <gtest/gtest.h>

#include "powercl/text.hpp"
#include "powercl/words.hpp"
#include "support.hpp"

namespace powercl {
namespace {

using testing::naive_reduce;
using testing::random_raw;
using testing::random_word;
using testing::random_word_upto;

const SpecPtr kInfInf = make_spec({Order::infinite(), Order::infinite()});
const SpecPtr k3Inf = make_spec({Order::finite(3), Order::infinite()});
const SpecPtr k3x3 = make_spec({Order::finite(3), Order::finite(3)});
const SpecPtr k235 = make_spec({Order::finite(2), Order::finite(3), Order::finite(5)});

Word w(const char* text, const SpecPtr& spec) { return parse_word(text, spec); }

TEST(Order, InfiniteIsLargest) {
  EXPECT_LT(Order::finite(1000000), Order::infinite());
  EXPECT_LT(Order::finite(2), Order::finite(3));
  EXPECT_EQ(Order(), Order::infinite());
  EXPECT_THROW(Order::finite(0), std::invalid_argument);
  EXPECT_THROW(Order::infinite().value(), std::logic_error);
}

TEST(FactorSpec, RejectsOrderOne) {
  EXPECT_THROW(make_spec({Order::finite(1), Order::infinite()}), std::invalid_argument);
}

TEST(FactorSpec, ReduceIsCanonical) {
  EXPECT_EQ(k3Inf->reduce(0, 4), 1);
  EXPECT_EQ(k3Inf->reduce(0, -1), 2);
  EXPECT_EQ(k3Inf->reduce(0, 3), 0);
  EXPECT_EQ(k3Inf->reduce(1, -5), -5);
}

TEST(Normalize, MergesAndCancels) {
  std::vector<Syllable> raw{{0, 2}, {0, 2}, {1, 1}, {1, -1}, {0, -1}};
  // a^2 a^2 b b^-1 a^-1 in Z3 * Z = a^3 = 1
  EXPECT_TRUE(normalize(raw, k3Inf).is_identity());
  EXPECT_EQ(format_word(normalize(std::vector<Syllable>{{1, 2}, {0, 4}}, k3Inf)), "1^2 0^1");
  EXPECT_THROW(normalize(std::vector<Syllable>{{2, 1}}, k3Inf), std::out_of_range);
}

TEST(Normalize, AgreesWithNaiveRewriting) {
  Rng rng(11);
  for (const auto& spec : {kInfInf, k3Inf, k3x3, k235}) {
    for (int trial = 0; trial < 400; ++trial) {
      auto raw = random_raw(rng, *spec, static_cast<std::size_t>(rng.uniform(0, 14)));
      auto fast = normalize(raw, spec);
      auto slow = naive_reduce(raw, *spec);
      ASSERT_EQ(std::vector<Syllable>(fast.syllables().begin(), fast.syllables().end()), slow);
    }
  }
}

TEST(GroupLaws, RandomWords) {
  Rng rng(12);
  for (const auto& spec : {kInfInf, k3Inf, k235}) {
    Word one(spec);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_word_upto(rng, spec, 6);
      auto b = random_word_upto(rng, spec, 6);
      auto c = random_word_upto(rng, spec, 6);
      EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      EXPECT_EQ(mul(a, one), a);
      EXPECT_EQ(mul(a, inv(a)), one);
      EXPECT_EQ(inv(mul(a, b)), mul(inv(b), inv(a)));
      // mul agrees with reducing the concatenation from scratch
      auto slow = naive_reduce(testing::concat(a, b), *spec);
      auto ab = mul(a, b);
      EXPECT_EQ(std::vector<Syllable>(ab.syllables().begin(), ab.syllables().end()), slow);
    }
  }
}

TEST(Pow, MatchesRepeatedProduct) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_word_upto(rng, k3Inf, 5);
    Word acc(k3Inf);
    for (int n = 0; n <= 9; ++n) {
      EXPECT_EQ(pow(a, n), acc);
      EXPECT_EQ(pow(a, -n), inv(acc));
      acc = mul(acc, a);
    }
  }
}

TEST(Pow, TorsionLetters) {
  auto a = Word::letter(k3Inf, 0, 1);
  EXPECT_TRUE(pow(a, 3).is_identity());
  EXPECT_EQ(pow(a, -1), Word::letter(k3Inf, 0, 2));
}

TEST(ConjAndComm, Definitions) {
  auto x = w("0^1", kInfInf);
  auto y = w("1^1", kInfInf);
  EXPECT_EQ(format_word(comm(x, y)), "0^-1 1^-1 0^1 1^1");
  EXPECT_EQ(format_word(conj(x, y)), "1^-1 0^1 1^1");
  EXPECT_TRUE(comm(x, x).is_identity());
}

TEST(CyclicReduce, ConjugatorRecoversWord) {
  Rng rng(14);
  for (const auto& spec : {kInfInf, k3Inf, k3x3, k235}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto v = random_word_upto(rng, spec, 8);
      auto r = cyclic_reduce(v);
      EXPECT_TRUE(is_cyclically_reduced(r.core));
      EXPECT_EQ(mul(mul(r.conjugator, r.core), inv(r.conjugator)), v);
      EXPECT_LE(r.core.length(), v.length());
    }
  }
}

TEST(CyclicReduce, MergingEnds) {
  // a b a in Z3 * Z3 reduces to the letter a^2 b
  auto v = w("0^1 1^1 0^1", k3x3);
  auto r = cyclic_reduce(v);
  EXPECT_EQ(r.core.length(), 2u);
  EXPECT_FALSE(is_conjugate_into_factor(v));
  EXPECT_TRUE(is_conjugate_into_factor(w("1^1 0^1 1^-1", kInfInf)));
  EXPECT_TRUE(is_conjugate_into_factor(Word(kInfInf)));
}

TEST(AreConjugate, RandomConjugatesAndNonConjugates) {
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_word_upto(rng, k3Inf, 6);
    auto h = random_word_upto(rng, k3Inf, 6);
    EXPECT_TRUE(are_conjugate(v, conj(v, h)));
  }
  EXPECT_FALSE(are_conjugate(w("0^1 1^1", kInfInf), w("0^1 1^-1", kInfInf)));
  EXPECT_FALSE(are_conjugate(w("0^1 1^1", kInfInf), w("0^1 1^1 0^1 1^1", kInfInf)));
  EXPECT_FALSE(are_conjugate(w("0^1", kInfInf), w("1^1", kInfInf)));
}

TEST(LeastRotation, InvariantUnderRotation) {
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    auto v = cyclic_reduce(random_word(rng, kInfInf, 6)).core;
    auto first = Word::letter(kInfInf, v[0].factor, v[0].exponent);
    auto rotated = mul(mul(inv(first), v), first);
    EXPECT_EQ(least_rotation(v), least_rotation(rotated));
  }
}

TEST(MaxRoot, PlantedPowers) {
  Rng rng(17);
  for (const auto& spec : {kInfInf, k3Inf, k235}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto u = cyclic_reduce(random_word(rng, spec, 4)).core;
      if (is_conjugate_into_factor(u)) continue;
      auto e = rng.uniform(1, 5);
      auto h = random_word_upto(rng, spec, 4);
      auto root = extract_max_root(conj(pow(u, e), h));
      // the planted exponent divides the maximal one, and the base powers back
      EXPECT_EQ(root.exponent % e, 0);
      EXPECT_TRUE(are_conjugate(pow(root.base, root.exponent), pow(u, e)));
    }
  }
}

TEST(MaxRoot, Examples) {
  auto r = extract_max_root(w("0^1 1^1 0^1 1^1 0^1 1^1", k3x3));
  EXPECT_EQ(r.exponent, 3);
  EXPECT_EQ(format_word(r.base), "0^1 1^1");
  EXPECT_EQ(extract_max_root(w("0^1 1^1 0^1 1^-1", kInfInf)).exponent, 1);
  EXPECT_THROW(extract_max_root(w("1^2", kInfInf)), std::invalid_argument);
}

TEST(LetterOrder, MinimumOverCore) {
  EXPECT_EQ(min_letter_order(w("0^1 1^1", k235)), Order::finite(2));
  EXPECT_EQ(min_letter_order(w("1^1 2^2", k235)), Order::finite(3));
  EXPECT_EQ(min_letter_order(w("0^1 1^1", kInfInf)), Order::infinite());
  // the outer letters of a conjugate do not count
  EXPECT_EQ(min_letter_order(w("0^1 1^1 2^1 0^1", k235)), Order::finite(3));
  EXPECT_THROW(min_letter_order(w("0^1", k235)), std::invalid_argument);
  EXPECT_EQ(letter_order(*k3x3, Syllable{0, 2}), Order::finite(3));
}

TEST(Text, RoundTrip) {
  Rng rng(18);
  for (const auto& spec : {kInfInf, k3Inf, k235}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto v = random_word_upto(rng, spec, 7);
      EXPECT_EQ(parse_word(format_word(v), spec), v);
    }
  }
  EXPECT_EQ(format_word(Word(kInfInf)), "1");
  EXPECT_TRUE(parse_word("", kInfInf).is_identity());
  EXPECT_THROW(parse_word("0^", kInfInf), std::invalid_argument);
  EXPECT_THROW(parse_word("x^1", kInfInf), std::invalid_argument);
  EXPECT_THROW(parse_word("2^1", kInfInf), std::invalid_argument);
}

TEST(Text, Orders) {
  auto orders = parse_orders("3,inf, 5");
  ASSERT_EQ(orders.size(), 3u);
  EXPECT_EQ(orders[1], Order::infinite());
  EXPECT_EQ(format_orders(*make_spec(orders)), "3,inf,5");
  EXPECT_THROW(parse_orders("3,,4"), std::invalid_argument);
  EXPECT_THROW(parse_orders("-2"), std::invalid_argument);
}

}  // namespace
}  // namespace powercl
