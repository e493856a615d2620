#pragma once

// Brute-force evidence independent of the constructions: a bounded search
// for products of k commutators equal to a target, and a fuzzer producing
// random certificates for the main inequality.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powercl/certificates.hpp"
#include "powercl/words.hpp"

namespace powercl {

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All words with at most max_len syllables in length-lexicographic order.
// Finite factors use every exponent 1..q-1, infinite ones +-1..+-max_len.
std::vector<Word> words_up_to(const SpecPtr& spec, std::size_t max_len);

enum class SearchOutcome { found, exhausted };
std::string_view to_string(SearchOutcome o);

struct SearchReport {
  Word target;
  std::int64_t k = 0;
  std::size_t max_len = 0;
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::vector<CommutatorPair> witness;     // set when found
  std::optional<Certificate> certificate;  // set when found and the target is not factor-conjugate
  std::uint64_t words_per_unknown = 0;
  std::uint64_t tuples_checked = 0;
};

inline constexpr std::uint64_t kDefaultSearchCap = 50'000'000;

// Tries every tuple (x_1, y_1, ..., x_k, y_k) of words from words_up_to, in
// odometer order with the last unknown varying fastest, and stops at the
// first product equal to target. Throws ResourceCapExceeded before starting
// when the tuple count exceeds cap; "exhausted" only means no witness within
// the bound.
SearchReport bounded_cl_search(const Word& target, std::int64_t k, std::size_t max_len,
                               std::uint64_t cap = kDefaultSearchCap);

// Certificate for target = prod [x_i, y_i] with base the maximal root of the
// target's cyclic core. Requires target not conjugate into a factor.
Certificate certificate_for_power(const std::vector<CommutatorPair>& pairs, const Word& target);

struct FuzzLimits {
  SpecPtr spec;
  std::size_t max_len = 4;   // syllables per random word
  std::int64_t max_k = 3;    // random commutators per product
  std::int64_t max_l = 2;    // random factor conjugates per product
  std::int64_t max_power = 6;
};

enum class FuzzMode { random_product, planted, combined, fixup };
std::string_view to_string(FuzzMode m);

struct FuzzSummary {
  std::uint64_t attempts = 0;
  std::uint64_t emitted = 0;
  std::uint64_t invalid = 0;              // emitted certificates failing check()
  std::uint64_t theorem_violations = 0;   // emitted certificates failing the main inequality
  std::uint64_t per_mode[4] = {0, 0, 0, 0};
};

// Emits `count` certificates (or stops after 1000 * count attempts). Each is
// checked and evaluated against the main inequality before the callback.
// The stream depends only on seed and limits.
FuzzSummary fuzz_certificates(std::uint64_t seed, std::size_t count, const FuzzLimits& limits,
                              const std::function<void(const Certificate&, FuzzMode)>& emit);

}  // namespace powercl
