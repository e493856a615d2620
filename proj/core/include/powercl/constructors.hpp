#pragma once

// Explicit commutator decompositions realising the constructive upper bounds
// on commutator length of powers. Every function returns witnesses whose
// product is exactly the claimed element (not merely a conjugate of it).

#include <cstdint>
#include <vector>

#include "powercl/certificates.hpp"
#include "powercl/words.hpp"

namespace powercl {

// [a,b]^3 = [a^-1 b a, a^-2 b a b^-1] [b a b^-1, b^2].
// Throws std::invalid_argument when [a, b] is conjugate into a factor.
Certificate culler_cube(const Word& a, const Word& b);

struct Lemma1Result {
  Word target;      // (ab)^m
  Word conjugator;  // W with conj(a^m b^m c_1 ... c_[m/2], W) == target
  std::vector<CommutatorPair> commutators;
};

// (ab)^m is conjugate to a^m b^m c_1 ... c_[m/2]. The i-th step applies
//   a^l (ba)^s b^l [a^{l-2} b^{l-1}, b^{2-l} a^{1-l}] ~ a^{l-2} (ba)^{s+2} b^{l-2}
// with l = m - 2(i - 1); the conjugations are folded back into the stored
// commutators so the final identity is exact.
Lemma1Result lemma1_decompose(const Word& a, const Word& b, std::int64_t m);

// [(n/2)] + 1 commutators with product exactly [a, b]^n (n >= 1), obtained
// from lemma1 applied to x = a^-1 b^-1 a, y = b, where x^n y^n = [a, b^n].
std::vector<CommutatorPair> culler_power_pairs(const Word& a, const Word& b,
                                               std::int64_t n);

// Certificate form of culler_power_pairs with base [a, b]. Rejects n = 0 and
// degenerate commutators.
Certificate culler_power(const Word& a, const Word& b, std::int64_t n);

// Given g = prod [x_i, y_i] (k pairs), returns at most
// s(k - 1) + [s/2]_c + 1 pairs with product exactly g^s, using
//   (c h)^s = c^s h^{c^{s-1}} ... h^c h.
std::vector<CommutatorPair> power_of_cert(const std::vector<CommutatorPair>& pairs,
                                          std::int64_t s);

// For a^m = b^m = 1: commutators with product exactly (ab)^{ms}, at most
// s([m/2] - 1) + [s/2]_c + 1 of them.
std::vector<CommutatorPair> lemma2_decompose(const Word& a, const Word& b,
                                             std::int64_t m, std::int64_t s);

// Certificate for g^n realising the upper candidate for k(G, n):
//   N odd: in Z_N * Z, base [z, u], splitting n = rN + t;
//   N = 2: in Z_2 * Z_2, base (yx)^2 with (yx)^{2n} = [x, (yx)^n];
//   N = inf: in Z * Z, culler_power(a, b, n).
Certificate theorem1_construct(Order n_min, std::int64_t n);

// Generators used by theorem1_construct: factor 0 is z (order N) or x, and
// factor 1 is u (infinite) or y.
SpecPtr theorem1_group(Order n_min);

}  // namespace powercl
