#pragma once

// Certificates for equalities
//
//   [x_1, y_1] ... [x_k, y_k] * a_1^{h_1} ... a_l^{h_l}
//       = (u^{g_1})^{n_1} ... (u^{g_m})^{n_m}
//
// in a free product of cyclic groups, with exact word witnesses. All u_i are
// stored as conjugates of one base u, so they are conjugate by construction.

#include <cstdint>
#include <string>
#include <vector>

#include "powercl/bounds.hpp"
#include "powercl/words.hpp"

namespace powercl {

struct CommutatorPair {
  Word x;
  Word y;

  Word value() const { return comm(x, y); }
};

struct FactorConjugate {
  Word letter;     // a single syllable
  Word conjugator;

  Word value() const { return conj(letter, conjugator); }
};

struct PowerTerm {
  Word conjugator;
  std::int64_t exponent;
};

struct Certificate {
  SpecPtr spec;
  std::vector<CommutatorPair> commutators;
  std::vector<FactorConjugate> factor_conjugates;
  Word base;
  std::vector<PowerTerm> power_terms;
};

// Product of [x_i, y_i] in order.
Word commutator_product(const std::vector<CommutatorPair>& pairs, const SpecPtr& spec);

Word lhs(const Certificate& cert);
Word rhs(const Certificate& cert);

enum class Verdict {
  valid,
  invariant_violation,   // malformed: empty power list, bad exponent, ...
  base_in_factor,        // base is conjugate into a free factor
  side_mismatch,         // both sides well formed but unequal
};

std::string_view to_string(Verdict v);

struct Verification {
  Verdict verdict = Verdict::valid;
  std::string detail;

  explicit operator bool() const { return verdict == Verdict::valid; }
};

Verification check(const Certificate& cert);
bool verify(const Certificate& cert);

struct CertStats {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> n_list;
  Order n_min;
  std::int64_t total_n = 0;
};

CertStats stats(const Certificate& cert);

// Both sides of the main inequality for this certificate's parameters. For a
// certificate that verifies, `holds` false would contradict the theorem.
BoundReport check_main_theorem(const Certificate& cert);

// Conjugates every witness by h; the certificate keeps verifying.
Certificate conjugate_certificate(const Certificate& cert, const Word& h);

}  // namespace powercl
