#include "powercl/certificates.hpp"

#include <numeric>
#include <stdexcept>

namespace powercl {

Word commutator_product(const std::vector<CommutatorPair>& pairs, const SpecPtr& spec) {
  Word out(spec);
  for (const auto& p : pairs) out = mul(out, p.value());
  return out;
}

Word lhs(const Certificate& cert) {
  Word out = commutator_product(cert.commutators, cert.spec);
  for (const auto& d : cert.factor_conjugates) out = mul(out, d.value());
  return out;
}

Word rhs(const Certificate& cert) {
  Word out(cert.spec);
  for (const auto& t : cert.power_terms) {
    out = mul(out, pow(conj(cert.base, t.conjugator), t.exponent));
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::valid: return "valid";
    case Verdict::invariant_violation: return "invariant-violation";
    case Verdict::base_in_factor: return "base-conjugate-into-factor";
    case Verdict::side_mismatch: return "side-mismatch";
  }
  return "?";
}

namespace {

bool in_group(const Certificate& cert, const Word& w) {
  return *w.spec_ptr() == *cert.spec;
}

Verification fail(Verdict v, std::string detail) {
  return {v, std::move(detail)};
}

}  // namespace

Verification check(const Certificate& cert) {
  if (!cert.spec) return fail(Verdict::invariant_violation, "missing factor spec");
  if (cert.power_terms.empty()) {
    return fail(Verdict::invariant_violation, "no power terms (m = 0)");
  }
  for (std::size_t i = 0; i < cert.power_terms.size(); ++i) {
    const auto& t = cert.power_terms[i];
    if (t.exponent < 1) {
      return fail(Verdict::invariant_violation,
                  "power term " + std::to_string(i) + " has exponent < 1");
    }
    if (!in_group(cert, t.conjugator)) {
      return fail(Verdict::invariant_violation,
                  "power term " + std::to_string(i) + " uses another group");
    }
  }
  for (std::size_t i = 0; i < cert.factor_conjugates.size(); ++i) {
    const auto& d = cert.factor_conjugates[i];
    if (d.letter.length() != 1) {
      return fail(Verdict::invariant_violation,
                  "factor conjugate " + std::to_string(i) +
                      " is not a single nontrivial letter");
    }
    if (!in_group(cert, d.letter) || !in_group(cert, d.conjugator)) {
      return fail(Verdict::invariant_violation,
                  "factor conjugate " + std::to_string(i) + " uses another group");
    }
  }
  for (std::size_t i = 0; i < cert.commutators.size(); ++i) {
    const auto& c = cert.commutators[i];
    if (!in_group(cert, c.x) || !in_group(cert, c.y)) {
      return fail(Verdict::invariant_violation,
                  "commutator " + std::to_string(i) + " uses another group");
    }
  }
  if (!in_group(cert, cert.base)) {
    return fail(Verdict::invariant_violation, "base uses another group");
  }
  if (is_conjugate_into_factor(cert.base)) {
    return fail(Verdict::base_in_factor, "base is conjugate into a free factor");
  }
  if (lhs(cert) != rhs(cert)) {
    return fail(Verdict::side_mismatch, "left and right sides differ");
  }
  return {};
}

bool verify(const Certificate& cert) { return static_cast<bool>(check(cert)); }

CertStats stats(const Certificate& cert) {
  CertStats s;
  s.k = static_cast<std::int64_t>(cert.commutators.size());
  s.l = static_cast<std::int64_t>(cert.factor_conjugates.size());
  s.m = static_cast<std::int64_t>(cert.power_terms.size());
  for (const auto& t : cert.power_terms) s.n_list.push_back(t.exponent);
  s.total_n = std::accumulate(s.n_list.begin(), s.n_list.end(), std::int64_t{0});
  s.n_min = min_letter_order(cert.base);
  return s;
}

BoundReport check_main_theorem(const Certificate& cert) {
  auto s = stats(cert);
  return main_theorem_check(s.k, s.l, s.n_list, s.n_min);
}

Certificate conjugate_certificate(const Certificate& cert, const Word& h) {
  Certificate out = cert;
  for (auto& c : out.commutators) {
    c.x = conj(c.x, h);
    c.y = conj(c.y, h);
  }
  for (auto& d : out.factor_conjugates) d.conjugator = mul(d.conjugator, h);
  for (auto& t : out.power_terms) t.conjugator = mul(t.conjugator, h);
  return out;
}

}  // namespace powercl
