#include "powercl/constructors.hpp"

#include <stdexcept>

namespace powercl {

namespace {

void require_same_group(const Word& a, const Word& b) {
  if (!a.same_group(b)) {
    throw std::invalid_argument("words belong to different free products");
  }
}

Certificate single_power(const SpecPtr& spec, std::vector<CommutatorPair> pairs,
                         Word base, std::int64_t n) {
  if (is_conjugate_into_factor(base)) {
    throw std::invalid_argument("degenerate input: base is conjugate into a factor");
  }
  Certificate cert{spec, std::move(pairs), {}, std::move(base), {}};
  cert.power_terms.push_back({Word(spec), n});
  return cert;
}

CommutatorPair conjugated(const CommutatorPair& c, const Word& h) {
  return {conj(c.x, h), conj(c.y, h)};
}

}  // namespace

Certificate culler_cube(const Word& a, const Word& b) {
  require_same_group(a, b);
  auto ai = inv(a);
  auto bi = inv(b);
  std::vector<CommutatorPair> pairs{
      {mul(mul(ai, b), a), mul(mul(mul(pow(a, -2), b), a), bi)},
      {mul(mul(b, a), bi), pow(b, 2)},
  };
  return single_power(a.spec_ptr(), std::move(pairs), comm(a, b), 3);
}

Lemma1Result lemma1_decompose(const Word& a, const Word& b, std::int64_t m) {
  require_same_group(a, b);
  if (m < 1) throw std::invalid_argument("lemma1 needs m >= 1");
  const auto& spec = a.spec_ptr();
  Word w(spec);
  std::vector<CommutatorPair> out;
  // Invariant: a^l (ba)^{m-l} b^l == conj(a^m b^m c_1 ... c_i, w).
  for (std::int64_t l = m; l >= 2; l -= 2) {
    CommutatorPair raw{mul(pow(a, l - 2), pow(b, l - 1)),
                       mul(pow(b, 2 - l), pow(a, 1 - l))};
    out.push_back(conjugated(raw, inv(w)));
    // Rotating the cyclic word brings the result back to the same shape.
    w = mul(w, mul(mul(pow(a, l - 1), inv(b)), pow(a, 2 - l)));
  }
  // m even leaves (ba)^m, and b^-1 (ba)^m b = (ab)^m; m odd leaves (ab)^m.
  if (m % 2 == 0) w = mul(w, b);
  return {pow(mul(a, b), m), std::move(w), std::move(out)};
}

std::vector<CommutatorPair> culler_power_pairs(const Word& a, const Word& b,
                                               std::int64_t n) {
  require_same_group(a, b);
  if (n < 1) throw std::invalid_argument("culler_power needs n >= 1");
  auto x = mul(mul(inv(a), inv(b)), a);
  auto lemma = lemma1_decompose(x, b, n);
  std::vector<CommutatorPair> out;
  out.reserve(lemma.commutators.size() + 1);
  out.push_back(conjugated({a, pow(b, n)}, lemma.conjugator));
  for (const auto& c : lemma.commutators) {
    out.push_back(conjugated(c, lemma.conjugator));
  }
  return out;
}

Certificate culler_power(const Word& a, const Word& b, std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("culler_power: n = 0 needs no commutators");
  }
  return single_power(a.spec_ptr(), culler_power_pairs(a, b, n), comm(a, b), n);
}

std::vector<CommutatorPair> power_of_cert(const std::vector<CommutatorPair>& pairs,
                                          std::int64_t s) {
  if (pairs.empty()) throw std::invalid_argument("power_of_cert: empty product");
  if (s < 1) throw std::invalid_argument("power_of_cert needs s >= 1");
  if (s == 1) return pairs;
  const auto& head = pairs.front();
  auto out = culler_power_pairs(head.x, head.y, s);
  auto c = head.value();
  for (std::int64_t j = s - 1; j >= 0; --j) {
    auto cj = pow(c, j);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      out.push_back(conjugated(pairs[i], cj));
    }
  }
  return out;
}

std::vector<CommutatorPair> lemma2_decompose(const Word& a, const Word& b,
                                             std::int64_t m, std::int64_t s) {
  require_same_group(a, b);
  if (m < 1 || s < 1) throw std::invalid_argument("lemma2 needs m, s >= 1");
  if (!pow(a, m).is_identity() || !pow(b, m).is_identity()) {
    throw std::invalid_argument("lemma2 needs a^m = b^m = 1");
  }
  if (pow(mul(a, b), m * s).is_identity()) {
    throw std::invalid_argument("lemma2: (ab)^{ms} is the identity");
  }
  auto lemma = lemma1_decompose(a, b, m);
  // a^m b^m = 1, so (ab)^m is the conjugated commutator product itself.
  std::vector<CommutatorPair> base;
  for (const auto& c : lemma.commutators) base.push_back(conjugated(c, lemma.conjugator));
  return power_of_cert(base, s);
}

SpecPtr theorem1_group(Order n_min) {
  if (n_min.is_infinite()) return make_spec({Order::infinite(), Order::infinite()});
  auto q = n_min.value();
  if (q == 2) return make_spec({Order::finite(2), Order::finite(2)});
  if (q % 2 == 0 || q < 2) {
    throw std::invalid_argument("N must be 2, an odd order >= 3, or inf");
  }
  return make_spec({n_min, Order::infinite()});
}

Certificate theorem1_construct(Order n_min, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("theorem1_construct needs n >= 1");
  auto spec = theorem1_group(n_min);
  auto first = Word::letter(spec, 0, 1);
  auto second = Word::letter(spec, 1, 1);
  if (n_min.is_infinite()) return culler_power(first, second, n);

  auto q = n_min.value();
  if (q == 2) {
    const auto& x = first;
    auto yx = mul(second, x);
    return single_power(spec, {{x, pow(yx, n)}}, pow(yx, 2), n);
  }

  const auto& z = first;
  const auto& u = second;
  auto r = n / q;
  auto t = n % q;
  std::vector<CommutatorPair> pairs;
  if (r > 0) pairs = lemma2_decompose(inv(z), conj(z, u), q, r);
  if (t > 0) {
    auto tail = culler_power_pairs(z, u, t);
    pairs.insert(pairs.end(), tail.begin(), tail.end());
  }
  return single_power(spec, std::move(pairs), comm(z, u), n);
}

}  // namespace powercl
