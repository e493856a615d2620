#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "powercl/bounds.hpp"
#include "powercl/certificates.hpp"
#include "powercl/clusters.hpp"
#include "powercl/constructors.hpp"
#include "powercl/fairpart.hpp"
#include "powercl/io.hpp"
#include "powercl/oracle.hpp"
#include "powercl/small_maps.hpp"
#include "powercl/text.hpp"

namespace powercl::cli {

namespace {

using nlohmann::json;

class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  bool machine() const { return machine_; }
  bool ok() const { return ok_; }
  void fail() { ok_ = false; }

  void record(const std::string& type, json fields, const std::string& human) {
    if (machine_) {
      fields["type"] = type;
      out_ << fields.dump() << '\n';
    } else if (!human.empty()) {
      out_ << human << '\n';
    }
  }

  // lhs <rel> rhs; `counts` false keeps the row informational.
  void check(const std::string& name, std::int64_t lhs, std::int64_t rhs, bool holds,
             const std::string& rel = "<=", bool counts = true) {
    if (counts && !holds) ok_ = false;
    std::ostringstream h;
    h << "  " << std::left << std::setw(26) << name << std::right << std::setw(6) << lhs << ' '
      << rel << ' ' << std::left << std::setw(6) << rhs << ' '
      << (holds ? "ok" : counts ? "FAIL" : "no (informational)");
    record("check",
           {{"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"relation", rel}, {"holds", holds},
            {"required", counts}},
           h.str());
  }

  void human(const std::string& line) {
    if (!machine_) out_ << line << '\n';
  }

 private:
  std::ostream& out_;
  bool machine_;
  bool ok_ = true;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string elapsed_line(const Stopwatch& w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed: %.3f s", w.seconds());
  return buf;
}

json int_list(const std::vector<std::int64_t>& v) { return json(v); }

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Summary, validity and main inequality of a certificate.
void report_certificate(Report& r, const Certificate& cert) {
  auto v = check(cert);
  auto s = stats(cert);
  std::string verdict(to_string(v.verdict));
  r.record("certificate",
           {{"k", s.k},
            {"l", s.l},
            {"m", s.m},
            {"n", int_list(s.n_list)},
            {"base", format_word(cert.base)},
            {"factors", format_orders(*cert.spec)},
            {"verdict", verdict}},
           "certificate: k=" + std::to_string(s.k) + " l=" + std::to_string(s.l) +
               " m=" + std::to_string(s.m) + " n=(" + join(s.n_list) + ") base " +
               format_word(cert.base) + " over " + format_orders(*cert.spec));
  r.check("verified", v ? 1 : 0, 1, static_cast<bool>(v), "=");
  if (!v) {
    r.human("  " + verdict + ": " + v.detail);
    return;
  }
  auto b = check_main_theorem(cert);
  r.check("main_theorem", b.lhs, b.rhs, b.holds);
  auto prior = prior_bounds(s.k, s.l, s.n_list, s.n_min);
  if (prior.chen) r.check("chen_bound", prior.chen->lhs, prior.chen->rhs, prior.chen->holds);
  if (prior.large_order) {
    r.check("large_order_bound", prior.large_order->lhs, prior.large_order->rhs,
            prior.large_order->holds);
  }
}

void maybe_write(const std::string& path, const Certificate& cert, Report& r) {
  if (path.empty()) return;
  write_file(path, certificate_to_json(cert));
  r.record("file", {{"path", path}}, "wrote " + path);
}

// ----------------------------------------------------------------------------

struct DecomposeArgs {
  std::string kind;
  std::string factors;
  std::string a;
  std::string b;
  std::string n_min = "3";
  std::int64_t n = 3;
  std::int64_t m = 3;
  std::int64_t s = 1;
  std::string out;
};

int cmd_decompose(const DecomposeArgs& o, Report& r) {
  auto pick = [&](const std::string& def) { return o.factors.empty() ? def : o.factors; };
  if (o.kind == "culler-cube" || o.kind == "power") {
    auto spec = make_spec(parse_orders(pick("inf,inf")));
    auto a = parse_word(o.a.empty() ? "0^1" : o.a, spec);
    auto b = parse_word(o.b.empty() ? "1^1" : o.b, spec);
    auto cert = o.kind == "power" ? culler_power(a, b, o.n) : culler_cube(a, b);
    report_certificate(r, cert);
    if (o.kind == "power") {
      auto expect = o.n / 2 + 1;
      r.check("commutator_count", static_cast<std::int64_t>(cert.commutators.size()), expect,
              static_cast<std::int64_t>(cert.commutators.size()) == expect, "=");
    }
    maybe_write(o.out, cert, r);
    return r.ok() ? kOk : kCheckFailed;
  }
  if (o.kind == "lemma1") {
    auto spec = make_spec(parse_orders(pick("inf,inf")));
    auto a = parse_word(o.a.empty() ? "0^1" : o.a, spec);
    auto b = parse_word(o.b.empty() ? "1^1" : o.b, spec);
    auto res = lemma1_decompose(a, b, o.m);
    auto body = mul(pow(a, o.m), pow(b, o.m));
    body = mul(body, commutator_product(res.commutators, spec));
    bool exact = conj(body, res.conjugator) == res.target;
    bool conjugate = are_conjugate(body, res.target);
    json pairs = json::array();
    for (const auto& c : res.commutators) pairs.push_back({format_word(c.x), format_word(c.y)});
    r.record("lemma1",
             {{"m", o.m},
              {"target", format_word(res.target)},
              {"conjugator", format_word(res.conjugator)},
              {"commutators", pairs}},
             "lemma1: (ab)^" + std::to_string(o.m) + " ~ a^" + std::to_string(o.m) + " b^" + std::to_string(o.m) + " c_1...c_" +
                 std::to_string(res.commutators.size()) + ", conjugator " +
                 format_word(res.conjugator));
    r.check("commutator_count", static_cast<std::int64_t>(res.commutators.size()), o.m / 2,
            static_cast<std::int64_t>(res.commutators.size()) == o.m / 2, "=");
    r.check("exact_conjugation", exact ? 1 : 0, 1, exact, "=");
    r.check("are_conjugate", conjugate ? 1 : 0, 1, conjugate, "=");
    return r.ok() ? kOk : kCheckFailed;
  }
  if (o.kind == "lemma2") {
    auto n = parse_order(o.n_min);
    if (n.is_infinite()) throw UsageError("lemma2 needs a finite --N");
    auto spec = make_spec({n, Order::infinite()});
    auto z = Word::letter(spec, 0, 1);
    auto a = o.a.empty() ? inv(z) : parse_word(o.a, spec);
    auto b = o.b.empty() ? conj(z, Word::letter(spec, 1, 1)) : parse_word(o.b, spec);
    auto pairs = lemma2_decompose(a, b, n.value(), o.s);
    Certificate cert{spec, pairs, {}, mul(a, b), {{Word(spec), n.value() * o.s}}};
    report_certificate(r, cert);
    auto bound = o.s * (n.value() / 2 - 1) + floor_c(o.s, 2) + 1;
    r.check("commutator_count", static_cast<std::int64_t>(pairs.size()), bound,
            static_cast<std::int64_t>(pairs.size()) <= bound);
    maybe_write(o.out, cert, r);
    return r.ok() ? kOk : kCheckFailed;
  }
  if (o.kind == "theorem1") {
    auto n_min = parse_order(o.n_min);
    auto cert = theorem1_construct(n_min, o.n);
    report_certificate(r, cert);
    auto k = static_cast<std::int64_t>(cert.commutators.size());
    auto values = theorem1_values(o.n, n_min);
    r.check("k_upper", k, values.upper, k == values.upper, "=");
    r.check("k_lower", values.lower, k, values.lower <= k);
    r.record("theorem1",
             {{"n", o.n},
              {"N", format_order(n_min)},
              {"lower", values.lower},
              {"upper", values.upper},
              {"exact", values.exact},
              {"condition", std::string(to_string(values.condition))}},
             "");
    r.human("k=" + std::to_string(k) + ", " + (verify(cert) ? "verified" : "NOT verified") +
            ", main-theorem " + (check_main_theorem(cert).holds ? "holds" : "FAILS"));
    maybe_write(o.out, cert, r);
    return r.ok() ? kOk : kCheckFailed;
  }
  throw UsageError("unknown construction \"" + o.kind +
                   "\" (culler-cube, power, lemma1, lemma2, theorem1)");
}

int cmd_verify(const std::string& path, Report& r) {
  auto cert = certificate_from_json(read_file(path));
  report_certificate(r, cert);
  return r.ok() ? kOk : kCheckFailed;
}

// ----------------------------------------------------------------------------

struct BoundArgs {
  std::string which;
  std::int64_t k = 1;
  std::int64_t l = 0;
  std::string n_list = "2";
  std::string n_min = "3";
};

int cmd_bound(const BoundArgs& o, Report& r) {
  auto n_min = parse_order(o.n_min);
  if (o.which == "theorem1") {
    auto ns = parse_int_list(o.n_list);
    if (ns.size() != 1 || ns[0] < 1) throw UsageError("theorem1 takes a single positive --n");
    auto n = ns[0];
    auto v = theorem1_values(n, n_min);
    auto lower = corollary1_min_k(n, n_min);
    r.record("theorem1",
             {{"n", n},
              {"N", format_order(n_min)},
              {"lower", v.lower},
              {"upper", v.upper},
              {"exact", v.exact},
              {"condition", std::string(to_string(v.condition))}},
             "k(G," + std::to_string(n) + ") for N=" + format_order(n_min) + ": " +
                 (v.exact ? "exactly " + std::to_string(v.lower)
                          : "in [" + std::to_string(v.lower) + ", " + std::to_string(v.upper) +
                                "]") +
                 (v.condition == Theorem1Condition::none
                      ? ""
                      : " (condition " + std::string(to_string(v.condition)) + ")"));
    r.check("lower_is_corollary1", v.lower, lower, v.lower == lower, "=");
    r.check("upper_within_one", v.upper - v.lower, 1, v.upper - v.lower <= 1);
    return r.ok() ? kOk : kCheckFailed;
  }
  auto list = parse_int_list(o.n_list);
  for (auto v : list) {
    if (v < 1) throw UsageError("--n entries must be positive");
  }
  if (o.k < 0 || o.l < 0) throw UsageError("--k and --l must be nonnegative");
  if (o.which == "main" || o.which == "compare") {
    auto b = main_theorem_check(o.k, o.l, list, n_min);
    r.record("main",
             {{"k", o.k},
              {"l", o.l},
              {"n", int_list(list)},
              {"N", format_order(n_min)},
              {"parity", std::string(to_string(b.parity))},
              {"min_2k_plus_l", main_theorem_min_2k_plus_l(o.l, list, n_min)}},
             "main inequality, k=" + std::to_string(o.k) + " l=" + std::to_string(o.l) + " n=(" +
                 join(list) + ") N=" + format_order(n_min) + ", " +
                 std::string(to_string(b.parity)) + " branch; least 2k+l = " +
                 std::to_string(main_theorem_min_2k_plus_l(o.l, list, n_min)));
    r.check("main_theorem", b.lhs, b.rhs, b.holds);
    if (o.which == "compare") {
      auto min_main = main_theorem_min_2k_plus_l(o.l, list, n_min);
      auto prior = prior_bounds(o.k, o.l, list, n_min);
      if (prior.chen) {
        r.check("chen_bound", prior.chen->lhs, prior.chen->rhs, prior.chen->holds);
        r.check("main_at_least_chen", prior.chen->lhs, min_main, prior.chen->lhs <= min_main);
      }
      if (prior.large_order) {
        r.check("large_order_bound", prior.large_order->lhs, prior.large_order->rhs,
                prior.large_order->holds);
        r.check("main_at_least_large_order", prior.large_order->lhs, min_main,
                prior.large_order->lhs <= min_main);
      }
      if (!prior.chen && !prior.large_order) r.human("  no earlier bound applies");
    }
    return r.ok() ? kOk : kCheckFailed;
  }
  throw UsageError("unknown bound \"" + o.which + "\" (main, theorem1, compare)");
}

// ----------------------------------------------------------------------------

struct FpArgs {
  std::vector<std::int64_t> items;
  bool formula = false;
  std::int64_t l = 0;
  std::int64_t kappa = 1;
  std::string n_big = "3";
};

std::string bracket(const std::vector<std::int64_t>& v) { return "{" + join(v) + "}"; }

int cmd_fp(const FpArgs& o, Report& r) {
  if (o.formula) {
    auto n = parse_order(o.n_big);
    if (o.l < 0 || o.kappa < 1) throw UsageError("--l must be >= 0 and --kappa >= 1");
    auto closed = fp_formula1(o.l, o.kappa, n);
    if (!closed) {
      r.record("fp_formula", {{"l", o.l}, {"kappa", o.kappa}, {"N", format_order(n)}, {"fp", nullptr}},
               "fp = inf (N infinite and kappa > l)");
      return kOk;
    }
    auto items = ones_and_copies(o.l, o.kappa, n.value());
    auto exact = fp_exact(items);
    auto witness = fp_greedy_witness(o.l, o.kappa, n);
    r.record("fp_formula",
             {{"l", o.l},
              {"kappa", o.kappa},
              {"N", format_order(n)},
              {"fp", *closed},
              {"first", int_list(witness.first)},
              {"second", int_list(witness.second)}},
             "fp = " + std::to_string(*closed) + "  greedy split " + bracket(witness.first) +
                 " | " + bracket(witness.second));
    r.check("formula_matches_exact", *closed, exact, *closed == exact, "=");
    r.check("greedy_is_optimal", witness.max_sum(), exact, witness.max_sum() == exact, "=");
    return r.ok() ? kOk : kCheckFailed;
  }
  if (o.items.empty()) throw UsageError("fp needs items or --formula");
  auto p = fp_partition(o.items);
  r.record("fp",
           {{"items", int_list(o.items)},
            {"fp", p.max_sum()},
            {"first", int_list(p.first)},
            {"second", int_list(p.second)}},
           std::to_string(p.max_sum()) + "\n  " + bracket(p.first) + " sum " +
               std::to_string(p.first_sum()) + " | " + bracket(p.second) + " sum " +
               std::to_string(p.second_sum()));
  return kOk;
}

// ----------------------------------------------------------------------------

struct SimulateArgs {
  std::string file;
  bool enumerate = false;
  std::size_t max_edges = 6;
  std::size_t max_faces = 0;
  std::string orders = "3,3";
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t random_edges = 7;
  std::size_t cap = kDefaultClusterCap;
};

void report_lemmas(Report& r, const std::vector<LemmaCheck>& rows) {
  for (const auto& row : rows) r.check(row.name, row.lhs, row.rhs, row.holds, "<=", row.required);
}

int simulate_file(const SimulateArgs& o, Report& r) {
  auto file = diagram_from_json(read_file(o.file));
  const auto& d = file.diagram;
  const auto& m = *d.map;
  r.record("map",
           {{"vertices", m.num_vertices()},
            {"edges", m.num_edges()},
            {"faces", m.num_faces()},
            {"euler_characteristic", m.euler_characteristic()}},
           "map: V=" + std::to_string(m.num_vertices()) + " E=" + std::to_string(m.num_edges()) +
               " F=" + std::to_string(m.num_faces()) +
               " chi=" + std::to_string(m.euler_characteristic()));
  auto issues = diagram_issues(d);
  for (const auto& i : issues) {
    r.record("diagram_issue", {{"kind", std::string(to_string(i.kind))}, {"where", i.where}},
             "  diagram issue (" + std::string(to_string(i.kind)) + "): " + i.where);
  }
  r.check("diagram_valid", issues.empty() ? 1 : 0, 1, issues.empty(), "=");
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    auto label = format_word(face_label(d, f));
    r.record("face", {{"face", f}, {"perimeter", m.perimeter(f)}, {"label", label}},
             "face " + std::to_string(f) + ": perimeter " + std::to_string(m.perimeter(f)) +
                 ", label " + label);
  }
  if (!file.motion) {
    r.human("no motion given");
    return r.ok() ? kOk : kCheckFailed;
  }
  const auto& motion = *file.motion;
  auto collisions = detect_collisions(motion);
  r.record("motion",
           {{"period", motion.period()},
            {"cars", int_list(motion.cars_per_face())},
            {"phases", int_list(motion.phases())}},
           "motion: period " + std::to_string(motion.period()) + ", cars per face " +
               bracket(motion.cars_per_face()));
  if (file.base) {
    bool no_edge = true;
    std::int64_t interior_min = -1;
    for (const auto& c : collisions.collisions) {
      if (c.point >= m.num_vertices()) no_edge = false;
      else if (!d.exterior[c.point] && (interior_min < 0 || c.degree < interior_min))
        interior_min = c.degree;
    }
    r.check("no_edge_collisions", no_edge ? 0 : 1, 0, no_edge, "=");
    auto order = min_letter_order(*file.base);
    if (interior_min >= 0 && order.is_finite()) {
      r.check("interior_degree_vs_N", order.value(), interior_min, order.value() <= interior_min);
    }
  }
  for (const auto& c : collisions.collisions) {
    std::string when = std::to_string(c.half_step / 2) + (c.half_step % 2 ? ".5" : "");
    r.record("collision",
             {{"point", point_name(m, c.point)}, {"half_step", c.half_step}, {"degree", c.degree}},
             "collision at " + point_name(m, c.point) + ", t=" + when + ", degree " +
                 std::to_string(c.degree));
  }
  ClusterReport clusters;
  try {
    clusters = cluster_partition(motion, collisions, o.cap);
  } catch (const ClusterCapExceeded& e) {
    r.record("error", {{"message", e.what()}}, e.what());
    return kResourceCap;
  }
  for (const auto& cl : clusters.clusters) {
    std::vector<std::string> members;
    std::string h = "cluster centred at " + point_name(m, cl.centre) + ":";
    for (auto p : cl.members) {
      members.push_back(point_name(m, p));
      h += " " + point_name(m, p);
    }
    r.record("cluster", {{"centre", point_name(m, cl.centre)}, {"members", members}}, h);
  }
  r.record("kappa", {{"kappa", clusters.kappa}}, "kappa = " + std::to_string(clusters.kappa));
  report_lemmas(r, verify_lemmas(motion, collisions, clusters));
  return r.ok() ? kOk : kCheckFailed;
}

struct SweepTotals {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t informational_misses = 0;
};

void sweep_one(const Motion& motion, std::size_t cap, SweepTotals& t, Report& r,
               const std::string& label) {
  auto collisions = detect_collisions(motion);
  auto clusters = cluster_partition(motion, collisions, cap);
  ++t.instances;
  for (const auto& row : verify_lemmas(motion, collisions, clusters)) {
    if (row.holds) continue;
    if (!row.required) {
      ++t.informational_misses;
      continue;
    }
    ++t.violations;
    r.fail();
    r.record("violation",
             {{"instance", label}, {"name", row.name}, {"lhs", row.lhs}, {"rhs", row.rhs}},
             "VIOLATION " + label + ": " + row.name + " " + std::to_string(row.lhs) + " <= " +
                 std::to_string(row.rhs));
  }
}

int simulate_sweep(const SimulateArgs& o, Report& r) {
  Stopwatch watch;
  SweepTotals totals;
  if (o.enumerate) {
    auto orders = parse_orders(o.orders);
    if (orders.size() != 2) throw UsageError("--orders takes two orders, e.g. 3,3");
    if (o.max_edges > 7) throw UsageError("--max-edges is limited to 7");
    EnumerationLimits lim{o.max_edges, o.max_faces, orders[0], orders[1]};
    std::size_t index = 0;
    enumerate_small_diagrams(lim, [&](const HowieDiagram&, const Motion& motion) {
      sweep_one(motion, o.cap, totals, r, "enumerated#" + std::to_string(index++));
    });
  }
  if (o.random > 0) {
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.random; ++i) {
      auto edges = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(o.random_edges)));
      sweep_one(random_motion(rng, edges), o.cap, totals, r, "random#" + std::to_string(i));
    }
  }
  r.record("sweep",
           {{"instances", totals.instances},
            {"violations", totals.violations},
            {"informational_misses", totals.informational_misses}},
           "instances: " + std::to_string(totals.instances) +
               ", violations: " + std::to_string(totals.violations) +
               ", informational rows not holding: " +
               std::to_string(totals.informational_misses));
  r.human(elapsed_line(watch));
  return r.ok() ? kOk : kCheckFailed;
}

// ----------------------------------------------------------------------------

struct SearchArgs {
  std::string target;
  std::int64_t k = 1;
  std::size_t max_len = 3;
  std::string factors = "3,3";
  std::uint64_t cap = kDefaultSearchCap;
};

int cmd_search(const SearchArgs& o, Report& r) {
  Stopwatch watch;
  auto spec = make_spec(parse_orders(o.factors));
  auto target = parse_word(o.target, spec);
  if (o.k < 1) throw UsageError("--k must be at least 1");
  if (o.max_len > 5) throw UsageError("--max-len is limited to 5");
  std::optional<SearchReport> found;
  try {
    found = bounded_cl_search(target, o.k, o.max_len, o.cap);
  } catch (const ResourceCapExceeded& e) {
    r.record("error", {{"message", e.what()}}, e.what());
    return kResourceCap;
  }
  const auto& rep = *found;
  json pairs = json::array();
  std::string h = "search " + format_word(target) + " with k=" + std::to_string(o.k) +
                  ", max_len " + std::to_string(o.max_len) + ": " +
                  std::string(to_string(rep.outcome)) + " after " +
                  std::to_string(rep.tuples_checked) + " tuples (" +
                  std::to_string(rep.words_per_unknown) + " words per unknown)";
  for (const auto& c : rep.witness) {
    pairs.push_back({format_word(c.x), format_word(c.y)});
    h += "\n  [" + format_word(c.x) + ", " + format_word(c.y) + "]";
  }
  r.record("search",
           {{"target", format_word(target)},
            {"k", o.k},
            {"max_len", o.max_len},
            {"factors", o.factors},
            {"outcome", std::string(to_string(rep.outcome))},
            {"tuples_checked", rep.tuples_checked},
            {"words_per_unknown", rep.words_per_unknown},
            {"witness", pairs}},
           h);
  if (rep.certificate) report_certificate(r, *rep.certificate);
  r.human(elapsed_line(watch));
  return r.ok() ? kOk : kCheckFailed;
}

struct FuzzArgs {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t count = 100;
  std::string factors = "3,inf";
  std::size_t max_len = 4;
  std::int64_t max_k = 3;
  std::int64_t max_l = 2;
  std::int64_t max_power = 6;
};

int cmd_fuzz(const FuzzArgs& o, Report& r) {
  Stopwatch watch;
  if (!o.seed_given) throw UsageError("fuzz requires --seed");
  FuzzLimits lim{make_spec(parse_orders(o.factors)), o.max_len, o.max_k, o.max_l, o.max_power};
  std::size_t index = 0;
  auto summary = fuzz_certificates(o.seed, o.count, lim, [&](const Certificate& cert, FuzzMode mode) {
    auto s = stats(cert);
    auto v = check(cert);
    BoundReport b;
    if (v) b = check_main_theorem(cert);
    r.record("fuzz_certificate",
             {{"index", index},
              {"mode", std::string(to_string(mode))},
              {"k", s.k},
              {"l", s.l},
              {"n", int_list(s.n_list)},
              {"N", format_order(s.n_min)},
              {"verdict", std::string(to_string(v.verdict))},
              {"lhs", b.lhs},
              {"rhs", b.rhs},
              {"holds", static_cast<bool>(v) && b.holds}},
             "");
    if (!v || !b.holds) {
      r.human("certificate " + std::to_string(index) + " (" + std::string(to_string(mode)) +
              "): " + (v ? "main inequality fails " + std::to_string(b.lhs) + " > " +
                               std::to_string(b.rhs)
                         : std::string(to_string(v.verdict))));
    }
    ++index;
  });
  r.record("fuzz",
           {{"seed", o.seed},
            {"attempts", summary.attempts},
            {"emitted", summary.emitted},
            {"invalid", summary.invalid},
            {"violations", summary.theorem_violations},
            {"random_product", summary.per_mode[0]},
            {"planted", summary.per_mode[1]},
            {"combined", summary.per_mode[2]},
            {"fixup", summary.per_mode[3]}},
           "fuzz seed " + std::to_string(o.seed) + ": " + std::to_string(summary.emitted) +
               " certificates from " + std::to_string(summary.attempts) + " attempts (" +
               std::to_string(summary.per_mode[0]) + " random, " +
               std::to_string(summary.per_mode[1]) + " planted, " +
               std::to_string(summary.per_mode[2]) + " combined, " +
               std::to_string(summary.per_mode[3]) + " fixup)");
  r.check("invalid_certificates", static_cast<std::int64_t>(summary.invalid), 0,
          summary.invalid == 0, "=");
  r.check("main_theorem_violations", static_cast<std::int64_t>(summary.theorem_violations), 0,
          summary.theorem_violations == 0, "=");
  r.human(elapsed_line(watch));
  return r.ok() ? kOk : kCheckFailed;
}

const CLI::Validator kPositive(
    [](std::string& text) -> std::string {
      try {
        std::size_t used = 0;
        if (std::stoll(text, &used) > 0 && used == text.size()) return {};
      } catch (const std::exception&) {
      }
      return "expected a positive integer, got " + text;
    },
    "POSITIVE");

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutator length of powers in free products of cyclic groups", "powercl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Build and check an explicit decomposition");
  c_dec->add_option("kind", dec.kind, "culler-cube | power | lemma1 | lemma2 | theorem1")
      ->required();
  c_dec->add_option("--factors", dec.factors, "Factor orders, e.g. inf,inf");
  c_dec->add_option("--a", dec.a, "Word a");
  c_dec->add_option("--b", dec.b, "Word b");
  c_dec->add_option("--N", dec.n_min, "Minimal letter order N (2, odd, or inf)");
  c_dec->add_option("--n", dec.n, "Power n")->check(kPositive);
  c_dec->add_option("--m", dec.m, "Exponent m for lemma1")->check(kPositive);
  c_dec->add_option("--s", dec.s, "Multiplier s for lemma2")->check(kPositive);
  c_dec->add_option("--out", dec.out, "Write the certificate to this file");

  std::string verify_path;
  auto* c_ver = app.add_subcommand("verify", "Check a certificate file");
  c_ver->add_option("file", verify_path)->required();

  BoundArgs bnd;
  auto* c_bnd = app.add_subcommand("bound", "Evaluate the inequalities");
  c_bnd->add_option("which", bnd.which, "main | theorem1 | compare")->required();
  c_bnd->add_option("--k", bnd.k, "Number of commutators");
  c_bnd->add_option("--l", bnd.l, "Number of factor conjugates");
  c_bnd->add_option("--n", bnd.n_list, "Exponents n_i (comma list) or n for theorem1");
  c_bnd->add_option("--N", bnd.n_min, "Minimal letter order N");

  FpArgs fpa;
  auto* c_fp = app.add_subcommand("fp", "Fair partition of a multiset");
  c_fp->add_option("items", fpa.items, "Positive integers")->check(kPositive);
  c_fp->add_flag("--formula", fpa.formula, "Evaluate the ones-and-copies closed form");
  c_fp->add_option("--l", fpa.l, "Number of ones (at most kappa)");
  c_fp->add_option("--kappa", fpa.kappa, "Multiset size");
  c_fp->add_option("--N", fpa.n_big, "Large item");

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Collisions, clusters and lemma checks");
  c_sim->add_option("file", sim.file, "Diagram file");
  c_sim->add_flag("--enumerate", sim.enumerate, "Sweep all small bipartite diagrams");
  c_sim->add_option("--max-edges", sim.max_edges, "Edge limit for --enumerate");
  c_sim->add_option("--max-faces", sim.max_faces, "Face limit for --enumerate (0: none)");
  c_sim->add_option("--orders", sim.orders, "Orders of the A and B letters");
  c_sim->add_option("--random", sim.random, "Also sweep this many random motions");
  c_sim->add_option("--seed", sim.seed, "Seed for --random");
  c_sim->add_option("--random-edges", sim.random_edges, "Edge limit for random maps")
      ->check(CLI::Range(1, 8));
  c_sim->add_option("--cluster-cap", sim.cap, "Largest collision set for the cluster search")
      ->check(CLI::Range(1, 24));

  SearchArgs srch;
  auto* c_srch = app.add_subcommand("search", "Bounded search for commutator decompositions");
  c_srch->add_option("--target", srch.target, "Target word")->required();
  c_srch->add_option("--k", srch.k, "Number of commutators");
  c_srch->add_option("--max-len", srch.max_len, "Syllable bound per unknown");
  c_srch->add_option("--factors", srch.factors, "Factor orders");
  c_srch->add_option("--cap", srch.cap, "Largest number of tuples to try")
      ->check(kPositive);

  FuzzArgs fz;
  auto* c_fz = app.add_subcommand("fuzz", "Random certificates against the main inequality");
  c_fz->add_option("--seed", fz.seed, "Seed (required)");
  c_fz->add_option("--count", fz.count, "Certificates to emit")->check(kPositive);
  c_fz->add_option("--factors", fz.factors, "Factor orders");
  c_fz->add_option("--max-len", fz.max_len, "Syllables per random word")
      ->check(CLI::Range(1, 12));
  c_fz->add_option("--max-k", fz.max_k, "Random commutators per product")
      ->check(CLI::Range(0, 8));
  c_fz->add_option("--max-l", fz.max_l, "Random factor conjugates per product")
      ->check(CLI::Range(0, 8));
  c_fz->add_option("--max-power", fz.max_power, "Largest planted power")
      ->check(CLI::Range(1, 40));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  fz.seed_given = c_fz->count("--seed") > 0;

  Report report(out, format == "machine");
  try {
    if (*c_dec) return cmd_decompose(dec, report);
    if (*c_ver) return cmd_verify(verify_path, report);
    if (*c_bnd) return cmd_bound(bnd, report);
    if (*c_fp) return cmd_fp(fpa, report);
    if (*c_sim) {
      if (sim.file.empty() && !sim.enumerate && sim.random == 0) {
        throw UsageError("simulate needs a diagram file, --enumerate or --random");
      }
      return sim.file.empty() ? simulate_sweep(sim, report) : simulate_file(sim, report);
    }
    if (*c_srch) return cmd_search(srch, report);
    if (*c_fz) return cmd_fuzz(fz, report);
  } catch (const ResourceCapExceeded& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ClusterCapExceeded& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace powercl::cli
