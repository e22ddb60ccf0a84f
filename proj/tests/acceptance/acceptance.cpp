// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fpure/ceil_arith.hpp"
#include "fpure/closure.hpp"
#include "fpure/fpt.hpp"
#include "fpure/parser.hpp"
#include "fpure/purity.hpp"
#include "fpure/test_ideal.hpp"
#include "support/oracles.hpp"

using namespace fpure;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Ideal I(const char* gens, const RingPtr& r) { return Ideal(r, parse_poly_list(gens, r)); }
SparsePolynomial P(const char* text, const RingPtr& r) { return parse_poly(text, r); }
ExactRational Q(const char* t) { return parse_rational(t); }

bool below(const std::vector<std::uint64_t>& e, std::uint64_t q) {
  for (auto x : e) {
    if (x >= q) return false;
  }
  return true;
}

// Pairs (S, a^t) at their thresholds; sharp F-purity is re-proved below.
struct Instance {
  std::uint32_t p;
  std::vector<std::string> vars;
  const char* a;
  const char* t;
};

const std::vector<Instance>& battery() {
  static const std::vector<Instance> b = {
      {3, {"x", "y"}, "x*y", "1"},         {3, {"x"}, "x^2", "1/2"},
      {7, {"x"}, "x^3", "1/3"},            {3, {"x", "y"}, "x, y", "2"},
      {3, {"x", "y", "z"}, "x, y, z", "3"}, {3, {"x", "y"}, "x^2, y^2", "1"},
      {3, {"x", "y", "z"}, "x*y*z", "1"},  {3, {"x", "y"}, "x^2*y", "1/2"},
      {7, {"x", "y"}, "x*y^3", "1/3"},     {3, {"x", "y"}, "x^2 - y^2", "1"},
      {7, {"x", "y", "z"}, "x^3 + y^3 + z^3", "1"},
      {7, {"x", "y"}, "x*y*(x + y)", "2/3"}};
  return b;
}

struct Prepared {
  RingPtr ring;
  Ideal a;
  ExactRational t;
  PairSpec pair;
};

Prepared prepare(const Instance& in) {
  auto r = make_ring(in.p, in.vars);
  auto a = I(in.a, r);
  auto t = Q(in.t);
  return {r, a, t, PairSpec::make(Ideal::zero(r), a, t)};
}

Check lemma_audit() {
  Check c;
  auto grid = rational_grid(12);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto rep = audit_inequalities(p, 5, 5, grid, 4);
    c.expect(rep.total_checked() > 0, "nothing checked for p = " + std::to_string(p));
    c.expect(rep.violations.empty(), std::to_string(rep.violations.size()) + " violations for p = " + std::to_string(p));
  }
  return c;
}

Check fedder_classic() {
  Check c;
  auto r = make_ring(3, {"x", "y", "z"});
  auto f = P("x^2 - y*z", r);
  auto pair = PairSpec::make(Ideal::principal(f), Ideal::unit(r), ExactRational(1));
  auto v = classic_fpure(pair, {1});
  c.expect(v.outcome == PurityOutcome::proven_pure, "classic verdict is not ProvenPure");
  c.expect(v.witness && v.witness->e == 1, "no witness at e = 1");
  if (v.witness) c.expect(verify_witness(pair, *v.witness, Criterion::classic), "witness recheck failed");
  bool found = false;
  for (const auto& [e, coeff] : oracle::to_map(oracle::naive_pow(f, 2))) {
    if (e == std::vector<std::uint64_t>{2, 1, 1} && coeff != 0 && below(e, 3)) found = true;
  }
  c.expect(found, "x^2*y*z does not escape m^[3] in the direct expansion");
  return c;
}

Check sharp_pair() {
  Check c;
  auto r = make_ring(3, {"x", "y"});
  auto yes = sharp_fedder(PairSpec::make(Ideal::zero(r), I("x*y", r), Q("1")), 4);
  c.expect(yes.outcome == PurityOutcome::proven_pure && yes.witness && yes.witness->e == 1,
           "(xy)^1 not proven at e = 1");
  auto no = sharp_fedder(PairSpec::make(Ideal::zero(r), I("x*y", r), Q("3/2")), 4);
  c.expect(no.outcome == PurityOutcome::inconclusive, "(xy)^(3/2) is not Inconclusive");
  c.expect(no.trace.size() == 4, "trace does not run through e = 4");
  for (const auto& s : no.trace) {
    // (xy)^N ∈ m^{[q]} exactly when N >= q.
    c.expect(!s.holds && !s.reason.empty(), "missing monomial reason at e = " + std::to_string(s.e));
    c.expect(s.N >= BigInt(s.q), "N < q at e = " + std::to_string(s.e));
  }
  return c;
}

Check fpt_pipeline() {
  Check c;
  auto r1 = make_ring(3, {"x"});
  auto est = fpt_estimate(I("x^2", r1), 3);
  const std::uint64_t expected[] = {1, 4, 13};
  c.expect(est.nu_table.size() == 3, "nu table size");
  for (std::size_t i = 0; i < est.nu_table.size() && i < 3; ++i) {
    const auto& rec = est.nu_table[i];
    c.expect(rec.nu == expected[i], "nu at e = " + std::to_string(rec.e));
    c.expect(rec.nu == (rec.q - 1) / 2, "closed form (q-1)/2 at e = " + std::to_string(rec.e));
    for (std::size_t j = i + 1; j < est.nu_table.size(); ++j) {
      const auto& later = est.nu_table[j];
      c.expect((later.q / rec.q) * rec.nu <= later.nu, "sandwich lower bound");
      c.expect(later.nu <= (later.q / rec.q) * (rec.nu + 1), "sandwich upper bound");
    }
  }
  c.expect(est.lo <= Q("1/2") && Q("1/2") <= est.hi, "interval misses 1/2");
  c.expect(est.certificate && est.certificate->t == Q("1/2") &&
               est.certificate->kind == CertificateKind::mustata_converse && est.status == FptStatus::exact,
           "no exact mustata-converse certificate at 1/2");
  auto r2 = make_ring(3, {"x", "y"});
  auto xy = fpt_estimate(I("x*y", r2), 3);
  c.expect(xy.certificate && xy.certificate->t == ExactRational(1), "xy does not certify 1");
  for (const auto& rec : xy.nu_table) c.expect(rec.nu == rec.q - 1, "closed form nu(xy) = q-1");
  return c;
}

Check test_ideal_chain() {
  Check c;
  struct Case {
    std::vector<std::string> vars;
    const char* a;
    std::vector<std::uint64_t> alpha;
    const char* t;
    const char* tau;
  };
  const Case cases[] = {{{"x", "y"}, "x*y", {1, 1}, "1", "x*y"},
                        {{"x"}, "x^2", {2}, "1/2", "x"},
                        {{"x", "y"}, "x*y", {1, 1}, "1/2", "1"}};
  for (const auto& k : cases) {
    auto r = make_ring(3, k.vars);
    auto t = Q(k.t);
    auto res = test_ideal(I(k.a, r), t);
    c.expect(ideal_equal(res.tau, I(k.tau, r)), std::string("tau of ") + k.a + " at " + k.t);
    c.expect(res.stabilized_at >= 1 && res.chain.size() >= res.stabilized_at + 2, "no stabilisation recorded");
    for (std::size_t i = 0; i < res.chain.size(); ++i) {
      // (x^α)^{⌈t q⌉} has q-th root x^{⌊⌈t q α⌉ / q⌋}.
      const std::uint64_t q = prime_power(3, static_cast<unsigned>(i + 1));
      std::vector<std::uint64_t> root;
      for (auto a : k.alpha) root.push_back(static_cast<std::uint64_t>(ceil_mul(t, BigInt(q) * a) / q));
      auto expected = Ideal::principal(SparsePolynomial::term(r, Monomial(root)));
      c.expect(ideal_equal(res.chain[i], expected), "chain element differs from the root formula");
      if (i > 0) c.expect(ideal_contains(res.chain[i], res.chain[i - 1]), "chain does not ascend");
    }
  }
  return c;
}

std::vector<SparsePolynomial> random_probes(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<SparsePolynomial> probes;
  for (int k = 0; k < 6; ++k) probes.push_back(oracle::random_poly(rng, r, 3, 2));
  return probes;
}

Check radical_battery() {
  Check c;
  std::mt19937_64 rng(2024);
  int non_monomial = 0;
  for (const auto& in : battery()) {
    auto pr = prepare(in);
    auto v = sharp_fedder(pr.pair, 3);
    c.expect(v.outcome == PurityOutcome::proven_pure, std::string("not sharply F-pure: ") + in.a);
    auto tau = test_ideal(pr.a, pr.t).tau;
    if (tau.is_monomial()) {
      c.expect(is_radical_monomial(tau), std::string("tau not squarefree for ") + in.a);
    } else {
      ++non_monomial;
      auto probes = random_probes(pr.ring, rng);
      for (const auto& g : tau.generators()) probes.push_back(g);
      auto rep = radical_probe(tau, probes, 3);
      c.expect(rep.checked > 0 && rep.violations.empty(), std::string("radical probe fails for ") + in.a);
    }
  }
  c.expect(battery().size() >= 10, "battery too small");
  c.expect(non_monomial > 0, "no non-monomial tau probed");
  return c;
}

Check vassilev_suite() {
  Check c;
  for (const auto& in : battery()) {
    auto pr = prepare(in);
    auto tau = test_ideal(pr.a, pr.t).tau;
    for (std::uint64_t q : {std::uint64_t{in.p}, std::uint64_t{in.p} * in.p}) {
      c.expect(vassilev_containment(Ideal::zero(pr.ring), pr.a, pr.t, tau, q),
               std::string("containment fails for ") + in.a + " at q = " + std::to_string(q));
    }
    auto quot = quotient_fpure_check(tau, 2);
    if (!quot.degenerate) {
      c.expect(quot.verdict && quot.verdict->outcome == PurityOutcome::proven_pure,
               std::string("S/tau not F-pure for ") + in.a);
    }
  }
  auto r = make_ring(3, {"x", "y"});
  auto node = quotient_fpure_check(I("x*y", r), 2);
  c.expect(node.verdict && node.verdict->outcome == PurityOutcome::proven_pure, "F_3[x,y]/(xy) not F-pure");
  return c;
}

Check sharp_multiplier() {
  Check c;
  for (const auto& in : battery()) {
    auto pr = prepare(in);
    auto tau = test_ideal(pr.a, pr.t).tau;
    const auto& r = pr.ring;
    std::vector<std::pair<Ideal, SparsePolynomial>> instances;
    const std::string x = r->variables().front();
    const std::string y = r->variables().back();
    for (const std::string& gens : {x, x + ", " + y, x + "^2*" + y, x + "^2, " + y + "^3"}) {
      Ideal J(r, parse_poly_list(gens, r));
      for (const auto& g : J.generators()) instances.emplace_back(J, g);
      instances.emplace_back(J, poly_mul(J.generators().front(), parse_poly(y + " + 1", r)));
    }
    for (const auto& g : tau.generators()) {
      auto rep = sharp_multiplier_check(g, pr.pair, tau, instances, 4);
      c.expect(rep.applicable, std::string("generator of tau not applicable for ") + in.a);
      c.expect(rep.violations.empty(), std::string("multiplier failure for ") + in.a);
    }
  }
  return c;
}

Check threshold_suite() {
  Check c;
  for (const auto& in : battery()) {
    auto pr = prepare(in);
    const ExactRational quarter = pr.t * Q("1/4");
    const ExactRational half = pr.t * Q("1/2");
    auto rep = threshold_consistency(pr.a, pr.t, {quarter, half});
    c.expect(rep.applicable, std::string("pair not proven: ") + in.a);
    c.expect(rep.checked == 2 && rep.violations.empty(), std::string("strong purity missing below ") + in.a);
  }
  return c;
}

Check engine_cross_checks() {
  Check c;
  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t p = k % 3 == 0 ? 2 : (k % 3 == 1 ? 3 : 5);
    auto r = make_ring(p, {"x", "y"});
    std::vector<SparsePolynomial> gens;
    for (int j = 0; j < 1 + k % 2; ++j) gens.push_back(oracle::random_poly(rng, r, 3, 2));
    Ideal J(r, gens);
    const std::uint64_t q = k % 2 == 0 ? p : std::uint64_t{p} * p;
    c.expect(ideal_equal(root_power(bracket_power(J, q), q), J), "root of bracket differs: " + J.to_string());
  }
  for (int k = 0; k < 200; ++k) {
    auto r = make_ring(3, {"x", "y", "z"});
    std::vector<SparsePolynomial> jg, ig;
    for (int j = 0; j < 3; ++j) jg.push_back(oracle::random_monomial(rng, r, 3));
    for (int j = 0; j < 2; ++j) ig.push_back(oracle::random_monomial(rng, r, 2));
    Ideal J(r, jg), Ii(r, ig);
    c.expect(ideal_contains(J, ideal_product(colon(J, Ii), Ii)), "colon times I escapes J");
  }
  for (int k = 0; k < 1000; ++k) {
    auto r = make_ring(k % 2 == 0 ? 7 : 65521, {"x", "y", "z"});
    auto f = oracle::random_poly(rng, r, 6, 5);
    c.expect(parse_poly(f.to_string(), r) == f, "round trip fails for " + f.to_string());
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lemma audit: zero violations of the four inequalities", 30, lemma_audit},
      {2, "Fedder classic: F_3[x,y,z]/(x^2-yz) F-pure at e=1", 1, fedder_classic},
      {3, "sharp Fedder: (xy)^1 proven, (xy)^(3/2) inconclusive through e=4", 1, sharp_pair},
      {4, "fpt pipeline: x^2 exact 1/2, xy certifies 1, sandwich", 5, fpt_pipeline},
      {5, "test ideal chains over p=3", 5, test_ideal_chain},
      {6, "radical test ideals for sharply F-pure pairs", 30, radical_battery},
      {7, "Vassilev containment and F-pure quotients", 30, vassilev_suite},
      {8, "sharp multiplier consistency", 60, sharp_multiplier},
      {9, "threshold consistency at t/4 and t/2", 30, threshold_suite},
      {10, "engine cross-checks: roots, colons, parser", 60, engine_cross_checks},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check res;
    try {
      res = cr.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.ok && secs > cr.budget_s) {
      res.ok = false;
      res.detail = "over the " + std::to_string(static_cast<int>(cr.budget_s)) + " s budget";
    }
    std::printf("%-4s criterion %2d  %-66s %7.2fs%s%s\n", res.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                res.ok ? "" : "  ", res.detail.c_str());
    if (!res.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
