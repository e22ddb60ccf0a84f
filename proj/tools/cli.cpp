#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "fpure/ceil_arith.hpp"
#include "fpure/closure.hpp"
#include "fpure/errors.hpp"
#include "fpure/fpt.hpp"
#include "fpure/parser.hpp"
#include "fpure/purity.hpp"
#include "fpure/test_ideal.hpp"

namespace fpure::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string ring;
  std::string ideal = "0";
  std::string a = "1";
  std::string t = "1";
  std::optional<unsigned> emax;
  std::optional<unsigned> efloor;
  std::string z;
  std::string c;
  std::string defining = "0";
  std::uint32_t p = 0;
  unsigned dmax = 5;
  unsigned nmax = 4;
  unsigned tmax = 12;
  std::uint64_t seed = 0;
  bool json = false;
  bool verify = false;
};

struct Report {
  json doc;
  std::string table;
  int code = 0;
};

// Fixed-width columns, two spaces apart.
class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string str(const BigInt& n) { return n.str(); }
std::string str(std::uint64_t n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read fixture file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" names a fixture file, one polynomial per line.
std::vector<SparsePolynomial> poly_list(const std::string& flag, const std::string& value, const RingPtr& ring) {
  try {
    if (!value.empty() && value.front() == '@') return parse_poly_file(read_file(value.substr(1)), ring);
    return parse_poly_list(value, ring);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.bare_message(), e.position());
  }
}

SparsePolynomial poly(const std::string& flag, const std::string& value, const RingPtr& ring) {
  if (value.empty()) throw DomainError(flag + " is required");
  auto gens = poly_list(flag, value, ring);
  if (gens.size() > 1) throw DomainError(flag + " takes one polynomial, got " + std::to_string(gens.size()));
  return gens.empty() ? SparsePolynomial(ring) : gens.front();
}

RingPtr ring_of(const Options& o) {
  if (o.ring.empty()) throw DomainError("--ring is required");
  try {
    return parse_ring(o.ring);
  } catch (const ParseError& e) {
    throw ParseError("--ring: " + e.bare_message(), e.position());
  }
}

ExactRational exponent_of(const Options& o) {
  try {
    return parse_rational(o.t);
  } catch (const ParseError& e) {
    throw ParseError("--t: " + e.bare_message(), e.position());
  }
}

std::string term_string(const RingPtr& ring, const Term& t) {
  return SparsePolynomial::term(ring, t.monomial, t.coeff).to_string();
}

json witness_json(const RingPtr& ring, const FedderWitness& w) {
  json exps = json::array();
  for (auto k : w.a_exponents) exps.push_back(str(k));
  return json{{"e", str(std::uint64_t{w.e})},
              {"q", str(w.q)},
              {"N", str(w.N)},
              {"a_exponents", exps},
              {"a_factor", w.a_factor.to_string()},
              {"colon_factor", w.colon_factor.to_string()},
              {"escaping_term", term_string(ring, w.escaping)}};
}

Report purity_command(const std::string& name, const Options& o) {
  auto ring = ring_of(o);
  Ideal I(ring, poly_list("--ideal", o.ideal, ring));
  Ideal a(ring, poly_list("--a", o.a, ring));
  auto pair = PairSpec::make(I, a, exponent_of(o));
  const unsigned e_max = o.emax.value_or(3);
  if (e_max < 1) throw DomainError("--emax must be at least 1");

  PurityVerdict v;
  if (name == "sharp-fedder") {
    v = sharp_fedder(pair, e_max);
  } else if (name == "strong-fedder") {
    v = strong_fedder(pair, e_max);
  } else {
    std::vector<unsigned> es;
    for (unsigned e = 1; e <= e_max; ++e) es.push_back(e);
    v = classic_fpure(pair, es);
  }

  Report r;
  json trace = json::array();
  Table steps;
  steps.add({"e", "q", "N", "holds", "reason"});
  for (const auto& s : v.trace) {
    trace.push_back({{"e", str(std::uint64_t{s.e})}, {"q", str(s.q)}, {"N", str(s.N)}, {"holds", str(s.holds)},
                     {"reason", s.reason}});
    steps.add({std::to_string(s.e), str(s.q), str(s.N), str(s.holds), s.reason});
  }
  r.doc["command"] = name;
  r.doc["inputs"] = {{"ring", ring->to_string()},
                     {"ideal", I.to_string()},
                     {"a", a.to_string()},
                     {"t", pair.t.to_string()},
                     {"emax", str(std::uint64_t{e_max})}};
  r.doc["notes"] = pair.notes;
  r.doc["verdict"] = {{"criterion", criterion_name(v.criterion)},
                      {"outcome", outcome_name(v.outcome)},
                      {"explanation", v.explanation},
                      {"trace", trace}};
  r.doc["witness"] = nullptr;
  std::string text = "command: " + name + "\nring: " + ring->to_string() + "\nideal: " + I.to_string() +
                     "\na: " + a.to_string() + "\nt: " + pair.t.to_string() + "\n";
  for (const auto& n : pair.notes) text += "note: " + n + "\n";
  text += "outcome: " + std::string(outcome_name(v.outcome)) + "\n" + "explanation: " + v.explanation + "\n";
  if (v.witness) {
    r.doc["witness"] = witness_json(ring, *v.witness);
    text += "witness: e=" + std::to_string(v.witness->e) + " a_factor=" + v.witness->a_factor.to_string() +
            " colon_factor=" + v.witness->colon_factor.to_string() +
            " escaping=" + term_string(ring, v.witness->escaping) + "\n";
    if (o.verify) {
      bool ok = verify_witness(pair, *v.witness, v.criterion);
      r.doc["witness"]["verified"] = str(ok);
      text += std::string("witness verified: ") + str(ok) + "\n";
      if (!ok) r.code = 3;
    }
  }
  r.table = text + "\n" + steps.str();
  return r;
}

json nu_table_json(const std::vector<NuRecord>& recs, Table& table) {
  json arr = json::array();
  table.add({"e", "q", "nu", "lo", "hi"});
  for (const auto& n : recs) {
    arr.push_back({{"e", str(std::uint64_t{n.e})},
                   {"q", str(n.q)},
                   {"nu", str(n.nu)},
                   {"lo", n.lo.to_string()},
                   {"hi", n.hi.to_string()}});
    table.add({std::to_string(n.e), str(n.q), str(n.nu), n.lo.to_string(), n.hi.to_string()});
  }
  return arr;
}

Report nu_command(const Options& o) {
  auto ring = ring_of(o);
  Ideal a(ring, poly_list("--a", o.a, ring));
  const unsigned e_max = o.emax.value_or(3);
  std::vector<NuRecord> recs;
  for (unsigned e = 1; e <= e_max; ++e) recs.push_back(fpt_bounds(a, e));
  Report r;
  Table table;
  r.doc["command"] = "nu";
  r.doc["inputs"] = {{"ring", ring->to_string()}, {"a", a.to_string()}, {"emax", str(std::uint64_t{e_max})}};
  r.doc["nu_table"] = nu_table_json(recs, table);
  r.table = table.str();
  return r;
}

// ν rechecked by expanding f^ν and f^{ν+1} in full.
bool recheck_nu(const SparsePolynomial& f, std::uint64_t q, std::uint64_t nu) {
  auto below = [&](const SparsePolynomial& g) {
    for (const auto& t : g.terms()) {
      bool inside = true;
      for (auto x : t.monomial.exponents()) inside = inside && x < q;
      if (inside) return true;
    }
    return false;
  };
  return below(poly_pow(f, nu)) && !below(poly_pow(f, nu + 1));
}

Report fpt_command(const Options& o) {
  auto ring = ring_of(o);
  Ideal a(ring, poly_list("--a", o.a, ring));
  const unsigned e_max = o.emax.value_or(3);
  auto est = fpt_estimate(a, e_max);
  Report r;
  Table table;
  r.doc["command"] = "fpt";
  r.doc["inputs"] = {{"ring", ring->to_string()}, {"a", a.to_string()}, {"emax", str(std::uint64_t{e_max})}};
  r.doc["interval"] = {{"lo", est.lo.to_string()}, {"hi", est.hi.to_string()}};
  r.doc["nu_table"] = nu_table_json(est.nu_table, table);
  json verdict = {{"status", status_name(est.status)},
                  {"candidates", str(std::uint64_t{est.candidates})},
                  {"candidates_capped", str(est.candidates_capped)},
                  {"explanation", est.explanation},
                  {"certificate", nullptr}};
  std::string text = "interval: [" + est.lo.to_string() + ", " + est.hi.to_string() + "]\nstatus: " +
                     status_name(est.status) + "\n";
  r.doc["witness"] = nullptr;
  if (est.certificate) {
    const auto& c = *est.certificate;
    verdict["certificate"] = {
        {"t", c.t.to_string()}, {"e", str(std::uint64_t{c.e})}, {"kind", certificate_name(c.kind)}};
    text += "certificate: t*=" + c.t.to_string() + " e=" + std::to_string(c.e) + " " + certificate_name(c.kind) + "\n";
    if (c.kind == CertificateKind::sharp_fedder) {
      auto pair = PairSpec::make(Ideal::zero(ring), a, c.t);
      auto step = fedder_condition(pair, c.e, Criterion::sharp);
      if (step.witness) r.doc["witness"] = witness_json(ring, *step.witness);
      if (o.verify) {
        bool ok = step.witness && verify_witness(pair, *step.witness, Criterion::sharp);
        r.doc["witness"]["verified"] = str(ok);
        text += std::string("witness verified: ") + str(ok) + "\n";
        if (!ok) r.code = 3;
      }
    } else if (o.verify) {
      bool ok = true;
      for (unsigned e = c.e; e <= e_max; e += c.e) {
        const auto& rec = est.nu_table[e - 1];
        ok = ok && recheck_nu(a.generators().front(), rec.q, rec.nu) &&
             ExactRational(BigInt(rec.nu)) == c.t * ExactRational(BigInt(rec.q - 1));
      }
      r.doc["witness"] = {{"kind", "nu pattern"}, {"verified", str(ok)}};
      text += std::string("witness verified: ") + str(ok) + "\n";
      if (!ok) r.code = 3;
    }
  }
  text += "explanation: " + est.explanation + "\n";
  r.doc["verdict"] = verdict;
  r.table = text + "\n" + table.str();
  return r;
}

Report testideal_command(const Options& o) {
  auto ring = ring_of(o);
  Ideal a(ring, poly_list("--a", o.a, ring));
  auto t = exponent_of(o);
  const unsigned e_cap = o.emax.value_or(kDefaultTestIdealCap);
  auto res = test_ideal(a, t, o.efloor, e_cap);
  Report r;
  r.doc["command"] = "testideal";
  r.doc["inputs"] = {{"ring", ring->to_string()},
                     {"a", a.to_string()},
                     {"t", t.to_string()},
                     {"emax", str(std::uint64_t{e_cap})},
                     {"efloor", o.efloor ? str(std::uint64_t{*o.efloor}) : "default"},
                     {"seed", str(o.seed)}};
  json chain = json::array();
  Table table;
  table.add({"e", "K_e"});
  for (std::size_t i = 0; i < res.chain.size(); ++i) {
    chain.push_back(res.chain[i].to_string());
    table.add({std::to_string(i + 1), res.chain[i].to_string()});
  }
  json radical;
  if (res.tau.is_monomial()) {
    radical = {{"method", "squarefree generators"}, {"holds", str(is_radical_monomial(res.tau))}};
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->characteristic() - 1);
    std::uniform_int_distribution<int> expo(0, 2);
    std::vector<SparsePolynomial> probes;
    for (int k = 0; k < 8; ++k) {
      std::vector<Term> terms;
      for (int j = 0; j < 3; ++j) {
        std::vector<std::uint64_t> ex(ring->nvars());
        for (auto& x : ex) x = static_cast<std::uint64_t>(expo(rng));
        terms.push_back({Monomial(ex), coeff(rng)});
      }
      probes.push_back(SparsePolynomial::from_terms(ring, std::move(terms)));
    }
    auto rep = radical_probe(res.tau, probes, 3);
    radical = {{"method", "random probes"},
               {"checked", str(rep.checked)},
               {"holds", str(rep.violations.empty())}};
  }
  r.doc["verdict"] = {{"tau", res.tau.to_string()},
                      {"stabilized_at", str(std::uint64_t{res.stabilized_at})},
                      {"e_floor", str(std::uint64_t{res.e_floor})},
                      {"heuristic", str(res.heuristic)},
                      {"radical", radical}};
  r.doc["chain"] = chain;
  r.table = "tau: " + res.tau.to_string() + "\nstabilized at e = " + std::to_string(res.stabilized_at) +
            " (detected, not proven)\nradical: " + radical["holds"].get<std::string>() + " (" +
            radical["method"].get<std::string>() + ")\n\n" + table.str();
  return r;
}

// c a'^N z^q ⊆ I^{[q]} + I_def by full ideal powers, independent of the
// principal shortcut the closure module uses.
bool recheck_containment(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair, const SparsePolynomial& c,
                         unsigned e) {
  const std::uint64_t q = prime_power(pair.ring->characteristic(), e);
  auto N = to_u64(ceil_mul(pair.t, BigInt(q) - 1), "closure exponent");
  Ideal target = ideal_sum(bracket_power(I, q), pair.I);
  auto zq = poly_mul(c, poly_pow(z, q));
  Ideal power = ideal_power(pair.a_preimage, N);
  for (const auto& g : power.generators()) {
    if (!membership(poly_mul(g, zq), target)) return false;
  }
  return true;
}

json closure_trace(const std::vector<ClosureStep>& steps, Table& table) {
  json arr = json::array();
  table.add({"e", "q", "N", "contained"});
  for (const auto& s : steps) {
    arr.push_back({{"e", str(std::uint64_t{s.e})}, {"q", str(s.q)}, {"N", str(s.N)}, {"contained", str(s.contained)}});
    table.add({std::to_string(s.e), str(s.q), str(s.N), str(s.contained)});
  }
  return arr;
}

Report closure_command(const std::string& name, const Options& o) {
  auto ring = ring_of(o);
  Ideal I(ring, poly_list("--ideal", o.ideal, ring));
  Ideal def(ring, poly_list("--defining", o.defining, ring));
  Ideal a(ring, poly_list("--a", o.a, ring));
  auto pair = PairSpec::make(def, a, exponent_of(o));
  auto z = poly("--z", o.z, ring);
  Report r;
  Table table;
  r.doc["command"] = name;
  json inputs = {{"ring", ring->to_string()},
                 {"ideal", I.to_string()},
                 {"defining", def.to_string()},
                 {"a", a.to_string()},
                 {"t", pair.t.to_string()},
                 {"z", z.to_string()}};
  std::string text;
  if (name == "closure") {
    if (o.emax) inputs["emax"] = str(std::uint64_t{*o.emax});
    r.doc["inputs"] = inputs;
    r.doc["notes"] = pair.notes;
    auto v = o.emax ? sharp_frobenius_membership(z, I, pair, 1, *o.emax) : sharp_frobenius_membership(z, I, pair);
    json failed = json::array();
    for (auto e : v.failed) failed.push_back(str(std::uint64_t{e}));
    r.doc["verdict"] = {{"outcome", closure_outcome_name(v.outcome)},
                        {"certified_e", str(std::uint64_t{v.certified_e})},
                        {"certificate", v.certificate},
                        {"failed", failed},
                        {"e_lo", str(std::uint64_t{v.e_lo})},
                        {"e_hi", str(std::uint64_t{v.e_hi})},
                        {"explanation", v.explanation},
                        {"trace", closure_trace(v.trace, table)}};
    r.doc["witness"] = nullptr;
    text = "outcome: " + std::string(closure_outcome_name(v.outcome)) + "\nexplanation: " + v.explanation + "\n";
    if (o.verify && (v.outcome == ClosureOutcome::certified_in || v.outcome == ClosureOutcome::trivially_in)) {
      bool ok = v.outcome == ClosureOutcome::trivially_in
                    ? membership(z, ideal_sum(I, def))
                    : recheck_containment(z, I, pair, SparsePolynomial::constant(ring, 1), v.certified_e);
      r.doc["witness"] = {{"e", str(std::uint64_t{v.certified_e})}, {"verified", str(ok)}};
      text += std::string("witness verified: ") + str(ok) + "\n";
      if (!ok) r.code = 3;
    }
  } else {
    auto c = poly("--c", o.c, ring);
    const unsigned e_max = o.emax.value_or(3);
    inputs["c"] = c.to_string();
    inputs["emax"] = str(std::uint64_t{e_max});
    r.doc["inputs"] = inputs;
    r.doc["notes"] = pair.notes;
    auto w = tight_closure_witness_check(z, I, pair, c, e_max);
    r.doc["verdict"] = {{"holds", str(w.holds)},
                        {"explanation", w.holds ? "containment holds at every tested e (evidence, not proof)"
                                                : "containment fails at some tested e"},
                        {"trace", closure_trace(w.trace, table)}};
    r.doc["witness"] = nullptr;
    text = std::string("holds: ") + str(w.holds) + " for e = 0.." + std::to_string(e_max) + "\n";
    if (o.verify) {
      bool ok = true;
      for (const auto& s : w.trace) ok = ok && recheck_containment(z, I, pair, c, s.e) == s.contained;
      r.doc["witness"] = {{"kind", "per-e containments"}, {"verified", str(ok)}};
      text += std::string("witness verified: ") + str(ok) + "\n";
      if (!ok) r.code = 3;
    }
  }
  r.table = text + "\n" + table.str();
  return r;
}

Report audit_command(const Options& o) {
  if (o.p == 0) throw DomainError("--p is required");
  const unsigned e_max = o.emax.value_or(5);
  auto rep = audit_inequalities(o.p, e_max, o.dmax, rational_grid(o.tmax), o.nmax);
  Report r;
  r.doc["command"] = "lemma-audit";
  r.doc["inputs"] = {{"p", str(std::uint64_t{o.p})},
                     {"emax", str(std::uint64_t{e_max})},
                     {"dmax", str(std::uint64_t{o.dmax})},
                     {"nmax", str(std::uint64_t{o.nmax})},
                     {"tmax", str(std::uint64_t{o.tmax})}};
  json checked = json::object();
  Table table;
  table.add({"inequality", "checked"});
  for (std::size_t i = 0; i < kInequalityCount; ++i) {
    std::string label(1, inequality_label(static_cast<Inequality>(i)));
    checked[label] = str(rep.checked[i]);
    table.add({label, str(rep.checked[i])});
  }
  json violations = json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"inequality", std::string(1, inequality_label(v.inequality))},
                          {"t", v.t.to_string()},
                          {"p", str(std::uint64_t{v.p})},
                          {"e", str(std::uint64_t{v.e})},
                          {"d", str(std::uint64_t{v.d})},
                          {"n", str(std::uint64_t{v.n})},
                          {"lhs", str(v.lhs)},
                          {"rhs", str(v.rhs)}});
  }
  r.doc["verdict"] = {{"checked", checked}, {"total", str(rep.total_checked())}};
  r.doc["violations"] = violations;
  r.table = table.str() + "violations: " + std::to_string(rep.violations.size()) + "\n";
  return r;
}

void add_ring_flags(CLI::App* sub, Options& o) {
  sub->add_option("--ring", o.ring, "ring, e.g. \"p=3; vars=x,y\"");
  sub->add_flag("--json", o.json, "structured output");
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_flag("--verify-witness", o.verify, "recheck embedded witnesses from scratch");
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"F-purity, F-pure thresholds and test ideals over F_p", "fpure"};
  app.require_subcommand(1, 1);
  std::map<std::string, CLI::App*> subs;
  const char* names[] = {"fedder", "sharp-fedder", "strong-fedder", "fpt", "nu", "testideal",
                         "closure", "witness-check", "lemma-audit"};
  const char* help[] = {"classic F-purity via Fedder's criterion",
                        "sharp F-purity of a pair",
                        "strong F-purity of a pair",
                        "F-pure threshold interval and certificate",
                        "nu invariants and threshold brackets",
                        "test ideal by the root chain",
                        "sharp Frobenius closure membership",
                        "tight closure witness check",
                        "audit the ceiling inequalities"};
  for (std::size_t i = 0; i < std::size(names); ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    subs[names[i]] = sub;
    const std::string n = names[i];
    if (n == "lemma-audit") {
      sub->add_option("--p", o.p, "prime");
      sub->add_option("--emax", o.emax, "largest e");
      sub->add_option("--dmax", o.dmax, "largest d");
      sub->add_option("--nmax", o.nmax, "largest n");
      sub->add_option("--tmax", o.tmax, "t ranges over a/b with 1 <= a, b <= tmax");
      sub->add_flag("--json", o.json, "structured output");
      sub->add_option("--seed", o.seed, "unused; accepted for uniformity");
      continue;
    }
    add_ring_flags(sub, o);
    sub->add_option("--a", o.a, "generators of a' (or @file)");
    sub->add_option("--emax", o.emax, "largest e");
    if (n != "fpt" && n != "nu") sub->add_option("--t", o.t, "exponent t, e.g. 5/6");
    if (n == "fedder" || n == "sharp-fedder" || n == "strong-fedder") {
      sub->add_option("--ideal", o.ideal, "defining ideal I of R = S/I (or @file)");
    }
    if (n == "closure" || n == "witness-check") {
      sub->add_option("--ideal", o.ideal, "ideal whose closure is tested (or @file)");
      sub->add_option("--defining", o.defining, "defining ideal of R (or @file)");
      sub->add_option("--z", o.z, "element z");
    }
    if (n == "witness-check") sub->add_option("--c", o.c, "candidate multiplier c");
    if (n == "testideal") sub->add_option("--efloor", o.efloor, "least e at which stabilisation counts");
  }

  Outcome out;
  std::ostringstream sout, serr;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    out.code = app.exit(e, sout, serr) == 0 ? 0 : 1;
    out.out = sout.str();
    out.err = serr.str();
    return out;
  }

  std::string cmd;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cmd = name;
  }
  try {
    Report r;
    if (cmd == "fedder" || cmd == "sharp-fedder" || cmd == "strong-fedder") {
      r = purity_command(cmd, o);
    } else if (cmd == "nu") {
      r = nu_command(o);
    } else if (cmd == "fpt") {
      r = fpt_command(o);
    } else if (cmd == "testideal") {
      r = testideal_command(o);
    } else if (cmd == "closure" || cmd == "witness-check") {
      r = closure_command(cmd, o);
    } else {
      r = audit_command(o);
    }
    out.code = r.code;
    out.out = o.json ? r.doc.dump(2) + "\n" : r.table;
    if (r.code == 3) out.err = "error: witness recheck disagrees with the reported result\n";
  } catch (const ResourceCapError& e) {
    out.code = 2;
    out.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    out.code = 1;
    out.err = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace fpure::cli
