// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dgcd/closure_lab.hpp"
#include "dgcd/gcd.hpp"
#include "dgcd/parse.hpp"
#include "dgcd/report_json.hpp"
#include "dgcd/theorem_lab.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace {

using namespace dgcd;
using dgcd::testing::P;
using dgcd::testing::PolyGen;

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> errors;
  void expect(bool ok, const std::string& what) {
    if (!ok && errors.size() < 5) errors.push_back(what);
    if (!ok) ++failures;
  }
  int failures = 0;
};

PolynomialSystem S(const RingPtr& ring, std::vector<std::string> fs) {
  std::vector<Polynomial> ps;
  for (const auto& f : fs) ps.push_back(P(ring, f));
  return PolynomialSystem(std::move(ps));
}

void weighted_family(Check& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      PolynomialSystem sys = weighted_monomial_system(n, m);
      auto r = differential_gcd(sys);
      c.expect(r.dgcd == Polynomial::variable(sys.ring(), 0),
               "n=" + std::to_string(n) + " m=" + std::to_string(m) + " dgcd " + print_polynomial(r.dgcd));
      for (const auto& d : weighted_monomial_derivations(n, m))
        c.expect(annihilates_generators(d, sys), "derivation does not annihilate the generators");
    }
  }
}

void specializations(Check& c) {
  PolyGen gen(1001);
  for (int trial = 0; trial < 120; ++trial) {
    auto n = static_cast<std::size_t>(gen.integer(1, 3));
    RingPtr ring = make_indexed_ring("x", n);
    if (trial % 2 == 0) {
      std::vector<Polynomial> fs;
      for (std::size_t i = 0; i < n; ++i) fs.push_back(gen.poly(ring, 3, 5, 0.4));
      PolynomialSystem sys(fs);
      Polynomial det = normalize_associate(determinant(jacobian_matrix(sys)));
      c.expect(differential_gcd(sys).dgcd == det, "square system: dgcd differs from the determinant");
    } else {
      Polynomial f = gen.poly(ring, 3, 5, 0.4);
      std::vector<Polynomial> partials;
      for (std::size_t v = 0; v < n; ++v) partials.push_back(partial_derivative(f, v));
      c.expect(differential_gcd(PolynomialSystem({f})).dgcd == gcd_many(partials),
               "single member: dgcd differs from the gcd of partials of " + print_polynomial(f));
    }
  }
}

void witness_soundness(Check& c) {
  PolyGen gen(1002);
  RingPtr xy = make_ring({"x", "y"});
  RingPtr xyz = make_ring({"x", "y", "z"});
  int searched = 0, found = 0;
  for (int trial = 0; searched < 60 && trial < 400; ++trial) {
    const RingPtr& ring = trial % 3 == 2 ? xyz : xy;
    std::vector<Polynomial> fs;
    if (trial % 4 == 0) {
      // plant a square so that some searches succeed
      Polynomial g = gen.nonconstant_poly(ring, 1, 4, 0.8);
      fs.push_back(g * g * gen.nonzero_poly(ring, 1, 3, 0.8));
    } else {
      fs.push_back(gen.nonconstant_poly(ring, 2, 3, 0.5));
    }
    if (trial % 2) fs.push_back(gen.nonconstant_poly(ring, 2, 3, 0.5));
    PolynomialSystem sys(fs);
    auto jac = differential_gcd(sys);
    if (!jac.algebraically_independent) continue;
    Polynomial cand = jac.dgcd.is_constant() ? gen.nonconstant_poly(ring, 1, 3, 0.8) : jac.dgcd;
    auto factors = irreducible_factors(cand);
    if (!factors) continue;
    const Polynomial& g = factors->front();
    auto w = find_square_witness(g, sys, 2);
    ++searched;
    if (!w) continue;
    ++found;
    Polynomial composed = compose(w->w, sys.members());
    c.expect(composed.is_zero() || divides(g * g, composed), "g^2 does not divide w(f)");
    c.expect(divides(g, jac.dgcd), "witness found but g does not divide dgcd");
  }
  c.expect(searched >= 50, "only " + std::to_string(searched) + " instances");
  c.expect(found > 0, "no witness found on any instance");
}

void curated_witnesses(Check& c) {
  RingPtr x123 = make_indexed_ring("x", 3);
  RingPtr xy = make_ring({"x", "y"});
  struct Case {
    PolynomialSystem sys;
    Polynomial g;
  };
  std::vector<Case> cases{{S(x123, {"x1^2*x2", "x3"}), P(x123, "x1")},
                          {S(xy, {"x^2*y"}), P(xy, "x")},
                          {S(xy, {"x^2", "y"}), P(xy, "x")}};
  for (const auto& k : cases) {
    auto w = find_square_witness(k.g, k.sys, 1);
    c.expect(w.has_value(), "no witness at degree 1 for g = " + print_polynomial(k.g));
    if (w) c.expect(verify_witness(k.g, w->w, k.sys), "witness does not verify");
  }
}

void campaigns(Check& c) {
  struct Sys {
    std::vector<std::string> vars, fs;
  };
  std::vector<Sys> constant{{{"x", "y"}, {"y", "x"}},
                            {{"x", "y"}, {"x + y", "x - y"}},
                            {{"x", "y"}, {"x", "y + x^2"}},
                            {{"x", "y"}, {"x + y^2", "y"}},
                            {{"x", "y", "z"}, {"x", "y + x^2"}},
                            {{"x", "y"}, {"x + y^2"}},
                            {{"x", "y", "z"}, {"x", "y + x^2", "z + x*y"}}};
  SamplingConfig cfg;
  cfg.seed = 2024;
  cfg.trials = 240;
  cfg.max_w_degree = 3;
  for (const auto& s : constant) {
    PolynomialSystem sys = S(make_ring(s.vars), s.fs);
    auto r = theorem2_campaign(sys, cfg);
    std::string name = "system starting " + s.fs.front();
    c.expect(r.jacobian_condition, name + ": dgcd not constant");
    c.expect(r.squarefree_w >= 200, name + ": only " + std::to_string(r.squarefree_w) + " square-free w");
    c.expect(r.counterexamples.empty(), name + ": square-free w with non-square-free composition");
    c.expect(!r.assertion_violated, name + ": assertion violated");
  }
  RingPtr x123 = make_indexed_ring("x", 3);
  auto r = theorem2_campaign(S(x123, {"x1^2*x2", "x3"}), cfg);
  c.expect(!r.jacobian_condition, "weighted system: condition should fail");
  c.expect(r.exhibited && print_polynomial(r.exhibited->w) == "y1", "weighted system: w = y1 not exhibited");
  if (r.exhibited) {
    Polynomial composed = compose(r.exhibited->w, r.members);
    c.expect(!is_squarefree(composed), "exhibited composition is square-free");
  }
}

void gcd_properties(Check& c) {
  PolyGen gen(1006);
  for (int trial = 0; trial < 220; ++trial) {
    RingPtr ring = make_indexed_ring("x", static_cast<std::size_t>(gen.integer(1, 3)));
    Polynomial f = gen.nonzero_poly(ring, 3, 5, 0.4), g = gen.nonzero_poly(ring, 3, 5, 0.4),
               h = gen.nonzero_poly(ring, 3, 5, 0.4);
    Polynomial lhs = gcd(f * g, f * h);
    c.expect(lhs == normalize_associate(f * gcd(g, h)), "gcd(fg, fh) != f*gcd(g, h)");
    Polynomial d = gcd(g, h);
    c.expect(divide(g, d).remainder.is_zero() && divide(h, d).remainder.is_zero(), "gcd does not divide its inputs");
  }
}

void squarefree_properties(Check& c) {
  PolyGen gen(1007);
  for (int trial = 0; trial < 220; ++trial) {
    RingPtr ring = make_indexed_ring("x", static_cast<std::size_t>(gen.integer(1, 3)));
    Polynomial p = Polynomial::constant(ring, gen.integer(1, 6));
    int parts = static_cast<int>(gen.integer(1, 3));
    for (int i = 0; i < parts; ++i) p *= gen.nonconstant_poly(ring, 2, 4, 0.6).pow(static_cast<unsigned>(gen.integer(1, 3)));
    auto dec = squarefree_decomposition(p);
    c.expect(dec.expand() == p, "decomposition does not reconstruct " + print_polynomial(p));
    bool all_one = true;
    for (const auto& part : dec.parts) all_one = all_one && (part.multiplicity == 1 || part.factor.is_constant());
    c.expect(is_squarefree(p) == all_one, "is_squarefree disagrees with multiplicities");
  }
}

std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

void closure_ground_truth(Check& c) {
  RingPtr t = make_ring({"t"});
  FactorBase tb = FactorBase::variables(t);
  auto cusp = SubringSpec::from_monomials(t, polys(t, {"t^2", "t^3"}));
  auto evens = SubringSpec::from_monomials(t, polys(t, {"t^2"}));
  auto text = [&](const ClosureVerdict& v) {
    std::string s;
    for (const auto& e : v.witness) s += (s.empty() ? "" : ",") + print_polynomial(e.expand(tb));
    return s;
  };
  auto root = check_root_closed(cusp, 6, 3, tb);
  c.expect(!root.holds && text(root) == "t" && root.power == 2, "root closed witness " + text(root));
  auto sfc = check_square_factorially_closed(cusp, 6, tb);
  c.expect(!sfc.holds && text(sfc) == "t,1", "square-factorially closed witness " + text(sfc));
  auto sat = check_saturation(cusp, 6, tb);
  c.expect(!sat.holds && text(sat) == "t^2,t", "saturation witness " + text(sat));
  auto sqf = check_containment(evens, ClosureProperty::SqfRSubSqfA, 6, tb);
  c.expect(!sqf.holds && text(sqf) == "t^2", "square-free containment witness " + text(sqf));
  for (const auto* v : {&root, &sfc, &sat}) c.expect(reverify_witness(cusp, *v, tb), "cusp witness fails re-check");
  c.expect(reverify_witness(evens, sqf, tb), "even-power witness fails re-check");

  RingPtr xyz = make_ring({"x", "y", "z"});
  auto plane = SubringSpec::from_monomials(xyz, polys(xyz, {"x", "y"}));
  auto rep = audit_implications(plane, 6, 3, FactorBase::variables(xyz));
  for (const auto& v : rep.verdicts) c.expect(v.holds, "k[x,y] fails " + to_string(v.property));
}

void audit_suite(Check& c) {
  std::ifstream file(std::string(DGCD_DATA_DIR) + "/closure_suite.json");
  c.expect(static_cast<bool>(file), "closure suite missing");
  if (!file) return;
  auto suite = nlohmann::json::parse(file);
  unsigned bound = suite["bound"], max_power = suite["max_power"];
  int instances = 0, failing = 0;
  for (const auto& inst : suite["instances"]) {
    RingPtr ring = make_ring(inst["ambient_vars"].get<std::vector<std::string>>());
    auto gens = inst["generators"].get<std::vector<std::string>>();
    SubringSpec r = gens.empty() ? SubringSpec::ambient(ring) : SubringSpec::from_monomials(ring, polys(ring, gens));
    FactorBase base = inst.contains("base") ? FactorBase(ring, polys(ring, inst["base"].get<std::vector<std::string>>()))
                                            : FactorBase::variables(ring);
    auto rep = audit_implications(r, bound, max_power, base);
    ++instances;
    for (const auto& f : rep.findings) c.expect(false, r.describe() + ": " + f.rule + " " + f.detail);
    for (const auto& v : rep.verdicts) {
      c.expect(reverify_witness(r, v, base), r.describe() + ": unverified " + to_string(v.property));
      failing += !v.holds;
    }
  }
  c.expect(instances >= 10 && failing > 0, "suite too small to exercise the audit");
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(DGCD_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  return {pclose(pipe), out};
}

void determinism(Check& c) {
  std::string d = std::string(DGCD_DATA_DIR) + "/";
  std::vector<std::string> commands{
      "theorem2 --input " + d + "linear_pair.json --seed 7 --trials 100",
      "theorem2 --input " + d + "weighted_monomial.json --seed 7 --trials 60",
      "theorem2 --input " + d + "triangular3.json --seed 123 --trials 50 --max-degree 2",
      "theorem2 --poly 'x + y^2' --vars x,y --seed 99 --trials 80 --coeff-bound 3",
      "dgcd --input " + d + "weighted_monomial.json",
      "witness --input " + d + "weighted_monomial.json --g x1",
      "theorem1 --input " + d + "single_member.json --g x --max-degree 2",
      "closure --ambient-vars t --generators 't^2,t^3'",
      "closure --ambient-vars x,y --generators 'x^2,x*y,y^2' --bound 5",
  };
  for (const auto& cmd : commands) {
    Run a = run_cli(cmd), b = run_cli(cmd);
    c.expect(a.code == 0 && b.code == 0, "nonzero exit: " + cmd + "\n" + a.out);
    c.expect(a.out == b.out && !a.out.empty(), "output differs between runs: " + cmd);
    c.expect(nlohmann::json::accept(a.out), "not JSON: " + cmd);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> body;
  };
  std::vector<Criterion> criteria{
      {1, "weighted monomial family: dgcd = x1, derivations annihilate (3 <= n <= 5)", weighted_family},
      {2, "m = n gives the determinant, m = 1 the gcd of partials (120 systems)", specializations},
      {3, "square witnesses are sound: g^2 | w(f) and g | dgcd", witness_soundness},
      {4, "curated witnesses found at degree 1", curated_witnesses},
      {5, "square-free compositions under constant dgcd; y1 exhibited otherwise", campaigns},
      {6, "gcd(fg, fh) = f*gcd(g, h) and gcd divides its inputs (220 triples)", gcd_properties},
      {7, "square-free decomposition reconstructs and matches is_squarefree (220)", squarefree_properties},
      {8, "closure ground truth witnesses re-verify", closure_ground_truth},
      {9, "implication audit clean on the shipped closure suite", audit_suite},
      {10, "seeded CLI reruns are byte-identical", determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = c.failures == 0;
    failed += !ok;
    std::printf("%s %2d  %s  (%.2fs)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs);
    for (const auto& e : c.errors) std::printf("        %s\n", e.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
