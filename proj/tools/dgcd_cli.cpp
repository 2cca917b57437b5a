// dgcd: command-line front end.
// Exit codes: 0 computed, 1 an internal assertion or audit contradiction,
// 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgcd/closure_lab.hpp"
#include "dgcd/parse.hpp"
#include "dgcd/report_json.hpp"
#include "dgcd/theorem_lab.hpp"

namespace {

using namespace dgcd;

constexpr int kComputed = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputOptions {
  std::string input;
  std::vector<std::string> polys;
  std::string vars;
};

struct Options {
  InputOptions in;
  std::string format = "json";
  std::string g;
  int max_degree = kDefaultWitnessDegree;
  std::uint64_t seed = 1;
  unsigned trials = 200;
  unsigned coeff_bound = 5;
  bool irreducible_only = false;
  std::string ambient_vars;
  std::string generators;
  std::string base;
  unsigned bound = 6;
  unsigned max_power = 3;
};

struct InputError : Error {
  using Error::Error;
};

ParsedSystem read_system(const InputOptions& in) {
  if (in.input.empty() == in.polys.empty()) throw InputError("give exactly one of --input and --poly");
  if (!in.input.empty()) {
    std::ifstream file(in.input);
    if (!file) throw InputError("cannot read " + in.input);
    std::stringstream buf;
    buf << file.rdbuf();
    if (!in.vars.empty()) throw InputError("--vars only applies to --poly");
    return parse_system(parse_poly_source(buf.str()));
  }
  if (in.vars.empty()) throw InputError("--poly needs --vars");
  PolySource src{split_list(in.vars), in.polys};
  return parse_system(src);
}

std::string members_text(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + print_polynomial(ps[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const WitnessReport& w) {
  return "w = " + print_polynomial(w.w) + " (" + to_string(w.w_kind) + ", degree bound " +
         std::to_string(w.search_degree_bound) + ")";
}

int cmd_dgcd(const Options& o) {
  auto sys = read_system(o.in);
  auto r = differential_gcd(PolynomialSystem(sys.polynomials));
  if (o.format == "json") {
    std::cout << to_json(r);
    return kComputed;
  }
  std::cout << "system " << members_text(r.members) << "\n";
  for (const auto& m : r.minors) {
    std::cout << "  minor [";
    for (std::size_t i = 0; i < m.columns.size(); ++i) std::cout << (i ? "," : "") << m.columns[i] + 1;
    std::cout << "] = " << m.value << "\n";
  }
  std::cout << "dgcd = " << r.dgcd << "\n"
            << "jacobian condition: " << yes_no(r.dgcd_is_nonzero_constant) << "\n"
            << "algebraically independent: " << yes_no(r.algebraically_independent) << "\n";
  return kComputed;
}

Polynomial read_g(const Options& o, const RingPtr& ring) {
  if (o.g.empty()) throw InputError("--g is required");
  return parse_polynomial(o.g, ring);
}

int cmd_witness(const Options& o) {
  auto sys = read_system(o.in);
  PolynomialSystem ps(sys.polynomials);
  Polynomial g = read_g(o, sys.ring);
  auto w = find_square_witness(g, ps, o.max_degree);
  if (o.format == "json") {
    std::cout << (w ? to_json(*w) : witness_not_found_json(g, sys.polynomials, o.max_degree));
    return kComputed;
  }
  std::cout << "g = " << g << ", system " << members_text(sys.polynomials) << "\n";
  if (w)
    std::cout << witness_text(*w) << "\n";
  else
    std::cout << "no square-free witness up to degree " << o.max_degree << "\n";
  return kComputed;
}

int cmd_theorem1(const Options& o) {
  auto sys = read_system(o.in);
  PolynomialSystem ps(sys.polynomials);
  auto r = theorem1_consistency_check(read_g(o, sys.ring), ps, o.max_degree);
  if (o.format == "json") {
    std::cout << to_json(r);
  } else {
    std::cout << "g = " << r.g << ", system " << members_text(r.members) << "\n"
              << "dgcd = " << r.dgcd << "\n"
              << "g divides dgcd: " << yes_no(r.g_divides_dgcd) << "\n"
              << (r.witness ? witness_text(*r.witness) : "no witness up to degree " + std::to_string(r.search_degree_bound))
              << "\n"
              << "consistent: " << yes_no(r.consistent) << "\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return r.consistent ? kComputed : kViolation;
}

int cmd_theorem2(const Options& o) {
  auto sys = read_system(o.in);
  PolynomialSystem ps(sys.polynomials);
  if (o.max_degree < 1) throw InputError("--max-degree must be positive");
  SamplingConfig cfg{o.seed, o.trials, static_cast<unsigned>(o.max_degree), o.coeff_bound, o.irreducible_only};
  auto r = theorem2_campaign(ps, cfg);
  if (o.format == "json") {
    std::cout << to_json(r);
  } else {
    std::cout << "system " << members_text(r.members) << ", dgcd = " << r.dgcd << "\n"
              << "jacobian condition: " << yes_no(r.jacobian_condition) << "\n"
              << "sampled " << r.sampled << " w, " << r.squarefree_w << " square-free, " << r.irreducible_w
              << " irreducible\n"
              << "compositions with a repeated factor: " << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) std::cout << "  w = " << c.w << " -> " << c.composed << "\n";
    if (r.exhibited) std::cout << "exhibited for g = " << r.exhibited->g << ": " << witness_text(*r.exhibited) << "\n";
    std::cout << "assertion violated: " << yes_no(r.assertion_violated) << "\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return r.assertion_violated ? kViolation : kComputed;
}

std::vector<Polynomial> parse_list(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& s : split_list(text)) out.push_back(parse_polynomial(s, ring));
  return out;
}

int cmd_closure(const Options& o) {
  if (o.ambient_vars.empty()) throw InputError("--ambient-vars is required");
  if (o.bound == 0) throw InputError("--bound must be positive");
  if (o.max_power < 2) throw InputError("--max-power must be at least 2");
  RingPtr ring = make_ring(split_list(o.ambient_vars));
  SubringSpec r = o.generators.empty() ? SubringSpec::ambient(ring)
                                       : SubringSpec::from_monomials(ring, parse_list(o.generators, ring));
  FactorBase base = o.base.empty() ? FactorBase::variables(ring) : FactorBase(ring, parse_list(o.base, ring));
  auto rep = audit_implications(r, o.bound, o.max_power, base);
  if (o.format == "json") {
    std::cout << to_json(rep);
  } else {
    std::cout << r.describe() << ", factor base " << members_text(base.primes()) << "\n"
              << "units equal: " << yes_no(rep.units_equal) << "\n";
    for (const auto& v : rep.verdicts) {
      std::cout << "  " << to_string(v.property) << ": ";
      if (v.holds) {
        std::cout << "holds up to " << v.bound << "\n";
        continue;
      }
      std::cout << "fails, witness";
      for (const auto& e : v.witness) std::cout << " " << e.expand(base);
      if (v.property == ClosureProperty::RootClosed) std::cout << " (n = " << v.power << ")";
      std::cout << "\n";
    }
    std::cout << "rules checked: " << rep.rules_checked.size() << "\n";
    for (const auto& f : rep.findings) std::cout << "  contradiction: " << f.rule << " (" << f.detail << ")\n";
    std::cout << "audit clean: " << yes_no(rep.audit_clean()) << "\n";
  }
  return rep.audit_clean() ? kComputed : kViolation;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.in.input, "JSON file {\"variables\": [...], \"polynomials\": [...]}");
  cmd->add_option("--poly", o.in.polys, "polynomial expression (repeatable)")->allow_extra_args(false);
  cmd->add_option("--vars", o.in.vars, "comma-separated variables for --poly");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Differential gcd, square witnesses and subring closure audits"};
  app.require_subcommand(1);

  auto* dgcd_cmd = app.add_subcommand("dgcd", "Jacobian minors and their gcd");
  auto* witness_cmd = app.add_subcommand("witness", "square-free w with g^2 | w(f)");
  auto* t1_cmd = app.add_subcommand("theorem1", "g | dgcd against a witness search");
  auto* t2_cmd = app.add_subcommand("theorem2", "seeded square-free composition campaign");
  auto* closure_cmd = app.add_subcommand("closure", "closure properties of a monomial subring");

  for (auto* c : {dgcd_cmd, witness_cmd, t1_cmd, t2_cmd}) add_input(c, o);
  for (auto* c : {dgcd_cmd, witness_cmd, t1_cmd, t2_cmd, closure_cmd}) add_format(c, o);
  for (auto* c : {witness_cmd, t1_cmd}) {
    c->add_option("--g", o.g, "irreducible polynomial g");
    c->add_option("--max-degree", o.max_degree, "total degree bound for w");
  }
  t2_cmd->add_option("--seed", o.seed, "campaign seed");
  t2_cmd->add_option("--trials", o.trials, "number of sampled w");
  t2_cmd->add_option("--max-degree", o.max_degree, "total degree bound for sampled w");
  t2_cmd->add_option("--coeff-bound", o.coeff_bound, "coefficients drawn from [-b, b]");
  t2_cmd->add_flag("--irreducible-only", o.irreducible_only, "count only w proven irreducible");
  closure_cmd->add_option("--ambient-vars", o.ambient_vars, "comma-separated ambient variables");
  closure_cmd->add_option("--generators", o.generators, "comma-separated monomials; omit for the ambient ring");
  closure_cmd->add_option("--base", o.base, "comma-separated irreducible factor base; default the variables");
  closure_cmd->add_option("--bound", o.bound, "factor budget for enumeration");
  closure_cmd->add_option("--max-power", o.max_power, "largest n tried for x^n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kComputed : kInputError;
  }

  try {
    if (*dgcd_cmd) return cmd_dgcd(o);
    if (*witness_cmd) return cmd_witness(o);
    if (*t1_cmd) return cmd_theorem1(o);
    if (*t2_cmd) return cmd_theorem2(o);
    return cmd_closure(o);
  } catch (const ParseError& e) {
    std::cerr << "input error at line " << e.line() << ", column " << e.column() << ": " << e.detail() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kViolation;
  }
}
