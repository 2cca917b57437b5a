#include "dgcd/report_json.hpp"

#include "dgcd/parse.hpp"
#include "json.hpp"

namespace dgcd {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(print_polynomial(p));
  return a;
}

void put_ring(Json& j, const RingPtr& ring) {
  j["variables"] = ring->variable_names();
  j["order"] = to_string(ring->order());
}

Json parse_doc(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

// nlohmann errors become Error so callers see one exception family.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

RingPtr read_ring(const Json& j, const char* vars_key = "variables") {
  auto order = parse_monomial_order(j.at("order").get<std::string>());
  if (!order) throw Error("unknown monomial order in report");
  return make_ring(j.at(vars_key).get<std::vector<std::string>>(), *order);
}

Polynomial poly(const Json& j, const RingPtr& ring) { return parse_polynomial(j.get<std::string>(), ring); }

std::vector<Polynomial> polys(const Json& j, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& e : j) out.push_back(poly(e, ring));
  return out;
}

Json witness_json(const WitnessReport& r) {
  Json j;
  put_ring(j, r.g.ring());
  j["g"] = print_polynomial(r.g);
  j["members"] = strings(r.members);
  j["witness_variables"] = witness_ring(r.members.size())->variable_names();
  j["found"] = true;
  j["w"] = print_polynomial(r.w);
  j["w_kind"] = to_string(r.w_kind);
  j["divisibility_checked"] = r.divisibility_checked;
  j["search_degree_bound"] = r.search_degree_bound;
  return j;
}

WitnessReport witness_from(const Json& j) {
  RingPtr ring = read_ring(j);
  auto members = polys(j.at("members"), ring);
  if (!j.at("found").get<bool>()) throw Error("witness report has no witness");
  RingPtr y = make_ring(j.at("witness_variables").get<std::vector<std::string>>());
  return WitnessReport{poly(j.at("g"), ring),
                       members,
                       poly(j.at("w"), y),
                       parse_witness_kind(j.at("w_kind").get<std::string>()),
                       j.at("divisibility_checked").get<bool>(),
                       j.at("search_degree_bound").get<int>()};
}

Json optional_witness(const std::optional<WitnessReport>& w) { return w ? witness_json(*w) : Json(nullptr); }

std::optional<WitnessReport> optional_witness_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return witness_from(j);
}

Json element_json(const FactoredElement& e, const std::vector<Polynomial>& base) {
  Json j;
  Polynomial p = Polynomial::constant(base.front().ring(), e.unit);
  for (std::size_t i = 0; i < e.exponents.size() && i < base.size(); ++i) p *= base[i].pow(e.exponents[i]);
  j["value"] = print_polynomial(p);
  j["unit"] = e.unit.get_str();
  j["exponents"] = e.exponents;
  return j;
}

}  // namespace

std::string to_json(const JacobianReport& r) {
  Json j;
  put_ring(j, r.dgcd.ring());
  j["members"] = strings(r.members);
  Json minors = Json::array();
  for (const auto& m : r.minors) {
    Json cols = Json::array();
    for (auto c : m.columns) cols.push_back(c + 1);
    minors.push_back(Json{{"columns", cols}, {"value", print_polynomial(m.value)}});
  }
  j["minors"] = minors;
  j["dgcd"] = print_polynomial(r.dgcd);
  j["dgcd_is_nonzero_constant"] = r.dgcd_is_nonzero_constant;
  j["algebraically_independent"] = r.algebraically_independent;
  return dump(j);
}

JacobianReport jacobian_report_from_json(std::string_view text) {
  return guarded([&] {
    Json j = parse_doc(text);
    RingPtr ring = read_ring(j);
    std::vector<JacobianMinor> minors;
    for (const auto& m : j.at("minors")) {
      std::vector<std::size_t> cols;
      for (const auto& c : m.at("columns")) {
        auto k = c.get<std::size_t>();
        if (k == 0) throw Error("minor columns are 1-based");
        cols.push_back(k - 1);
      }
      minors.push_back(JacobianMinor{cols, poly(m.at("value"), ring)});
    }
    return JacobianReport{polys(j.at("members"), ring), minors, poly(j.at("dgcd"), ring),
                          j.at("dgcd_is_nonzero_constant").get<bool>(),
                          j.at("algebraically_independent").get<bool>()};
  });
}

std::string to_json(const WitnessReport& r) { return dump(witness_json(r)); }

std::string witness_not_found_json(const Polynomial& g, const std::vector<Polynomial>& members, int bound) {
  Json j;
  put_ring(j, g.ring());
  j["g"] = print_polynomial(g);
  j["members"] = strings(members);
  j["witness_variables"] = witness_ring(members.size())->variable_names();
  j["found"] = false;
  j["w"] = nullptr;
  j["w_kind"] = nullptr;
  j["divisibility_checked"] = false;
  j["search_degree_bound"] = bound;
  return dump(j);
}

WitnessReport witness_report_from_json(std::string_view text) {
  return guarded([&] { return witness_from(parse_doc(text)); });
}

std::string to_json(const Theorem1Report& r) {
  Json j;
  put_ring(j, r.g.ring());
  j["g"] = print_polynomial(r.g);
  j["members"] = strings(r.members);
  j["dgcd"] = print_polynomial(r.dgcd);
  j["g_divides_dgcd"] = r.g_divides_dgcd;
  j["witness"] = optional_witness(r.witness);
  j["search_degree_bound"] = r.search_degree_bound;
  j["consistent"] = r.consistent;
  j["note"] = r.note;
  return dump(j);
}

Theorem1Report theorem1_report_from_json(std::string_view text) {
  return guarded([&] {
    Json j = parse_doc(text);
    RingPtr ring = read_ring(j);
    return Theorem1Report{poly(j.at("g"), ring),
                          polys(j.at("members"), ring),
                          poly(j.at("dgcd"), ring),
                          j.at("g_divides_dgcd").get<bool>(),
                          optional_witness_from(j.at("witness")),
                          j.at("search_degree_bound").get<int>(),
                          j.at("consistent").get<bool>(),
                          j.at("note").get<std::string>()};
  });
}

std::string to_json(const CampaignReport& r) {
  Json j;
  put_ring(j, r.dgcd.ring());
  j["members"] = strings(r.members);
  j["witness_variables"] = witness_ring(r.members.size())->variable_names();
  j["config"] = Json{{"seed", r.config.seed},
                     {"trials", r.config.trials},
                     {"max_w_degree", r.config.max_w_degree},
                     {"coeff_bound", r.config.coeff_bound},
                     {"irreducible_only", r.config.irreducible_only}};
  j["dgcd"] = print_polynomial(r.dgcd);
  j["jacobian_condition"] = r.jacobian_condition;
  j["sampled"] = r.sampled;
  j["squarefree_w"] = r.squarefree_w;
  j["irreducible_w"] = r.irreducible_w;
  Json ce = Json::array();
  for (const auto& c : r.counterexamples)
    ce.push_back(Json{{"w", print_polynomial(c.w)}, {"composed", print_polynomial(c.composed)}});
  j["counterexamples"] = ce;
  j["assertion_violated"] = r.assertion_violated;
  j["exhibited"] = optional_witness(r.exhibited);
  j["note"] = r.note;
  return dump(j);
}

CampaignReport campaign_report_from_json(std::string_view text) {
  return guarded([&] {
    Json j = parse_doc(text);
    RingPtr ring = read_ring(j);
    RingPtr y = make_ring(j.at("witness_variables").get<std::vector<std::string>>());
    const Json& c = j.at("config");
    SamplingConfig cfg{c.at("seed").get<std::uint64_t>(), c.at("trials").get<unsigned>(),
                       c.at("max_w_degree").get<unsigned>(), c.at("coeff_bound").get<unsigned>(),
                       c.at("irreducible_only").get<bool>()};
    std::vector<Counterexample> ce;
    for (const auto& e : j.at("counterexamples")) ce.push_back({poly(e.at("w"), y), poly(e.at("composed"), ring)});
    return CampaignReport{polys(j.at("members"), ring),
                          cfg,
                          poly(j.at("dgcd"), ring),
                          j.at("jacobian_condition").get<bool>(),
                          j.at("sampled").get<std::size_t>(),
                          j.at("squarefree_w").get<std::size_t>(),
                          j.at("irreducible_w").get<std::size_t>(),
                          ce,
                          j.at("assertion_violated").get<bool>(),
                          optional_witness_from(j.at("exhibited")),
                          j.at("note").get<std::string>()};
  });
}

std::string to_json(const ClosureReport& r) {
  if (r.base.empty()) throw Error("closure report without a factor base");
  Json j;
  j["ambient_variables"] = r.ambient_variables;
  j["order"] = to_string(r.base.front().ring()->order());
  j["generators"] = r.generators;
  j["base"] = strings(r.base);
  j["bound"] = r.bound;
  j["max_power"] = r.max_power;
  j["units_equal"] = r.units_equal;
  Json vs = Json::array();
  for (const auto& v : r.verdicts) {
    Json w = Json::array();
    for (const auto& e : v.witness) w.push_back(element_json(e, r.base));
    Json o{{"property", to_string(v.property)}, {"holds", v.holds}, {"bound", v.bound}, {"witness", w}};
    if (v.property == ClosureProperty::RootClosed) o["power"] = v.power;
    vs.push_back(o);
  }
  j["verdicts"] = vs;
  j["rules_checked"] = r.rules_checked;
  Json fs = Json::array();
  for (const auto& f : r.findings) fs.push_back(Json{{"rule", f.rule}, {"detail", f.detail}});
  j["findings"] = fs;
  j["audit_clean"] = r.audit_clean();
  return dump(j);
}

ClosureReport closure_report_from_json(std::string_view text) {
  return guarded([&] {
    Json j = parse_doc(text);
    RingPtr ring = read_ring(j, "ambient_variables");
    ClosureReport r;
    r.ambient_variables = ring->variable_names();
    r.generators = j.at("generators").get<std::vector<std::vector<unsigned>>>();
    r.base = polys(j.at("base"), ring);
    r.bound = j.at("bound").get<unsigned>();
    r.max_power = j.at("max_power").get<unsigned>();
    r.units_equal = j.at("units_equal").get<bool>();
    for (const auto& v : j.at("verdicts")) {
      ClosureVerdict cv;
      cv.property = parse_closure_property(v.at("property").get<std::string>());
      cv.holds = v.at("holds").get<bool>();
      cv.bound = v.at("bound").get<unsigned>();
      cv.power = v.value("power", 0u);
      for (const auto& e : v.at("witness")) {
        cv.witness.push_back(
            FactoredElement{parse_rational(e.at("unit").get<std::string>()), e.at("exponents").get<std::vector<unsigned>>()});
      }
      r.verdicts.push_back(std::move(cv));
    }
    r.rules_checked = j.at("rules_checked").get<std::vector<std::string>>();
    for (const auto& f : j.at("findings"))
      r.findings.push_back({f.at("rule").get<std::string>(), f.at("detail").get<std::string>()});
    return r;
  });
}

}  // namespace dgcd
