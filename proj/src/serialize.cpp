#include "autoseq/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace autoseq::serialize {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw std::invalid_argument(std::string("missing field: ") + name);
  return *it;
}

std::string nat_str(const Natural& n) { return n.get_str(); }

Json naturals_to_json(const std::vector<Natural>& ns) {
  Json arr = Json::array();
  for (const auto& n : ns) arr.push_back(nat_str(n));
  return arr;
}

}  // namespace

Json value_to_json(const Value& v) {
  if (v.is_zero()) return Json("0");
  Json node;
  node["mag"] = v.magnitude_fraction();
  node["phase"] = v.phase_fraction();
  return node;
}

Value value_from_json(const Json& node) {
  if (node.is_string()) {
    std::string s = node.get<std::string>();
    require(s == "0", "output literal must be \"0\" or {mag, phase}, got " + s);
    return Value::zero();
  }
  require(node.is_object(), "output entry must be \"0\" or an object");
  Value v = Value::parse(field(node, "mag").get<std::string>() + "@" +
                         field(node, "phase").get<std::string>());
  require(!v.is_zero(), "nonzero output must have nonzero magnitude");
  return v;
}

Json dfao_to_json(const dfao::Dfao& a) {
  dfao::Dfao c = dfao::canonicalize(a);
  std::vector<std::string> names(c.state_count());
  for (unsigned s = 0; s < c.state_count(); ++s)
    names[s] = s < c.names.size() && !c.names[s].empty()
                   ? c.names[s]
                   : "s" + std::to_string(s);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "dfao";
  doc["digit_order"] = "lsb";
  doc["base"] = c.base;
  doc["states"] = names;
  doc["initial"] = names[c.initial];
  Json transitions;
  for (unsigned s = 0; s < c.state_count(); ++s) {
    Json row = Json::array();
    for (unsigned d = 0; d < c.base; ++d)
      row.push_back(names[c.transitions[s][d]]);
    transitions[names[s]] = row;
  }
  doc["transitions"] = transitions;
  Json output;
  for (unsigned s = 0; s < c.state_count(); ++s)
    output[names[s]] = value_to_json(c.outputs[s]);
  doc["output"] = output;
  return doc;
}

std::string dfao_to_string(const dfao::Dfao& a) {
  return dfao_to_json(a).dump(2) + "\n";
}

dfao::Dfao dfao_from_json(const Json& doc) {
  require(doc.is_object(), "sequence definition must be a JSON object");
  std::string order = field(doc, "digit_order").get<std::string>();
  require(order == "lsb",
          "digit_order must be \"lsb\"; MSB-first machines are rejected, "
          "not converted");
  dfao::Dfao a;
  a.base = field(doc, "base").get<unsigned>();
  auto names = field(doc, "states").get<std::vector<std::string>>();
  require(!names.empty(), "states list must be nonempty");
  std::map<std::string, unsigned> index;
  for (unsigned s = 0; s < names.size(); ++s) {
    require(index.try_emplace(names[s], s).second,
            "duplicate state name: " + names[s]);
  }
  auto state_of = [&](const std::string& name) {
    auto it = index.find(name);
    require(it != index.end(), "unknown state name: " + name);
    return it->second;
  };
  a.names = names;
  a.initial = state_of(field(doc, "initial").get<std::string>());
  const Json& transitions = field(doc, "transitions");
  const Json& output = field(doc, "output");
  a.transitions.resize(names.size());
  a.outputs.resize(names.size());
  for (unsigned s = 0; s < names.size(); ++s) {
    auto row = transitions.find(names[s]);
    require(row != transitions.end(),
            "missing field: transitions for state " + names[s]);
    require(row->is_array() && row->size() == a.base,
            "state " + names[s] + " needs exactly base-many successors");
    for (const auto& succ : *row)
      a.transitions[s].push_back(state_of(succ.get<std::string>()));
    auto out = output.find(names[s]);
    require(out != output.end(), "missing field: output for state " + names[s]);
    a.outputs[s] = value_from_json(*out);
  }
  return dfao::validate(std::move(a));
}

dfao::Dfao dfao_from_string(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return dfao_from_json(doc);
}

dfao::Dfao dfao_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return dfao_from_string(text);
}

Json kernel_to_json(const dfao::KernelInfo& info) {
  Json doc;
  doc["s0"] = info.s0;
  doc["s0_with_identity"] = info.s0_with_identity;
  doc["k0"] = nat_str(info.k0);
  Json reps = Json::array();
  for (const auto& [i, r] : info.representatives) {
    Json rep;
    rep["i"] = i;
    rep["r"] = nat_str(r);
    reps.push_back(rep);
  }
  doc["representatives"] = reps;
  return doc;
}

Json eventually_periodic_to_json(const dfao::EventuallyPeriodic& ep) {
  Json doc;
  Json pre = Json::array();
  for (const auto& v : ep.preperiod) pre.push_back(v.str());
  Json per = Json::array();
  for (const auto& v : ep.period) per.push_back(v.str());
  doc["preperiod"] = pre;
  doc["period"] = per;
  return doc;
}

Json mult_report_to_json(const multiplicative::MultReport& report) {
  Json doc;
  switch (report.status) {
    case multiplicative::MultStatus::multiplicative:
      doc["status"] = "multiplicative";
      break;
    case multiplicative::MultStatus::completely_multiplicative:
      doc["status"] = "completely_multiplicative";
      break;
    case multiplicative::MultStatus::counterexample:
      doc["status"] = "counterexample";
      break;
  }
  if (report.witness) {
    doc["witness_m"] = nat_str(report.witness->first);
    doc["witness_n"] = nat_str(report.witness->second);
  }
  doc["pairs_checked"] = report.pairs_checked;
  doc["bound"] = nat_str(report.bound);
  doc["complete"] = report.complete;
  return doc;
}

Json profile_to_json(const multiplicative::PrimeProfile& profile) {
  Json doc;
  doc["p"] = nat_str(profile.p);
  doc["divides_base"] = profile.divides_base;
  Json values = Json::array();
  for (const auto& v : profile.values) values.push_back(v.str());
  doc["values"] = values;
  doc["in_P0"] = profile.in_P0;
  doc["in_P1hat"] = profile.in_P1hat;
  doc["in_Pgt1"] = profile.in_Pgt1;
  doc["in_Plt1"] = profile.in_Plt1;
  doc["alpha_p"] = profile.alpha_p ? Json(*profile.alpha_p) : Json(nullptr);
  doc["delta_p"] = profile.delta_p ? Json(*profile.delta_p) : Json(nullptr);
  return doc;
}

Json profiles_to_json(const std::vector<multiplicative::PrimeProfile>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(profile_to_json(p));
  return arr;
}

Json character_table_to_json(const classifier::CharacterTable& table) {
  Json doc;
  doc["Q"] = nat_str(table.modulus);
  Json values;
  for (const auto& [unit, v] : table.values)
    values[nat_str(unit)] = v.phase_fraction();
  doc["values"] = values;  // unit residue -> phase fraction
  return doc;
}

Json classification_to_json(const classifier::Classification& c) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "classification";
  if (const auto* ch = std::get_if<classifier::Character>(&c.outcome)) {
    doc["variant"] = "character";
    doc["Q"] = nat_str(ch->table.modulus);
    doc["character"] = character_table_to_json(ch->table);
    doc["certificate"] = ch->certificate;
  } else if (const auto* v =
                 std::get_if<classifier::VanishingOnLargePrimes>(&c.outcome)) {
    doc["variant"] = "vanishing_on_large_primes";
    doc["exceptional"] = naturals_to_json(v->evidence.exceptional);
    doc["checked_to"] = nat_str(v->evidence.checked_to);
    doc["p1hat_primes"] = naturals_to_json(v->evidence.p1hat_primes);
    doc["refinement_E"] = v->evidence.refinement_E;
  } else if (const auto* nm =
                 std::get_if<classifier::NotMultiplicative>(&c.outcome)) {
    doc["variant"] = "not_multiplicative";
    doc["witness_m"] = nat_str(nm->witness_m);
    doc["witness_n"] = nat_str(nm->witness_n);
    doc["pairs_checked"] = nm->pairs_checked;
  } else if (const auto* inc =
                 std::get_if<classifier::Inconclusive>(&c.outcome)) {
    doc["variant"] = "inconclusive";
    doc["reason"] = inc->reason;
    doc["exceptional"] = naturals_to_json(inc->evidence.exceptional);
    doc["checked_to"] = nat_str(inc->evidence.checked_to);
    doc["p1hat_primes"] = naturals_to_json(inc->evidence.p1hat_primes);
    doc["refinement_E"] = inc->evidence.refinement_E;
  }
  Json params;
  params["N"] = nat_str(c.params.mult_bound);
  params["P"] = nat_str(c.params.prime_bound);
  params["Qmax"] = c.params.qmax ? Json(nat_str(*c.params.qmax)) : Json(nullptr);
  params["E"] = c.params.profile_exponent;
  doc["parameters"] = params;
  return doc;
}

Json shift_witness_to_json(const proofkit::ShiftWitness& w) {
  Json doc;
  doc["r"] = nat_str(w.r);
  doc["A"] = w.A;
  doc["i"] = w.i;
  doc["j"] = w.j;
  doc["m0"] = w.m0 ? Json(nat_str(*w.m0)) : Json(nullptr);
  doc["certificate"] = w.certificate;
  return doc;
}

Json geometric_witness_to_json(const proofkit::GeometricWitness& w) {
  Json doc;
  doc["r"] = nat_str(w.r);
  doc["A"] = w.A;
  doc["C"] = w.C;
  doc["m0"] = nat_str(w.m0);
  doc["certificate"] = eventually_periodic_to_json(w.certificate);
  return doc;
}

Json coverage_to_json(const proofkit::CoverageReport& report) {
  Json doc;
  doc["alpha"] = report.alpha;
  doc["alpha1"] = report.alpha1;
  doc["modulus"] = nat_str(report.modulus);
  doc["subsets"] = report.subsets;
  doc["full_coverage"] = report.full_coverage;
  doc["coverage_attained"] = naturals_to_json(report.attained);
  doc["coverage_missing"] = naturals_to_json(report.missing);
  return doc;
}

}  // namespace autoseq::serialize
