#ifndef BFC_IO_HPP
#define BFC_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bfc/corpus.hpp"

namespace bfc::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Algebra files
// ---------------------------------------------------------------------------
// { "name": str, "size": int, "names": [str] (optional),
//   "ops": [ { "symbol": str, "arity": int, "table": [int...] } ] }

inline json algebra_to_json(const FiniteAlgebra& a, const std::string& name = "") {
  json j;
  j["name"] = name;
  j["size"] = a.size();
  if (a.has_names()) j["names"] = a.names();
  json ops = json::array();
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    json o;
    o["symbol"] = a.signature().at(op).symbol;
    o["arity"] = a.signature().at(op).arity;
    o["table"] = a.table(op).entries;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j;
}

inline AlgebraPtr algebra_from_json(const json& j, const Limits& limits = {}) {
  if (!j.is_object()) throw ValidationError("algebra file: expected an object");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw ValidationError("algebra file: missing integer 'size'");
  const int size = j["size"].get<int>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
  if (!j.contains("ops") || !j["ops"].is_array()) throw ValidationError("algebra file: missing 'ops' array");
  std::vector<OperationSymbol> symbols;
  std::vector<FiniteAlgebra::Table> tables;
  for (const auto& o : j["ops"]) {
    OperationSymbol sym;
    sym.symbol = o.at("symbol").get<std::string>();
    sym.arity = o.at("arity").get<int>();
    FiniteAlgebra::Table t;
    t.entries = o.at("table").get<std::vector<Element>>();
    symbols.push_back(std::move(sym));
    tables.push_back(std::move(t));
  }
  return make_algebra(Signature(std::move(symbols)), size, std::move(names), std::move(tables), limits);
}

// ---------------------------------------------------------------------------
// Scheme files
// ---------------------------------------------------------------------------
// { "n": int, "k": int, "s": [term...], "t": [term...],
//   "L": { word: term }, "R": { word: term } }
// with terms as s-expressions over x y z w x1 y1 ... xn yn; the key "" names
// the empty word.

inline json scheme_to_json(const WitnessScheme& s) {
  json j;
  j["n"] = s.n;
  j["k"] = s.k;
  json sl = json::array(), tl = json::array();
  for (const auto& term : s.s) sl.push_back(term.to_sexpr());
  for (const auto& term : s.t) tl.push_back(term.to_sexpr());
  j["s"] = std::move(sl);
  j["t"] = std::move(tl);
  json L = json::object(), R = json::object();
  for (const auto& [w, term] : s.L) L[w] = term.to_sexpr();
  for (const auto& [w, term] : s.R) R[w] = term.to_sexpr();
  j["L"] = std::move(L);
  j["R"] = std::move(R);
  return j;
}

inline WitnessScheme scheme_from_json(const json& j) {
  WitnessScheme s;
  s.n = j.at("n").get<int>();
  s.k = j.at("k").get<int>();
  for (const auto& t : j.at("s")) s.s.push_back(parse_term(t.get<std::string>()));
  for (const auto& t : j.at("t")) s.t.push_back(parse_term(t.get<std::string>()));
  for (const auto& [w, t] : j.at("L").items()) s.L[w] = parse_term(t.get<std::string>());
  for (const auto& [w, t] : j.at("R").items()) s.R[w] = parse_term(t.get<std::string>());
  validate_scheme(s);
  return s;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline json congruence_to_json(const Congruence& c) { return json(c.partition().labels()); }

inline json relation_to_json(const BinaryRelation& r) {
  json rows = json::array();
  for (int i = 0; i < r.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < r.size(); ++j) row.push_back(r.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json bfc_report_to_json(const BfcReport& r) {
  json j;
  json fc = json::array();
  for (const auto& c : r.fc) fc.push_back(congruence_to_json(c));
  j["fc"] = std::move(fc);
  j["is_sublattice"] = r.is_sublattice;
  j["is_distributive"] = r.is_distributive;
  if (r.sublattice_witness)
    j["witness"] = json{{"kind", "sublattice"},
                        {"pair", {r.sublattice_witness->first, r.sublattice_witness->second}}};
  else if (r.distributivity_witness)
    j["witness"] = json{{"kind", "distributivity"},
                        {"triple", {(*r.distributivity_witness)[0], (*r.distributivity_witness)[1],
                                    (*r.distributivity_witness)[2]}}};
  else
    j["witness"] = nullptr;
  return j;
}

inline json scheme_verify_report_to_json(const SchemeVerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["group"] = c.group;
    e["word"] = c.word;
    e["lhs"] = c.lhs.to_sexpr();
    e["rhs"] = c.rhs.to_sexpr();
    e["pass"] = c.pass;
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(std::move(e));
  }
  return json{{"all_pass", r.all_pass}, {"checks", std::move(checks)}};
}

inline json star_report_to_json(const StarConditionsReport& r) {
  json j;
  j["reflexive_pairs"] = r.holds_ab;
  j["left_equal"] = r.holds_aacd;
  j["collapse"] = r.holds_collapse;
  if (r.witness_ab) j["witness_reflexive_pairs"] = *r.witness_ab;
  if (r.witness_aacd) j["witness_left_equal"] = *r.witness_aacd;
  if (r.witness_collapse) j["witness_collapse"] = *r.witness_collapse;
  j["pass"] = r.pass();
  return j;
}

inline json preservation_report_to_json(const PreservationReport& r) {
  json j;
  j["pass"] = r.pass;
  if (r.witness) {
    j["witness"] = *r.witness;
    j["product_value"] = r.product_side;
  }
  return j;
}

inline json kernel_report_to_json(const KernelCharacterizationReport& r) {
  json j;
  j["pass"] = r.pass;
  if (r.witness) {
    j["witness"] = *r.witness;
    j["formula_value"] = r.formula_side;
  }
  return j;
}

inline json gamma_vs_pi_report_to_json(const GammaVsPiReport& r) {
  json j;
  j["implication_holds"] = r.implication_holds;
  if (r.implication_witness) j["implication_witness"] = *r.implication_witness;
  json conv = json::array();
  for (const auto& t : r.converse_counterexamples) conv.push_back(t);
  j["converse_counterexamples"] = std::move(conv);
  return j;
}

inline json counterexample_report_to_json(const corpus::CounterexampleReport& r) {
  json j;
  j["pi_abab"] = r.pi_abab;
  j["pi_ccab"] = r.pi_ccab;
  j["ac"] = r.ac;
  j["bc"] = r.bc;
  j["aa"] = r.aa;
  j["ba"] = r.ba;
  j["aca"] = r.aca;
  j["bca"] = r.bca;
  j["table_facts"] = r.table_facts;
  j["phi2_separation"] = r.phi2_separation;
  j["gamma_separation"] = r.gamma_separation;
  j["all"] = r.all();
  return j;
}

inline json refinement_report_to_json(const RefinementReport& r) {
  json j;
  j["pass"] = r.pass;
  j["common_sizes"] = r.common_sizes;
  if (!r.failure.empty()) {
    j["failure"] = r.failure;
    if (r.failed_cell) j["failed_cell"] = {r.failed_cell->first, r.failed_cell->second};
  }
  return j;
}

inline json malcev_chain_to_json(const MalcevChain& chain, const FiniteAlgebra& algebra) {
  json j;
  switch (chain.status) {
    case MalcevChain::Status::found: j["status"] = "found"; break;
    case MalcevChain::Status::not_in_congruence: j["status"] = "not-in-congruence"; break;
    case MalcevChain::Status::depth_exceeded: j["status"] = "witness-depth-exceeded"; break;
  }
  if (chain.status == MalcevChain::Status::found) {
    j["elements"] = chain.elements;
    json steps = json::array();
    for (const auto& s : chain.steps) {
      steps.push_back(json{{"polynomial", s.poly.to_string(algebra)},
                           {"generator", s.generator},
                           {"swapped", s.swapped},
                           {"from", s.from},
                           {"to", s.to}});
    }
    j["steps"] = std::move(steps);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
}

inline AlgebraPtr load_algebra_file(const std::string& path, const Limits& limits = {}) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("algebra file '" + path + "': " + e.what());
  }
  return algebra_from_json(j, limits);
}

inline WitnessScheme load_scheme_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("scheme file '" + path + "': " + e.what());
  }
  return scheme_from_json(j);
}

}  // namespace bfc::io

#endif  // BFC_IO_HPP
