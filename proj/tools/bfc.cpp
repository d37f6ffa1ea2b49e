// bfc: command-line front end for the finite-algebra workbench.
//
// Verbs:
//   alg     show | product | quotient
//   con     list | cg | chain | delta
//   fc      list | bfc | decompose | gamma | refine
//   scheme  verify | sigma
//   formula eval | build | star | preserve | kernel | gamma-vs-pi
//   corpus  list | export | counterexample
//
// Exit codes: 0 pass, 1 check failure (witness in the report), 2 usage or
// input error, 3 size-guard refusal. BFC_LAB_THREADS caps internal
// parallelism (0 = auto).

#include <iostream>

#include <CLI11.hpp>

#include <bfc/io.hpp>

namespace {

using namespace bfc;
using io::json;

struct GlobalOptions {
  bool as_json = false;
  Limits limits;
};

void emit(const GlobalOptions& opts, const json& payload, const std::string& human) {
  if (opts.as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human;
}

// --- input resolution -------------------------------------------------------

AlgebraPtr resolve_algebra(const std::string& spec, const Limits& limits) {
  if (spec.rfind("corpus:", 0) == 0) {
    const auto entry = corpus::load_builtin(spec.substr(7));
    if (const auto* a = std::get_if<AlgebraPtr>(&entry.payload)) return *a;
    throw ValidationError("'" + spec + "' is not an algebra");
  }
  return io::load_algebra_file(spec, limits);
}

WitnessScheme resolve_scheme(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) {
    const auto entry = corpus::load_builtin(spec.substr(7));
    if (const auto* s = std::get_if<WitnessScheme>(&entry.payload)) return *s;
    throw ValidationError("'" + spec + "' is not a scheme");
  }
  return io::load_scheme_file(spec);
}

Formula resolve_formula(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) {
    const auto entry = corpus::load_builtin(spec.substr(7));
    if (const auto* f = std::get_if<Formula>(&entry.payload)) return *f;
    throw ValidationError("'" + spec + "' is not a formula");
  }
  if (!spec.empty() && spec[0] == '(') return parse_formula(spec);
  return parse_formula(io::read_file(spec));
}

Element resolve_element(const FiniteAlgebra& a, const std::string& token) {
  if (auto byname = a.element_by_name(token)) return *byname;
  try {
    const int v = std::stoi(token);
    if (v >= 0 && v < a.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("unknown element '" + token + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Element> parse_elements(const FiniteAlgebra& a, const std::string& text) {
  std::vector<Element> out;
  for (const auto& tok : split(text, ',')) out.push_back(resolve_element(a, tok));
  return out;
}

std::vector<std::pair<Element, Element>> parse_pairs(const FiniteAlgebra& a, const std::string& text) {
  std::vector<std::pair<Element, Element>> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) {
    const auto sides = split(tok, ':');
    if (sides.size() != 2) throw ValidationError("pair '" + tok + "' must look like a:b");
    out.emplace_back(resolve_element(a, sides[0]), resolve_element(a, sides[1]));
  }
  return out;
}

Congruence parse_congruence(const AlgebraPtr& a, const std::string& labels) {
  std::vector<int> cls;
  for (const auto& tok : split(labels, ',')) {
    try {
      cls.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ValidationError("congruence label '" + tok + "' is not an integer");
    }
  }
  if (cls.size() != static_cast<std::size_t>(a->size()))
    throw ValidationError("congruence label vector must have one entry per element");
  return Congruence(a, Partition::from_classes(cls));
}

DecompositionSystem parse_system(const AlgebraPtr& a, const std::string& text) {
  DecompositionSystem out;
  for (const auto& tok : split(text, ';')) out.push_back(parse_congruence(a, tok));
  return out;
}

Assignment parse_env(const FiniteAlgebra& a, const std::string& text) {
  Assignment env;
  if (text.empty()) return env;
  for (const auto& tok : split(text, ',')) {
    const auto kv = split(tok, '=');
    if (kv.size() != 2) throw ValidationError("binding '" + tok + "' must look like var=element");
    env[kv[0]] = resolve_element(a, kv[1]);
  }
  return env;
}

std::string show_tuple(const FiniteAlgebra& a, std::span<const Element> tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += a.element_name(tuple[i]);
  }
  return s + ")";
}

// --- command bodies ---------------------------------------------------------

int cmd_alg_show(const GlobalOptions& g, const std::string& alg) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  std::string human = "size " + std::to_string(a->size()) + "\n";
  for (std::size_t op = 0; op < a->signature().size(); ++op) {
    const auto& sym = a->signature().at(op);
    human += sym.symbol + "/" + std::to_string(sym.arity) + ":";
    for (Element e : a->table(op).entries) human += " " + a->element_name(e);
    human += "\n";
  }
  emit(g, io::algebra_to_json(*a, alg), human);
  return 0;
}

int cmd_alg_product(const GlobalOptions& g, const std::vector<std::string>& algs, const std::string& out_path) {
  std::vector<AlgebraPtr> factors;
  for (const auto& spec : algs) factors.push_back(resolve_algebra(spec, g.limits));
  const AlgebraPtr p = direct_product(factors, g.limits);
  const json j = io::algebra_to_json(*p, "product");
  if (!out_path.empty()) {
    io::write_file(out_path, j.dump(2) + "\n");
    emit(g, json{{"written", out_path}, {"size", p->size()}},
         "wrote product of size " + std::to_string(p->size()) + " to " + out_path + "\n");
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_alg_quotient(const GlobalOptions& g, const std::string& alg, const std::string& pairs,
                     const std::string& blocks) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const Congruence theta = blocks.empty() ? cg(a, parse_pairs(*a, pairs)) : parse_congruence(a, blocks);
  const QuotientResult q = quotient(theta, g.limits);
  json j;
  j["algebra"] = io::algebra_to_json(*q.algebra, "quotient");
  j["canonical_map"] = q.canonical_map;
  j["theta"] = io::congruence_to_json(theta);
  std::string human = "quotient size " + std::to_string(q.algebra->size()) + "\nmap:";
  for (Element e = 0; e < a->size(); ++e)
    human += " " + a->element_name(e) + ">" + std::to_string(q.canonical_map[static_cast<std::size_t>(e)]);
  emit(g, j, human + "\n");
  return 0;
}

int cmd_con_list(const GlobalOptions& g, const std::string& alg) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const auto lattice = con_lattice(a, g.limits);
  json j = json::array();
  std::string human;
  for (const auto& c : lattice) {
    j.push_back(io::congruence_to_json(c));
    human += io::congruence_to_json(c).dump() + "\n";
  }
  emit(g, json{{"count", lattice.size()}, {"congruences", j}},
       std::to_string(lattice.size()) + " congruences\n" + human);
  return 0;
}

int cmd_con_cg(const GlobalOptions& g, const std::string& alg, const std::string& pairs) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const Congruence c = cg(a, parse_pairs(*a, pairs));
  emit(g, json{{"congruence", io::congruence_to_json(c)}, {"blocks", c.partition().block_count()}},
       io::congruence_to_json(c).dump() + "\n");
  return 0;
}

int cmd_con_chain(const GlobalOptions& g, const std::string& alg, const std::string& pairs,
                  const std::string& from, const std::string& to, int max_depth) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  MalcevOptions opts;
  opts.max_poly_depth = max_depth;
  const auto gens = parse_pairs(*a, pairs);
  const MalcevChain chain = malcev_chain(a, gens, resolve_element(*a, from), resolve_element(*a, to), opts);
  const json j = io::malcev_chain_to_json(chain, *a);
  std::string human = std::string("status: ") + j["status"].get<std::string>() + "\n";
  if (chain.status == MalcevChain::Status::found) {
    human += "chain:";
    for (Element e : chain.elements) human += " " + a->element_name(e);
    human += "\n";
    for (const auto& s : chain.steps)
      human += "  " + s.poly.to_string(*a) + " over generator " + std::to_string(s.generator) +
               (s.swapped ? " (swapped)" : "") + "\n";
  }
  emit(g, j, human);
  return chain.status == MalcevChain::Status::found ? 0 : 1;
}

int cmd_con_delta(const GlobalOptions& g, const std::string& alg, const std::string& th, const std::string& ths,
                  const std::string& ph, const std::string& phs, int n, int fold) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const auto [delta, eps] = delta_epsilon(parse_congruence(a, th), parse_congruence(a, ths),
                                          parse_congruence(a, ph), parse_congruence(a, phs), n, fold);
  json j;
  j["delta"] = io::relation_to_json(delta);
  j["epsilon"] = io::relation_to_json(eps);
  emit(g, j, "delta: " + io::relation_to_json(delta).dump() + "\nepsilon: " + io::relation_to_json(eps).dump() + "\n");
  return 0;
}

int cmd_fc_list(const GlobalOptions& g, const std::string& alg) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const auto fc = factor_congruences(a, g.limits);
  json arr = json::array();
  std::string human = std::to_string(fc.size()) + " factor congruences\n";
  for (const auto& f : fc) {
    json complements = json::array();
    for (const auto& c : f.complements) complements.push_back(io::congruence_to_json(c));
    arr.push_back(json{{"congruence", io::congruence_to_json(f.theta)}, {"complements", complements}});
    human += io::congruence_to_json(f.theta).dump() + " with " + std::to_string(f.complements.size()) +
             " complement(s)\n";
  }
  emit(g, json{{"fc", arr}}, human);
  return 0;
}

int cmd_fc_bfc(const GlobalOptions& g, const std::string& alg) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const BfcReport r = check_bfc(a, g.limits);
  emit(g, io::bfc_report_to_json(r),
       std::string("is_sublattice: ") + (r.is_sublattice ? "true" : "false") +
           "\nis_distributive: " + (r.is_distributive ? "true" : "false") + "\n");
  return r.pass() ? 0 : 1;
}

int cmd_fc_decompose(const GlobalOptions& g, const std::string& alg, const std::string& th,
                     const std::string& ths) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const Decomposition d = decompose({parse_congruence(a, th), parse_congruence(a, ths)}, g.limits);
  json iso = json::array();
  for (const auto& [l, r] : d.iso) iso.push_back({l, r});
  json j;
  j["left"] = io::algebra_to_json(*d.left, "left");
  j["right"] = io::algebra_to_json(*d.right, "right");
  j["iso"] = iso;
  emit(g, j,
       "factors of size " + std::to_string(d.left->size()) + " and " + std::to_string(d.right->size()) + "\n");
  return 0;
}

int cmd_fc_gamma(const GlobalOptions& g, const std::string& alg, const std::string& tuple) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const auto t = parse_elements(*a, tuple);
  if (t.size() != 4) throw ValidationError("gamma needs a 4-tuple a,b,c,d");
  const bool holds = gamma(a, t[0], t[1], t[2], t[3], g.limits);
  emit(g, json{{"gamma", holds}}, std::string(holds ? "true" : "false") + "\n");
  return holds ? 0 : 1;
}

int cmd_fc_refine(const GlobalOptions& g, const std::string& alg, const std::string& first,
                  const std::string& second) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const RefinementReport r = strict_refinement(a, parse_system(a, first), parse_system(a, second), g.limits);
  std::string human = std::string("pass: ") + (r.pass ? "true" : "false") + "\n";
  if (!r.failure.empty()) human += r.failure + "\n";
  emit(g, io::refinement_report_to_json(r), human);
  return r.pass ? 0 : 1;
}

int cmd_scheme_verify(const GlobalOptions& g, const std::string& scheme, const std::string& alg) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const WitnessScheme s = resolve_scheme(scheme);
  const SchemeVerifyReport r = verify_scheme_identities(s, a, g.limits);
  std::string human;
  for (const auto& c : r.checks) {
    human += (c.pass ? "pass " : "FAIL ") + c.group + (c.word.empty() ? "" : " @" + c.word) + ": " +
             c.lhs.to_sexpr() + " ~ " + c.rhs.to_sexpr() + "\n";
    if (!c.pass && c.witness) human += "  at " + show_tuple(*a, *c.witness) + "\n";
  }
  human += std::string("all_pass: ") + (r.all_pass ? "true" : "false") + "\n";
  emit(g, io::scheme_verify_report_to_json(r), human);
  return r.all_pass ? 0 : 1;
}

int cmd_scheme_sigma(const GlobalOptions& g, const std::string& scheme, const std::string& map_name,
                     const std::string& alg, const std::string& input) {
  const WitnessScheme s = resolve_scheme(scheme);
  json j;
  std::string human;
  if (alg.empty()) {
    // symbolic mode over the canonical variable tuple
    std::vector<Term> x = xvector_terms(s.n);
    std::vector<Term> out;
    if (map_name == "sigma") out = sigma(s, x);
    else if (map_name == "sigma*") out = sigma_star(s, x);
    else if (map_name == "rho") out = rho(s, x);
    else if (map_name == "rho*") out = rho_star(s, x);
    else throw ValidationError("map must be one of sigma, sigma*, rho, rho*");
    json arr = json::array();
    for (const auto& t : out) {
      arr.push_back(t.to_sexpr());
      human += t.to_sexpr() + " ";
    }
    j["tuple"] = arr;
    human += "\n";
  } else {
    const AlgebraPtr a = resolve_algebra(alg, g.limits);
    validate_scheme(s, &a->signature());
    const std::vector<Element> in = parse_elements(*a, input);
    std::vector<Element> out;
    if (map_name == "sigma") out = sigma(s, *a, in);
    else if (map_name == "sigma*") out = sigma_star(s, *a, in);
    else if (map_name == "rho") out = rho(s, *a, in);
    else if (map_name == "rho*") out = rho_star(s, *a, in);
    else throw ValidationError("map must be one of sigma, sigma*, rho, rho*");
    j["tuple"] = out;
    human = show_tuple(*a, out) + "\n";
  }
  emit(g, j, human);
  return 0;
}

int cmd_formula_eval(const GlobalOptions& g, const std::string& alg, const std::string& formula,
                     const std::string& env) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const Formula f = resolve_formula(formula);
  const bool value = eval_formula(a, f, parse_env(*a, env), g.limits);
  emit(g, json{{"value", value}}, std::string(value ? "true" : "false") + "\n");
  return value ? 0 : 1;
}

int cmd_formula_build(const GlobalOptions& g, const std::string& scheme, const std::string& kind, int m) {
  const WitnessScheme s = resolve_scheme(scheme);
  Formula f = Formula::truth();
  if (kind == "phi1") f = build_phi1(s);
  else if (kind == "phi2") f = build_phi2(s);
  else if (kind == "pi") f = build_pi(s);
  else if (kind == "psi") f = build_psi(s, m);
  else throw ValidationError("kind must be one of phi1, phi2, pi, psi");
  emit(g, json{{"formula", f.to_sexpr()}}, f.to_sexpr() + "\n");
  return 0;
}

int cmd_formula_star(const GlobalOptions& g, const std::string& alg, const std::string& formula) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const StarConditionsReport r = check_star_conditions(a, resolve_formula(formula), g.limits);
  std::string human = std::string("pi(a,b,a,b): ") + (r.holds_ab ? "true" : "false") +
                      "\npi(a,a,c,d): " + (r.holds_aacd ? "true" : "false") +
                      "\npi(a,b,c,c) -> a=b: " + (r.holds_collapse ? "true" : "false") + "\n";
  emit(g, io::star_report_to_json(r), human);
  return r.pass() ? 0 : 1;
}

int cmd_formula_preserve(const GlobalOptions& g, const std::string& alg, const std::string& alg2,
                         const std::string& formula) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const AlgebraPtr b = resolve_algebra(alg2, g.limits);
  const PreservationReport r = check_factor_preservation(a, b, resolve_formula(formula), g.limits);
  emit(g, io::preservation_report_to_json(r), std::string("pass: ") + (r.pass ? "true" : "false") + "\n");
  return r.pass ? 0 : 1;
}

int cmd_formula_kernel(const GlobalOptions& g, const std::string& alg, const std::string& alg2,
                       const std::string& formula) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const AlgebraPtr b = resolve_algebra(alg2, g.limits);
  const KernelCharacterizationReport r = check_kernel_characterization(a, b, resolve_formula(formula), g.limits);
  emit(g, io::kernel_report_to_json(r), std::string("pass: ") + (r.pass ? "true" : "false") + "\n");
  return r.pass ? 0 : 1;
}

int cmd_formula_gamma_vs_pi(const GlobalOptions& g, const std::string& alg, const std::string& formula) {
  const AlgebraPtr a = resolve_algebra(alg, g.limits);
  const GammaVsPiReport r = gamma_vs_pi(a, resolve_formula(formula), g.limits);
  std::string human = std::string("pi implies gamma: ") + (r.implication_holds ? "true" : "false") + "\n" +
                      std::to_string(r.converse_counterexamples.size()) +
                      " tuple(s) where gamma holds but pi does not\n";
  for (const auto& t : r.converse_counterexamples) human += "  " + show_tuple(*a, t) + "\n";
  emit(g, io::gamma_vs_pi_report_to_json(r), human);
  return r.implication_holds ? 0 : 1;
}

int cmd_corpus_list(const GlobalOptions& g) {
  json arr = json::array();
  std::string human;
  for (const auto& name : corpus::builtin_names()) {
    const auto entry = corpus::load_builtin(name);
    arr.push_back(json{{"name", name}, {"provenance", entry.provenance}});
    human += name + "  (" + entry.provenance + ")\n";
  }
  emit(g, json{{"builtins", arr}}, human);
  return 0;
}

int cmd_corpus_export(const GlobalOptions& g, const std::string& name, const std::string& out_path) {
  const auto entry = corpus::load_builtin(name);
  std::string content;
  if (const auto* a = std::get_if<AlgebraPtr>(&entry.payload))
    content = io::algebra_to_json(**a, name).dump(2) + "\n";
  else if (const auto* s = std::get_if<WitnessScheme>(&entry.payload))
    content = io::scheme_to_json(*s).dump(2) + "\n";
  else
    content = std::get<Formula>(entry.payload).to_sexpr() + "\n";
  if (out_path.empty()) {
    std::cout << content;
  } else {
    io::write_file(out_path, content);
    emit(g, json{{"written", out_path}}, "wrote " + name + " to " + out_path + "\n");
  }
  return 0;
}

int cmd_corpus_counterexample(const GlobalOptions& g) {
  const corpus::CounterexampleReport r = corpus::reproduce_counterexample(g.limits);
  const AlgebraPtr a = corpus::band0_algebra_a();
  auto nm = [&](Element e) { return a->element_name(e); };
  std::string human;
  human += std::string("pi(a,b,a,b) = ") + (r.pi_abab ? "true" : "false") + "\n";
  human += std::string("pi(c,c,a,b) = ") + (r.pi_ccab ? "true" : "false") + "\n";
  human += "a*c = " + nm(r.ac) + ", b*c = " + nm(r.bc) + ", a*a = " + nm(r.aa) + " = b*a = " + nm(r.ba) +
           ", (a*c)*a = " + nm(r.aca) + " != " + nm(r.bca) + " = (b*c)*a\n";
  human += std::string("phi2(a*c, b*c, a, b) = ") + (r.phi2_separation ? "false" : "true") + "\n";
  human += std::string("gamma(a*c, b*c, a, b) = ") + (r.gamma_separation ? "true" : "false") + "\n";
  human += std::string("all clauses: ") + (r.all() ? "confirmed" : "MISMATCH") + "\n";
  emit(g, io::counterexample_report_to_json(r), human);
  return r.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal-algebra workbench: congruence lattices, factor congruences,\n"
               "Boolean factor-congruence checks, Mal'cev witness schemes and first-order evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.as_json, "emit machine-readable JSON reports");
  app.add_option("--max-cells", g.limits.max_cells, "cap on materialized table cells");
  app.add_option("--max-assignments", g.limits.max_assignments, "cap on exhaustive assignment scans");

  std::string alg, alg2, scheme, formula, pairs, blocks, env, tuple, from, to;
  std::string theta, theta_star, phi, phi_star, system1, system2;
  std::string name, out_path, kind = "pi", map_name = "sigma", input;
  std::vector<std::string> alg_list;
  int n = 1, fold = 2, m = 0, max_depth = 4;

  // alg
  auto* alg_cmd = app.add_subcommand("alg", "inspect and combine algebras");
  alg_cmd->require_subcommand(1);
  auto* alg_show = alg_cmd->add_subcommand("show", "print an algebra");
  alg_show->add_option("--alg", alg, "algebra file or corpus:NAME")->required();
  auto* alg_product = alg_cmd->add_subcommand("product", "direct product of algebras");
  alg_product->add_option("--alg", alg_list, "factor (repeatable)")->required()->expected(-1);
  alg_product->add_option("--out", out_path, "write the product here instead of stdout");
  auto* alg_quotient = alg_cmd->add_subcommand("quotient", "quotient by cg(pairs) or an explicit partition");
  alg_quotient->add_option("--alg", alg, "algebra file or corpus:NAME")->required();
  alg_quotient->add_option("--pairs", pairs, "generator pairs a:b,c:d for cg");
  alg_quotient->add_option("--blocks", blocks, "explicit block labels like 0,0,2");

  // con
  auto* con_cmd = app.add_subcommand("con", "congruences");
  con_cmd->require_subcommand(1);
  auto* con_list = con_cmd->add_subcommand("list", "the whole congruence lattice");
  con_list->add_option("--alg", alg)->required();
  auto* con_cg = con_cmd->add_subcommand("cg", "congruence generated by pairs");
  con_cg->add_option("--alg", alg)->required();
  con_cg->add_option("--pairs", pairs)->required();
  auto* con_chain = con_cmd->add_subcommand("chain", "element chain witnessing membership in cg(pairs)");
  con_chain->add_option("--alg", alg)->required();
  con_chain->add_option("--pairs", pairs)->required();
  con_chain->add_option("--from", from)->required();
  con_chain->add_option("--to", to)->required();
  con_chain->add_option("--max-depth", max_depth, "polynomial depth cap (default 4)");
  auto* con_delta = con_cmd->add_subcommand("delta", "the delta/epsilon relation recursion");
  con_delta->add_option("--alg", alg)->required();
  con_delta->add_option("--theta", theta, "block labels")->required();
  con_delta->add_option("--theta-star", theta_star)->required();
  con_delta->add_option("--phi", phi)->required();
  con_delta->add_option("--phi-star", phi_star)->required();
  con_delta->add_option("--n", n, "recursion depth")->required();
  con_delta->add_option("--fold", fold, "alternating factors per product (2 = plain)");

  // fc
  auto* fc_cmd = app.add_subcommand("fc", "factor congruences");
  fc_cmd->require_subcommand(1);
  auto* fc_list = fc_cmd->add_subcommand("list", "FC(A) with complements");
  fc_list->add_option("--alg", alg)->required();
  auto* fc_bfc = fc_cmd->add_subcommand("bfc", "distributive-sublattice check");
  fc_bfc->add_option("--alg", alg)->required();
  auto* fc_dec = fc_cmd->add_subcommand("decompose", "split along a factor pair");
  fc_dec->add_option("--alg", alg)->required();
  fc_dec->add_option("--theta", theta)->required();
  fc_dec->add_option("--theta-star", theta_star)->required();
  auto* fc_gamma = fc_cmd->add_subcommand("gamma", "the factor-congruence closure predicate");
  fc_gamma->add_option("--alg", alg)->required();
  fc_gamma->add_option("--tuple", tuple, "a,b,c,d")->required();
  auto* fc_refine = fc_cmd->add_subcommand("refine", "strict refinement of two decompositions");
  fc_refine->add_option("--alg", alg)->required();
  fc_refine->add_option("--system", system1, "semicolon-separated block labels")->required();
  fc_refine->add_option("--system2", system2)->required();

  // scheme
  auto* scheme_cmd = app.add_subcommand("scheme", "witness schemes");
  scheme_cmd->require_subcommand(1);
  auto* scheme_verify = scheme_cmd->add_subcommand("verify", "check the identity schema on an algebra");
  scheme_verify->add_option("--scheme", scheme, "scheme file or corpus:NAME")->required();
  scheme_verify->add_option("--alg", alg)->required();
  auto* scheme_sigma = scheme_cmd->add_subcommand("sigma", "apply a substitution map");
  scheme_sigma->add_option("--scheme", scheme)->required();
  scheme_sigma->add_option("--map", map_name, "sigma | sigma* | rho | rho*");
  scheme_sigma->add_option("--alg", alg, "concrete mode when given");
  scheme_sigma->add_option("--input", input, "comma-separated tuple (concrete mode)");

  // formula
  auto* formula_cmd = app.add_subcommand("formula", "first-order formulas");
  formula_cmd->require_subcommand(1);
  auto* f_eval = formula_cmd->add_subcommand("eval", "evaluate under an assignment");
  f_eval->add_option("--alg", alg)->required();
  f_eval->add_option("--formula", formula, "inline s-expression, file, or corpus:NAME")->required();
  f_eval->add_option("--env", env, "bindings like x=a,y=b");
  auto* f_build = formula_cmd->add_subcommand("build", "build psi/phi1/phi2/pi from a scheme");
  f_build->add_option("--scheme", scheme)->required();
  f_build->add_option("--kind", kind, "phi1 | phi2 | pi | psi");
  f_build->add_option("--m", m, "word length for psi");
  auto* f_star = formula_cmd->add_subcommand("star", "the three elementary conditions");
  f_star->add_option("--alg", alg)->required();
  f_star->add_option("--formula", formula)->required();
  auto* f_pres = formula_cmd->add_subcommand("preserve", "product/factor preservation over a pair");
  f_pres->add_option("--alg", alg)->required();
  f_pres->add_option("--alg2", alg2)->required();
  f_pres->add_option("--formula", formula)->required();
  auto* f_kernel = formula_cmd->add_subcommand("kernel", "kernel characterization on a product");
  f_kernel->add_option("--alg", alg)->required();
  f_kernel->add_option("--alg2", alg2)->required();
  f_kernel->add_option("--formula", formula)->required();
  auto* f_gvp = formula_cmd->add_subcommand("gamma-vs-pi", "compare pi against the closure predicate");
  f_gvp->add_option("--alg", alg)->required();
  f_gvp->add_option("--formula", formula)->required();

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "bundled artifacts");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_subcommand("list", "names and provenance");
  auto* corpus_export = corpus_cmd->add_subcommand("export", "write a builtin in its file format");
  corpus_export->add_option("--name", name)->required();
  corpus_export->add_option("--out", out_path);
  corpus_cmd->add_subcommand("counterexample", "recompute the bundled separation report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (alg_show->parsed()) return cmd_alg_show(g, alg);
    if (alg_product->parsed()) return cmd_alg_product(g, alg_list, out_path);
    if (alg_quotient->parsed()) return cmd_alg_quotient(g, alg, pairs, blocks);
    if (con_list->parsed()) return cmd_con_list(g, alg);
    if (con_cg->parsed()) return cmd_con_cg(g, alg, pairs);
    if (con_chain->parsed()) return cmd_con_chain(g, alg, pairs, from, to, max_depth);
    if (con_delta->parsed()) return cmd_con_delta(g, alg, theta, theta_star, phi, phi_star, n, fold);
    if (fc_list->parsed()) return cmd_fc_list(g, alg);
    if (fc_bfc->parsed()) return cmd_fc_bfc(g, alg);
    if (fc_dec->parsed()) return cmd_fc_decompose(g, alg, theta, theta_star);
    if (fc_gamma->parsed()) return cmd_fc_gamma(g, alg, tuple);
    if (fc_refine->parsed()) return cmd_fc_refine(g, alg, system1, system2);
    if (scheme_verify->parsed()) return cmd_scheme_verify(g, scheme, alg);
    if (scheme_sigma->parsed()) return cmd_scheme_sigma(g, scheme, map_name, alg, input);
    if (f_eval->parsed()) return cmd_formula_eval(g, alg, formula, env);
    if (f_build->parsed()) return cmd_formula_build(g, scheme, kind, m);
    if (f_star->parsed()) return cmd_formula_star(g, alg, formula);
    if (f_pres->parsed()) return cmd_formula_preserve(g, alg, alg2, formula);
    if (f_kernel->parsed()) return cmd_formula_kernel(g, alg, alg2, formula);
    if (f_gvp->parsed()) return cmd_formula_gamma_vs_pi(g, alg, formula);
    if (corpus_cmd->got_subcommand("list")) return cmd_corpus_list(g);
    if (corpus_export->parsed()) return cmd_corpus_export(g, name, out_path);
    if (corpus_cmd->got_subcommand("counterexample")) return cmd_corpus_counterexample(g);
    std::cerr << "no verb selected\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
