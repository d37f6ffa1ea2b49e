#ifndef BFC_FORMULA_HPP
#define BFC_FORMULA_HPP

#include <array>

#include "bfc/detail/parallel.hpp"
#include "bfc/factor.hpp"
#include "bfc/scheme.hpp"

namespace bfc {

/// First-order formula over equational atoms: truth, Term = Term,
/// conjunction, implication, and the two quantifiers. Values are immutable
/// trees with plain value semantics.
class Formula {
 public:
  enum class Kind { truth, equal, conj, implies, forall, exists };

  static Formula truth() { return Formula(Kind::truth); }
  static Formula equal(Term lhs, Term rhs) {
    Formula f(Kind::equal);
    f.lhs_ = std::move(lhs);
    f.rhs_ = std::move(rhs);
    return f;
  }
  /// Empty conjunction collapses to truth, singleton to its only part.
  static Formula conj(std::vector<Formula> parts) {
    if (parts.empty()) return truth();
    if (parts.size() == 1) return std::move(parts[0]);
    Formula f(Kind::conj);
    f.children_ = std::move(parts);
    return f;
  }
  static Formula implies(Formula antecedent, Formula consequent) {
    Formula f(Kind::implies);
    f.children_.push_back(std::move(antecedent));
    f.children_.push_back(std::move(consequent));
    return f;
  }
  static Formula forall(std::string var, Formula body) {
    Formula f(Kind::forall);
    f.var_ = std::move(var);
    f.children_.push_back(std::move(body));
    return f;
  }
  static Formula exists(std::string var, Formula body) {
    Formula f(Kind::exists);
    f.var_ = std::move(var);
    f.children_.push_back(std::move(body));
    return f;
  }

  Kind kind() const { return kind_; }
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  const std::string& var() const { return var_; }
  const std::vector<Formula>& children() const { return children_; }

  bool operator==(const Formula& o) const {
    return kind_ == o.kind_ && lhs_ == o.lhs_ && rhs_ == o.rhs_ && var_ == o.var_ && children_ == o.children_;
  }
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::string to_sexpr() const {
    switch (kind_) {
      case Kind::truth:
        return "(true)";
      case Kind::equal:
        return "(= " + lhs_.to_sexpr() + " " + rhs_.to_sexpr() + ")";
      case Kind::conj: {
        std::string s = "(and";
        for (const auto& c : children_) s += " " + c.to_sexpr();
        return s + ")";
      }
      case Kind::implies:
        return "(implies " + children_[0].to_sexpr() + " " + children_[1].to_sexpr() + ")";
      case Kind::forall:
        return "(forall " + var_ + " " + children_[0].to_sexpr() + ")";
      case Kind::exists:
        return "(exists " + var_ + " " + children_[0].to_sexpr() + ")";
    }
    throw Error("unreachable");
  }

 private:
  explicit Formula(Kind k) : kind_(k) {}
  Kind kind_;
  Term lhs_ = Term::var("x");
  Term rhs_ = Term::var("x");
  std::string var_;
  std::vector<Formula> children_;
};

namespace detail {

inline Formula parse_formula_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '(') throw ValidationError("formula must be a parenthesized s-expression");
  ++i;
  skip_ws(s, i);
  const std::string head = parse_atom(s, i);
  auto expect_close = [&] {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw ValidationError("expected ')' in formula");
    ++i;
  };
  if (head == "true") {
    expect_close();
    return Formula::truth();
  }
  if (head == "=") {
    Term lhs = parse_term_at(s, i);
    Term rhs = parse_term_at(s, i);
    expect_close();
    return Formula::equal(std::move(lhs), std::move(rhs));
  }
  if (head == "and") {
    std::vector<Formula> parts;
    while (true) {
      skip_ws(s, i);
      if (i >= s.size()) throw ValidationError("unterminated conjunction");
      if (s[i] == ')') {
        ++i;
        break;
      }
      parts.push_back(parse_formula_at(s, i));
    }
    return Formula::conj(std::move(parts));
  }
  if (head == "implies") {
    Formula a = parse_formula_at(s, i);
    Formula b = parse_formula_at(s, i);
    expect_close();
    return Formula::implies(std::move(a), std::move(b));
  }
  if (head == "forall" || head == "exists") {
    skip_ws(s, i);
    std::string var = parse_atom(s, i);
    Formula body = parse_formula_at(s, i);
    expect_close();
    return head == "forall" ? Formula::forall(std::move(var), std::move(body))
                            : Formula::exists(std::move(var), std::move(body));
  }
  throw ValidationError("unknown formula head '" + head + "'");
}

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  std::size_t i = 0;
  Formula f = detail::parse_formula_at(text, i);
  detail::skip_ws(text, i);
  if (i != text.size()) throw ValidationError("trailing input after formula");
  return f;
}

/// Free variables in first-occurrence order (constants excluded, bound
/// occurrences excluded).
inline void collect_free_vars(const Formula& f, const Signature& sig, std::vector<std::string>& bound,
                              std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      return;
    case Formula::Kind::equal: {
      std::vector<std::string> vars;
      collect_free_vars(f.lhs(), sig, vars);
      collect_free_vars(f.rhs(), sig, vars);
      for (const auto& v : vars)
        if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
            std::find(out.begin(), out.end(), v) == out.end())
          out.push_back(v);
      return;
    }
    case Formula::Kind::conj:
    case Formula::Kind::implies:
      for (const auto& c : f.children()) collect_free_vars(c, sig, bound, out);
      return;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      bound.push_back(f.var());
      collect_free_vars(f.children()[0], sig, bound, out);
      bound.pop_back();
      return;
  }
}

inline std::vector<std::string> free_vars(const Formula& f, const Signature& sig) {
  std::vector<std::string> bound, out;
  collect_free_vars(f, sig, bound, out);
  return out;
}

/// Formula compiled against one algebra with a fixed free-variable slot
/// order. Quantifiers get fresh slots; inner bindings shadow outer ones.
/// Like CompiledTerm, an instance is not safe for concurrent evaluation;
/// copies are cheap.
class CompiledFormula {
 public:
  CompiledFormula(AlgebraPtr algebra, const Formula& f, const std::vector<std::string>& free_order,
                  const Limits& limits = {})
      : algebra_(std::move(algebra)) {
    std::map<std::string, int> slots;
    for (std::size_t i = 0; i < free_order.size(); ++i) slots[free_order[i]] = static_cast<int>(i);
    next_slot_ = static_cast<int>(free_order.size());
    root_ = compile(f, slots, 1, limits);
    env_.assign(static_cast<std::size_t>(next_slot_), 0);
    n_free_ = free_order.size();
  }

  /// Worst-case inner evaluations of one call: the maximum over root-to-leaf
  /// paths of the product of nested quantifier ranges.
  std::uint64_t path_cost() const { return path_cost_; }

  bool eval(std::span<const Element> free_env) const {
    if (free_env.size() != n_free_) throw ValidationError("formula environment has the wrong length");
    std::copy(free_env.begin(), free_env.end(), env_.begin());
    return eval_node(root_);
  }

  const AlgebraPtr& algebra() const { return algebra_; }

 private:
  struct Node {
    Formula::Kind kind;
    CompiledTerm lhs, rhs;            // equal
    int slot = -1;                    // quantifiers
    std::vector<std::size_t> child;   // indices into nodes_
  };

  std::size_t compile(const Formula& f, std::map<std::string, int> slots, std::uint64_t cost,
                      const Limits& limits) {
    path_cost_ = std::max(path_cost_, cost);
    Node node;
    node.kind = f.kind();
    switch (f.kind()) {
      case Formula::Kind::truth:
        break;
      case Formula::Kind::equal:
        node.lhs = CompiledTerm(*algebra_, f.lhs(), slots);
        node.rhs = CompiledTerm(*algebra_, f.rhs(), slots);
        break;
      case Formula::Kind::conj:
      case Formula::Kind::implies:
        for (const auto& c : f.children()) node.child.push_back(compile(c, slots, cost, limits));
        break;
      case Formula::Kind::forall:
      case Formula::Kind::exists: {
        cost *= static_cast<std::uint64_t>(algebra_->size());
        if (cost > limits.max_assignments)
          throw SizeGuardError("quantifier prefix exceeds the assignment limit");
        node.slot = next_slot_++;
        slots[f.var()] = node.slot;
        node.child.push_back(compile(f.children()[0], slots, cost, limits));
        break;
      }
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  bool eval_node(std::size_t idx) const {
    const Node& node = nodes_[idx];
    switch (node.kind) {
      case Formula::Kind::truth:
        return true;
      case Formula::Kind::equal:
        return node.lhs.eval(*algebra_, env_) == node.rhs.eval(*algebra_, env_);
      case Formula::Kind::conj:
        for (std::size_t c : node.child)
          if (!eval_node(c)) return false;
        return true;
      case Formula::Kind::implies:
        return !eval_node(node.child[0]) || eval_node(node.child[1]);
      case Formula::Kind::forall:
        for (Element e = 0; e < algebra_->size(); ++e) {
          env_[static_cast<std::size_t>(node.slot)] = e;
          if (!eval_node(node.child[0])) return false;
        }
        return true;
      case Formula::Kind::exists:
        for (Element e = 0; e < algebra_->size(); ++e) {
          env_[static_cast<std::size_t>(node.slot)] = e;
          if (eval_node(node.child[0])) return true;
        }
        return false;
    }
    throw Error("unreachable");
  }

  AlgebraPtr algebra_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  int next_slot_ = 0;
  std::size_t n_free_ = 0;
  std::uint64_t path_cost_ = 1;
  mutable std::vector<Element> env_;
};

/// Standard finite semantics; quantifiers range over the whole universe.
/// env must cover every free variable.
inline bool eval_formula(const AlgebraPtr& algebra, const Formula& f, const Assignment& env,
                         const Limits& limits = {}) {
  std::vector<std::string> order = free_vars(f, algebra->signature());
  std::vector<Element> values;
  for (const auto& v : order) {
    auto it = env.find(v);
    if (it == env.end()) throw ValidationError("unbound free variable '" + v + "'");
    if (it->second < 0 || it->second >= algebra->size()) throw ValidationError("assignment value out of range");
    values.push_back(it->second);
  }
  return CompiledFormula(algebra, f, order, limits).eval(values);
}

// ---------------------------------------------------------------------------
// Builders for the property-(*) witnesses
// ---------------------------------------------------------------------------

/// Psi_m: over every word alpha of length m, the equalities at all proper
/// extensions of alpha imply the equality at alpha. Above N the conjunction
/// is empty (truth); at m = N the antecedent vanishes and the conjunction of
/// the length-N equalities remains.
inline Formula build_psi(const WitnessScheme& scheme, int m) {
  if (m < 0) throw ValidationError("psi index must be nonnegative");
  validate_scheme(scheme);
  const int N = scheme.word_alphabet();
  if (m > N) return Formula::truth();

  std::vector<Formula> conjuncts;
  for (const Word& alpha : words_of_length(N, m)) {
    Formula head = Formula::equal(scheme_L(scheme, alpha), scheme_R(scheme, alpha));
    std::vector<Formula> antecedent;
    for (int glen = 1; glen + m <= N; ++glen)
      for (const Word& gamma : words_of_length(N, glen)) {
        const Word extended = alpha + gamma;
        antecedent.push_back(Formula::equal(scheme_L(scheme, extended), scheme_R(scheme, extended)));
      }
    conjuncts.push_back(antecedent.empty() ? std::move(head)
                                           : Formula::implies(Formula::conj(std::move(antecedent)), std::move(head)));
  }
  return Formula::conj(std::move(conjuncts));
}

/// Phi_1 = exists y1 forall x1 ... exists yn forall xn, conj of Psi_{2m}.
inline Formula build_phi1(const WitnessScheme& scheme) {
  validate_scheme(scheme);
  std::vector<Formula> parts;
  for (int m = 1; m <= scheme.k; ++m) parts.push_back(build_psi(scheme, 2 * m));
  Formula body = Formula::conj(std::move(parts));
  for (int i = scheme.n; i >= 1; --i) {
    body = Formula::forall("x" + std::to_string(i), std::move(body));
    body = Formula::exists("y" + std::to_string(i), std::move(body));
  }
  return body;
}

/// Phi_2 = exists x1 forall y1 ... exists xn forall yn, conj of Psi_{2m-1}.
inline Formula build_phi2(const WitnessScheme& scheme) {
  validate_scheme(scheme);
  std::vector<Formula> parts;
  for (int m = 1; m <= scheme.k; ++m) parts.push_back(build_psi(scheme, 2 * m - 1));
  Formula body = Formula::conj(std::move(parts));
  for (int i = scheme.n; i >= 1; --i) {
    body = Formula::forall("y" + std::to_string(i), std::move(body));
    body = Formula::exists("x" + std::to_string(i), std::move(body));
  }
  return body;
}

inline Formula build_pi(const WitnessScheme& scheme) {
  std::vector<Formula> parts;
  parts.push_back(build_phi1(scheme));
  parts.push_back(build_phi2(scheme));
  return Formula::conj(std::move(parts));
}

// ---------------------------------------------------------------------------
// Property-(*) checks
// ---------------------------------------------------------------------------

namespace detail {

inline void require_xyzw_only(const Formula& f, const Signature& sig) {
  for (const auto& v : free_vars(f, sig))
    if (v != "x" && v != "y" && v != "z" && v != "w")
      throw ValidationError("formula has free variable '" + v + "' outside {x,y,z,w}");
}

/// Truth table of f(x,y,z,w) over all 4-tuples, parallel, flattened with x
/// most significant.
inline std::vector<bool> pi_table(const AlgebraPtr& algebra, const Formula& f, const Limits& limits) {
  require_xyzw_only(f, algebra->signature());
  const std::uint64_t n = static_cast<std::uint64_t>(algebra->size());
  const std::uint64_t total = n * n * n * n;
  const std::vector<std::string> order{"x", "y", "z", "w"};
  CompiledFormula proto(algebra, f, order, limits);
  if (total > limits.max_assignments / std::max<std::uint64_t>(proto.path_cost(), 1))
    throw SizeGuardError("formula tabulation exceeds the assignment limit");
  std::vector<std::uint8_t> table(total, 0);
  least_failure(total, [&] {
    return [&, prog = proto](std::uint64_t idx) mutable {
      std::array<Element, 4> env;
      std::uint64_t rest = idx;
      for (std::size_t i = 4; i-- > 0;) {
        env[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      table[idx] = prog.eval(env) ? 1 : 0;
      return true;  // never "fails": this scan fills the table
    };
  });
  return std::vector<bool>(table.begin(), table.end());
}

}  // namespace detail

struct StarConditionsReport {
  bool holds_ab = false;       // pi(a,b,a,b) for all a,b
  bool holds_aacd = false;     // pi(a,a,c,d) for all a,c,d
  bool holds_collapse = false; // pi(a,b,c,c) implies a = b
  std::optional<std::array<Element, 2>> witness_ab;
  std::optional<std::array<Element, 3>> witness_aacd;
  std::optional<std::array<Element, 3>> witness_collapse;

  bool pass() const { return holds_ab && holds_aacd && holds_collapse; }
};

/// The three elementary requirements of property (*), checked exhaustively.
inline StarConditionsReport check_star_conditions(const AlgebraPtr& algebra, const Formula& pi,
                                                  const Limits& limits = {}) {
  const std::vector<bool> table = detail::pi_table(algebra, pi, limits);
  const std::uint64_t n = static_cast<std::uint64_t>(algebra->size());
  auto at = [&](Element x, Element y, Element z, Element w) {
    return table[((static_cast<std::uint64_t>(x) * n + static_cast<std::uint64_t>(y)) * n +
                  static_cast<std::uint64_t>(z)) * n + static_cast<std::uint64_t>(w)];
  };

  StarConditionsReport report;
  report.holds_ab = true;
  for (Element a = 0; a < algebra->size() && report.holds_ab; ++a)
    for (Element b = 0; b < algebra->size(); ++b)
      if (!at(a, b, a, b)) {
        report.holds_ab = false;
        report.witness_ab = {a, b};
        break;
      }
  report.holds_aacd = true;
  for (Element a = 0; a < algebra->size() && report.holds_aacd; ++a)
    for (Element c = 0; c < algebra->size() && report.holds_aacd; ++c)
      for (Element d = 0; d < algebra->size(); ++d)
        if (!at(a, a, c, d)) {
          report.holds_aacd = false;
          report.witness_aacd = {a, c, d};
          break;
        }
  report.holds_collapse = true;
  for (Element a = 0; a < algebra->size() && report.holds_collapse; ++a)
    for (Element b = 0; b < algebra->size() && report.holds_collapse; ++b)
      for (Element c = 0; c < algebra->size(); ++c)
        if (a != b && at(a, b, c, c)) {
          report.holds_collapse = false;
          report.witness_collapse = {a, b, c};
          break;
        }
  return report;
}

struct PreservationReport {
  bool pass = true;
  // Failing product tuple (x, y, z, w as product indices) and the directions.
  std::optional<std::array<Element, 4>> witness;
  bool product_side = false;  // value of pi on the product at the witness
};

/// pi is preserved by this product and its factors iff for every 4-tuple of
/// product elements, pi on the product agrees with the conjunction of pi on
/// the two factors. Checked exhaustively with the least witness reported.
inline PreservationReport check_factor_preservation(const AlgebraPtr& a, const AlgebraPtr& b, const Formula& pi,
                                                    const Limits& limits = {}) {
  if (a->signature() != b->signature()) throw ValidationError("preservation check needs equal signatures");
  const AlgebraPtr product = direct_product({a, b}, limits);
  const std::uint64_t na = static_cast<std::uint64_t>(a->size());
  const std::uint64_t nb = static_cast<std::uint64_t>(b->size());
  const std::uint64_t np = na * nb;

  const std::uint64_t tuples = np * np * np * np;
  if (tuples > limits.max_assignments)
    throw SizeGuardError("preservation check: too many product tuples");

  const std::vector<bool> ta = detail::pi_table(a, pi, limits);
  const std::vector<bool> tb = detail::pi_table(b, pi, limits);
  const std::vector<bool> tp = detail::pi_table(product, pi, limits);

  auto split = [&](Element e) {
    return std::pair<Element, Element>(static_cast<Element>(static_cast<std::uint64_t>(e) / nb),
                                       static_cast<Element>(static_cast<std::uint64_t>(e) % nb));
  };
  PreservationReport report;
  auto failure = detail::least_failure(tuples, [&] {
    return [&](std::uint64_t idx) {
      std::array<Element, 4> t;
      std::uint64_t rest = idx;
      for (std::size_t i = 4; i-- > 0;) {
        t[i] = static_cast<Element>(rest % np);
        rest /= np;
      }
      std::uint64_t ia = 0, ib = 0, ip = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        auto [ea, eb] = split(t[i]);
        ia = ia * na + static_cast<std::uint64_t>(ea);
        ib = ib * nb + static_cast<std::uint64_t>(eb);
        ip = ip * np + static_cast<std::uint64_t>(t[i]);
      }
      return tp[ip] == (ta[ia] && tb[ib]);
    };
  });
  if (failure) {
    report.pass = false;
    std::array<Element, 4> t;
    std::uint64_t rest = *failure;
    for (std::size_t i = 4; i-- > 0;) {
      t[i] = static_cast<Element>(rest % np);
      rest /= np;
    }
    report.witness = t;
    std::uint64_t ip = 0;
    for (std::size_t i = 0; i < 4; ++i) ip = ip * np + static_cast<std::uint64_t>(t[i]);
    report.product_side = tp[ip];
  }
  return report;
}

struct KernelCharacterizationReport {
  bool pass = true;
  // (a, b, a', b', c') with a,b in the first factor and the rest in the second.
  std::optional<std::array<Element, 5>> witness;
  bool formula_side = false;
};

/// On A0 x A1, pi(<a,a'>,<b,b'>,<a,c'>,<b,c'>) must hold exactly when
/// a' = b'; this is the kernel characterization of the second projection.
inline KernelCharacterizationReport check_kernel_characterization(const AlgebraPtr& a0, const AlgebraPtr& a1,
                                                                  const Formula& pi, const Limits& limits = {}) {
  if (a0->signature() != a1->signature()) throw ValidationError("kernel check needs equal signatures");
  const AlgebraPtr product = direct_product({a0, a1}, limits);
  const std::uint64_t n0 = static_cast<std::uint64_t>(a0->size());
  const std::uint64_t n1 = static_cast<std::uint64_t>(a1->size());
  const std::vector<bool> tp = detail::pi_table(product, pi, limits);
  const std::uint64_t np = n0 * n1;

  const std::uint64_t tuples = n0 * n0 * n1 * n1 * n1;
  KernelCharacterizationReport report;
  auto failure = detail::least_failure(tuples, [&] {
    return [&](std::uint64_t idx) {
      std::uint64_t rest = idx;
      const Element cp = static_cast<Element>(rest % n1); rest /= n1;
      const Element bp = static_cast<Element>(rest % n1); rest /= n1;
      const Element ap = static_cast<Element>(rest % n1); rest /= n1;
      const Element b = static_cast<Element>(rest % n0); rest /= n0;
      const Element a = static_cast<Element>(rest % n0);
      const std::uint64_t x = static_cast<std::uint64_t>(a) * n1 + static_cast<std::uint64_t>(ap);
      const std::uint64_t y = static_cast<std::uint64_t>(b) * n1 + static_cast<std::uint64_t>(bp);
      const std::uint64_t z = static_cast<std::uint64_t>(a) * n1 + static_cast<std::uint64_t>(cp);
      const std::uint64_t w = static_cast<std::uint64_t>(b) * n1 + static_cast<std::uint64_t>(cp);
      const bool holds = tp[((x * np + y) * np + z) * np + w];
      return holds == (ap == bp);
    };
  });
  if (failure) {
    report.pass = false;
    std::uint64_t rest = *failure;
    const Element cp = static_cast<Element>(rest % n1); rest /= n1;
    const Element bp = static_cast<Element>(rest % n1); rest /= n1;
    const Element ap = static_cast<Element>(rest % n1); rest /= n1;
    const Element b = static_cast<Element>(rest % n0); rest /= n0;
    const Element a = static_cast<Element>(rest % n0);
    report.witness = {a, b, ap, bp, cp};
    const std::uint64_t x = static_cast<std::uint64_t>(a) * n1 + static_cast<std::uint64_t>(ap);
    const std::uint64_t y = static_cast<std::uint64_t>(b) * n1 + static_cast<std::uint64_t>(bp);
    const std::uint64_t z = static_cast<std::uint64_t>(a) * n1 + static_cast<std::uint64_t>(cp);
    const std::uint64_t w = static_cast<std::uint64_t>(b) * n1 + static_cast<std::uint64_t>(cp);
    report.formula_side = tp[((x * np + y) * np + z) * np + w];
  }
  return report;
}

struct GammaVsPiReport {
  bool implication_holds = true;  // pi(t) -> Gamma(t) on every tuple
  std::optional<std::array<Element, 4>> implication_witness;
  // Tuples where Gamma holds but pi does not; legitimate (Gamma is the
  // weakest witness), reported for inspection.
  std::vector<std::array<Element, 4>> converse_counterexamples;
};

/// Compares pi against the factor-congruence closure predicate Gamma on
/// every 4-tuple. The generic overload takes any tabulated predicate.
inline GammaVsPiReport gamma_vs_pi_tables(const AlgebraPtr& algebra, const std::vector<bool>& pi_truth,
                                          const std::vector<FactorCongruence>& fc) {
  const int n = algebra->size();
  GammaVsPiReport report;
  std::array<Element, 4> t;
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2])
        for (t[3] = 0; t[3] < n; ++t[3]) {
          const std::uint64_t idx =
              ((static_cast<std::uint64_t>(t[0]) * n + t[1]) * static_cast<std::uint64_t>(n) + t[2]) *
                  static_cast<std::uint64_t>(n) + t[3];
          const bool pi_val = pi_truth[idx];
          const bool gamma_val = gamma(fc, t[0], t[1], t[2], t[3]);
          if (pi_val && !gamma_val && report.implication_holds) {
            report.implication_holds = false;
            report.implication_witness = t;
          }
          if (gamma_val && !pi_val) report.converse_counterexamples.push_back(t);
        }
  return report;
}

inline GammaVsPiReport gamma_vs_pi(const AlgebraPtr& algebra, const Formula& pi, const Limits& limits = {}) {
  return gamma_vs_pi_tables(algebra, detail::pi_table(algebra, pi, limits), factor_congruences(algebra, limits));
}

}  // namespace bfc

#endif  // BFC_FORMULA_HPP
