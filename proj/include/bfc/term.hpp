#ifndef BFC_TERM_HPP
#define BFC_TERM_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bfc/algebra.hpp"

namespace bfc {

/// Assignment of elements to variable names.
using Assignment = std::map<std::string, Element>;

/// A term over a signature: either a variable or an application.
///
/// Bare atoms parse as variables; an atom whose name matches a 0-ary
/// operation symbol is treated as that constant wherever a signature is in
/// play (evaluation, conformance, free variables). This keeps parsing
/// signature-free while giving constants like `0` their intended meaning.
class Term {
 public:
  static Term var(std::string name) {
    Term t;
    t.is_var_ = true;
    t.head_ = std::move(name);
    return t;
  }
  static Term app(std::string symbol, std::vector<Term> args = {}) {
    Term t;
    t.is_var_ = false;
    t.head_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
  }

  bool is_variable() const { return is_var_; }
  const std::string& head() const { return head_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& o) const {
    return is_var_ == o.is_var_ && head_ == o.head_ && args_ == o.args_;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }

  /// s-expression form; 0-ary applications print as bare atoms.
  std::string to_sexpr() const {
    if (is_var_ || args_.empty()) return head_;
    std::string s = "(" + head_;
    for (const auto& a : args_) s += " " + a.to_sexpr();
    return s + ")";
  }

  int depth() const {
    if (is_var_ || args_.empty()) return 0;
    int d = 0;
    for (const auto& a : args_) d = std::max(d, a.depth());
    return d + 1;
  }

 private:
  bool is_var_ = true;
  std::string head_;
  std::vector<Term> args_;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

inline std::string parse_atom(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && s[i] != '(' && s[i] != ')' && s[i] != ' ' && s[i] != '\t' && s[i] != '\n' && s[i] != '\r')
    ++i;
  if (start == i) throw ValidationError("expected atom in s-expression");
  return std::string(s.substr(start, i - start));
}

inline Term parse_term_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) throw ValidationError("unexpected end of term");
  if (s[i] != '(') return Term::var(parse_atom(s, i));
  ++i;  // consume '('
  skip_ws(s, i);
  std::string head = parse_atom(s, i);
  std::vector<Term> args;
  while (true) {
    skip_ws(s, i);
    if (i >= s.size()) throw ValidationError("unterminated s-expression");
    if (s[i] == ')') {
      ++i;
      break;
    }
    args.push_back(parse_term_at(s, i));
  }
  return Term::app(std::move(head), std::move(args));
}

inline bool names_constant(const Signature& sig, const std::string& name) {
  auto idx = sig.index_of(name);
  return idx && sig.at(*idx).arity == 0;
}

}  // namespace detail

inline Term parse_term(std::string_view text) {
  std::size_t i = 0;
  Term t = detail::parse_term_at(text, i);
  detail::skip_ws(text, i);
  if (i != text.size()) throw ValidationError("trailing input after term");
  return t;
}

/// Checks that every application matches the signature's arity (variables
/// named like constants are fine; they resolve to the constant).
inline void check_conforms(const Term& t, const Signature& sig) {
  if (t.is_variable()) return;
  auto idx = sig.index_of(t.head());
  if (!idx) throw ValidationError("symbol '" + t.head() + "' not in signature");
  if (sig.at(*idx).arity != static_cast<int>(t.args().size()))
    throw ValidationError("arity mismatch for '" + t.head() + "'");
  for (const auto& a : t.args()) check_conforms(a, sig);
}

/// Free variables in left-to-right first-occurrence order, excluding atoms
/// that the signature resolves as constants.
inline void collect_free_vars(const Term& t, const Signature& sig, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (detail::names_constant(sig, t.head())) return;
    if (std::find(out.begin(), out.end(), t.head()) == out.end()) out.push_back(t.head());
    return;
  }
  for (const auto& a : t.args()) collect_free_vars(a, sig, out);
}

inline std::vector<std::string> free_vars(const Term& t, const Signature& sig) {
  std::vector<std::string> out;
  collect_free_vars(t, sig, out);
  return out;
}

/// Structural term evaluation. env must cover every free variable.
inline Element eval_term(const FiniteAlgebra& algebra, const Term& t, const Assignment& env) {
  if (t.is_variable()) {
    auto it = env.find(t.head());
    if (it != env.end()) {
      if (it->second < 0 || it->second >= algebra.size()) throw ValidationError("assignment value out of range");
      return it->second;
    }
    auto idx = algebra.signature().index_of(t.head());
    if (idx && algebra.signature().at(*idx).arity == 0) return algebra.apply(*idx, {});
    throw ValidationError("unbound variable '" + t.head() + "'");
  }
  auto idx = algebra.signature().index_of(t.head());
  if (!idx) throw ValidationError("symbol '" + t.head() + "' not in signature");
  if (algebra.signature().at(*idx).arity != static_cast<int>(t.args().size()))
    throw ValidationError("arity mismatch for '" + t.head() + "'");
  std::vector<Element> vals(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) vals[i] = eval_term(algebra, t.args()[i], env);
  return algebra.apply(*idx, vals);
}

/// Substitutes terms for variables (capture is not a concern: terms have no
/// binders). Variables without a mapping stay put.
inline Term substitute(const Term& t, const std::map<std::string, Term>& subst) {
  if (t.is_variable()) {
    auto it = subst.find(t.head());
    return it == subst.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(substitute(a, subst));
  return Term::app(t.head(), std::move(args));
}

/// Term compiled to a postfix program over variable slots; the hot path for
/// exhaustive identity checks and quantifier scans.
///
/// eval reuses an internal scratch stack, so a single instance must not be
/// evaluated from two threads at once; copies are cheap, clone per thread.
class CompiledTerm {
 public:
  CompiledTerm() = default;

  /// slots maps variable names to env positions; unknown variables are an
  /// error unless they resolve as constants.
  CompiledTerm(const FiniteAlgebra& algebra, const Term& t, const std::map<std::string, int>& slots) {
    compile(algebra, t, slots);
    int depth = 0, max_depth = 1;
    for (const auto& ins : code_) {
      depth += (ins.slot >= 0 || ins.arity == 0) ? 1 : 1 - ins.arity;
      max_depth = std::max(max_depth, depth);
    }
    stack_.resize(static_cast<std::size_t>(max_depth));
  }

  Element eval(const FiniteAlgebra& algebra, std::span<const Element> env) const {
    int sp = 0;
    for (const auto& ins : code_) {
      if (ins.slot >= 0) {
        stack_[static_cast<std::size_t>(sp++)] = env[static_cast<std::size_t>(ins.slot)];
      } else {
        sp -= ins.arity;
        stack_[static_cast<std::size_t>(sp)] = algebra.apply(
            static_cast<std::size_t>(ins.op),
            std::span<const Element>(stack_.data() + sp, static_cast<std::size_t>(ins.arity)));
        ++sp;
      }
    }
    return stack_[0];
  }

 private:
  struct Ins {
    int slot = -1;  // >= 0: push env[slot]
    int op = -1;    // otherwise: apply operation op over arity operands
    int arity = 0;
  };

  void compile(const FiniteAlgebra& algebra, const Term& t, const std::map<std::string, int>& slots) {
    if (t.is_variable()) {
      auto it = slots.find(t.head());
      if (it != slots.end()) {
        code_.push_back({it->second, -1, 0});
        return;
      }
      auto idx = algebra.signature().index_of(t.head());
      if (idx && algebra.signature().at(*idx).arity == 0) {
        code_.push_back({-1, static_cast<int>(*idx), 0});
        return;
      }
      throw ValidationError("unbound variable '" + t.head() + "'");
    }
    auto idx = algebra.signature().index_of(t.head());
    if (!idx) throw ValidationError("symbol '" + t.head() + "' not in signature");
    if (algebra.signature().at(*idx).arity != static_cast<int>(t.args().size()))
      throw ValidationError("arity mismatch for '" + t.head() + "'");
    for (const auto& a : t.args()) compile(algebra, a, slots);
    code_.push_back({-1, static_cast<int>(*idx), static_cast<int>(t.args().size())});
  }

  std::vector<Ins> code_;
  mutable std::vector<Element> stack_;
};

/// First assignment (in mixed-radix order over var_order) where lhs and rhs
/// evaluate differently, or nullopt when the identity holds.
inline std::optional<std::vector<Element>> find_identity_witness(
    const FiniteAlgebra& algebra, const Term& lhs, const Term& rhs,
    const std::vector<std::string>& var_order, const Limits& limits = {}) {
  check_conforms(lhs, algebra.signature());
  check_conforms(rhs, algebra.signature());
  std::map<std::string, int> slots;
  for (std::size_t i = 0; i < var_order.size(); ++i) slots[var_order[i]] = static_cast<int>(i);

  const std::uint64_t total = detail::checked_pow(static_cast<std::uint64_t>(algebra.size()),
                                                  static_cast<int>(var_order.size()),
                                                  limits.max_assignments, "identity check");
  CompiledTerm cl(algebra, lhs, slots);
  CompiledTerm cr(algebra, rhs, slots);

  std::vector<Element> env(var_order.size(), 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    if (cl.eval(algebra, env) != cr.eval(algebra, env)) return env;
    for (std::size_t i = env.size(); i-- > 0;) {
      if (++env[i] < algebra.size()) break;
      env[i] = 0;
    }
  }
  return std::nullopt;
}

/// True iff lhs ~ rhs holds under every assignment to their free variables.
inline bool check_identity(const FiniteAlgebra& algebra, const Term& lhs, const Term& rhs,
                           const Limits& limits = {}) {
  std::vector<std::string> vars = free_vars(lhs, algebra.signature());
  collect_free_vars(rhs, algebra.signature(), vars);
  std::sort(vars.begin(), vars.end());
  return !find_identity_witness(algebra, lhs, rhs, vars, limits).has_value();
}

}  // namespace bfc

#endif  // BFC_TERM_HPP
