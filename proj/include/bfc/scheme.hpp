#ifndef BFC_SCHEME_HPP
#define BFC_SCHEME_HPP

#include <map>
#include <string>
#include <vector>

#include "bfc/congruence.hpp"

namespace bfc {

/// Word over the alphabet {1..N}, stored as its digit string ("" is the
/// empty word). N stays in single digits at desk scale, so digit strings are
/// dense, ordered keys.
using Word = std::string;

inline std::vector<Word> words_of_length(int n_alphabet, int len) {
  std::vector<Word> out{""};
  for (int l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int d = 1; d <= n_alphabet; ++d) next.push_back(w + static_cast<char>('0' + d));
    out = std::move(next);
  }
  return out;
}

/// All words with 1 <= |w| <= max_len in (length, lexicographic) order.
inline std::vector<Word> words_up_to(int n_alphabet, int max_len) {
  std::vector<Word> out;
  for (int l = 1; l <= max_len; ++l) {
    auto layer = words_of_length(n_alphabet, l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// The canonical tuple of scheme variables (x, y, z, w, x1, y1, ..., xn, yn).
inline std::vector<std::string> xvector_names(int n) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return names;
}

inline std::vector<Term> xvector_terms(int n) {
  std::vector<Term> terms;
  for (const auto& name : xvector_names(n)) terms.push_back(Term::var(name));
  return terms;
}

/// A witness scheme: integers n and k (N = 2k), (2i+2)-ary terms s_i, t_i,
/// and terms L_w, R_w for every word w of length at most N over {1..N}.
/// L over the empty word is x and R is y, by definition.
struct WitnessScheme {
  int n = 0;
  int k = 1;
  std::vector<Term> s;  // s[i-1] may use x,y,z,w,x1,y1,..,x_{i-1},y_{i-1}
  std::vector<Term> t;
  std::map<Word, Term> L;
  std::map<Word, Term> R;

  int word_alphabet() const { return 2 * k; }  // N
};

/// Does the name look like one of the scheme variables x, y, z, w, x1, y1, ...?
inline bool is_xvector_name(const std::string& name) {
  if (name == "x" || name == "y" || name == "z" || name == "w") return true;
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  return name[1] != '0';  // no leading zero in the index
}

/// Structural validation: arities of s/t prefixes, totality of L/R on all
/// words up to length N, and the empty-word pinning L_eps = x, R_eps = y.
/// Terms are additionally checked against `sig` when one is supplied; without
/// a signature, atoms that are not scheme variables are assumed to be
/// constants and are only validated once a signature is known.
inline void validate_scheme(const WitnessScheme& scheme, const Signature* sig = nullptr) {
  if (scheme.n < 0) throw ValidationError("scheme: n must be nonnegative");
  if (scheme.k < 1) throw ValidationError("scheme: k must be positive");
  if (scheme.s.size() != static_cast<std::size_t>(scheme.n) || scheme.t.size() != scheme.s.size())
    throw ValidationError("scheme: need exactly n terms in s and t");

  auto check_vars_within = [&](const Term& term, int prefix_pairs, const std::string& what) {
    std::vector<std::string> allowed = xvector_names(prefix_pairs);
    std::vector<std::string> seen;
    // Signature-free collection: constants are filtered later when a
    // signature is known; here unknown atoms must at least look like scheme
    // variables, unless a signature claims them.
    struct Walk {
      static void run(const Term& t, std::vector<std::string>& out) {
        if (t.is_variable()) {
          out.push_back(t.head());
          return;
        }
        for (const auto& a : t.args()) run(a, out);
      }
    };
    Walk::run(term, seen);
    for (const auto& v : seen) {
      if (sig && detail::names_constant(*sig, v)) continue;
      if (!sig && !is_xvector_name(v)) continue;  // presumed constant, resolved later
      bool ok = false;
      for (const auto& a : allowed) ok = ok || a == v;
      if (!ok) throw ValidationError("scheme: " + what + " uses variable '" + v + "' outside its prefix");
    }
    if (sig) check_conforms(term, *sig);
  };

  for (int i = 1; i <= scheme.n; ++i) {
    check_vars_within(scheme.s[static_cast<std::size_t>(i - 1)], i - 1, "s" + std::to_string(i));
    check_vars_within(scheme.t[static_cast<std::size_t>(i - 1)], i - 1, "t" + std::to_string(i));
  }

  const int N = scheme.word_alphabet();
  auto expect_total = [&](const std::map<Word, Term>& m, const std::string& name) {
    for (const auto& w : words_up_to(N, N))
      if (!m.count(w)) throw ValidationError("scheme: " + name + " is missing word '" + w + "'");
    for (const auto& [w, term] : m) {
      if (static_cast<int>(w.size()) > N) throw ValidationError("scheme: " + name + " has word '" + w + "' longer than N");
      for (char c : w)
        if (c < '1' || c > '0' + N) throw ValidationError("scheme: " + name + " word '" + w + "' has a letter outside 1..N");
      check_vars_within(term, scheme.n, name + "_" + (w.empty() ? "eps" : w));
    }
  };
  expect_total(scheme.L, "L");
  expect_total(scheme.R, "R");

  if (auto it = scheme.L.find(""); it != scheme.L.end() && it->second != Term::var("x"))
    throw ValidationError("scheme: L over the empty word must be x");
  if (auto it = scheme.R.find(""); it != scheme.R.end() && it->second != Term::var("y"))
    throw ValidationError("scheme: R over the empty word must be y");
}

/// L_w with the empty-word default filled in.
inline const Term& scheme_L(const WitnessScheme& scheme, const Word& w) {
  static const Term x = Term::var("x");
  auto it = scheme.L.find(w);
  if (it != scheme.L.end()) return it->second;
  if (w.empty()) return x;
  throw ValidationError("scheme: L missing word '" + w + "'");
}

inline const Term& scheme_R(const WitnessScheme& scheme, const Word& w) {
  static const Term y = Term::var("y");
  auto it = scheme.R.find(w);
  if (it != scheme.R.end()) return it->second;
  if (w.empty()) return y;
  throw ValidationError("scheme: R missing word '" + w + "'");
}

// ---------------------------------------------------------------------------
// The four substitution maps
// ---------------------------------------------------------------------------

namespace detail {

enum class XMap { sigma, sigma_star, rho, rho_star };

/// Concrete mode: inputs and outputs are elements of a fixed algebra. The
/// first four components are rewired per map, then the recursive components
/// are evaluated against the *already substituted* prefix.
inline std::vector<Element> apply_xmap(XMap which, const WitnessScheme& scheme, const FiniteAlgebra& algebra,
                                       const std::vector<Element>& input) {
  const std::size_t len = static_cast<std::size_t>(2 * scheme.n + 4);
  if (input.size() != len) throw ValidationError("x-vector has the wrong length");
  const Element a = input[0], b = input[1], c = input[2], d = input[3];

  std::vector<Element> out(len);
  switch (which) {
    case XMap::sigma:      out[0] = a; out[1] = b; out[2] = a; out[3] = b; break;
    case XMap::sigma_star: out[0] = a; out[1] = a; out[2] = c; out[3] = d; break;
    case XMap::rho:        out[0] = a; out[1] = b; out[2] = c; out[3] = c; break;
    case XMap::rho_star:   out[0] = a; out[1] = b; out[2] = c; out[3] = d; break;
  }
  const bool star = which == XMap::sigma_star || which == XMap::rho_star;
  const bool recursion_in_x = which == XMap::sigma || which == XMap::sigma_star;

  const std::vector<std::string> names = xvector_names(scheme.n);
  Assignment env;
  env[names[0]] = out[0];
  env[names[1]] = out[1];
  env[names[2]] = out[2];
  env[names[3]] = out[3];
  for (int j = 1; j <= scheme.n; ++j) {
    const std::size_t xi = static_cast<std::size_t>(2 + 2 * j);
    const std::size_t yi = xi + 1;
    const Term& recur = star ? scheme.t[static_cast<std::size_t>(j - 1)] : scheme.s[static_cast<std::size_t>(j - 1)];
    if (recursion_in_x) {
      out[xi] = eval_term(algebra, recur, env);
      out[yi] = input[yi];
    } else {
      out[xi] = input[xi];
      out[yi] = eval_term(algebra, recur, env);
    }
    env[names[xi]] = out[xi];
    env[names[yi]] = out[yi];
  }
  return out;
}

/// Symbolic mode: the same recursion by substitution on terms.
inline std::vector<Term> apply_xmap(XMap which, const WitnessScheme& scheme, const std::vector<Term>& input) {
  const std::size_t len = static_cast<std::size_t>(2 * scheme.n + 4);
  if (input.size() != len) throw ValidationError("x-vector has the wrong length");
  const Term &a = input[0], &b = input[1], &c = input[2], &d = input[3];

  std::vector<Term> out;
  out.reserve(len);
  switch (which) {
    case XMap::sigma:      out = {a, b, a, b}; break;
    case XMap::sigma_star: out = {a, a, c, d}; break;
    case XMap::rho:        out = {a, b, c, c}; break;
    case XMap::rho_star:   out = {a, b, c, d}; break;
  }
  const bool star = which == XMap::sigma_star || which == XMap::rho_star;
  const bool recursion_in_x = which == XMap::sigma || which == XMap::sigma_star;

  const std::vector<std::string> names = xvector_names(scheme.n);
  std::map<std::string, Term> subst;
  for (int p = 0; p < 4; ++p) subst[names[static_cast<std::size_t>(p)]] = out[static_cast<std::size_t>(p)];
  for (int j = 1; j <= scheme.n; ++j) {
    const std::size_t xi = static_cast<std::size_t>(2 + 2 * j);
    const std::size_t yi = xi + 1;
    const Term& recur = star ? scheme.t[static_cast<std::size_t>(j - 1)] : scheme.s[static_cast<std::size_t>(j - 1)];
    if (recursion_in_x) {
      out.push_back(substitute(recur, subst));
      out.push_back(input[yi]);
    } else {
      out.push_back(input[xi]);
      out.push_back(substitute(recur, subst));
    }
    subst[names[xi]] = out[xi];
    subst[names[yi]] = out[yi];
  }
  return out;
}

}  // namespace detail

inline std::vector<Element> sigma(const WitnessScheme& s, const FiniteAlgebra& a, const std::vector<Element>& x) {
  return detail::apply_xmap(detail::XMap::sigma, s, a, x);
}
inline std::vector<Element> sigma_star(const WitnessScheme& s, const FiniteAlgebra& a, const std::vector<Element>& x) {
  return detail::apply_xmap(detail::XMap::sigma_star, s, a, x);
}
inline std::vector<Element> rho(const WitnessScheme& s, const FiniteAlgebra& a, const std::vector<Element>& x) {
  return detail::apply_xmap(detail::XMap::rho, s, a, x);
}
inline std::vector<Element> rho_star(const WitnessScheme& s, const FiniteAlgebra& a, const std::vector<Element>& x) {
  return detail::apply_xmap(detail::XMap::rho_star, s, a, x);
}

inline std::vector<Term> sigma(const WitnessScheme& s, const std::vector<Term>& x) {
  return detail::apply_xmap(detail::XMap::sigma, s, x);
}
inline std::vector<Term> sigma_star(const WitnessScheme& s, const std::vector<Term>& x) {
  return detail::apply_xmap(detail::XMap::sigma_star, s, x);
}
inline std::vector<Term> rho(const WitnessScheme& s, const std::vector<Term>& x) {
  return detail::apply_xmap(detail::XMap::rho, s, x);
}
inline std::vector<Term> rho_star(const WitnessScheme& s, const std::vector<Term>& x) {
  return detail::apply_xmap(detail::XMap::rho_star, s, x);
}

// ---------------------------------------------------------------------------
// Identity verification
// ---------------------------------------------------------------------------

struct IdentityCheck {
  std::string group;  // which clause of the schema
  Word word;          // the word alpha the clause is instantiated at
  Term lhs, rhs;      // fully substituted identity sides
  bool pass = false;
  std::optional<std::vector<Element>> witness;  // first failing assignment, x-vector order
};

struct SchemeVerifyReport {
  bool all_pass = true;
  std::vector<IdentityCheck> checks;
};

/// Verifies every identity of the witness-scheme schema on one algebra by
/// exhaustive evaluation: the boundary group at |alpha| = N (under rho and
/// rho*), the base group at the empty word, and the even/odd chain groups in
/// between. Passing is evidence for the variety, failing refutes it.
inline SchemeVerifyReport verify_scheme_identities(const WitnessScheme& scheme, const AlgebraPtr& algebra,
                                                   const Limits& limits = {}) {
  validate_scheme(scheme, &algebra->signature());
  const int N = scheme.word_alphabet();
  const int k = scheme.k;
  const std::vector<std::string> names = xvector_names(scheme.n);
  const std::vector<Term> vars = xvector_terms(scheme.n);

  const std::vector<Term> via_sigma = sigma(scheme, vars);
  const std::vector<Term> via_sigma_star = sigma_star(scheme, vars);
  const std::vector<Term> via_rho = rho(scheme, vars);
  const std::vector<Term> via_rho_star = rho_star(scheme, vars);

  auto tuple_subst = [&](const std::vector<Term>& tuple) {
    std::map<std::string, Term> m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = tuple[i];
    return m;
  };
  const auto sub_sigma = tuple_subst(via_sigma);
  const auto sub_sigma_star = tuple_subst(via_sigma_star);
  const auto sub_rho = tuple_subst(via_rho);
  const auto sub_rho_star = tuple_subst(via_rho_star);

  SchemeVerifyReport report;
  auto check = [&](std::string group, Word word, Term lhs, Term rhs) {
    IdentityCheck c{std::move(group), std::move(word), std::move(lhs), std::move(rhs), false, std::nullopt};
    auto witness = find_identity_witness(*algebra, c.lhs, c.rhs, names, limits);
    c.pass = !witness.has_value();
    c.witness = std::move(witness);
    report.all_pass = report.all_pass && c.pass;
    report.checks.push_back(std::move(c));
  };
  auto L = [&](const Word& w) { return scheme_L(scheme, w); };
  auto R = [&](const Word& w) { return scheme_R(scheme, w); };
  auto digit = [](int j) { return static_cast<char>('0' + j); };

  // Empty word: x = L_eps, y = R_eps, and the rho-chain stitching L_eps to R_eps.
  check("base", "", Term::var("x"), L(""));
  check("base", "", Term::var("y"), R(""));
  check("base-rho", "", substitute(L(""), sub_rho), substitute(L(Word(1, digit(1))), sub_rho));
  for (int j = 1; j <= N - 1; ++j)
    check("base-rho", "", substitute(R(Word(1, digit(j))), sub_rho),
          substitute(L(Word(1, digit(j + 1))), sub_rho));
  check("base-rho", "", substitute(R(Word(1, digit(N))), sub_rho), substitute(R(""), sub_rho));

  // Boundary words, length N: L and R collapse under rho and rho*.
  for (const Word& alpha : words_of_length(N, N)) {
    check("boundary-rho", alpha, substitute(L(alpha), sub_rho), substitute(R(alpha), sub_rho));
    check("boundary-rho*", alpha, substitute(L(alpha), sub_rho_star), substitute(R(alpha), sub_rho_star));
  }

  // Interior words: even lengths chain under rho/rho*, odd under sigma/sigma*.
  for (int len = 1; len < N; ++len) {
    const bool odd = len % 2 == 1;
    const auto& sub_plain = odd ? sub_sigma : sub_rho;
    const auto& sub_star = odd ? sub_sigma_star : sub_rho_star;
    const std::string tag = odd ? "odd-sigma" : "even-rho";
    const std::string tag_star = odd ? "odd-sigma*" : "even-rho*";
    for (const Word& alpha : words_of_length(N, len)) {
      check(tag, alpha, substitute(L(alpha), sub_plain), substitute(L(alpha + digit(1)), sub_plain));
      for (int j = 1; j <= k - 1; ++j)
        check(tag, alpha, substitute(R(alpha + digit(j)), sub_plain),
              substitute(L(alpha + digit(j + 1)), sub_plain));
      check(tag, alpha, substitute(R(alpha + digit(k)), sub_plain), substitute(R(alpha), sub_plain));

      check(tag_star, alpha, substitute(L(alpha), sub_star), substitute(L(alpha + digit(k + 1)), sub_star));
      for (int j = k + 1; j <= N - 1; ++j)
        check(tag_star, alpha, substitute(R(alpha + digit(j)), sub_star),
              substitute(L(alpha + digit(j + 1)), sub_star));
      check(tag_star, alpha, substitute(R(alpha + digit(N)), sub_star), substitute(R(alpha), sub_star));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// The recursion solver
// ---------------------------------------------------------------------------

enum class SolveFlag { unique, multiple, none };

struct SolveRecursionResult {
  bool solved = false;
  std::vector<Element> a;  // a_1..a_n
  std::vector<Element> b;  // b_1..b_n
  std::vector<SolveFlag> a_flags;
  std::vector<SolveFlag> b_flags;
  int failed_index = -1;  // 1-based index where a coordinate had no solution
};

/// Solves, coordinate by coordinate, for a_i with s_i(..) theta a_i theta*
/// t_i(..) and b_i with s_i(..) phi b_i phi* t_i(..), where the term
/// arguments use the solution prefix. Multiple solutions take the least
/// element and are flagged; an empty solution set aborts.
inline SolveRecursionResult solve_recursion(const WitnessScheme& scheme, const Congruence& theta,
                                            const Congruence& theta_star, const Congruence& phi,
                                            const Congruence& phi_star, Element a, Element b, Element c, Element d) {
  require_same_algebra(theta, theta_star, "solve_recursion");
  require_same_algebra(theta, phi, "solve_recursion");
  require_same_algebra(theta, phi_star, "solve_recursion");
  const AlgebraPtr& algebra = theta.algebra();
  validate_scheme(scheme, &algebra->signature());
  const int n_el = algebra->size();
  for (Element e : {a, b, c, d})
    if (e < 0 || e >= n_el) throw ValidationError("solve_recursion: element out of range");

  SolveRecursionResult res;
  const std::vector<std::string> names = xvector_names(scheme.n);
  Assignment env{{"x", a}, {"y", b}, {"z", c}, {"w", d}};

  for (int i = 1; i <= scheme.n; ++i) {
    const Element s_val = eval_term(*algebra, scheme.s[static_cast<std::size_t>(i - 1)], env);
    const Element t_val = eval_term(*algebra, scheme.t[static_cast<std::size_t>(i - 1)], env);

    auto pick = [&](const Congruence& left, const Congruence& right) {
      std::vector<Element> hits;
      for (Element e = 0; e < n_el; ++e)
        if (left.contains(s_val, e) && right.contains(e, t_val)) hits.push_back(e);
      return hits;
    };

    const std::vector<Element> a_hits = pick(theta, theta_star);
    const std::vector<Element> b_hits = pick(phi, phi_star);
    if (a_hits.empty() || b_hits.empty()) {
      res.failed_index = i;
      (a_hits.empty() ? res.a_flags : res.b_flags).push_back(SolveFlag::none);
      return res;
    }
    res.a.push_back(a_hits.front());
    res.b.push_back(b_hits.front());
    res.a_flags.push_back(a_hits.size() == 1 ? SolveFlag::unique : SolveFlag::multiple);
    res.b_flags.push_back(b_hits.size() == 1 ? SolveFlag::unique : SolveFlag::multiple);
    env[names[static_cast<std::size_t>(2 + 2 * i)]] = res.a.back();
    env[names[static_cast<std::size_t>(3 + 2 * i)]] = res.b.back();
  }
  res.solved = true;
  return res;
}

}  // namespace bfc

#endif  // BFC_SCHEME_HPP
