#ifndef BFC_CORPUS_HPP
#define BFC_CORPUS_HPP

#include <random>
#include <variant>

#include "bfc/formula.hpp"

namespace bfc {
namespace corpus {

/// Meet-semilattice signature: one binary operation.
inline Signature semilattice_signature() { return Signature({{"*", 2}}); }

/// The {0,*} signature: a constant plus one binary operation.
inline Signature band0_signature() { return Signature({{"0", 0}, {"*", 2}}); }

/// The n-element chain 0 < 1 < ... < n-1 with meet.
inline AlgebraPtr chain_semilattice(int n) {
  if (n <= 0) throw ValidationError("chain needs at least one element");
  FiniteAlgebra::Table table;
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) table.entries.push_back(std::min(i, j));
  return make_algebra(semilattice_signature(), n, {}, {std::move(table)});
}

/// Z_6 as a unital ring, signature {+, *, 0, 1}.
inline AlgebraPtr z6_ring() {
  FiniteAlgebra::Table plus, times, zero, one;
  for (Element i = 0; i < 6; ++i)
    for (Element j = 0; j < 6; ++j) {
      plus.entries.push_back((i + j) % 6);
      times.entries.push_back((i * j) % 6);
    }
  zero.entries = {0};
  one.entries = {1};
  return make_algebra(Signature({{"+", 2}, {"*", 2}, {"0", 0}, {"1", 0}}), 6, {},
                      {std::move(plus), std::move(times), std::move(zero), std::move(one)});
}

/// The four-element algebra of the bundled {0,*} variety: universe
/// {0, a, b, c}; 0 is absorbing, a*x = a, c*x = c for x != 0, and b acts as
/// the identity row (b*a = a, b*b = b, b*c = c).
inline AlgebraPtr band0_algebra_a() {
  FiniteAlgebra::Table zero, times;
  zero.entries = {0};
  times.entries = {
      0, 0, 0, 0,  // 0 row
      0, 1, 1, 1,  // a row
      0, 1, 2, 3,  // b row
      0, 3, 3, 3,  // c row
  };
  return make_algebra(band0_signature(), 4, {"0", "a", "b", "c"}, {std::move(zero), std::move(times)});
}

namespace detail_corpus {

inline Term mul(Term a, Term b) { return Term::app("*", {std::move(a), std::move(b)}); }
inline Term v(const char* name) { return Term::var(name); }
inline Term zero_const() { return Term::app("0", {}); }

/// The shared L/R word tables of both bundled schemes (n = 2, k = 1).
inline void fill_word_tables(WitnessScheme& scheme) {
  scheme.L[""] = v("x");
  scheme.R[""] = v("y");
  scheme.L["1"] = mul(v("x"), v("y1"));
  scheme.R["1"] = mul(v("y"), v("y1"));
  scheme.L["11"] = mul(v("z"), v("y1"));
  scheme.R["11"] = mul(v("w"), v("y1"));
  scheme.L["12"] = mul(v("y"), v("y1"));
  scheme.R["12"] = mul(v("y"), v("y1"));
  scheme.L["2"] = mul(v("y2"), v("x"));
  scheme.R["2"] = mul(v("y2"), v("y"));
  scheme.L["21"] = mul(v("y2"), v("z"));
  scheme.R["21"] = mul(v("y2"), v("w"));
  scheme.L["22"] = mul(v("y2"), v("y"));
  scheme.R["22"] = mul(v("y2"), v("y"));
}

}  // namespace detail_corpus

/// Witness scheme for the {0,*} variety: s1 = x, s2 = y, t1 = t2 = 0.
inline WitnessScheme band0_scheme() {
  using namespace detail_corpus;
  WitnessScheme scheme;
  scheme.n = 2;
  scheme.k = 1;
  scheme.s = {v("x"), v("y")};
  scheme.t = {zero_const(), zero_const()};
  fill_word_tables(scheme);
  validate_scheme(scheme);
  return scheme;
}

/// Same word tables over the semilattice signature, with t1 = t2 = z*w.
inline WitnessScheme semilattice_scheme() {
  using namespace detail_corpus;
  WitnessScheme scheme;
  scheme.n = 2;
  scheme.k = 1;
  scheme.s = {v("x"), v("y")};
  scheme.t = {mul(v("z"), v("w")), mul(v("z"), v("w"))};
  fill_word_tables(scheme);
  validate_scheme(scheme);
  return scheme;
}

/// The one-quantifier property-(*) witness for semilattices:
/// forall u (z*u = w*u -> x*u = y*u).
inline Formula pi_s() {
  using namespace detail_corpus;
  return Formula::forall(
      "u", Formula::implies(Formula::equal(mul(v("z"), v("u")), mul(v("w"), v("u"))),
                            Formula::equal(mul(v("x"), v("u")), mul(v("y"), v("u")))));
}

using BuiltinPayload = std::variant<AlgebraPtr, WitnessScheme, Formula>;

struct BuiltinEntry {
  std::string name;
  BuiltinPayload payload;
  std::string provenance;
};

inline std::vector<std::string> builtin_names() {
  return {"band0.algebraA", "band0.scheme",      "band0.phi1",
          "band0.phi2",     "semilattice.scheme", "semilattice.pi_s"};
}

/// Validated bundled artifacts. band0.phi1 / band0.phi2 are the formulas the
/// builders produce from band0.scheme.
inline BuiltinEntry load_builtin(const std::string& name) {
  if (name == "band0.algebraA")
    return {name, band0_algebra_a(), "four-element member of the {0,*} variety separating pi from its closure"};
  if (name == "band0.scheme")
    return {name, band0_scheme(), "witness scheme for the {0,*} variety (n = 2, k = 1)"};
  if (name == "band0.phi1")
    return {name, build_phi1(band0_scheme()), "first conjunct of the {0,*} witness formula"};
  if (name == "band0.phi2")
    return {name, build_phi2(band0_scheme()), "second conjunct of the {0,*} witness formula"};
  if (name == "semilattice.scheme")
    return {name, semilattice_scheme(), "witness scheme for meet-semilattices (n = 2, k = 1)"};
  if (name == "semilattice.pi_s")
    return {name, pi_s(), "one-quantifier witness formula for meet-semilattices"};
  throw ValidationError("unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------
// Small-algebra generators
// ---------------------------------------------------------------------------

namespace detail_corpus {

/// Lexicographically least operation table over all relabelings; the
/// canonical form used to deduplicate up to isomorphism.
inline std::vector<Element> canonical_binary_table(const std::vector<Element>& table, int n) {
  std::vector<Element> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best;
  std::vector<Element> cur(table.size());
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
            perm[static_cast<std::size_t>(table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                                static_cast<std::size_t>(j)])];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool meet_table_from_poset(int n, const std::vector<std::uint8_t>& leq, std::vector<Element>& table) {
  // leq is the full order matrix including the bottom; glb must exist for
  // every pair.
  table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      Element glb = -1;
      for (Element u = 0; u < n; ++u) {
        if (!leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] ||
            !leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)])
          continue;
        if (glb < 0 ||
            leq[static_cast<std::size_t>(glb) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)])
          glb = u;
      }
      if (glb < 0) return false;
      // glb must dominate every common lower bound
      for (Element u = 0; u < n; ++u)
        if (leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] &&
            leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] &&
            !leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(glb)])
          return false;
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = glb;
    }
  return true;
}

}  // namespace detail_corpus

/// All meet-semilattices with at most max_size elements, one per isomorphism
/// class, in canonical-table order within each size.
///
/// Construction: a finite meet-semilattice is a bottom element below a poset
/// in which every pair bounded below has a greatest lower bound. Posets are
/// enumerated with a linear-extension labeling (i < j in the order implies
/// i < j as integers), which reaches every isomorphism class; canonical
/// tables deduplicate the leftovers.
inline std::vector<AlgebraPtr> enumerate_semilattices(int max_size) {
  if (max_size < 0 || max_size > 6) throw ValidationError("semilattice enumeration supports sizes up to 6");
  std::vector<AlgebraPtr> out;
  const Signature sig = semilattice_signature();

  for (int n = 1; n <= max_size; ++n) {
    std::set<std::vector<Element>> canon_seen;
    std::vector<std::vector<Element>> tables;

    const int m = n - 1;  // elements above the adjoined bottom
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) slots.emplace_back(i, j);

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
        leq[static_cast<std::size_t>(i)] = 1;  // element 0 is the bottom
      }
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (std::uint64_t{1} << s))
          leq[static_cast<std::size_t>(slots[s].first) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(slots[s].second)] = 1;

      // transitivity (antisymmetry is free: only i < j slots are set)
      bool transitive = true;
      for (int i = 0; i < n && transitive; ++i)
        for (int j = 0; j < n && transitive; ++j) {
          if (!leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)])
            continue;
          for (int k = 0; k < n; ++k)
            if (leq[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] &&
                !leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)]) {
              transitive = false;
              break;
            }
        }
      if (!transitive) continue;

      std::vector<Element> table;
      if (!detail_corpus::meet_table_from_poset(n, leq, table)) continue;
      const std::vector<Element> canon = detail_corpus::canonical_binary_table(table, n);
      if (canon_seen.insert(canon).second) tables.push_back(canon);
    }

    std::sort(tables.begin(), tables.end());
    for (auto& t : tables) {
      FiniteAlgebra::Table tab;
      tab.entries = std::move(t);
      out.push_back(make_algebra(sig, n, {}, {std::move(tab)}));
    }
  }
  return out;
}

/// Oracle-grade enumeration for tiny sizes: filter every binary table for
/// commutativity, idempotence and associativity, then deduplicate. Kept as
/// an independent generator to cross-check the poset construction.
inline std::vector<AlgebraPtr> enumerate_semilattices_by_tables(int max_size) {
  if (max_size < 0 || max_size > 3) throw ValidationError("table filter is for sizes up to 3");
  std::vector<AlgebraPtr> out;
  const Signature sig = semilattice_signature();
  for (int n = 1; n <= max_size; ++n) {
    std::set<std::vector<Element>> canon_seen;
    std::vector<std::vector<Element>> tables;
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) total *= static_cast<std::uint64_t>(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Element> table(cells);
      std::uint64_t rest = code;
      for (std::size_t c = 0; c < cells; ++c) {
        table[c] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
        rest /= static_cast<std::uint64_t>(n);
      }
      auto mul = [&](Element i, Element j) {
        return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      };
      bool ok = true;
      for (Element i = 0; i < n && ok; ++i) ok = mul(i, i) == i;
      for (Element i = 0; i < n && ok; ++i)
        for (Element j = 0; j < n && ok; ++j) ok = mul(i, j) == mul(j, i);
      for (Element i = 0; i < n && ok; ++i)
        for (Element j = 0; j < n && ok; ++j)
          for (Element l = 0; l < n && ok; ++l) ok = mul(mul(i, j), l) == mul(i, mul(j, l));
      if (!ok) continue;
      const std::vector<Element> canon = detail_corpus::canonical_binary_table(table, n);
      if (canon_seen.insert(canon).second) tables.push_back(canon);
    }
    std::sort(tables.begin(), tables.end());
    for (auto& t : tables) {
      FiniteAlgebra::Table tab;
      tab.entries = std::move(t);
      out.push_back(make_algebra(sig, n, {}, {std::move(tab)}));
    }
  }
  return out;
}

/// Seeded random member of the {0,*} variety: the absorbing-zero cells and
/// the idempotent diagonal are forced, the remaining cells are drawn
/// uniformly, and the three defining identities are verified on every
/// candidate. Absence after the attempt budget is an outcome, not an error.
inline std::optional<AlgebraPtr> random_member_band0(int size, std::uint64_t seed, int max_attempts = 200000) {
  if (size < 1 || size > 5) throw ValidationError("random band0 member: size must be in 1..5");
  const Signature sig = band0_signature();
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  const Term zero = Term::app("0", {});
  auto mul = [](Term a, Term b) { return Term::app("*", {std::move(a), std::move(b)}); };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, size - 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    FiniteAlgebra::Table zero_tab, times;
    zero_tab.entries = {0};
    times.entries.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    for (Element i = 1; i < size; ++i)
      for (Element j = 1; j < size; ++j)
        times.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)] =
            (i == j) ? i : static_cast<Element>(pick(rng));
    AlgebraPtr candidate = make_algebra(sig, size, {}, {std::move(zero_tab), std::move(times)});
    if (!check_identity(*candidate, mul(mul(x, y), z), mul(x, mul(y, z)))) continue;
    if (!check_identity(*candidate, mul(x, x), x)) continue;
    if (!check_identity(*candidate, mul(x, zero), zero) || !check_identity(*candidate, mul(zero, x), zero))
      continue;
    return candidate;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The bundled counterexample, recomputed from scratch
// ---------------------------------------------------------------------------

struct CounterexampleReport {
  bool pi_abab = false;        // pi(a,b,a,b)
  bool pi_ccab = false;        // pi(c,c,a,b)
  Element ac = -1, bc = -1;    // a*c, b*c
  Element aa = -1, ba = -1;    // a*a, b*a
  Element aca = -1, bca = -1;  // (a*c)*a, (b*c)*a
  bool table_facts = false;    // a*c = a, b*c = c, a*a = b*a, (a*c)*a != (b*c)*a
  bool phi2_separation = false;   // Phi2(a*c, b*c, a, b) is false
  bool gamma_separation = false;  // Gamma(a*c, b*c, a, b) is true

  bool all() const { return pi_abab && pi_ccab && table_facts && phi2_separation && gamma_separation; }
};

/// Recomputes the separation between the constructed witness pi and the
/// factor-congruence closure predicate on the bundled 4-element algebra:
/// pi holds at (a,b,a,b) and (c,c,a,b), so closing under the basic operation
/// forces Gamma at (a*c, b*c, a, b), yet Phi2 fails there. Everything is
/// computed; nothing is hard-coded.
inline CounterexampleReport reproduce_counterexample(const Limits& limits = {}) {
  const AlgebraPtr A = band0_algebra_a();
  const WitnessScheme scheme = band0_scheme();
  const Formula pi = build_pi(scheme);
  const Formula phi2 = build_phi2(scheme);

  const Element a = *A->element_by_name("a");
  const Element b = *A->element_by_name("b");
  const Element c = *A->element_by_name("c");
  const std::size_t star = *A->signature().index_of("*");

  CounterexampleReport r;
  r.pi_abab = eval_formula(A, pi, {{"x", a}, {"y", b}, {"z", a}, {"w", b}}, limits);
  r.pi_ccab = eval_formula(A, pi, {{"x", c}, {"y", c}, {"z", a}, {"w", b}}, limits);
  r.ac = A->apply(star, {a, c});
  r.bc = A->apply(star, {b, c});
  r.aa = A->apply(star, {a, a});
  r.ba = A->apply(star, {b, a});
  r.aca = A->apply(star, {r.ac, a});
  r.bca = A->apply(star, {r.bc, a});
  r.table_facts = r.ac == a && r.bc == c && r.aa == r.ba && r.aca != r.bca;
  r.phi2_separation = !eval_formula(A, phi2, {{"x", r.ac}, {"y", r.bc}, {"z", a}, {"w", b}}, limits);
  r.gamma_separation = gamma(A, r.ac, r.bc, a, b, limits);
  return r;
}

}  // namespace corpus
}  // namespace bfc

#endif  // BFC_CORPUS_HPP
