#ifndef BFC_CONGRUENCE_HPP
#define BFC_CONGRUENCE_HPP

#include <deque>
#include <map>
#include <set>
#include <utility>

#include "bfc/partition.hpp"
#include "bfc/term.hpp"

namespace bfc {

/// Tests compatibility of a partition with every operation: whenever two
/// tuples are blockwise related, their images are related.
inline bool is_compatible(const FiniteAlgebra& algebra, const Partition& part) {
  if (part.size() != algebra.size()) return false;
  const int n = algebra.size();
  for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
    const int arity = algebra.signature().at(op).arity;
    if (arity == 0) continue;
    std::uint64_t count = 1;
    for (int i = 0; i < arity; ++i) count *= static_cast<std::uint64_t>(n);
    std::vector<Element> args(static_cast<std::size_t>(arity));
    std::vector<Element> alt(static_cast<std::size_t>(arity));
    for (std::uint64_t row = 0; row < count; ++row) {
      std::uint64_t rest = row;
      for (std::size_t i = static_cast<std::size_t>(arity); i-- > 0;) {
        args[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
        rest /= static_cast<std::uint64_t>(n);
      }
      const int base = part.label(algebra.apply(op, args));
      for (std::size_t i = 0; i < args.size(); ++i) {
        for (Element v = 0; v < n; ++v) {
          if (v == args[i] || !part.related(v, args[i])) continue;
          alt = args;
          alt[i] = v;
          if (part.label(algebra.apply(op, alt)) != base) return false;
        }
      }
    }
  }
  return true;
}

/// A congruence: a compatible partition bound to its algebra.
class Congruence {
 public:
  Congruence(AlgebraPtr algebra, Partition part, bool trust = false)
      : algebra_(std::move(algebra)), part_(std::move(part)) {
    if (!algebra_) throw ValidationError("congruence needs an algebra");
    if (part_.size() != algebra_->size()) throw ValidationError("partition size does not match algebra");
    if (!trust && !is_compatible(*algebra_, part_))
      throw ValidationError("partition is not compatible with the operations");
  }

  static Congruence delta(AlgebraPtr algebra) {
    int n = algebra->size();
    return Congruence(std::move(algebra), Partition::discrete(n), true);
  }
  static Congruence nabla(AlgebraPtr algebra) {
    int n = algebra->size();
    return Congruence(std::move(algebra), Partition::full(n), true);
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Partition& partition() const { return part_; }
  bool contains(Element a, Element b) const { return part_.related(a, b); }
  bool is_delta() const { return part_.is_discrete(); }
  bool is_nabla() const { return part_.is_full(); }

  bool operator==(const Congruence& o) const { return part_ == o.part_; }
  bool operator!=(const Congruence& o) const { return !(*this == o); }

 private:
  AlgebraPtr algebra_;
  Partition part_;
};

inline void require_same_algebra(const Congruence& a, const Congruence& b, const char* what) {
  if (!same_algebra(a.algebra(), b.algebra())) throw ValidationError(std::string(what) + ": algebra mismatch");
}

/// Plain n-by-n boolean relation over a universe; carrier for the delta /
/// epsilon recursion, where compositions of congruences need not be
/// congruences.
class BinaryRelation {
 public:
  explicit BinaryRelation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n <= 0) throw ValidationError("relation needs a nonempty carrier");
  }

  static BinaryRelation identity(int n) {
    BinaryRelation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i, true);
    return r;
  }
  static BinaryRelation full(int n) {
    BinaryRelation r(n);
    for (auto& b : r.bits_) b = 1;
    return r;
  }
  static BinaryRelation of(const Partition& p) {
    BinaryRelation r(p.size());
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.related(i, j)) r.set(i, j, true);
    return r;
  }
  static BinaryRelation of(const Congruence& c) { return of(c.partition()); }

  int size() const { return n_; }
  bool at(Element a, Element b) const {
    return bits_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
  }
  void set(Element a, Element b, bool v) {
    bits_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] = v ? 1 : 0;
  }

  bool is_reflexive() const {
    for (int i = 0; i < n_; ++i)
      if (!at(i, i)) return false;
    return true;
  }
  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }
  bool is_transitive() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j))
          for (int k = 0; k < n_; ++k)
            if (at(j, k) && !at(i, k)) return false;
    return true;
  }

  bool subset_of(const BinaryRelation& o) const {
    if (n_ != o.n_) throw ValidationError("relation size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  BinaryRelation intersect(const BinaryRelation& o) const {
    if (n_ != o.n_) throw ValidationError("relation size mismatch");
    BinaryRelation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }

  BinaryRelation unite(const BinaryRelation& o) const {
    if (n_ != o.n_) throw ValidationError("relation size mismatch");
    BinaryRelation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }

  BinaryRelation transitive_closure() const {
    BinaryRelation r = *this;
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (r.at(i, k))
          for (int j = 0; j < n_; ++j)
            if (r.at(k, j)) r.set(i, j, true);
    return r;
  }

  bool operator==(const BinaryRelation& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const BinaryRelation& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Relational product read left to right: (a,c) in compose(R,S) iff there is
/// b with a R b and b S c.
inline BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& s) {
  if (r.size() != s.size()) throw ValidationError("relation size mismatch");
  const int n = r.size();
  BinaryRelation out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.at(a, b))
        for (int c = 0; c < n; ++c)
          if (s.at(b, c)) out.set(a, c, true);
  return out;
}

/// m-fold power of a relation with itself; m = 0 gives the identity.
inline BinaryRelation n_fold_compose(const BinaryRelation& r, int m) {
  if (m < 0) throw ValidationError("negative composition power");
  BinaryRelation out = BinaryRelation::identity(r.size());
  for (int i = 0; i < m; ++i) out = compose(out, r);
  return out;
}

/// Alternating product R o S o R o S o ... with `factors` factors, starting
/// at R. factors = 2 is the plain product R o S.
inline BinaryRelation alternating_compose(const BinaryRelation& r, const BinaryRelation& s, int factors) {
  if (factors < 1) throw ValidationError("alternating product needs at least one factor");
  BinaryRelation out = r;
  for (int i = 1; i < factors; ++i) out = compose(out, (i % 2 == 1) ? s : r);
  return out;
}

/// Least congruence containing the generator pairs: seed a union-find with
/// the pairs, then propagate through unary polynomial images (one operation,
/// one varying coordinate, all context tuples) until fixpoint.
inline Congruence cg(const AlgebraPtr& algebra, const std::vector<std::pair<Element, Element>>& pairs) {
  const int n = algebra->size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("generator pair out of range");
    uf.merge(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < algebra->signature().size(); ++op) {
      const int arity = algebra->signature().at(op).arity;
      if (arity == 0) continue;
      std::uint64_t count = 1;
      for (int i = 0; i < arity; ++i) count *= static_cast<std::uint64_t>(n);
      std::vector<Element> args(static_cast<std::size_t>(arity));
      std::vector<Element> alt(static_cast<std::size_t>(arity));
      for (std::uint64_t row = 0; row < count; ++row) {
        std::uint64_t rest = row;
        for (std::size_t i = static_cast<std::size_t>(arity); i-- > 0;) {
          args[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
          rest /= static_cast<std::uint64_t>(n);
        }
        const Element base = algebra->apply(op, args);
        for (std::size_t i = 0; i < args.size(); ++i) {
          for (Element v = args[i] + 1; v < n; ++v) {
            if (uf.find(v) != uf.find(args[i])) continue;
            alt = args;
            alt[i] = v;
            if (uf.merge(base, algebra->apply(op, alt))) changed = true;
          }
        }
      }
    }
  }
  return Congruence(algebra, uf.to_partition(), true);
}

/// Meet = blockwise intersection.
inline Congruence meet(const Congruence& a, const Congruence& b) {
  require_same_algebra(a, b, "meet");
  const int n = a.partition().size();
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e)
    cls[static_cast<std::size_t>(e)] = a.partition().label(e) * n + b.partition().label(e);
  return Congruence(a.algebra(), Partition::from_classes(cls), true);
}

/// Join = transitive closure of the union; always a congruence, but verified
/// anyway because corrupted inputs should fail loudly.
inline Congruence join(const Congruence& a, const Congruence& b) {
  require_same_algebra(a, b, "join");
  const int n = a.partition().size();
  UnionFind uf(n);
  for (int e = 0; e < n; ++e) {
    uf.merge(a.partition().label(e), e);
    uf.merge(b.partition().label(e), e);
  }
  Partition joined = uf.to_partition();
  if (!is_compatible(*a.algebra(), joined)) throw ValidationError("join produced an incompatible partition");
  return Congruence(a.algebra(), std::move(joined), true);
}

/// All congruences of the algebra, computed as the join closure of the
/// principal congruences plus delta. Sorted finest first: descending block
/// count, then lexicographic label vector.
inline std::vector<Congruence> con_lattice(const AlgebraPtr& algebra, const Limits& limits = {}) {
  const int n = algebra->size();
  if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) > limits.max_cells)
    throw SizeGuardError("congruence lattice: universe too large");

  std::set<Partition> seen;
  std::vector<Partition> worklist;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) worklist.push_back(std::move(p));
  };
  add(Partition::discrete(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) add(cg(algebra, {{a, b}}).partition());

  // Join closure over the accumulated set.
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Congruence ci(algebra, worklist[i], true), cj(algebra, worklist[j], true);
      add(join(ci, cj).partition());
    }
  }

  std::vector<Partition> parts(seen.begin(), seen.end());
  std::sort(parts.begin(), parts.end(), [](const Partition& x, const Partition& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x.labels() < y.labels();
  });
  std::vector<Congruence> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(algebra, std::move(p), true);
  return out;
}

struct QuotientResult {
  AlgebraPtr algebra;
  std::vector<Element> canonical_map;  // element -> block index
};

/// Quotient algebra; blocks are indexed by increasing least member.
inline QuotientResult quotient(const Congruence& theta, const Limits& limits = {}) {
  const FiniteAlgebra& a = *theta.algebra();
  if (!is_compatible(a, theta.partition()))
    throw ValidationError("quotient: partition is not a congruence of this algebra");
  const std::vector<Element> reps = theta.partition().representatives();
  const int m = static_cast<int>(reps.size());

  std::vector<Element> block_index(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < m; ++i) block_index[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = i;
  for (Element e = 0; e < a.size(); ++e)
    block_index[static_cast<std::size_t>(e)] = block_index[static_cast<std::size_t>(theta.partition().label(e))];

  std::vector<std::string> names;
  if (a.has_names()) {
    for (Element r : reps) names.push_back("[" + a.element_name(r) + "]");
  }

  std::vector<FiniteAlgebra::Table> tables;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const int arity = a.signature().at(op).arity;
    const std::uint64_t rows =
        detail::checked_pow(static_cast<std::uint64_t>(m), arity, limits.max_cells, "quotient table");
    FiniteAlgebra::Table table;
    table.entries.resize(rows);
    std::vector<Element> args(static_cast<std::size_t>(arity));
    for (std::uint64_t row = 0; row < rows; ++row) {
      std::uint64_t rest = row;
      for (std::size_t i = static_cast<std::size_t>(arity); i-- > 0;) {
        args[i] = reps[rest % static_cast<std::uint64_t>(m)];
        rest /= static_cast<std::uint64_t>(m);
      }
      table.entries[row] = block_index[static_cast<std::size_t>(a.apply(op, args))];
    }
    tables.push_back(std::move(table));
  }
  return {make_algebra(a.signature(), m, std::move(names), std::move(tables), limits), std::move(block_index)};
}

/// Kernel of the i-th projection of a direct product: elements are related
/// iff their i-th coordinates agree. factor_sizes must multiply to |product|.
inline Congruence projection_kernel(const AlgebraPtr& product, const std::vector<int>& factor_sizes, std::size_t i) {
  std::uint64_t total = 1;
  for (int s : factor_sizes) total *= static_cast<std::uint64_t>(s);
  if (total != static_cast<std::uint64_t>(product->size()))
    throw ValidationError("factor sizes do not multiply to the product size");
  if (i >= factor_sizes.size()) throw ValidationError("projection index out of range");
  std::vector<int> cls(static_cast<std::size_t>(product->size()));
  for (Element e = 0; e < product->size(); ++e)
    cls[static_cast<std::size_t>(e)] = product_coords(static_cast<std::size_t>(e), factor_sizes)[i];
  return Congruence(product, Partition::from_classes(cls), true);
}

// ---------------------------------------------------------------------------
// Mal'cev chains
// ---------------------------------------------------------------------------

/// A unary polynomial: an operation tree with one hole and element constants.
class UnaryPoly {
 public:
  static UnaryPoly hole() {
    UnaryPoly p;
    p.kind_ = Kind::hole;
    return p;
  }
  static UnaryPoly constant(Element e) {
    UnaryPoly p;
    p.kind_ = Kind::constant;
    p.value_ = e;
    return p;
  }
  static UnaryPoly apply(std::size_t op, std::vector<UnaryPoly> children) {
    UnaryPoly p;
    p.kind_ = Kind::app;
    p.op_ = op;
    p.children_ = std::move(children);
    return p;
  }

  Element eval(const FiniteAlgebra& algebra, Element x) const {
    switch (kind_) {
      case Kind::hole:
        return x;
      case Kind::constant:
        return value_;
      case Kind::app: {
        std::vector<Element> vals(children_.size());
        for (std::size_t i = 0; i < children_.size(); ++i) vals[i] = children_[i].eval(algebra, x);
        return algebra.apply(op_, vals);
      }
    }
    throw Error("unreachable");
  }

  int depth() const {
    if (kind_ != Kind::app) return 0;
    int d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth());
    return d + 1;
  }

  /// s-expression with `_` for the hole and element names for constants.
  std::string to_string(const FiniteAlgebra& algebra) const {
    switch (kind_) {
      case Kind::hole:
        return "_";
      case Kind::constant:
        return algebra.element_name(value_);
      case Kind::app: {
        std::string s = "(" + algebra.signature().at(op_).symbol;
        for (const auto& c : children_) s += " " + c.to_string(algebra);
        return s + ")";
      }
    }
    throw Error("unreachable");
  }

 private:
  enum class Kind { hole, constant, app };
  Kind kind_ = Kind::hole;
  Element value_ = 0;
  std::size_t op_ = 0;
  std::vector<UnaryPoly> children_;
};

struct MalcevStep {
  UnaryPoly poly;
  std::size_t generator;  // index into the generator pair list
  bool swapped;           // false: poly(gen.first) = from, poly(gen.second) = to
  Element from, to;
};

struct MalcevChain {
  enum class Status { found, not_in_congruence, depth_exceeded };
  Status status = Status::not_in_congruence;
  std::vector<Element> elements;  // z_0 .. z_k, present when found
  std::vector<MalcevStep> steps;  // k entries
};

struct MalcevOptions {
  int max_poly_depth = 4;
  std::size_t max_polynomials = 200000;
};

namespace detail {

/// All unary polynomial functions up to the depth cap, one (shallowest)
/// descriptor per distinct function table, in deterministic order.
inline std::vector<std::pair<UnaryPoly, std::vector<Element>>> enumerate_unary_polys(
    const FiniteAlgebra& algebra, const MalcevOptions& opts) {
  const int n = algebra.size();
  std::vector<std::pair<UnaryPoly, std::vector<Element>>> polys;
  std::set<std::vector<Element>> seen;

  std::vector<Element> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  polys.emplace_back(UnaryPoly::hole(), ident);
  seen.insert(ident);

  std::size_t level_begin = 0;
  for (int depth = 1; depth <= opts.max_poly_depth; ++depth) {
    const std::size_t level_end = polys.size();
    for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
      const int arity = algebra.signature().at(op).arity;
      if (arity == 0) continue;
      for (int pos = 0; pos < arity; ++pos) {
        // Context tuples: constants in every slot but `pos`.
        std::uint64_t ctx_count = 1;
        for (int i = 0; i < arity - 1; ++i) ctx_count *= static_cast<std::uint64_t>(n);
        for (std::uint64_t ctx = 0; ctx < ctx_count; ++ctx) {
          std::vector<Element> consts(static_cast<std::size_t>(arity - 1));
          std::uint64_t rest = ctx;
          for (std::size_t i = consts.size(); i-- > 0;) {
            consts[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
          }
          for (std::size_t p = level_begin; p < level_end; ++p) {
            std::vector<Element> table(static_cast<std::size_t>(n));
            for (Element x = 0; x < n; ++x) {
              std::vector<Element> args(static_cast<std::size_t>(arity));
              std::size_t ci = 0;
              for (int i = 0; i < arity; ++i)
                args[static_cast<std::size_t>(i)] =
                    (i == pos) ? polys[p].second[static_cast<std::size_t>(x)] : consts[ci++];
              table[static_cast<std::size_t>(x)] = algebra.apply(op, args);
            }
            if (!seen.insert(table).second) continue;
            std::vector<UnaryPoly> children(static_cast<std::size_t>(arity));
            std::size_t ci = 0;
            for (int i = 0; i < arity; ++i)
              children[static_cast<std::size_t>(i)] =
                  (i == pos) ? polys[p].first : UnaryPoly::constant(consts[ci++]);
            polys.emplace_back(UnaryPoly::apply(op, std::move(children)), std::move(table));
            if (polys.size() >= opts.max_polynomials) return polys;
          }
        }
      }
    }
    level_begin = level_end;
    if (level_begin == polys.size()) break;  // no new functions, fixpoint
  }
  return polys;
}

}  // namespace detail

/// Element-level Mal'cev chain witnessing (a,b) in cg(gen_pairs): a path
/// a = z_0, ..., z_k = b where each step is a unary polynomial image of a
/// generator pair. Failure to find a chain within the polynomial depth cap
/// while (a,b) is in the congruence is reported as depth_exceeded, never as
/// absence.
inline MalcevChain malcev_chain(const AlgebraPtr& algebra,
                                const std::vector<std::pair<Element, Element>>& gen_pairs, Element a, Element b,
                                const MalcevOptions& opts = {}) {
  const int n = algebra->size();
  if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("chain endpoints out of range");
  for (auto [u, v] : gen_pairs)
    if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError("generator pair out of range");

  MalcevChain result;
  if (a == b) {
    result.status = MalcevChain::Status::found;
    result.elements = {a};
    return result;
  }

  const auto polys = detail::enumerate_unary_polys(*algebra, opts);

  // BFS over single-step successors.
  struct Edge {
    Element prev;
    std::size_t poly;
    std::size_t gen;
    bool swapped;
  };
  std::vector<std::optional<Edge>> visited(static_cast<std::size_t>(n));
  std::deque<Element> queue;
  visited[static_cast<std::size_t>(a)] = Edge{a, 0, 0, false};  // sentinel at the root
  queue.push_back(a);
  while (!queue.empty() && !visited[static_cast<std::size_t>(b)].has_value()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gen_pairs.size(); ++g) {
      for (std::size_t p = 0; p < polys.size(); ++p) {
        const Element img_first = polys[p].second[static_cast<std::size_t>(gen_pairs[g].first)];
        const Element img_second = polys[p].second[static_cast<std::size_t>(gen_pairs[g].second)];
        for (int orient = 0; orient < 2; ++orient) {
          const Element from = orient ? img_second : img_first;
          const Element to = orient ? img_first : img_second;
          if (from != cur || visited[static_cast<std::size_t>(to)].has_value()) continue;
          visited[static_cast<std::size_t>(to)] = Edge{cur, p, g, orient != 0};
          queue.push_back(to);
        }
      }
    }
  }

  if (!visited[static_cast<std::size_t>(b)].has_value()) {
    result.status = cg(algebra, gen_pairs).contains(a, b) ? MalcevChain::Status::depth_exceeded
                                                          : MalcevChain::Status::not_in_congruence;
    return result;
  }

  result.status = MalcevChain::Status::found;
  std::vector<Element> path;
  std::vector<MalcevStep> steps;
  for (Element cur = b; cur != a;) {
    const Edge& e = *visited[static_cast<std::size_t>(cur)];
    steps.push_back({polys[e.poly].first, e.gen, e.swapped, e.prev, cur});
    path.push_back(cur);
    cur = e.prev;
  }
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  std::reverse(steps.begin(), steps.end());
  result.elements = std::move(path);
  result.steps = std::move(steps);
  return result;
}

/// Replays every step of a chain against the generator pairs.
inline bool replay_chain(const FiniteAlgebra& algebra,
                         const std::vector<std::pair<Element, Element>>& gen_pairs, const MalcevChain& chain) {
  if (chain.status != MalcevChain::Status::found) return false;
  if (chain.elements.size() != chain.steps.size() + 1) return false;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const MalcevStep& st = chain.steps[i];
    if (st.from != chain.elements[i] || st.to != chain.elements[i + 1]) return false;
    const auto& gen = gen_pairs.at(st.generator);
    const Element lhs = st.swapped ? gen.second : gen.first;
    const Element rhs = st.swapped ? gen.first : gen.second;
    if (st.poly.eval(algebra, lhs) != st.from || st.poly.eval(algebra, rhs) != st.to) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// delta/epsilon recursion
// ---------------------------------------------------------------------------

/// Mutual recursion over binary relations, starting from the identity:
///   delta_{m+1} = (theta o eps_m) .. (theta* o eps_m) intersected,
///   eps_{m+1}   = (phi o delta_m) .. (phi* o delta_m) intersected,
/// where each product is the alternating relational product with `fold`
/// factors (fold = 2 is the plain product). Results are relations, not
/// congruences; callers wanting a congruence take the transitive closure
/// explicitly.
inline std::pair<BinaryRelation, BinaryRelation> delta_epsilon(const Congruence& theta, const Congruence& theta_star,
                                                               const Congruence& phi, const Congruence& phi_star,
                                                               int n, int fold = 2) {
  require_same_algebra(theta, theta_star, "delta_epsilon");
  require_same_algebra(theta, phi, "delta_epsilon");
  require_same_algebra(theta, phi_star, "delta_epsilon");
  if (n < 0) throw ValidationError("delta_epsilon: negative index");

  const int size = theta.algebra()->size();
  const BinaryRelation th = BinaryRelation::of(theta);
  const BinaryRelation ths = BinaryRelation::of(theta_star);
  const BinaryRelation ph = BinaryRelation::of(phi);
  const BinaryRelation phs = BinaryRelation::of(phi_star);

  BinaryRelation delta = BinaryRelation::identity(size);
  BinaryRelation eps = BinaryRelation::identity(size);
  for (int i = 0; i < n; ++i) {
    BinaryRelation next_delta =
        alternating_compose(th, eps, fold).intersect(alternating_compose(ths, eps, fold));
    BinaryRelation next_eps =
        alternating_compose(ph, delta, fold).intersect(alternating_compose(phs, delta, fold));
    delta = std::move(next_delta);
    eps = std::move(next_eps);
  }
  return {delta, eps};
}

/// Reflexive-symmetric-transitive closure of a relation, promoted to a
/// congruence (validated against the algebra).
inline Congruence congruence_closure(const AlgebraPtr& algebra, const BinaryRelation& rel) {
  if (rel.size() != algebra->size()) throw ValidationError("relation does not match algebra");
  UnionFind uf(rel.size());
  for (int i = 0; i < rel.size(); ++i)
    for (int j = 0; j < rel.size(); ++j)
      if (rel.at(i, j)) uf.merge(i, j);
  Partition part = uf.to_partition();
  if (!is_compatible(*algebra, part))
    throw ValidationError("closure of the relation is not compatible with the operations");
  return Congruence(algebra, std::move(part), true);
}

}  // namespace bfc

#endif  // BFC_CONGRUENCE_HPP
