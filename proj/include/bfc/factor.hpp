#ifndef BFC_FACTOR_HPP
#define BFC_FACTOR_HPP

#include <array>

#include "bfc/congruence.hpp"

namespace bfc {

/// A pair of complementary factor congruences: meet is delta and both
/// relational compositions are nabla, so A is isomorphic to A/theta x A/theta*.
struct FactorPair {
  Congruence theta;
  Congruence theta_star;
};

inline bool is_factor_pair(const Congruence& theta, const Congruence& theta_star) {
  require_same_algebra(theta, theta_star, "is_factor_pair");
  if (!meet(theta, theta_star).is_delta()) return false;
  const BinaryRelation t = BinaryRelation::of(theta);
  const BinaryRelation s = BinaryRelation::of(theta_star);
  const BinaryRelation full = BinaryRelation::full(t.size());
  return compose(t, s) == full && compose(s, t) == full;
}

struct FactorCongruence {
  Congruence theta;
  std::vector<Congruence> complements;  // all of them; complements need not be unique
};

/// FC(A): every congruence admitting a permuting complement, each listed once
/// with all its complements, in con_lattice order.
inline std::vector<FactorCongruence> factor_congruences(const AlgebraPtr& algebra, const Limits& limits = {}) {
  const std::vector<Congruence> lattice = con_lattice(algebra, limits);
  std::vector<FactorCongruence> out;
  for (const Congruence& theta : lattice) {
    std::vector<Congruence> complements;
    for (const Congruence& phi : lattice)
      if (is_factor_pair(theta, phi)) complements.push_back(phi);
    if (!complements.empty()) out.push_back({theta, std::move(complements)});
  }
  return out;
}

struct BfcReport {
  bool is_sublattice = true;
  bool is_distributive = true;
  // Lexicographically least failing pair (sublattice) / triple (distributivity),
  // as indices into fc.
  std::optional<std::pair<std::size_t, std::size_t>> sublattice_witness;
  std::optional<std::array<std::size_t, 3>> distributivity_witness;
  std::vector<Congruence> fc;

  bool pass() const { return is_sublattice && is_distributive; }
};

/// Is FC(A) a distributive sublattice of Con(A)? Closure under the ambient
/// join/meet is checked pairwise; distributivity by direct triple
/// enumeration, which yields witnesses for free.
inline BfcReport check_bfc(const AlgebraPtr& algebra, const Limits& limits = {}) {
  BfcReport report;
  const auto fc_full = factor_congruences(algebra, limits);
  for (const auto& f : fc_full) report.fc.push_back(f.theta);
  const auto& fc = report.fc;

  auto in_fc = [&](const Congruence& c) {
    for (const auto& f : fc)
      if (f == c) return true;
    return false;
  };

  for (std::size_t i = 0; i < fc.size() && report.is_sublattice; ++i)
    for (std::size_t j = 0; j < fc.size(); ++j)
      if (!in_fc(join(fc[i], fc[j])) || !in_fc(meet(fc[i], fc[j]))) {
        report.is_sublattice = false;
        report.sublattice_witness = {i, j};
        break;
      }

  for (std::size_t x = 0; x < fc.size() && report.is_distributive; ++x)
    for (std::size_t y = 0; y < fc.size() && report.is_distributive; ++y)
      for (std::size_t z = 0; z < fc.size(); ++z) {
        if (meet(fc[x], join(fc[y], fc[z])) != join(meet(fc[x], fc[y]), meet(fc[x], fc[z]))) {
          report.is_distributive = false;
          report.distributivity_witness = {x, y, z};
          break;
        }
      }
  return report;
}

struct Decomposition {
  AlgebraPtr left;   // A/theta
  AlgebraPtr right;  // A/theta*
  std::vector<std::pair<Element, Element>> iso;  // e -> (block, block), verified
};

/// Splits A along a factor pair and verifies that e -> (e/theta, e/theta*)
/// is an isomorphism onto the direct product of the quotients.
inline Decomposition decompose(const FactorPair& pair, const Limits& limits = {}) {
  if (!is_factor_pair(pair.theta, pair.theta_star))
    throw ValidationError("decompose: not a factor pair");
  const AlgebraPtr& algebra = pair.theta.algebra();
  QuotientResult q0 = quotient(pair.theta, limits);
  QuotientResult q1 = quotient(pair.theta_star, limits);

  Decomposition d;
  d.left = q0.algebra;
  d.right = q1.algebra;
  std::vector<Element> flat(static_cast<std::size_t>(algebra->size()));
  const std::vector<int> sizes = {q0.algebra->size(), q1.algebra->size()};
  for (Element e = 0; e < algebra->size(); ++e) {
    const Element b0 = q0.canonical_map[static_cast<std::size_t>(e)];
    const Element b1 = q1.canonical_map[static_cast<std::size_t>(e)];
    d.iso.emplace_back(b0, b1);
    const Element coords[2] = {b0, b1};
    flat[static_cast<std::size_t>(e)] = static_cast<Element>(product_index(coords, sizes));
  }
  AlgebraPtr prod = direct_product({q0.algebra, q1.algebra}, limits);
  if (!is_isomorphism(*algebra, *prod, flat))
    throw ValidationError("decompose: block map failed the isomorphism replay");
  return d;
}

/// Gamma(a,b,c,d): (a,b) lies in every factor congruence containing (c,d).
inline bool gamma(const std::vector<FactorCongruence>& fc, Element a, Element b, Element c, Element d) {
  for (const auto& f : fc)
    if (f.theta.contains(c, d) && !f.theta.contains(a, b)) return false;
  return true;
}

inline bool gamma(const AlgebraPtr& algebra, Element a, Element b, Element c, Element d,
                  const Limits& limits = {}) {
  const int n = algebra->size();
  for (Element e : {a, b, c, d})
    if (e < 0 || e >= n) throw ValidationError("gamma: element out of range");
  return gamma(factor_congruences(algebra, limits), a, b, c, d);
}

/// A presentation of A as a product of quotients: congruences with trivial
/// intersection, each a factor congruence against the meet of the others.
using DecompositionSystem = std::vector<Congruence>;

inline void validate_decomposition_system(const AlgebraPtr& algebra, const DecompositionSystem& system) {
  if (system.empty()) throw ValidationError("decomposition system must be nonempty");
  for (const auto& c : system)
    if (!same_algebra(c.algebra(), algebra)) throw ValidationError("decomposition system: algebra mismatch");
  Congruence total = Congruence::nabla(algebra);
  for (const auto& c : system) total = meet(total, c);
  if (!total.is_delta()) throw ValidationError("decomposition system: intersection is not delta");
  for (std::size_t i = 0; i < system.size(); ++i) {
    Congruence rest = Congruence::nabla(algebra);
    for (std::size_t j = 0; j < system.size(); ++j)
      if (j != i) rest = meet(rest, system[j]);
    if (!is_factor_pair(system[i], rest))
      throw ValidationError("decomposition system: component lacks a permuting complement");
  }
}

struct RefinementReport {
  bool pass = true;
  std::vector<std::vector<int>> common_sizes;  // |D_ij| = |A/(theta_i v phi_j)|
  std::string failure;                         // empty on success
  std::optional<std::pair<std::size_t, std::size_t>> failed_cell;
};

/// Strict refinement of two decomposition systems: builds the common
/// refinement D_ij = A/(theta_i v phi_j), checks A/theta_i ~ prod_j D_ij and
/// A/phi_j ~ prod_i D_ij through the canonical block maps, and checks that
/// the two canonical routes A -> D_ij agree.
inline RefinementReport strict_refinement(const AlgebraPtr& algebra, const DecompositionSystem& first,
                                          const DecompositionSystem& second, const Limits& limits = {}) {
  validate_decomposition_system(algebra, first);
  validate_decomposition_system(algebra, second);

  RefinementReport report;
  const std::size_t m = first.size(), l = second.size();

  std::vector<std::vector<Congruence>> joined;
  std::vector<std::vector<QuotientResult>> dij;
  for (std::size_t i = 0; i < m; ++i) {
    joined.emplace_back();
    dij.emplace_back();
    report.common_sizes.emplace_back();
    for (std::size_t j = 0; j < l; ++j) {
      joined[i].push_back(join(first[i], second[j]));
      dij[i].push_back(quotient(joined[i][j], limits));
      report.common_sizes[i].push_back(dij[i][j].algebra->size());
    }
  }

  auto fail = [&](std::string why, std::size_t i, std::size_t j) {
    report.pass = false;
    report.failure = std::move(why);
    report.failed_cell = {i, j};
  };

  // Commutativity of the canonical square: both composites send e to its
  // (theta_i v phi_j)-block.
  std::vector<QuotientResult> qi, qj;
  for (std::size_t i = 0; i < m; ++i) qi.push_back(quotient(first[i], limits));
  for (std::size_t j = 0; j < l; ++j) qj.push_back(quotient(second[j], limits));
  for (std::size_t i = 0; i < m && report.pass; ++i) {
    for (std::size_t j = 0; j < l && report.pass; ++j) {
      // Block maps A/theta_i -> D_ij and A/phi_j -> D_ij, induced on representatives.
      std::vector<Element> via_i(static_cast<std::size_t>(qi[i].algebra->size()), -1);
      std::vector<Element> via_j(static_cast<std::size_t>(qj[j].algebra->size()), -1);
      for (Element e = 0; e < algebra->size(); ++e) {
        via_i[static_cast<std::size_t>(qi[i].canonical_map[static_cast<std::size_t>(e)])] =
            dij[i][j].canonical_map[static_cast<std::size_t>(e)];
        via_j[static_cast<std::size_t>(qj[j].canonical_map[static_cast<std::size_t>(e)])] =
            dij[i][j].canonical_map[static_cast<std::size_t>(e)];
      }
      for (Element e = 0; e < algebra->size(); ++e) {
        const Element through_i = via_i[static_cast<std::size_t>(qi[i].canonical_map[static_cast<std::size_t>(e)])];
        const Element through_j = via_j[static_cast<std::size_t>(qj[j].canonical_map[static_cast<std::size_t>(e)])];
        if (through_i != dij[i][j].canonical_map[static_cast<std::size_t>(e)] || through_i != through_j) {
          fail("canonical square does not commute", i, j);
          break;
        }
      }
    }
  }

  // A/theta_i must be isomorphic to prod_j D_ij via the canonical tuple map.
  for (std::size_t i = 0; i < m && report.pass; ++i) {
    std::vector<AlgebraPtr> row;
    std::vector<int> sizes;
    for (std::size_t j = 0; j < l; ++j) {
      row.push_back(dij[i][j].algebra);
      sizes.push_back(dij[i][j].algebra->size());
    }
    AlgebraPtr prod = direct_product(row, limits);
    if (prod->size() != qi[i].algebra->size()) {
      fail("row product has the wrong size", i, 0);
      break;
    }
    std::vector<Element> map(static_cast<std::size_t>(qi[i].algebra->size()), -1);
    for (Element e = 0; e < algebra->size(); ++e) {
      std::vector<Element> coords;
      for (std::size_t j = 0; j < l; ++j) coords.push_back(dij[i][j].canonical_map[static_cast<std::size_t>(e)]);
      map[static_cast<std::size_t>(qi[i].canonical_map[static_cast<std::size_t>(e)])] =
          static_cast<Element>(product_index(coords, sizes));
    }
    if (!is_isomorphism(*qi[i].algebra, *prod, map)) fail("row factor is not isomorphic to the refinement", i, 0);
  }

  // A/phi_j against the column products.
  for (std::size_t j = 0; j < l && report.pass; ++j) {
    std::vector<AlgebraPtr> col;
    std::vector<int> sizes;
    for (std::size_t i = 0; i < m; ++i) {
      col.push_back(dij[i][j].algebra);
      sizes.push_back(dij[i][j].algebra->size());
    }
    AlgebraPtr prod = direct_product(col, limits);
    if (prod->size() != qj[j].algebra->size()) {
      fail("column product has the wrong size", 0, j);
      break;
    }
    std::vector<Element> map(static_cast<std::size_t>(qj[j].algebra->size()), -1);
    for (Element e = 0; e < algebra->size(); ++e) {
      std::vector<Element> coords;
      for (std::size_t i = 0; i < m; ++i) coords.push_back(dij[i][j].canonical_map[static_cast<std::size_t>(e)]);
      map[static_cast<std::size_t>(qj[j].canonical_map[static_cast<std::size_t>(e)])] =
          static_cast<Element>(product_index(coords, sizes));
    }
    if (!is_isomorphism(*qj[j].algebra, *prod, map)) fail("column factor is not isomorphic to the refinement", 0, j);
  }

  return report;
}

}  // namespace bfc

#endif  // BFC_FACTOR_HPP
