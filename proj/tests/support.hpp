#ifndef BFC_TESTS_SUPPORT_HPP
#define BFC_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the library's closure algorithms: the
// congruence side is answered by filtering *all* partitions of the universe,
// so any agreement with the fast paths is meaningful evidence.

#include <bfc/congruence.hpp>
#include <bfc/corpus.hpp>

namespace bfc::testsupport {

/// Every partition of {0..n-1}, via restricted growth strings.
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    out.push_back(Partition::from_classes(rgs));
  };
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      rgs[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, std::max(max_used, c));
    }
  };
  rec(rec, 1, 0);  // rgs[0] = 0 always
  return out;
}

/// All congruences by brute force: filter every partition for compatibility.
inline std::vector<Partition> congruences_by_filter(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions(a.size()))
    if (is_compatible(a, p)) out.push_back(p);
  return out;
}

/// Least congruence containing the pairs, by scanning the filtered list.
inline Partition least_congruence_above(const FiniteAlgebra& a,
                                        const std::vector<std::pair<Element, Element>>& pairs) {
  std::optional<Partition> best;
  for (const auto& p : congruences_by_filter(a)) {
    bool covers = true;
    for (auto [x, y] : pairs) covers = covers && p.related(x, y);
    if (!covers) continue;
    if (!best || p.refines(*best)) best = p;
  }
  if (!best) throw Error("no congruence above the pairs (cannot happen: nabla qualifies)");
  return *best;
}

/// All members of the bundled {0,*} variety of a given size, with the
/// constant normalized to element 0 (forced cells baked, free cells
/// enumerated, associativity filtered).
inline std::vector<AlgebraPtr> all_band0_members(int size) {
  if (size < 1 || size > 4) throw Error("band0 enumeration is for sizes 1..4");
  const Signature sig = corpus::band0_signature();
  std::vector<AlgebraPtr> out;

  std::vector<std::pair<Element, Element>> free_cells;
  for (Element i = 1; i < size; ++i)
    for (Element j = 1; j < size; ++j)
      if (i != j) free_cells.emplace_back(i, j);

  std::uint64_t total = 1;
  for (std::size_t c = 0; c < free_cells.size(); ++c) total *= static_cast<std::uint64_t>(size);

  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Element> table(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    for (Element i = 1; i < size; ++i)
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(i)] = i;
    std::uint64_t rest = code;
    for (const auto& [i, j] : free_cells) {
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)] =
          static_cast<Element>(rest % static_cast<std::uint64_t>(size));
      rest /= static_cast<std::uint64_t>(size);
    }
    auto mul = [&](Element i, Element j) {
      return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)];
    };
    bool assoc = true;
    for (Element i = 0; i < size && assoc; ++i)
      for (Element j = 0; j < size && assoc; ++j)
        for (Element l = 0; l < size && assoc; ++l) assoc = mul(mul(i, j), l) == mul(i, mul(j, l));
    if (!assoc) continue;
    FiniteAlgebra::Table zero, times;
    zero.entries = {0};
    times.entries = std::move(table);
    out.push_back(make_algebra(sig, size, {}, {std::move(zero), std::move(times)}));
  }
  return out;
}

/// The deterministic seeds/sizes recipe shared by the tests and the
/// acceptance suite for "20 seeded random members".
inline std::vector<AlgebraPtr> seeded_band0_members() {
  std::vector<AlgebraPtr> out;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int size = static_cast<int>(seed % 4) + 1;  // 1..4
    auto member = corpus::random_member_band0(size, seed);
    if (member) out.push_back(*member);
  }
  return out;
}

}  // namespace bfc::testsupport

#endif
