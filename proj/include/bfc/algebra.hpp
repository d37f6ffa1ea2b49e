#ifndef BFC_ALGEBRA_HPP
#define BFC_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bfc {

/// Element of a finite universe {0..n-1}. Display names are cosmetic only.
using Element = int;

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input (bad table, wrong signature, corrupt partition, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was refused because it would exceed a configured limit.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Resource limits for enumeration-heavy operations.
///
/// max_cells bounds materialized operation tables (e.g. in direct products);
/// max_assignments bounds exhaustive assignment scans (identity checking,
/// quantifier evaluation). Both are counts, not bytes.
struct Limits {
  std::uint64_t max_cells = 10'000'000;
  std::uint64_t max_assignments = 10'000'000;
};

struct OperationSymbol {
  std::string symbol;
  int arity = 0;
};

/// A finite similarity type: named operation symbols with arities.
/// Arity 0 is allowed (constants).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OperationSymbol> ops) : ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].arity < 0) throw ValidationError("negative arity for symbol '" + ops_[i].symbol + "'");
      if (ops_[i].symbol.empty()) throw ValidationError("empty operation symbol");
      for (std::size_t j = 0; j < i; ++j)
        if (ops_[j].symbol == ops_[i].symbol)
          throw ValidationError("duplicate operation symbol '" + ops_[i].symbol + "'");
    }
  }

  std::size_t size() const { return ops_.size(); }
  const std::vector<OperationSymbol>& operations() const { return ops_; }
  const OperationSymbol& at(std::size_t i) const { return ops_.at(i); }

  std::optional<std::size_t> index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].symbol == symbol) return i;
    return std::nullopt;
  }

  bool operator==(const Signature& other) const {
    if (ops_.size() != other.ops_.size()) return false;
    for (std::size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].symbol != other.ops_[i].symbol || ops_[i].arity != other.ops_[i].arity) return false;
    return true;
  }
  bool operator!=(const Signature& other) const { return !(*this == other); }

 private:
  std::vector<OperationSymbol> ops_;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit, const char* what) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base)
      throw SizeGuardError(std::string(what) + ": enumeration size exceeds limit");
    result *= base;
  }
  return result;
}

}  // namespace detail

/// A finite algebra: universe {0..n-1} plus one flattened table per
/// operation symbol. Tables are row-major by tuple index (the first
/// argument is the most significant digit), so a binary table entry for
/// (i, j) sits at i*n + j. Immutable after construction.
class FiniteAlgebra {
 public:
  struct Table {
    std::vector<Element> entries;  // size n^arity
  };

  FiniteAlgebra(Signature sig, int size, std::vector<std::string> names,
                std::vector<Table> tables, const Limits& limits = {})
      : sig_(std::move(sig)), size_(size), names_(std::move(names)), tables_(std::move(tables)) {
    if (size_ <= 0) throw ValidationError("algebra universe must be nonempty");
    if (!names_.empty()) {
      if (names_.size() != static_cast<std::size_t>(size_))
        throw ValidationError("element name list has wrong length");
      for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (names_[i] == names_[j]) throw ValidationError("duplicate element name '" + names_[i] + "'");
    }
    if (tables_.size() != sig_.size()) throw ValidationError("one table per operation symbol required");
    std::uint64_t total_cells = 0;
    for (std::size_t op = 0; op < tables_.size(); ++op) {
      const auto expected = detail::checked_pow(static_cast<std::uint64_t>(size_), sig_.at(op).arity,
                                                limits.max_cells, "operation table");
      total_cells += expected;
      if (total_cells > limits.max_cells) throw SizeGuardError("algebra tables exceed cell limit");
      if (tables_[op].entries.size() != expected)
        throw ValidationError("table for '" + sig_.at(op).symbol + "' has wrong size");
      for (Element e : tables_[op].entries)
        if (e < 0 || e >= size_)
          throw ValidationError("table entry out of range for '" + sig_.at(op).symbol + "'");
    }
  }

  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  bool has_names() const { return !names_.empty(); }

  std::string element_name(Element e) const {
    if (e < 0 || e >= size_) throw ValidationError("element out of range");
    return names_.empty() ? std::to_string(e) : names_[static_cast<std::size_t>(e)];
  }

  /// Index of a named element; names fall back to decimal indices.
  std::optional<Element> element_by_name(std::string_view name) const {
    for (Element e = 0; e < size_; ++e)
      if (element_name(e) == name) return e;
    return std::nullopt;
  }

  const std::vector<std::string>& names() const { return names_; }
  const Table& table(std::size_t op) const { return tables_.at(op); }

  Element apply(std::size_t op, std::span<const Element> args) const {
    const auto& info = sig_.at(op);
    if (args.size() != static_cast<std::size_t>(info.arity))
      throw ValidationError("arity mismatch applying '" + info.symbol + "'");
    std::size_t idx = 0;
    for (Element a : args) {
      if (a < 0 || a >= size_) throw ValidationError("argument out of range for '" + info.symbol + "'");
      idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    }
    return tables_[op].entries[idx];
  }

  Element apply(std::size_t op, std::initializer_list<Element> args) const {
    return apply(op, std::span<const Element>(args.begin(), args.size()));
  }

  /// Structural equality; display names do not participate.
  bool operator==(const FiniteAlgebra& other) const {
    if (size_ != other.size_ || sig_ != other.sig_) return false;
    for (std::size_t op = 0; op < tables_.size(); ++op)
      if (tables_[op].entries != other.tables_[op].entries) return false;
    return true;
  }
  bool operator!=(const FiniteAlgebra& other) const { return !(*this == other); }

 private:
  Signature sig_;
  int size_;
  std::vector<std::string> names_;
  std::vector<Table> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

inline AlgebraPtr make_algebra(Signature sig, int size, std::vector<std::string> names,
                               std::vector<FiniteAlgebra::Table> tables, const Limits& limits = {}) {
  return std::make_shared<const FiniteAlgebra>(std::move(sig), size, std::move(names), std::move(tables), limits);
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

/// Lexicographic index of a coordinate tuple: the first coordinate is the
/// most significant digit. Inverse of product_coords.
inline std::size_t product_index(std::span<const Element> coords, std::span<const int> sizes) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    idx = idx * static_cast<std::size_t>(sizes[i]) + static_cast<std::size_t>(coords[i]);
  return idx;
}

inline std::vector<Element> product_coords(std::size_t index, std::span<const int> sizes) {
  std::vector<Element> coords(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(index % static_cast<std::size_t>(sizes[i]));
    index /= static_cast<std::size_t>(sizes[i]);
  }
  return coords;
}

/// Direct product with coordinatewise operations. All factors must share one
/// signature; the element encoding is the lexicographic tuple index above.
inline AlgebraPtr direct_product(const std::vector<AlgebraPtr>& factors, const Limits& limits = {}) {
  if (factors.empty()) throw ValidationError("direct product needs at least one factor");
  const Signature& sig = factors[0]->signature();
  for (const auto& f : factors)
    if (f->signature() != sig) throw ValidationError("direct product factors must share a signature");

  std::vector<int> sizes;
  std::uint64_t n = 1;
  for (const auto& f : factors) {
    sizes.push_back(f->size());
    n *= static_cast<std::uint64_t>(f->size());
    if (n > limits.max_cells) throw SizeGuardError("product universe exceeds cell limit");
  }

  std::vector<std::string> names;
  if (factors.size() > 1 || factors[0]->has_names()) {
    names.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      auto coords = product_coords(idx, sizes);
      if (factors.size() == 1) {
        names.push_back(factors[0]->element_name(coords[0]));
      } else {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (i) s += ",";
          s += factors[i]->element_name(coords[i]);
        }
        s += ")";
        names.push_back(std::move(s));
      }
    }
  }

  std::vector<FiniteAlgebra::Table> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int arity = sig.at(op).arity;
    const std::uint64_t rows = detail::checked_pow(n, arity, limits.max_cells, "product table");
    FiniteAlgebra::Table table;
    table.entries.resize(rows);
    std::vector<std::vector<Element>> arg_coords(static_cast<std::size_t>(arity));
    std::vector<Element> args(static_cast<std::size_t>(arity));
    std::vector<Element> result_coords(factors.size());
    for (std::uint64_t row = 0; row < rows; ++row) {
      std::uint64_t rest = row;
      for (std::size_t a = static_cast<std::size_t>(arity); a-- > 0;) {
        args[a] = static_cast<Element>(rest % n);
        rest /= n;
      }
      for (std::size_t a = 0; a < args.size(); ++a)
        arg_coords[a] = product_coords(static_cast<std::size_t>(args[a]), sizes);
      std::vector<Element> slice(static_cast<std::size_t>(arity));
      for (std::size_t f = 0; f < factors.size(); ++f) {
        for (std::size_t a = 0; a < args.size(); ++a) slice[a] = arg_coords[a][f];
        result_coords[f] = factors[f]->apply(op, slice);
      }
      table.entries[row] = static_cast<Element>(product_index(result_coords, sizes));
    }
    tables.push_back(std::move(table));
  }
  return make_algebra(sig, static_cast<int>(n), std::move(names), std::move(tables), limits);
}

/// Searches for an isomorphism A -> B by backtracking over partial maps in
/// increasing element order, pruning on operation consistency. Returns the
/// first bijection found (deterministic) or nullopt.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) throw ValidationError("isomorphism search needs equal signatures");
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<Element> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  // Verifies every all-assigned tuple whose image is also assigned.
  auto consistent = [&]() {
    std::vector<Element> args, mapped;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      const int arity = a.signature().at(op).arity;
      std::uint64_t count = 1;
      for (int i = 0; i < arity; ++i) count *= static_cast<std::uint64_t>(n);
      args.assign(static_cast<std::size_t>(arity), 0);
      mapped.assign(static_cast<std::size_t>(arity), 0);
      for (std::uint64_t row = 0; row < count; ++row) {
        std::uint64_t rest = row;
        bool all_assigned = true;
        for (std::size_t i = static_cast<std::size_t>(arity); i-- > 0;) {
          args[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
          rest /= static_cast<std::uint64_t>(n);
          if (map[static_cast<std::size_t>(args[i])] < 0) all_assigned = false;
        }
        if (!all_assigned) continue;
        const Element image = map[static_cast<std::size_t>(a.apply(op, args))];
        if (image < 0) continue;
        for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = map[static_cast<std::size_t>(args[i])];
        if (b.apply(op, mapped) != image) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, int next) -> bool {
    if (next == n) return true;
    for (Element img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      map[static_cast<std::size_t>(next)] = img;
      used[static_cast<std::size_t>(img)] = true;
      if (consistent() && self(self, next + 1)) return true;
      map[static_cast<std::size_t>(next)] = -1;
      used[static_cast<std::size_t>(img)] = false;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return map;
}

/// Replays a candidate isomorphism against every operation tuple.
inline bool is_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> map) {
  if (a.size() != b.size() || a.signature() != b.signature()) return false;
  if (map.size() != static_cast<std::size_t>(a.size())) return false;
  std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
  for (Element e = 0; e < a.size(); ++e) {
    const Element img = map[static_cast<std::size_t>(e)];
    if (img < 0 || img >= b.size()) return false;
    if (hit[static_cast<std::size_t>(img)]) return false;
    hit[static_cast<std::size_t>(img)] = true;
  }
  const int n = a.size();
  std::vector<Element> args, mapped;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const int arity = a.signature().at(op).arity;
    std::uint64_t count = 1;
    for (int i = 0; i < arity; ++i) count *= static_cast<std::uint64_t>(n);
    args.assign(static_cast<std::size_t>(arity), 0);
    mapped.assign(static_cast<std::size_t>(arity), 0);
    for (std::uint64_t row = 0; row < count; ++row) {
      std::uint64_t rest = row;
      for (std::size_t i = static_cast<std::size_t>(arity); i-- > 0;) {
        args[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(n));
        rest /= static_cast<std::uint64_t>(n);
      }
      for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = map[static_cast<std::size_t>(args[i])];
      if (map[static_cast<std::size_t>(a.apply(op, args))] != b.apply(op, mapped)) return false;
    }
  }
  return true;
}

}  // namespace bfc

#endif  // BFC_ALGEBRA_HPP
