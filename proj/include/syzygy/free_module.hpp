#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/polynomial.hpp"

namespace syzygy {

// F = (+)_i S(-shifts[i]). Basis element i sits in degree shifts[i].
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> shifts) : shifts_(std::move(shifts)) {}
  static GradedFreeModule ring() { return GradedFreeModule({0}); }

  std::size_t rank() const { return shifts_.size(); }
  int shift(std::size_t i) const { return shifts_.at(i); }
  const std::vector<int>& shifts() const { return shifts_; }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> shifts_;
};

// Element of a free module: sparse map from basis index to a nonzero
// polynomial coefficient, sorted by index.
template <class K>
class ModuleElement {
 public:
  using Poly = Polynomial<K>;
  using Entry = std::pair<std::uint32_t, Poly>;

  ModuleElement() = default;
  explicit ModuleElement(RingPtr<K> ring) : ring_(std::move(ring)) {}
  // Drops zero entries and sorts; throws on a repeated index.
  ModuleElement(RingPtr<K> ring, std::vector<Entry> entries);

  static ModuleElement basis(RingPtr<K> ring, std::uint32_t index) {
    auto one = Poly::constant(ring, ring->field().one());
    return ModuleElement(ring, {{index, std::move(one)}});
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Zero polynomial when absent.
  Poly component(std::uint32_t index) const;
  const Poly* find(std::uint32_t index) const;
  void set(std::uint32_t index, Poly value);

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    return a.combine(b, false);
  }
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    return a.combine(b, true);
  }
  ModuleElement& operator+=(const ModuleElement& b) { return *this = combine(b, false); }
  ModuleElement& operator-=(const ModuleElement& b) { return *this = combine(b, true); }
  ModuleElement operator-() const;
  ModuleElement times(const Poly& p) const;

  // Basis indices are rewritten through `map`; entries mapped to nullopt
  // are dropped.
  ModuleElement reindexed(const std::vector<std::optional<std::uint32_t>>& map) const;

  std::string to_string() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i].first != b.entries_[i].first) return false;
      if (!(a.entries_[i].second == b.entries_[i].second)) return false;
    }
    return true;
  }

 private:
  ModuleElement combine(const ModuleElement& b, bool subtract) const;

  RingPtr<K> ring_;
  std::vector<Entry> entries_;
};

// Common degree of a homogeneous element of `module`: deg(c_i) + shift_i
// for every nonzero component. nullopt for zero or inhomogeneous elements.
template <class K>
std::optional<int> element_degree(const ModuleElement<K>& v, const GradedFreeModule& module);

// Homogeneous map source -> target, stored by columns. Column i is the
// image of basis element i of the source.
template <class K>
class GradedMatrix {
 public:
  using Element = ModuleElement<K>;

  GradedMatrix() = default;
  // Validates the graded-matrix invariant: every nonzero entry (t, i) is
  // homogeneous of degree source.shift(i) - target.shift(t) >= 0.
  GradedMatrix(RingPtr<K> ring, GradedFreeModule source, GradedFreeModule target,
               std::vector<Element> columns);

  static GradedMatrix identity(RingPtr<K> ring, const GradedFreeModule& module);

  const RingPtr<K>& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const std::vector<Element>& columns() const { return columns_; }
  const Element& column(std::size_t i) const { return columns_.at(i); }
  Polynomial<K> entry(std::size_t row, std::size_t col) const {
    return columns_.at(col).component(static_cast<std::uint32_t>(row));
  }
  bool is_zero() const;

  // Entries that are nonzero constants.
  std::size_t count_unit_entries() const;

  // Dense target.rank() x source.rank() matrix of entries evaluated at `point`.
  std::vector<std::vector<typename K::Element>> evaluate(
      std::span<const typename K::Element> point) const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.columns_ == b.columns_;
  }

 private:
  RingPtr<K> ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Element> columns_;
};

// M(v) for v in M.source(). Throws DimensionError for an index out of range.
template <class K>
ModuleElement<K> apply(const GradedMatrix<K>& m, const ModuleElement<K>& v);

// A o B as a graded matrix. Throws DimensionError unless B.target == A.source.
template <class K>
GradedMatrix<K> compose(const GradedMatrix<K>& a, const GradedMatrix<K>& b);

// True iff A o B vanishes, checked column by column in exact arithmetic.
template <class K>
bool compose_is_zero(const GradedMatrix<K>& a, const GradedMatrix<K>& b);

// Rank of a dense matrix over the field by Gaussian elimination.
template <class K>
std::size_t dense_rank(const K& field, std::vector<std::vector<typename K::Element>> rows);

}  // namespace syzygy
