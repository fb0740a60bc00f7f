#include "syzygy/free_module.hpp"

#include <algorithm>

namespace syzygy {

template <class K>
ModuleElement<K>::ModuleElement(RingPtr<K> ring, std::vector<Entry> entries)
    : ring_(std::move(ring)) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      throw DimensionError("repeated basis index " + std::to_string(e.first));
    }
    if (!e.second.is_zero()) {
      if (!e.second.ring()->same_as(*ring_)) {
        throw RingMismatchError("module entry over a different ring");
      }
      entries_.push_back(std::move(e));
    }
  }
}

template <class K>
Polynomial<K> ModuleElement<K>::component(std::uint32_t index) const {
  if (const Poly* p = find(index)) return *p;
  return Poly(ring_);
}

template <class K>
const Polynomial<K>* ModuleElement<K>::find(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

template <class K>
void ModuleElement<K>::set(std::uint32_t index, Poly value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  const bool present = it != entries_.end() && it->first == index;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = std::move(value);
  } else {
    entries_.insert(it, {index, std::move(value)});
  }
}

template <class K>
ModuleElement<K> ModuleElement<K>::combine(const ModuleElement& b, bool subtract) const {
  if (ring_ && b.ring_ && !ring_->same_as(*b.ring_)) {
    throw RingMismatchError("module elements over different rings");
  }
  ModuleElement out(ring_ ? ring_ : b.ring_);
  out.entries_.reserve(entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() || (i < entries_.size() && entries_[i].first < b.entries_[j].first)) {
      out.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || b.entries_[j].first < entries_[i].first) {
      const auto& e = b.entries_[j++];
      out.entries_.push_back({e.first, subtract ? -e.second : e.second});
    } else {
      Poly s = subtract ? entries_[i].second - b.entries_[j].second
                        : entries_[i].second + b.entries_[j].second;
      if (!s.is_zero()) out.entries_.push_back({entries_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
ModuleElement<K> ModuleElement<K>::operator-() const {
  ModuleElement out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

template <class K>
ModuleElement<K> ModuleElement<K>::times(const Poly& p) const {
  ModuleElement out(ring_);
  if (p.is_zero()) return out;
  for (const auto& e : entries_) {
    Poly q = e.second * p;
    if (!q.is_zero()) out.entries_.push_back({e.first, std::move(q)});
  }
  return out;
}

template <class K>
ModuleElement<K> ModuleElement<K>::reindexed(
    const std::vector<std::optional<std::uint32_t>>& map) const {
  std::vector<Entry> out;
  for (const auto& e : entries_) {
    if (e.first >= map.size()) throw DimensionError("basis index out of range in reindex");
    if (map[e.first]) out.push_back({*map[e.first], e.second});
  }
  return ModuleElement(ring_, std::move(out));
}

template <class K>
std::string ModuleElement<K>::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [i, p] : entries_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*e" + std::to_string(i);
  }
  return out;
}

template <class K>
std::optional<int> element_degree(const ModuleElement<K>& v, const GradedFreeModule& module) {
  std::optional<int> degree;
  for (const auto& [i, p] : v.entries()) {
    if (i >= module.rank()) throw DimensionError("module element outside its free module");
    const auto hd = p.homogeneous_degree();
    if (!hd.has_value()) return std::nullopt;
    const int d = hd.degree + module.shift(i);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

template <class K>
GradedMatrix<K>::GradedMatrix(RingPtr<K> ring, GradedFreeModule source, GradedFreeModule target,
                              std::vector<Element> columns)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      columns_(std::move(columns)) {
  if (columns_.size() != source_.rank()) {
    throw DimensionError("matrix has " + std::to_string(columns_.size()) +
                         " columns for a source of rank " + std::to_string(source_.rank()));
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [t, p] : columns_[c].entries()) {
      if (t >= target_.rank()) throw DimensionError("matrix entry row out of range");
      const auto hd = p.homogeneous_degree();
      const int expected = source_.shift(c) - target_.shift(t);
      if (!hd.has_value() || hd.degree != expected || expected < 0) {
        throw DegreeError("matrix entry (" + std::to_string(t) + ", " + std::to_string(c) +
                          ") = " + p.to_string() + " is not homogeneous of degree " +
                          std::to_string(expected));
      }
    }
  }
}

template <class K>
GradedMatrix<K> GradedMatrix<K>::identity(RingPtr<K> ring, const GradedFreeModule& module) {
  std::vector<Element> cols;
  for (std::size_t i = 0; i < module.rank(); ++i) {
    cols.push_back(Element::basis(ring, static_cast<std::uint32_t>(i)));
  }
  return GradedMatrix(ring, module, module, std::move(cols));
}

template <class K>
bool GradedMatrix<K>::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Element& c) { return c.is_zero(); });
}

template <class K>
std::size_t GradedMatrix<K>::count_unit_entries() const {
  std::size_t n = 0;
  for (const auto& col : columns_) {
    for (const auto& e : col.entries()) n += e.second.is_unit() ? 1 : 0;
  }
  return n;
}

template <class K>
std::vector<std::vector<typename K::Element>> GradedMatrix<K>::evaluate(
    std::span<const typename K::Element> point) const {
  const K& f = ring_->field();
  std::vector<std::vector<typename K::Element>> rows(
      target_.rank(), std::vector<typename K::Element>(source_.rank(), f.zero()));
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [t, p] : columns_[c].entries()) rows[t][c] = p.evaluate(point);
  }
  return rows;
}

template <class K>
ModuleElement<K> apply(const GradedMatrix<K>& m, const ModuleElement<K>& v) {
  ModuleElement<K> out(m.ring());
  for (const auto& [i, p] : v.entries()) {
    if (i >= m.source().rank()) throw DimensionError("vector index outside matrix source");
    out += m.column(i).times(p);
  }
  return out;
}

template <class K>
GradedMatrix<K> compose(const GradedMatrix<K>& a, const GradedMatrix<K>& b) {
  if (!(b.target() == a.source())) throw DimensionError("composition shape mismatch");
  std::vector<ModuleElement<K>> cols;
  cols.reserve(b.source().rank());
  for (const auto& col : b.columns()) cols.push_back(apply(a, col));
  return GradedMatrix<K>(a.ring(), b.source(), a.target(), std::move(cols));
}

template <class K>
bool compose_is_zero(const GradedMatrix<K>& a, const GradedMatrix<K>& b) {
  if (!(b.target() == a.source())) throw DimensionError("composition shape mismatch");
  for (const auto& col : b.columns()) {
    if (!apply(a, col).is_zero()) return false;
  }
  return true;
}

template <class K>
std::size_t dense_rank(const K& f, std::vector<std::vector<typename K::Element>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && f.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = f.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (f.is_zero(rows[r][col])) continue;
      const auto factor = f.mul(rows[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c) {
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

#define SYZYGY_INSTANTIATE(K)                                                              \
  template class ModuleElement<K>;                                                         \
  template class GradedMatrix<K>;                                                          \
  template std::optional<int> element_degree(const ModuleElement<K>&, const GradedFreeModule&); \
  template ModuleElement<K> apply(const GradedMatrix<K>&, const ModuleElement<K>&);        \
  template GradedMatrix<K> compose(const GradedMatrix<K>&, const GradedMatrix<K>&);        \
  template bool compose_is_zero(const GradedMatrix<K>&, const GradedMatrix<K>&);           \
  template std::size_t dense_rank(const K&, std::vector<std::vector<typename K::Element>>);

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
