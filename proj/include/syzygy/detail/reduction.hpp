#pragma once

// Internal term-list representation of module elements and the division
// loop shared by Buchberger and the Schreyer resolution. Not part of the
// public API.

#include <cstdint>
#include <optional>
#include <vector>

#include "syzygy/free_module.hpp"
#include "syzygy/module_order.hpp"

namespace syzygy::detail {

// One term c * m * e_comp. `key` is m for position-over-term and
// m * weight(comp) for Schreyer orders; under a Schreyer order two terms on
// the same component divide each other exactly when their keys do.
template <class K>
struct VTerm {
  typename K::Element coef;
  Monomial key;
  std::uint32_t comp;
};

template <class K>
using TermVector = std::vector<VTerm<K>>;

class TermOrder {
 public:
  TermOrder(MonomialOrder mono, const ModuleOrder& module)
      : mono_(mono), schreyer_(module.kind == ModuleOrder::Kind::schreyer), ranks_(module.ranks) {}

  // >0 when (ka, ca) is the larger term.
  int compare(const Monomial& ka, std::uint32_t ca, const Monomial& kb, std::uint32_t cb) const {
    if (!schreyer_ && ca != cb) return ca < cb ? 1 : -1;
    const auto o = syzygy::compare(ka, kb, mono_);
    if (o != 0) return o > 0 ? 1 : -1;
    if (ca != cb) {
      const std::uint32_t ra = ca < ranks_.size() ? ranks_[ca] : ca;
      const std::uint32_t rb = cb < ranks_.size() ? ranks_[cb] : cb;
      return ra > rb ? 1 : -1;
    }
    return 0;
  }
  template <class K>
  bool greater(const VTerm<K>& a, const VTerm<K>& b) const {
    return compare(a.key, a.comp, b.key, b.comp) > 0;
  }

 private:
  MonomialOrder mono_;
  bool schreyer_;
  std::vector<std::uint32_t> ranks_;
};

inline Monomial key_of(const Monomial& mono, std::uint32_t comp, const ModuleOrder& order) {
  if (order.kind == ModuleOrder::Kind::schreyer) return mono * order.weights.at(comp);
  return mono;
}

inline Monomial mono_of(const Monomial& key, std::uint32_t comp, const ModuleOrder& order) {
  if (order.kind == ModuleOrder::Kind::schreyer) return key / order.weights.at(comp);
  return key;
}

template <class K>
TermVector<K> to_terms(const ModuleElement<K>& v, const ModuleOrder& order) {
  TermVector<K> out;
  for (const auto& [comp, poly] : v.entries()) {
    for (const auto& t : poly.terms()) out.push_back({t.coef, key_of(t.mono, comp, order), comp});
  }
  const TermOrder ord(v.ring()->order(), order);
  std::sort(out.begin(), out.end(),
            [&](const VTerm<K>& a, const VTerm<K>& b) { return ord.greater(a, b); });
  return out;
}

// Sorts and merges an unsorted term list.
template <class K>
void canonicalize(const K& field, const TermOrder& ord, TermVector<K>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm<K>& a, const VTerm<K>& b) { return ord.greater(a, b); });
  TermVector<K> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().key == t.key) {
      out.back().coef = field.add(out.back().coef, t.coef);
      if (field.is_zero(out.back().coef)) out.pop_back();
    } else if (!field.is_zero(t.coef)) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

template <class K>
ModuleElement<K> to_element(const RingPtr<K>& ring, const TermVector<K>& v,
                            const ModuleOrder& order) {
  std::vector<std::pair<std::uint32_t, std::vector<typename Polynomial<K>::Term>>> comps;
  std::vector<std::optional<std::size_t>> slot;
  for (const auto& t : v) {
    if (t.comp >= slot.size()) slot.resize(t.comp + 1);
    if (!slot[t.comp]) {
      slot[t.comp] = comps.size();
      comps.push_back({t.comp, {}});
    }
    comps[*slot[t.comp]].second.push_back({t.coef, mono_of(t.key, t.comp, order)});
  }
  std::vector<typename ModuleElement<K>::Entry> entries;
  entries.reserve(comps.size());
  for (auto& [comp, terms] : comps) {
    entries.push_back({comp, Polynomial<K>::from_terms(ring, std::move(terms))});
  }
  return ModuleElement<K>(ring, std::move(entries));
}

// f[from..] - c * q * g[skip..] as a fresh sorted vector.
template <class K>
TermVector<K> sub_multiple(const K& field, const TermOrder& ord, const TermVector<K>& f,
                           std::size_t from, const typename K::Element& c, const Monomial& q,
                           const TermVector<K>& g, std::size_t skip) {
  TermVector<K> out;
  out.reserve(f.size() - from + g.size() - skip);
  std::size_t i = from, j = skip;
  std::optional<Monomial> gk;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !gk) gk = q * g[j].key;
    int cmp;
    if (j == g.size()) {
      cmp = 1;
    } else if (i == f.size()) {
      cmp = -1;
    } else {
      cmp = ord.compare(f[i].key, f[i].comp, *gk, g[j].comp);
    }
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(field.mul(c, g[j].coef)), std::move(*gk), g[j].comp});
      gk.reset();
      ++j;
    } else {
      auto s = field.sub(f[i].coef, field.mul(c, g[j].coef));
      if (!field.is_zero(s)) out.push_back({std::move(s), f[i].key, f[i].comp});
      ++i;
      ++j;
      gk.reset();
    }
  }
  return out;
}

// Lead-term index over a list of reducers, bucketed by component.
template <class K>
class ReducerIndex {
 public:
  ReducerIndex() = default;
  explicit ReducerIndex(const std::vector<TermVector<K>>* elems) : elems_(elems) {
    for (std::size_t i = 0; i < elems->size(); ++i) add(i);
  }

  void attach(const std::vector<TermVector<K>>* elems) { elems_ = elems; }

  void add(std::size_t i) {
    const auto& lead = (*elems_)[i].front();
    if (lead.comp >= by_comp_.size()) by_comp_.resize(lead.comp + 1);
    by_comp_[lead.comp].push_back(static_cast<std::uint32_t>(i));
  }

  void remove(std::size_t i) {
    for (auto& bucket : by_comp_) std::erase(bucket, static_cast<std::uint32_t>(i));
  }

  std::optional<std::size_t> find(const Monomial& key, std::uint32_t comp) const {
    if (comp >= by_comp_.size()) return std::nullopt;
    for (std::uint32_t i : by_comp_[comp]) {
      if ((*elems_)[i].front().key.divides(key)) return i;
    }
    return std::nullopt;
  }

 private:
  const std::vector<TermVector<K>>* elems_ = nullptr;
  std::vector<std::vector<std::uint32_t>> by_comp_;
};

// Division of `f` by the indexed reducers. Each step subtracts
// c * q * reducer[l] and reports (c, q, l) through `on_step`. With `full`
// every term is reduced, otherwise only the leading ones.
template <class K, class OnStep>
TermVector<K> reduce(const K& field, const TermOrder& ord, TermVector<K> f,
                     const std::vector<TermVector<K>>& reducers, const ReducerIndex<K>& index,
                     bool full, OnStep&& on_step) {
  TermVector<K> remainder;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const auto& lead = f[pos];
    const auto hit = index.find(lead.key, lead.comp);
    if (!hit) {
      if (!full) break;
      remainder.push_back(std::move(f[pos]));
      ++pos;
      continue;
    }
    const auto& g = reducers[*hit];
    const auto c = field.div(lead.coef, g.front().coef);
    const Monomial q = lead.key / g.front().key;
    on_step(c, q, *hit);
    f = sub_multiple(field, ord, f, pos + 1, c, q, g, 1);
    pos = 0;
  }
  if (!full) {
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pos));
    return f;
  }
  return remainder;
}

}  // namespace syzygy::detail
